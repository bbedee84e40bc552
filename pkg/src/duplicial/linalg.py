"""Exact dense linear algebra over Q and prime fields, with tensor-factor bookkeeping.

Matrices are stored as an integer numerator array plus one positive common
denominator, so products and sums stay exact while the common case runs on
int64 at C speed.  Entries surface as `fractions.Fraction` (over Q) or as
canonical ints in [0, p) (over F_p).

Tensor conventions, fixed project-wide: basis order of a tensor product is
row-major, leftmost factor slowest, i.e. e_i (x) e_j of an (a,b)-product sits
at index i*b + j.  Every multi-slot structure map in the package relies on
this ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

_INT64_LIMIT = 2**62


class DimensionError(ValueError):
    """Shapes or spaces do not line up for the requested operation."""


class FieldMismatchError(ValueError):
    """Operands live over different ground fields."""


class SingularMapError(ValueError):
    """A map that had to be invertible is not."""


# ---------------------------------------------------------------------------
# ground fields


@dataclass(frozen=True)
class Field:
    """Ground field: Q when p == 0, else the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p:
            if self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p**0.5) + 1)):
                raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def char(self) -> int:
        return self.p

    def scalar(self, value) -> Fraction | int:
        """Canonical scalar: reduced Fraction over Q, int in [0, p) over F_p."""
        if self.is_rational:
            return Fraction(value)
        fr = Fraction(value)
        den_inv = pow(fr.denominator % self.p, -1, self.p)
        return (fr.numerator * den_inv) % self.p

    def __str__(self):
        return "Q" if self.is_rational else f"F{self.p}"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# spaces


def _default_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(dim))


@dataclass(frozen=True)
class Space:
    """Labeled finite-dimensional vector space, optionally a registered tensor product."""

    field: Field
    dim: int
    labels: tuple[str, ...] = ()
    factor_shape: tuple[int, ...] = ()

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("negative dimension")
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(self.dim))
        if len(self.labels) != self.dim:
            raise ValueError(f"{len(self.labels)} labels for dimension {self.dim}")
        if self.factor_shape and math.prod(self.factor_shape) != self.dim:
            raise ValueError(f"factor_shape {self.factor_shape} does not multiply to {self.dim}")

    def tensor(self, other: "Space") -> "Space":
        """Tensor product space; factor shapes concatenate (scalars contribute nothing)."""
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} (x) {other.field}")
        labels = tuple(_join_label(a, b) for a in self.labels for b in other.labels)
        mine = self.factor_shape or ((self.dim,) if self.dim != 1 else ())
        theirs = other.factor_shape or ((other.dim,) if other.dim != 1 else ())
        shape = mine + theirs
        return Space(self.field, self.dim * other.dim, labels, shape if len(shape) > 1 else ())

    def __str__(self):
        return f"Space({self.field}, dim={self.dim})"


def _join_label(a: str, b: str) -> str:
    if a == "1":
        return b
    if b == "1":
        return a
    return a + "." + b


def scalar_space(field: Field) -> Space:
    return Space(field, 1, ("1",))


def tensor_all(spaces) -> Space:
    spaces = list(spaces)
    if not spaces:
        raise ValueError("empty tensor product has no field")
    out = spaces[0]
    for s in spaces[1:]:
        out = out.tensor(s)
    return out


# ---------------------------------------------------------------------------
# numerator array helpers


def _as_object(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return int(np.abs(a).max())


def _shrink(a: np.ndarray) -> np.ndarray:
    """Store as int64 when every entry fits comfortably."""
    if a.dtype != object:
        return a
    if a.size and _maxabs(a) < _INT64_LIMIT:
        return a.astype(np.int64)
    if a.size == 0:
        return a.astype(np.int64)
    return a


def _content(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype != object:
        return int(np.gcd.reduce(np.abs(a).ravel()))
    g = 0
    for x in a.flat:
        g = math.gcd(g, int(x))
        if g == 1:
            break
    return g


# ---------------------------------------------------------------------------
# linear maps


class LinMap:
    """Exact linear map between labeled spaces; entries codomain x domain."""

    __slots__ = ("domain", "codomain", "num", "den")

    def __init__(self, domain: Space, codomain: Space, num: np.ndarray, den: int = 1, *, _canonical=False):
        if domain.field != codomain.field:
            raise FieldMismatchError(f"{domain.field} vs {codomain.field}")
        if num.shape != (codomain.dim, domain.dim):
            raise DimensionError(
                f"entry block {num.shape} for map {codomain.dim} x {domain.dim}"
            )
        self.domain = domain
        self.codomain = codomain
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = self._normalize(domain.field, num, den)

    @staticmethod
    def _normalize(field: Field, num: np.ndarray, den: int):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if field.is_rational:
            if den < 0:
                num, den = -num, -den
            if den == 1:
                return _shrink(num), 1
            g = math.gcd(_content(num), den)
            if g > 1:
                num = num // g
                den //= g
            return _shrink(num), int(den)
        p = field.p
        num = _as_object(num) % p if _maxabs(num) >= _INT64_LIMIT else num % p
        if den % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        d = den % p
        if d != 1:
            num = (num * pow(int(d), -1, p)) % p
        return _shrink(np.asarray(num)), 1

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, domain: Space, codomain: Space, rows) -> "LinMap":
        """Build from a row-major nested sequence of ints / Fractions / 'p/q' strings."""
        field = domain.field
        num = np.zeros((codomain.dim, domain.dim), dtype=object)
        den = 1
        entries = [[parse_scalar(x) for x in row] for row in rows]
        if len(entries) != codomain.dim or any(len(r) != domain.dim for r in entries):
            raise DimensionError("entry block does not match declared spaces")
        for row in entries:
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
        for i, row in enumerate(entries):
            for j, x in enumerate(row):
                num[i, j] = x.numerator * (den // x.denominator)
        return cls(domain, codomain, num, den)

    @classmethod
    def from_function(cls, domain: Space, codomain: Space, fn) -> "LinMap":
        """fn(j) -> dict {i: coeff} giving the image of basis vector j."""
        num = np.zeros((codomain.dim, domain.dim), dtype=object)
        den = 1
        cols = [fn(j) for j in range(domain.dim)]
        for col in cols:
            for c in col.values():
                c = Fraction(c)
                den = den * c.denominator // math.gcd(den, c.denominator)
        for j, col in enumerate(cols):
            for i, c in col.items():
                c = Fraction(c)
                num[i, j] = c.numerator * (den // c.denominator)
        return cls(domain, codomain, num, den)

    @classmethod
    def identity(cls, space: Space) -> "LinMap":
        return cls(space, space, np.eye(space.dim, dtype=np.int64), 1, _canonical=True)

    @classmethod
    def zero(cls, domain: Space, codomain: Space) -> "LinMap":
        return cls(domain, codomain, np.zeros((codomain.dim, domain.dim), dtype=np.int64), 1, _canonical=True)

    # -- entry access --------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.domain.field

    def entry(self, i: int, j: int):
        if self.field.is_rational:
            return Fraction(int(self.num[i, j]), self.den)
        return int(self.num[i, j])

    def rows(self):
        return [[self.entry(i, j) for j in range(self.domain.dim)] for i in range(self.codomain.dim)]

    def column(self, j: int):
        return tuple(self.entry(i, j) for i in range(self.codomain.dim))

    def apply(self, vec):
        """Apply to a coordinate vector (sequence of scalars)."""
        if len(vec) != self.domain.dim:
            raise DimensionError("vector length does not match domain")
        out = []
        for i in range(self.codomain.dim):
            s = sum(self.entry(i, j) * vec[j] for j in range(self.domain.dim))
            out.append(self.field.scalar(s))
        return tuple(out)

    # -- algebra -------------------------------------------------------------

    def _check_same_shape(self, other: "LinMap"):
        if (
            self.field != other.field
            or self.domain.dim != other.domain.dim
            or self.codomain.dim != other.codomain.dim
        ):
            raise DimensionError("maps are not parallel")

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def __add__(self, other: "LinMap") -> "LinMap":
        self._check_same_shape(other)
        a, b = self, other
        den = a.den * b.den // math.gcd(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        bound = max(_maxabs(a.num) * fa, _maxabs(b.num) * fb)
        if bound * 2 < _INT64_LIMIT and a.num.dtype != object and b.num.dtype != object:
            num = a.num * fa + b.num * fb
        else:
            num = _as_object(a.num) * fa + _as_object(b.num) * fb
        return LinMap(a.domain, a.codomain, num, den)

    def __neg__(self) -> "LinMap":
        return LinMap(self.domain, self.codomain, -self.num, self.den, _canonical=self.field.is_rational)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def scale(self, c) -> "LinMap":
        c = Fraction(c)
        return LinMap(self.domain, self.codomain, _as_object(self.num) * c.numerator, self.den * c.denominator)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        if self.domain.dim != other.domain.dim or self.codomain.dim != other.codomain.dim:
            return False
        if self.field != other.field:
            return False
        if self.den == other.den:
            return bool(np.array_equal(self.num, other.num))
        return bool(np.array_equal(_as_object(self.num) * other.den, _as_object(other.num) * self.den))

    __hash__ = None

    def is_zero(self) -> bool:
        return not np.any(self.num)

    def is_identity(self) -> bool:
        return self.domain.dim == self.codomain.dim and self == LinMap.identity(self.domain)

    def first_mismatch(self, other: "LinMap"):
        """Domain basis label on whose image the two maps first differ, or None."""
        diff = self - other
        for j in range(self.domain.dim):
            if any(diff.entry(i, j) for i in range(self.codomain.dim)):
                return self.domain.labels[j]
        return None

    def transpose(self) -> "LinMap":
        dom = Space(self.field, self.codomain.dim)
        cod = Space(self.field, self.domain.dim)
        return LinMap(dom, cod, self.num.T.copy(), self.den, _canonical=self.field.is_rational)

    def with_spaces(self, domain: Space, codomain: Space) -> "LinMap":
        """Same matrix, relabeled spaces (dimensions must agree)."""
        return LinMap(domain, codomain, self.num, self.den, _canonical=True)

    def __str__(self):
        return f"LinMap({self.codomain.dim} x {self.domain.dim} over {self.field})"


def parse_scalar(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) or isinstance(x, np.integer):
        return Fraction(int(x))
    raise TypeError(f"not an exact scalar: {x!r}")


def format_scalar(x) -> str | int:
    """Canonical JSON form: ints stay ints, other rationals become 'p/q'."""
    if isinstance(x, int):
        return x
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# composition / tensor structure


def compose(f: LinMap, g: LinMap) -> LinMap:
    """Matrix product f o g (apply g first)."""
    if f.field != g.field:
        raise FieldMismatchError(f"{f.field} vs {g.field}")
    if f.domain.dim != g.codomain.dim:
        raise DimensionError(
            f"cannot compose: f expects {f.domain} but g produces {g.codomain}"
        )
    a, b = f.num, g.num
    field = f.field
    if field.is_rational:
        inner = a.shape[1]
        bound = inner * _maxabs(a) * _maxabs(b)
        if bound < _INT64_LIMIT and a.dtype != object and b.dtype != object:
            num = a @ b
        else:
            num = _as_object(a) @ _as_object(b)
        return LinMap(g.domain, f.codomain, num, f.den * g.den)
    p = field.p
    if a.dtype != object and b.dtype != object and a.shape[1] * (p - 1) ** 2 < _INT64_LIMIT:
        num = (a @ b) % p
    else:
        num = (_as_object(a) @ _as_object(b)) % p
    return LinMap(g.domain, f.codomain, num, 1)


def compose_chain(*maps: LinMap) -> LinMap:
    """Compose maps[0] o maps[1] o ... folding from the domain side.

    Folding right-to-left keeps the accumulator as skinny as the overall
    domain, which matters when the chain passes through fat middle spaces.
    """
    if not maps:
        raise ValueError("empty chain")
    acc = maps[-1]
    for f in reversed(maps[:-1]):
        acc = compose(f, acc)
    return acc


def kron(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product acting on the tensor product spaces."""
    if f.field != g.field:
        raise FieldMismatchError(f"{f.field} vs {g.field}")
    field = f.field
    a, b = f.num, g.num
    if field.is_rational and a.dtype != object and b.dtype != object:
        if _maxabs(a) * _maxabs(b) >= _INT64_LIMIT:
            a, b = _as_object(a), _as_object(b)
    num = np.kron(a, b)
    dom = f.domain.tensor(g.domain)
    cod = f.codomain.tensor(g.codomain)
    return LinMap(dom, cod, num, f.den * g.den)


def kron_all(*maps: LinMap) -> LinMap:
    out = maps[0]
    for f in maps[1:]:
        out = kron(out, f)
    return out


def permute_factors(space: Space, perm) -> LinMap:
    """Linear map realizing v_1 (x) ... (x) v_k |-> w with w[perm[i]] = v_i.

    perm is 0-indexed; factor i of the input moves to slot perm[i], so
    permute_factors(s, sigma) o permute_factors(-, tau) = permute_factors(-, sigma o tau).
    """
    shape = space.factor_shape or (space.dim,)
    perm = tuple(perm)
    if not space.factor_shape and len(perm) != 1:
        raise DimensionError("space has no registered factor_shape to permute")
    if sorted(perm) != list(range(len(shape))):
        raise ValueError(f"{perm} is not a permutation of {len(shape)} factors")
    out_shape = tuple(shape[_inv(perm)[t]] for t in range(len(shape)))
    inv = _inv(perm)
    # old flat index sitting at each new position
    old_at_new = np.transpose(np.arange(space.dim).reshape(shape), axes=inv).ravel()
    num = np.zeros((space.dim, space.dim), dtype=np.int64)
    num[np.arange(space.dim), old_at_new] = 1
    labels = tuple(space.labels[j] for j in old_at_new)
    target = Space(space.field, space.dim, labels, out_shape if len(out_shape) > 1 else ())
    return LinMap(space, target, num, 1, _canonical=space.field.is_rational)


def _inv(perm):
    inv = [0] * len(perm)
    for i, t in enumerate(perm):
        inv[t] = i
    return tuple(inv)


def permute_blocks(blocks, perm) -> LinMap:
    """Permutation of whole tensor blocks; each block counts as one factor.

    blocks is the list of Spaces whose ordered tensor product is the domain;
    block i moves to slot perm[i].  Internal factor structure of the blocks is
    irrelevant, which is what distinguishes this from permute_factors.
    """
    blocks = list(blocks)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(blocks))):
        raise ValueError(f"{perm} is not a permutation of {len(blocks)} blocks")
    dom = tensor_all(blocks)
    inv = _inv(perm)
    cod = tensor_all([blocks[inv[t]] for t in range(len(blocks))])
    shape = tuple(b.dim for b in blocks)
    old_at_new = np.transpose(np.arange(dom.dim).reshape(shape), axes=inv).ravel()
    num = np.zeros((dom.dim, dom.dim), dtype=np.int64)
    num[np.arange(dom.dim), old_at_new] = 1
    return LinMap(dom, cod, num, 1, _canonical=dom.field.is_rational)


# ---------------------------------------------------------------------------
# elimination: rank, kernel, inverse


def _echelon_q(num: np.ndarray):
    """Bareiss fraction-free row echelon over Z; returns (matrix, pivot columns)."""
    m, n = num.shape
    M = _as_object(num).copy()
    piv_cols = []
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        col = M[r:, c]
        hit = next((k for k in range(m - r) if col[k] != 0), None)
        if hit is None:
            continue
        if hit:
            M[[r, r + hit]] = M[[r + hit, r]]
        piv = M[r, c]
        if r + 1 < m:
            block = M[r + 1 :, c:]
            M[r + 1 :, c:] = (piv * block - np.outer(M[r + 1 :, c], M[r, c:])) // prev
        prev = piv
        piv_cols.append(c)
        r += 1
    return M, piv_cols


def _echelon_p(num: np.ndarray, p: int):
    """Row echelon over F_p; returns (matrix, pivot columns)."""
    m, n = num.shape
    big = n * (p - 1) ** 2 >= _INT64_LIMIT
    M = (_as_object(num) if big else num.astype(np.int64)) % p
    piv_cols = []
    r = 0
    for c in range(n):
        if r == m:
            break
        col = M[r:, c]
        hit = next((k for k in range(m - r) if col[k] % p), None)
        if hit is None:
            continue
        if hit:
            M[[r, r + hit]] = M[[r + hit, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r, c:] = (M[r, c:] * inv) % p
        if r + 1 < m:
            M[r + 1 :, c:] = (M[r + 1 :, c:] - np.outer(M[r + 1 :, c], M[r, c:])) % p
        piv_cols.append(c)
        r += 1
    return M, piv_cols


def rank(f: LinMap) -> int:
    if f.num.size == 0:
        return 0
    if f.field.is_rational:
        return len(_echelon_q(f.num)[1])
    return len(_echelon_p(f.num, f.field.p)[1])


def _rref(f: LinMap):
    """Reduced row echelon form as Fraction (or mod-p int) object array + pivots."""
    if f.field.is_rational:
        M, piv = _echelon_q(f.num)
        M = _as_object(M)
        r = len(piv)
        R = np.zeros((r, f.domain.dim), dtype=object)
        for i in range(r):
            R[i] = [Fraction(int(x)) for x in M[i]]
        for i in range(r - 1, -1, -1):
            R[i] = R[i] / Fraction(int(M[i, piv[i]]))
            for k in range(i):
                if R[k][piv[i]]:
                    R[k] = R[k] - R[i] * R[k][piv[i]]
        return R, piv
    p = f.field.p
    M, piv = _echelon_p(f.num, p)
    r = len(piv)
    R = _as_object(M[:r])
    for i in range(r - 1, -1, -1):
        for k in range(i):
            if R[k][piv[i]] % p:
                R[k] = (R[k] - R[i] * R[k][piv[i]]) % p
    return R, piv


def rank_kernel(f: LinMap):
    """Exact rank and kernel basis, deterministic.

    The kernel basis is returned in reduced column echelon form with pivot
    rows in increasing order (each basis vector normalized so its topmost
    nonzero entry is 1 and is the only nonzero entry of its row among the
    basis).
    """
    n = f.domain.dim
    if n == 0:
        return 0, []
    R, piv = _rref(f)
    r = len(piv)
    free = [c for c in range(n) if c not in piv]
    field = f.field
    vecs = []
    for fc in free:
        v = [field.scalar(0)] * n
        v[fc] = field.scalar(1)
        for i, pc in enumerate(piv):
            val = R[i][fc]
            if val:
                v[pc] = field.scalar(-val)
        vecs.append(v)
    return r, _column_echelon(vecs, field)


def _column_echelon(vecs, field: Field):
    """Reduce a list of vectors (kernel basis) to reduced column echelon form."""
    if not vecs:
        return []
    n = len(vecs[0])
    rows = [list(v) for v in vecs]
    p = field.p
    r = 0
    for c in range(n):
        if r == len(rows):
            break
        hit = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        pivval = rows[r][c]
        if field.is_rational:
            rows[r] = [x / pivval for x in rows[r]]
        else:
            inv = pow(int(pivval), -1, p)
            rows[r] = [(x * inv) % p for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                coef = rows[k][c]
                if field.is_rational:
                    rows[k] = [a - coef * b for a, b in zip(rows[k], rows[r])]
                else:
                    rows[k] = [(a - coef * b) % p for a, b in zip(rows[k], rows[r])]
        r += 1
    return [tuple(field.scalar(x) for x in row) for row in rows]


def kernel_map(f: LinMap) -> LinMap:
    """Kernel basis packaged as an injection K -> domain."""
    _, vecs = rank_kernel(f)
    ker = Space(f.field, len(vecs))
    if not vecs:
        return LinMap.zero(ker, f.domain)
    return LinMap.from_rows(ker, f.domain, [[v[i] for v in vecs] for i in range(f.domain.dim)])


def inverse(f: LinMap) -> LinMap:
    """Exact two-sided inverse; raises SingularMapError when rank-deficient."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise SingularMapError("not square")
    if n == 0:
        return LinMap.zero(f.codomain, f.domain)
    aug_dom = Space(f.field, 2 * n)
    aug = LinMap(
        aug_dom,
        Space(f.field, n),
        np.concatenate([_as_object(f.num), np.eye(n, dtype=object) * f.den], axis=1),
        f.den,
    )
    R, piv = _rref(aug)
    if piv != list(range(n)):
        raise SingularMapError("map is singular")
    inv_rows = [[R[i][n + j] for j in range(n)] for i in range(n)]
    return LinMap.from_rows(f.codomain, f.domain, inv_rows)


def is_invertible(f: LinMap) -> bool:
    return f.domain.dim == f.codomain.dim and rank(f) == f.domain.dim


# ---------------------------------------------------------------------------
# coequalizers and chain homology


def coequalizer(f: LinMap, g: LinMap) -> LinMap:
    """Canonical surjection q of codomain onto codomain / Im(f - g); q o f = q o g.

    The quotient basis is deterministic: rows of q are the reduced column
    echelon basis of the left kernel of (f - g).
    """
    if f.domain != g.domain or f.codomain != g.codomain:
        raise DimensionError(
            f"coequalizer needs parallel maps, got {f.domain}->{f.codomain} vs {g.domain}->{g.codomain}"
        )
    d = f - g
    _, rows = rank_kernel(d.transpose())
    quot = Space(f.field, len(rows))
    if not rows:
        return LinMap.zero(f.codomain, quot)
    return LinMap.from_rows(f.codomain, quot, [list(r) for r in rows])


class ComplexViolationError(ValueError):
    """Consecutive differentials do not compose to zero."""

    def __init__(self, degree: int):
        super().__init__(f"d_{degree} o d_{degree + 1} != 0")
        self.degree = degree


def chain_homology(differentials: list[LinMap]) -> list[int]:
    """Homology dimensions of ... -> C_1 -d_1-> C_0 given [d_1, d_2, ...].

    Returns dims for degrees 0..len(differentials); d o d = 0 is checked.
    """
    if not differentials:
        raise ValueError("need at least one differential")
    for n in range(len(differentials) - 1):
        if not (differentials[n] @ differentials[n + 1]).is_zero():
            raise ComplexViolationError(n + 1)
    ranks = [rank(d) for d in differentials]
    dims = [differentials[0].codomain.dim] + [d.domain.dim for d in differentials]
    out = []
    for n in range(len(dims)):
        ker = dims[n] - (ranks[n - 1] if n >= 1 else 0)
        img = ranks[n] if n < len(ranks) else 0
        out.append(ker - img)
    return out


def random_linmap(rng, domain: Space, codomain: Space, span: int = 3) -> LinMap:
    """Small random integer matrix, for probe morphisms in law checks."""
    num = rng.integers(-span, span + 1, size=(codomain.dim, domain.dim))
    return LinMap(domain, codomain, num.astype(np.int64), 1)

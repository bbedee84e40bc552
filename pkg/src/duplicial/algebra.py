"""Finite-dimensional algebra / coalgebra / bialgebra / Hopf data by structure constants.

Everything is a matrix: multiplication H (x) H -> H, comultiplication
H -> H (x) H, antipode H -> H.  Axioms are verified as exact matrix
identities; failures carry the first offending basis label as a witness.

The Galois map beta(g (x) h) = g_(1) (x) g_(2) h distinguishes Hopf algebras
among bialgebras: beta is invertible exactly when an antipode exists, and then
the translation map h |-> h_+ (x) h_- := beta^{-1}(h (x) 1) equals
(id (x) S) o Delta.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Field,
    LinMap,
    QQ,
    SingularMapError,
    Space,
    compose,
    format_scalar,
    inverse,
    is_invertible,
    kron,
    parse_scalar,
    permute_factors,
    scalar_space,
)
from .reports import Report

STRENGTHS = ("algebra", "coalgebra", "bialgebra", "hopf")


class StructureError(ValueError):
    """Structure constants violate a required axiom."""


@dataclass(frozen=True)
class AlgebraData:
    space: Space
    mult: LinMap
    unit: LinMap

    def __post_init__(self):
        hh = self.space.tensor(self.space)
        if self.mult.domain.dim != hh.dim or self.mult.codomain.dim != self.space.dim:
            raise StructureError("mult must map H(x)H -> H")
        if self.unit.domain.dim != 1 or self.unit.codomain.dim != self.space.dim:
            raise StructureError("unit must map k -> H")


@dataclass(frozen=True)
class CoalgebraData:
    space: Space
    comult: LinMap
    counit: LinMap

    def __post_init__(self):
        hh = self.space.tensor(self.space)
        if self.comult.domain.dim != self.space.dim or self.comult.codomain.dim != hh.dim:
            raise StructureError("comult must map H -> H(x)H")
        if self.counit.domain.dim != self.space.dim or self.counit.codomain.dim != 1:
            raise StructureError("counit must map H -> k")


@dataclass(frozen=True)
class BialgebraData:
    """Algebra and coalgebra on one space; compatibility is check_structure's business."""

    algebra: AlgebraData
    coalgebra: CoalgebraData
    name: str = ""

    def __post_init__(self):
        if self.algebra.space.dim != self.coalgebra.space.dim:
            raise StructureError("algebra and coalgebra live on different spaces")

    @property
    def space(self) -> Space:
        return self.algebra.space

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def mult(self) -> LinMap:
        return self.algebra.mult

    @property
    def unit(self) -> LinMap:
        return self.algebra.unit

    @property
    def comult(self) -> LinMap:
        return self.coalgebra.comult

    @property
    def counit(self) -> LinMap:
        return self.coalgebra.counit

    def basis_index(self, label: str) -> int:
        return self.space.labels.index(label)

    def basis_vector(self, label: str):
        i = self.basis_index(label)
        return tuple(self.field.scalar(1 if j == i else 0) for j in range(self.dim))


@dataclass(frozen=True)
class HopfData(BialgebraData):
    antipode: LinMap = None  # type: ignore[assignment]

    def __post_init__(self):
        super().__post_init__()
        if self.antipode is None:
            raise StructureError("HopfData needs an antipode")
        if (
            self.antipode.domain.dim != self.space.dim
            or self.antipode.codomain.dim != self.space.dim
        ):
            raise StructureError("antipode must map H -> H")

    def antipode_inverse(self) -> LinMap:
        return inverse(self.antipode)


# ---------------------------------------------------------------------------
# axiom verification


def check_structure(data, strength: str) -> Report:
    """Verify the axioms of the requested strength as exact matrix identities."""
    if strength not in STRENGTHS:
        raise ValueError(f"strength must be one of {STRENGTHS}")
    report = Report(f"{strength} axioms")
    if strength == "algebra":
        _check_algebra(_as_algebra(data), report)
    elif strength == "coalgebra":
        _check_coalgebra(_as_coalgebra(data), report)
    elif strength == "bialgebra":
        _check_bialgebra(data, report)
    else:
        _check_hopf(data, report)
    return report


def _as_algebra(data) -> AlgebraData:
    return data.algebra if isinstance(data, BialgebraData) else data


def _as_coalgebra(data) -> CoalgebraData:
    return data.coalgebra if isinstance(data, BialgebraData) else data


def _check_algebra(a: AlgebraData, report: Report):
    h = a.space
    ih = LinMap.identity(h)
    report.add_equality(
        "associativity", compose(a.mult, kron(a.mult, ih)), compose(a.mult, kron(ih, a.mult))
    )
    report.add_equality("left unit", compose(a.mult, kron(a.unit, ih)), ih)
    report.add_equality("right unit", compose(a.mult, kron(ih, a.unit)), ih)


def _check_coalgebra(c: CoalgebraData, report: Report):
    h = c.space
    ih = LinMap.identity(h)
    report.add_equality(
        "coassociativity",
        compose(kron(c.comult, ih), c.comult),
        compose(kron(ih, c.comult), c.comult),
    )
    report.add_equality("left counit", compose(kron(c.counit, ih), c.comult), ih)
    report.add_equality("right counit", compose(kron(ih, c.counit), c.comult), ih)


def _check_bialgebra(b: BialgebraData, report: Report):
    _check_algebra(b.algebra, report)
    _check_coalgebra(b.coalgebra, report)
    h = b.space
    ih = LinMap.identity(h)
    hh = h.tensor(h)
    mid_swap = kron(kron(ih, permute_factors(hh, (1, 0))), ih).with_spaces(
        hh.tensor(hh), hh.tensor(hh)
    )
    report.add_equality(
        "comult is an algebra map",
        compose(b.comult, b.mult),
        compose(kron(b.mult, b.mult), compose(mid_swap, kron(b.comult, b.comult))),
    )
    report.add_equality("comult of unit", compose(b.comult, b.unit), kron(b.unit, b.unit))
    report.add_equality("counit is an algebra map", compose(b.counit, b.mult), kron(b.counit, b.counit))
    report.add_equality(
        "counit of unit", compose(b.counit, b.unit), LinMap.identity(scalar_space(b.field))
    )


def _check_hopf(data: BialgebraData, report: Report):
    _check_bialgebra(data, report)
    s = getattr(data, "antipode", None)
    if s is None:
        s = solve_antipode(data)
        report.add(
            "antipode exists",
            s is not None,
            "Galois map beta is singular, no antipode solves the axioms",
        )
        if s is None:
            return
    h = data.space
    ih = LinMap.identity(h)
    unit_counit = compose(data.unit, data.counit)
    report.add_equality(
        "antipode (left)", compose(data.mult, compose(kron(s, ih), data.comult)), unit_counit
    )
    report.add_equality(
        "antipode (right)", compose(data.mult, compose(kron(ih, s), data.comult)), unit_counit
    )
    if isinstance(data, HopfData):
        report.add_equality(
            "antipode consistent with translation map",
            data.antipode,
            _antipode_from_translation(data),
        )


# ---------------------------------------------------------------------------
# Galois map and translation map


def galois_beta(b: BialgebraData):
    """beta(g (x) h) = g_(1) (x) g_(2) h, with invertibility flag and inverse.

    Returns (beta, invertible, beta_inv or None).
    """
    h = b.space
    ih = LinMap.identity(h)
    beta = compose(kron(ih, b.mult), kron(b.comult, ih))
    if is_invertible(beta):
        return beta, True, inverse(beta)
    return beta, False, None


def translation_map(hopf: HopfData) -> LinMap:
    """h |-> h_(1) (x) S(h_(2)), i.e. beta^{-1}(- (x) 1)."""
    rep = check_structure(hopf, "hopf")
    if not rep.passed:
        raise StructureError(f"not a Hopf algebra: {rep.failures()[0].name}")
    h = hopf.space
    trans = compose(kron(LinMap.identity(h), hopf.antipode), hopf.comult)
    beta, ok, _ = galois_beta(hopf)
    insert_unit = kron(LinMap.identity(h), hopf.unit)
    if not ok or compose(beta, trans) != insert_unit:
        raise StructureError("translation map is not inverse to the Galois map")
    return trans


def _antipode_from_translation(hopf: BialgebraData) -> LinMap | None:
    """S(h) = eps(h_+) h_- computed from beta^{-1}, when beta is invertible."""
    beta, ok, beta_inv = galois_beta(hopf)
    del beta
    if not ok:
        return None
    h = hopf.space
    insert_unit = kron(LinMap.identity(h), hopf.unit)
    trans = compose(beta_inv, insert_unit)
    return compose(kron(hopf.counit, LinMap.identity(h)), trans)


def solve_antipode(b: BialgebraData) -> LinMap | None:
    """Antipode from the Galois route, verified against both axioms; None if impossible."""
    s = _antipode_from_translation(b)
    if s is None:
        return None
    h = b.space
    ih = LinMap.identity(h)
    unit_counit = compose(b.unit, b.counit)
    left = compose(b.mult, compose(kron(s, ih), b.comult))
    right = compose(b.mult, compose(kron(ih, s), b.comult))
    if left != unit_counit or right != unit_counit:
        return None
    return s


# ---------------------------------------------------------------------------
# presets


def make_preset(name: str, field: Field = QQ):
    """Preset catalog: group_algebra:<spec>, sweedler_h4, idempotent_monoid_algebra,
    dual_group_algebra:<spec>.

    <spec> is Zn for the cyclic group of order n, or a JSON Cayley table.
    """
    if name == "sweedler_h4":
        return sweedler_h4(field)
    if name == "idempotent_monoid_algebra":
        return idempotent_monoid_algebra(field)
    if name.startswith("group_algebra:"):
        return group_algebra(_parse_table(name.split(":", 1)[1]), field)
    if name.startswith("dual_group_algebra:"):
        return dual_group_algebra(_parse_table(name.split(":", 1)[1]), field)
    raise ValueError(f"unknown preset {name!r}")


def _parse_table(spec: str) -> list[list[int]]:
    spec = spec.strip()
    if spec.upper().startswith("Z"):
        n = int(spec[1:])
        if n < 1:
            raise ValueError("cyclic group order must be >= 1")
        return [[(i + j) % n for j in range(n)] for i in range(n)]
    return json.loads(spec)


def _validate_group(table: list[list[int]]):
    n = len(table)
    if any(len(row) != n for row in table):
        raise ValueError("Cayley table must be square")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise ValueError(f"not associative at triple ({i}, {j}, {k})")
    identity = next(
        (e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))), None
    )
    if identity is None:
        raise ValueError("no identity element")
    inv = [None] * n
    for i in range(n):
        inv[i] = next((j for j in range(n) if table[i][j] == identity), None)
        if inv[i] is None:
            raise ValueError(f"element {i} has no inverse")
    return identity, inv


def _group_labels(table, identity) -> tuple[str, ...]:
    n = len(table)
    cyclic = _cyclic_generator(table, identity)
    if cyclic is not None:
        labels = [""] * n
        e = identity
        for k in range(n):
            labels[e] = "1" if k == 0 else ("g" if k == 1 else f"g{k}")
            e = table[e][cyclic]
        return tuple(labels)
    return tuple("1" if i == identity else f"x{i}" for i in range(n))


def _cyclic_generator(table, identity):
    n = len(table)
    for g in range(n):
        seen, e = set(), identity
        for _ in range(n):
            seen.add(e)
            e = table[e][g]
        if len(seen) == n and e == identity:
            return g
    return None


def group_algebra(table: list[list[int]], field: Field = QQ) -> HopfData:
    """Group algebra kG: Delta g = g (x) g, eps(g) = 1, S(g) = g^{-1}."""
    identity, inv = _validate_group(table)
    n = len(table)
    h = Space(field, n, _group_labels(table, identity))
    mult = LinMap.from_function(h.tensor(h), h, lambda ij: {table[ij // n][ij % n]: 1})
    unit = LinMap.from_function(scalar_space(field), h, lambda _: {identity: 1})
    comult = LinMap.from_function(h, h.tensor(h), lambda i: {i * n + i: 1})
    counit = LinMap.from_function(h, scalar_space(field), lambda i: {0: 1})
    antipode = LinMap.from_function(h, h, lambda i: {inv[i]: 1})
    return HopfData(
        AlgebraData(h, mult, unit),
        CoalgebraData(h, comult, counit),
        name=f"group_algebra(n={n})",
        antipode=antipode,
    )


def dual_group_algebra(table: list[list[int]], field: Field = QQ) -> HopfData:
    """Functions on a finite group: pointwise product, convolution coproduct."""
    identity, inv = _validate_group(table)
    n = len(table)
    h = Space(field, n, tuple(f"d{lbl}" for lbl in _group_labels(table, identity)))
    mult = LinMap.from_function(
        h.tensor(h), h, lambda ij: {ij // n: 1} if ij // n == ij % n else {}
    )
    unit = LinMap.from_function(scalar_space(field), h, lambda _: {i: 1 for i in range(n)})
    comult = LinMap.from_function(
        h,
        h.tensor(h),
        lambda k: {i * n + j: 1 for i in range(n) for j in range(n) if table[i][j] == k},
    )
    counit = LinMap.from_function(h, scalar_space(field), lambda i: {0: 1} if i == identity else {})
    antipode = LinMap.from_function(h, h, lambda i: {inv[i]: 1})
    return HopfData(
        AlgebraData(h, mult, unit),
        CoalgebraData(h, comult, counit),
        name=f"dual_group_algebra(n={n})",
        antipode=antipode,
    )


def sweedler_h4(field: Field = QQ) -> HopfData:
    """Sweedler's 4-dimensional Hopf algebra: g^2 = 1, x^2 = 0, xg = -gx.

    Needs char k != 2 (g and x collapse over F_2).
    """
    if field.char == 2:
        raise StructureError("Sweedler H4 requires characteristic != 2")
    h = Space(field, 4, ("1", "g", "x", "gx"))

    def idx(a, b):  # basis element g^a x^b
        return a + 2 * b

    def mono_mult(i, j):
        a1, b1 = i % 2, i // 2
        a2, b2 = j % 2, j // 2
        if b1 and b2:
            return {}
        sign = -1 if (b1 and a2) else 1
        return {idx((a1 + a2) % 2, b1 + b2): sign}

    mult = LinMap.from_function(h.tensor(h), h, lambda ij: mono_mult(ij // 4, ij % 4))
    unit = LinMap.from_function(scalar_space(field), h, lambda _: {0: 1})

    def comult_col(i):
        a, b = i % 2, i // 2
        if not b:
            return {i * 4 + i: 1}
        # Delta(x) = x(x)1 + g(x)x, Delta(gx) = gx(x)g + 1(x)gx
        if a == 0:
            return {idx(0, 1) * 4 + idx(0, 0): 1, idx(1, 0) * 4 + idx(0, 1): 1}
        return {idx(1, 1) * 4 + idx(1, 0): 1, idx(0, 0) * 4 + idx(1, 1): 1}

    comult = LinMap.from_function(h, h.tensor(h), comult_col)
    counit = LinMap.from_function(h, scalar_space(field), lambda i: {0: 1} if i // 2 == 0 else {})
    # S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    antipode = LinMap.from_rows(
        h, h, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    )
    return HopfData(
        AlgebraData(h, mult, unit), CoalgebraData(h, comult, counit), name="sweedler_h4", antipode=antipode
    )


def idempotent_monoid_algebra(field: Field = QQ) -> BialgebraData:
    """k{1, e} with e^2 = e and Delta(e) = e (x) e: a bialgebra that is not Hopf."""
    h = Space(field, 2, ("1", "e"))
    tbl = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    mult = LinMap.from_function(h.tensor(h), h, lambda ij: {tbl[(ij // 2, ij % 2)]: 1})
    unit = LinMap.from_function(scalar_space(field), h, lambda _: {0: 1})
    comult = LinMap.from_function(h, h.tensor(h), lambda i: {i * 2 + i: 1})
    counit = LinMap.from_function(h, scalar_space(field), lambda i: {0: 1})
    return BialgebraData(
        AlgebraData(h, mult, unit), CoalgebraData(h, comult, counit), name="idempotent_monoid_algebra"
    )


def polynomial_dual_numbers(field: Field = QQ) -> AlgebraData:
    """k[x]/(x^2) as a plain algebra (for the classical cyclic object oracle)."""
    h = Space(field, 2, ("1", "x"))
    mult = LinMap.from_function(
        h.tensor(h), h, lambda ij: {} if ij == 3 else {0 if ij == 0 else 1: 1}
    )
    unit = LinMap.from_function(scalar_space(field), h, lambda _: {0: 1})
    return AlgebraData(h, mult, unit)


# ---------------------------------------------------------------------------
# JSON structure-constants format


def field_from_json(spec) -> Field:
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and "Fp" in spec:
        return Field(int(spec["Fp"]))
    raise ValueError(f"bad field spec {spec!r}")


def field_to_json(field: Field):
    return "Q" if field.is_rational else {"Fp": field.p}


def bialgebra_from_json(doc: dict):
    """Load {dim, field, labels, mult, comult, counit, antipode?} structure constants.

    mult[i][j] is the coefficient vector of e_i * e_j; comult[i] lists triples
    [j, k, c] with Delta(e_i) = sum c * e_j (x) e_k; antipode is an optional
    dim x dim matrix with S(e_j) = sum_i antipode[i][j] e_i.
    """
    field = field_from_json(doc["field"])
    dim = int(doc["dim"])
    labels = tuple(doc.get("labels") or (f"e{i}" for i in range(dim)))
    h = Space(field, dim, labels)
    multrows = doc["mult"]
    if len(multrows) != dim or any(len(r) != dim for r in multrows):
        raise ValueError("mult must be a dim x dim table of coefficient vectors")
    mult = LinMap.from_function(
        h.tensor(h),
        h,
        lambda ij: {
            k: parse_scalar(c)
            for k, c in enumerate(multrows[ij // dim][ij % dim])
            if parse_scalar(c)
        },
    )
    unit_vec = doc.get("unit")
    if unit_vec is None:
        unit_vec = _find_unit(h, mult)
    unit = LinMap.from_function(
        scalar_space(field), h, lambda _: {i: parse_scalar(c) for i, c in enumerate(unit_vec)}
    )
    comult = LinMap.from_function(
        h,
        h.tensor(h),
        lambda i: {int(j) * dim + int(k): parse_scalar(c) for j, k, c in doc["comult"][i]},
    )
    counit = LinMap.from_function(
        h, scalar_space(field), lambda i: {0: parse_scalar(doc["counit"][i])}
    )
    alg = AlgebraData(h, mult, unit)
    coalg = CoalgebraData(h, comult, counit)
    name = doc.get("name", "from_json")
    if "antipode" in doc and doc["antipode"] is not None:
        antipode = LinMap.from_rows(h, h, [[parse_scalar(c) for c in row] for row in doc["antipode"]])
        return HopfData(alg, coalg, name=name, antipode=antipode)
    return BialgebraData(alg, coalg, name=name)


def _find_unit(h: Space, mult: LinMap):
    """Solve u with u * e_j = e_j for all j (linear system)."""
    field = h.field
    dim = h.dim
    cols = []
    rhs = []
    for j in range(dim):
        for i in range(dim):
            cols.append([mult.entry(i, a * dim + j) for a in range(dim)])
            rhs.append(field.scalar(1 if i == j else 0))
    sys_dom = Space(field, dim)
    sys_cod = Space(field, len(cols))
    aug = LinMap.from_rows(sys_dom, sys_cod, cols)
    sol = _solve_least(aug, rhs)
    if sol is None:
        raise ValueError("structure constants have no unit element")
    return sol


def _solve_least(a: LinMap, rhs):
    """One exact solution of a x = rhs, or None."""
    field = a.field
    n = a.domain.dim
    ext = Space(field, n + 1)
    rows = [[a.entry(i, j) for j in range(n)] + [rhs[i]] for i in range(a.codomain.dim)]
    from .linalg import rank_kernel

    aug = LinMap.from_rows(ext, a.codomain, rows)
    _, basis = rank_kernel(aug)
    for v in basis:
        if v[n]:
            scale = field.scalar(-1) if field.is_rational else field.p - 1
            inv = field.scalar(Fraction(-1, 1) / v[n]) if field.is_rational else (
                (scale * pow(int(v[n]), -1, field.p)) % field.p
            )
            return [field.scalar(x * inv) for x in v[:n]]
    return None


def bialgebra_to_json(b: BialgebraData) -> dict:
    dim = b.dim
    doc = {
        "dim": dim,
        "field": field_to_json(b.field),
        "labels": list(b.space.labels),
        "name": b.name,
        "mult": [
            [[format_scalar(b.mult.entry(k, i * dim + j)) for k in range(dim)] for j in range(dim)]
            for i in range(dim)
        ],
        "unit": [format_scalar(b.unit.entry(i, 0)) for i in range(dim)],
        "comult": [
            [
                [j, k, format_scalar(b.comult.entry(j * dim + k, i))]
                for j in range(dim)
                for k in range(dim)
                if b.comult.entry(j * dim + k, i)
            ]
            for i in range(dim)
        ],
        "counit": [format_scalar(b.counit.entry(0, i)) for i in range(dim)],
    }
    if isinstance(b, HopfData):
        doc["antipode"] = [
            [format_scalar(b.antipode.entry(i, j)) for j in range(dim)] for i in range(dim)
        ]
    return doc

"""Distributive laws from adjunction lifts: construction, axiom checks, Galois maps, 1-cells.

All natural transformations are carrier kernels: components at an object are
assembled from a fixed small matrix by tensoring with identities and block
permutations, so naturality in the underlying space is structural and the
axioms reduce to finitely many exact matrix identities on probe objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import BialgebraData, HopfData, StructureError, galois_beta
from .hmodules import (
    LEFT,
    RIGHT,
    FreeForget,
    HModule,
    InducedComonad,
    Lift,
    StrandComonad,
    StrandMonad,
    banal_lift,
    canonical_left_lift,
    codiagonal_left_lift,
    translation_kernel,
    yd_lift,
)
from .linalg import (
    LinMap,
    SingularMapError,
    Space,
    compose,
    compose_chain,
    inverse,
    is_invertible,
    kron,
    permute_blocks,
    random_linmap,
    scalar_space,
)
from .reports import Report


# ---------------------------------------------------------------------------
# kernels and component assembly


@dataclass(frozen=True)
class BraidKernel:
    """Comonad distributive law chi: T S -> S T on one-sided H-modules.

    T is the induced comonad of the free/forgetful adjunction and S a lift of
    the carrier comonad; the kernel acts on the two carrier slots while the
    object slot passes through.
    """

    hopf: BialgebraData
    lift: Lift
    component_fn: Callable[[HModule], LinMap]

    @property
    def adj(self) -> FreeForget:
        return self.lift.adj

    def comonad_t(self) -> InducedComonad:
        return InducedComonad(self.adj)

    def component(self, x: HModule) -> LinMap:
        return self.component_fn(x)

    def kernel_matrix(self) -> LinMap:
        """Component at the monoidal-unit-flavored probe: the bare two-strand kernel."""
        from .hmodules import trivial_module

        return self.component(trivial_module(self.hopf, self.adj.side))


@dataclass(frozen=True)
class MixedLawKernel:
    """Mixed distributive law theta: B C -> C B on k-Mod, carrier-kernel form."""

    monad: StrandMonad
    comonad: StrandComonad
    component_fn: Callable[[Space], LinMap]

    def component(self, v: Space) -> LinMap:
        return self.component_fn(v)

    def kernel_matrix(self) -> LinMap:
        return self.component(scalar_space(self.monad.algebra.space.field))


def _strand_component(kernel: LinMap, left_carrier: Space, right_carrier: Space):
    """(c, x, b) |-> kernel(c, b) with x passing through, as a function of x's space."""

    def fn(x_space: Space) -> LinMap:
        ix = LinMap.identity(x_space)
        # (c, x, b) -> (c, b, x) -> ((c', b'), x) -> (c', x, b')
        fold_in = permute_blocks([left_carrier, x_space, right_carrier], (0, 2, 1))
        core = kron(kernel, ix)
        unfold = permute_blocks([left_carrier, right_carrier, x_space], (0, 2, 1))
        return compose_chain(unfold, core, fold_in)

    return fn


def yd_braiding(hopf: HopfData) -> BraidKernel:
    """The Yetter-Drinfel'd law chi((c (x) x) (x) b) = b_- c (x) (x (x) b_+).

    Requires the translation map, hence a Hopf algebra.
    """
    if not isinstance(hopf, HopfData):
        raise StructureError("Yetter-Drinfel'd braiding needs an antipode (translation map)")
    h = hopf.space
    trans = translation_kernel(hopf)
    ih = LinMap.identity(h)
    # kernel (c, b) -> (b_- c, b_+): expand to (c, b+, b-), reorder to (b-, c, b+), multiply
    expand = kron(ih, trans)
    reorder = permute_blocks([h, h, h], (1, 2, 0))
    contract = kron(hopf.mult, ih)
    kernel = compose_chain(contract, reorder, expand).with_spaces(h.tensor(h), h.tensor(h))
    lift = yd_lift(hopf)
    fn = _strand_component(kernel, h, h)

    def component(x: HModule) -> LinMap:
        return fn(x.space)

    return BraidKernel(hopf, lift, component)


def bialgebra_mixed_law(hopf: BialgebraData) -> MixedLawKernel:
    """theta(g (x) h (x) x) = g_(1) h (x) g_(2) (x) x for the monad/comonad H (x) -."""
    h = hopf.space
    ih = LinMap.identity(h)
    expand = kron(hopf.comult, ih)
    reorder = permute_blocks([h, h, h], (0, 2, 1))
    contract = kron(hopf.mult, ih)
    kernel = compose_chain(contract, reorder, expand).with_spaces(h.tensor(h), h.tensor(h))
    monad = StrandMonad(hopf.algebra, LEFT)
    comonad = StrandComonad(hopf.coalgebra, LEFT)

    def component(v: Space) -> LinMap:
        return kron(kernel, LinMap.identity(v))

    return MixedLawKernel(monad, comonad, component)


def doi_koppinen_mixed_law(hopf: HopfData) -> MixedLawKernel:
    """theta((c (x) x) (x) b) = b_- c (x) (x (x) b_+) on k-Mod (monad - (x) H)."""
    h = hopf.space
    trans = translation_kernel(hopf)
    ih = LinMap.identity(h)
    expand = kron(ih, trans)
    reorder = permute_blocks([h, h, h], (1, 2, 0))
    contract = kron(hopf.mult, ih)
    kernel = compose_chain(contract, reorder, expand).with_spaces(h.tensor(h), h.tensor(h))
    monad = StrandMonad(hopf.algebra, RIGHT)
    comonad = StrandComonad(hopf.coalgebra, LEFT)
    fn = _strand_component(kernel, h, h)
    return MixedLawKernel(monad, comonad, fn)


# ---------------------------------------------------------------------------
# Theorem-style construction from a lift


def mate(lift: Lift, v: Space) -> LinMap:
    """Lambda_V: F C V -> S F V, the adjunct of Omega_{F V} o C(eta_V)."""
    adj = lift.adj
    ext = lift.extension()
    fv = adj.free(v)
    phi = compose(lift.omega(fv.space), ext.map(adj.unit(v)))
    return compose(lift.obj(fv).action, adj.free_map(phi))


def arise_theta(lift: Lift, v: Space) -> LinMap:
    """theta_V = Omega^{-1} F o U Lambda: B C V -> C B V."""
    adj = lift.adj
    fv = adj.free(v)
    om = lift.omega(fv.space)
    if not is_invertible(om):
        raise SingularMapError("Omega is not invertible at F V")
    return compose(inverse(om), mate(lift, v))


def arise_chi(lift: Lift, x: HModule) -> LinMap:
    """chi_X = Lambda U o F Omega^{-1}: T S X -> S T X."""
    adj = lift.adj
    om = lift.omega(x.space)
    if not is_invertible(om):
        raise SingularMapError("Omega is not invertible at X")
    return compose(mate(lift, x.space), adj.free_map(inverse(om)))


def arise_from_lift(lift: Lift) -> tuple[MixedLawKernel, BraidKernel]:
    """Both distributive laws of the lift, as component builders."""
    adj = lift.adj
    hopf = adj.hopf
    monad = StrandMonad(hopf.algebra, RIGHT if adj.side == RIGHT else LEFT)
    comonad = lift.extension()
    theta = MixedLawKernel(monad, comonad, lambda v: arise_theta(lift, v))
    chi = BraidKernel(hopf, lift, lambda x: arise_chi(lift, x))
    return theta, chi


def trivial_law(hopf: BialgebraData, side: str = RIGHT) -> tuple[MixedLawKernel, BraidKernel]:
    """The banal law: C = B, S = T, Omega = id.

    theta = (U F eta) o (U eps F) and chi = (F eta U) o (eps F U).
    """
    adj = FreeForget(hopf, side)
    lift = banal_lift(hopf, side)
    monad = StrandMonad(hopf.algebra, RIGHT if side == RIGHT else LEFT)
    comonad = lift.extension()

    def theta_component(v: Space) -> LinMap:
        fv = adj.free(v)
        return compose(adj.free_map(adj.unit(v)), fv.action)

    def chi_component(x: HModule) -> LinMap:
        t = adj.free(x.space)
        return compose(adj.free_map(adj.unit(x.space)), t.action)

    return (
        MixedLawKernel(monad, comonad, theta_component),
        BraidKernel(hopf, lift, chi_component),
    )


def check_arise_uniqueness(lift: Lift, probes=None) -> Report:
    """Uniqueness diagrams for theta and chi, as exact identities on probe modules."""
    adj = lift.adj
    ext = lift.extension()
    report = Report(f"arise uniqueness ({lift.name})")
    for k, y in enumerate(probes if probes is not None else adj.probe_modules()):
        ty = adj.free(y.space)
        om_y = lift.omega(y.space)
        # theta diagram: C U(eps_Y) o theta_{U Y} = Omega^{-1}_Y o U(eps_{S Y}) o U F(Omega_Y)
        lhs = compose(ext.map(y.action), arise_theta(lift, y.space))
        rhs = compose_chain(inverse(om_y), lift.obj(y).action, adj.free_map(om_y))
        report.add_equality(f"theta uniqueness at probe {k}", lhs, rhs)
        # chi diagram: Omega_{F U Y} o C(eta_{U Y}) o Omega^{-1}_Y = U(chi_Y) o eta_{U S Y}
        lhs2 = compose_chain(lift.omega(ty.space), ext.map(adj.unit(y.space)), inverse(om_y))
        rhs2 = compose(arise_chi(lift, y), adj.unit(lift.obj(y).space))
        report.add_equality(f"chi uniqueness at probe {k}", lhs2, rhs2)
    return report


# ---------------------------------------------------------------------------
# distributive-law axiom checks


def check_distlaw(law, kind: str, probes=None, seed: int = 0) -> Report:
    """All compatibility squares of a comonad ('comonad') or mixed ('mixed') law."""
    if kind == "comonad":
        return _check_comonad_law(law, probes)
    if kind == "mixed":
        return _check_mixed_law(law, probes, seed)
    raise ValueError("kind must be 'comonad' or 'mixed'")


def _check_comonad_law(law: BraidKernel, probes) -> Report:
    t = law.comonad_t()
    s = law.lift
    report = Report("comonad distributive law")
    probes = probes if probes is not None else law.adj.probe_modules()
    for k, x in enumerate(probes):
        chi_x = law.component(x)
        sx, tx = s.obj(x), t.obj(x)
        report.add_equality(
            f"T-counit square at probe {k}",
            compose(s.map(t.counit(x)), chi_x),
            t.counit(sx),
        )
        report.add_equality(
            f"S-counit square at probe {k}",
            compose(s.counit(tx), chi_x),
            t.map(s.counit(x)),
        )
        report.add_equality(
            f"T-comultiplication square at probe {k}",
            compose(s.map(t.comult(x)), chi_x),
            compose_chain(law.component(tx), t.map(chi_x), t.comult(sx)),
        )
        report.add_equality(
            f"S-comultiplication square at probe {k}",
            compose(s.comult(tx), chi_x),
            compose_chain(s.map(chi_x), law.component(sx), t.map(s.comult(x))),
        )
    for k, (src, dst, f) in enumerate(law.adj.probe_morphisms()):
        report.add_equality(
            f"naturality at morphism {k}",
            compose(s.map(t.map(f)), law.component(src)),
            compose(law.component(dst), t.map(s.map(f))),
        )
    return report


def _mixed_probe_spaces(law: MixedLawKernel):
    field = law.monad.algebra.space.field
    d = law.monad.algebra.space.dim
    return [scalar_space(field), Space(field, d), Space(field, d * d)]


def _check_mixed_law(law: MixedLawKernel, probes, seed: int) -> Report:
    b, c = law.monad, law.comonad
    report = Report("mixed distributive law")
    probes = probes if probes is not None else _mixed_probe_spaces(law)
    for k, v in enumerate(probes):
        th = law.component(v)
        bv, cv = b.obj(v), c.obj(v)
        report.add_equality(
            f"monad unit square at probe {k}", compose(th, b.unit(cv)), c.map(b.unit(v))
        )
        report.add_equality(
            f"monad multiplication square at probe {k}",
            compose(th, b.mult(cv)),
            compose_chain(c.map(b.mult(v)), law.component(bv), b.map(th)),
        )
        report.add_equality(
            f"comonad counit square at probe {k}", compose(c.counit(bv), th), b.map(c.counit(v))
        )
        report.add_equality(
            f"comonad comultiplication square at probe {k}",
            compose(c.comult(bv), th),
            compose_chain(c.map(th), law.component(cv), b.map(c.comult(v))),
        )
    rng = np.random.default_rng(seed)
    for k in range(4):
        v, w = probes[k % len(probes)], probes[(k + 1) % len(probes)]
        f = random_linmap(rng, v, w, span=2)
        report.add_equality(
            f"naturality at morphism {k}",
            compose(c.map(b.map(f)), law.component(v)),
            compose(law.component(w), b.map(c.map(f))),
        )
    return report


def check_comonad_axioms(comonad, probes) -> Report:
    """Counit and coassociativity laws of a module-category comonad on probes."""
    report = Report("comonad axioms")
    for k, x in enumerate(probes):
        cx = comonad.obj(x)
        report.add_equality(
            f"left counit at probe {k}",
            compose(comonad.counit(cx), comonad.comult(x)),
            LinMap.identity(cx.space),
        )
        report.add_equality(
            f"right counit at probe {k}",
            compose(comonad.map(comonad.counit(x)), comonad.comult(x)),
            LinMap.identity(cx.space),
        )
        report.add_equality(
            f"coassociativity at probe {k}",
            compose(comonad.comult(cx), comonad.comult(x)),
            compose(comonad.map(comonad.comult(x)), comonad.comult(x)),
        )
    return report


# ---------------------------------------------------------------------------
# Galois maps between lifts


def galois_gamma(lift_s: Lift, lift_v: Lift, f: LinMap, base: Space, y: HModule) -> LinMap:
    """Gamma^{S,V}(f) for a module map f: F(base) -> S Y.

    Composite: eps_{V Y} o F(Phi_Y o Omega_Y^{-1}) o F U f o F eta_base.
    """
    adj = lift_s.adj
    if adj.hopf is not lift_v.adj.hopf or adj.side != lift_v.adj.side:
        raise ValueError("lifts live over different adjunctions")
    swap = compose(lift_v.omega(y.space), inverse(lift_s.omega(y.space)))
    return compose_chain(
        lift_v.obj(y).action, adj.free_map(swap), adj.free_map(f), adj.free_map(adj.unit(base))
    )


def gamma_to_lift(lift_v: Lift, y: HModule) -> LinMap:
    """Gamma^{T,V}: T Y -> V Y, comparing the induced comonad with another lift of B."""
    adj = lift_v.adj
    return compose_chain(
        lift_v.obj(y).action, adj.free_map(lift_v.omega(y.space)), adj.free_map(adj.unit(y.space))
    )


def v_galois_check(hopf: BialgebraData) -> tuple[bool, Report]:
    """Is the free functor V-Galois for the codiagonal lift, and does the
    monad composite (B eta B, theta B, B mu) reproduce the bialgebra Galois map?
    """
    lift_v = codiagonal_left_lift(hopf)
    adj = lift_v.adj
    report = Report(f"V-Galois check ({hopf.name})")
    flag = True
    for k, y in enumerate(adj.probe_modules()):
        g = gamma_to_lift(lift_v, y)
        ok = is_invertible(g)
        flag = flag and ok
        report.add(f"Gamma^TV invertible at probe {k}", ok, f"rank deficient on {y.space}")
    beta, beta_ok, _ = galois_beta(hopf)
    b = StrandMonad(hopf.algebra, LEFT)
    field = hopf.field
    k_space = scalar_space(field)
    bk = b.obj(k_space)
    composite = compose_chain(
        b.map(b.mult(k_space)), arise_theta(lift_v, bk), b.map(b.unit(bk))
    )
    report.add_equality("monad composite equals Galois map beta", composite, beta)
    report.add(
        "beta invertibility agrees with V-Galois flag",
        beta_ok == flag,
        f"beta invertible: {beta_ok}, Gamma invertible: {flag}",
    )
    return flag, report


# ---------------------------------------------------------------------------
# 1-cells in the mixed 2-category and coefficient twisting


@dataclass(frozen=True)
class OneCell:
    """(Sigma, sigma, gamma) between mixed laws over k-Mod; Sigma is space-identity.

    sigma_X: A Sigma X -> Sigma B X is the lax monad part, gamma_X:
    Sigma C X -> D Sigma X the colax comonad part; top law (B, C, theta),
    bottom law (A, D, psi).
    """

    top: MixedLawKernel
    bottom: MixedLawKernel
    sigma_fn: Callable[[Space], LinMap]
    gamma_fn: Callable[[Space], LinMap]
    tag: str = ""

    def sigma(self, v: Space) -> LinMap:
        return self.sigma_fn(v)

    def gamma(self, v: Space) -> LinMap:
        return self.gamma_fn(v)


def identity_one_cell(law: MixedLawKernel) -> OneCell:
    def sigma(v: Space) -> LinMap:
        return LinMap.identity(law.monad.obj(v))

    def gamma(v: Space) -> LinMap:
        return LinMap.identity(law.comonad.obj(v))

    return OneCell(law, law, sigma, gamma, tag="identity")


def antipode_one_cell(hopf: HopfData) -> OneCell:
    """sigma_X(x (x) h) = S(h) (x) x with gamma = id, connecting the bialgebra
    law (top) to the Doi-Koppinen law (bottom)."""
    top = bialgebra_mixed_law(hopf)
    bottom = doi_koppinen_mixed_law(hopf)
    h = hopf.space

    def sigma(v: Space) -> LinMap:
        swap = permute_blocks([v, h], (1, 0))
        return compose(swap, kron(LinMap.identity(v), hopf.antipode))

    def gamma(v: Space) -> LinMap:
        return LinMap.identity(h.tensor(v))

    return OneCell(top, bottom, sigma, gamma, tag="antipode")


def one_cell_with_sigma_kernel(hopf: HopfData, kernel: LinMap) -> OneCell:
    """Antipode-style cell with an arbitrary H -> H kernel in place of S (mutation hook)."""
    cell = antipode_one_cell(hopf)
    h = hopf.space

    def sigma(v: Space) -> LinMap:
        swap = permute_blocks([v, h], (1, 0))
        return compose(swap, kron(LinMap.identity(v), kernel))

    return OneCell(cell.top, cell.bottom, sigma, cell.gamma_fn, tag="mutated")


def check_yang_baxter(cell: OneCell, probes=None, seed: int = 0) -> Report:
    """Hexagon gamma_B o theta o sigma_C = D sigma o psi o A gamma, plus the
    lax/colax squares of sigma and gamma, on probe spaces."""
    top, bottom = cell.top, cell.bottom
    b, c = top.monad, top.comonad
    a, d = bottom.monad, bottom.comonad
    report = Report(f"Yang-Baxter ({cell.tag})")
    probes = probes if probes is not None else _mixed_probe_spaces(top)
    for k, v in enumerate(probes):
        lhs = compose_chain(cell.gamma(b.obj(v)), top.component(v), cell.sigma(c.obj(v)))
        rhs = compose_chain(d.map(cell.sigma(v)), bottom.component(v), a.map(cell.gamma(v)))
        report.add_equality(f"hexagon at probe {k}", lhs, rhs)
        # sigma is a lax morphism of monads
        report.add_equality(
            f"sigma unit square at probe {k}", compose(cell.sigma(v), a.unit(v)), b.unit(v)
        )
        report.add_equality(
            f"sigma multiplication square at probe {k}",
            compose(cell.sigma(v), a.mult(v)),
            compose_chain(b.mult(v), b.map(cell.sigma(v)), cell.sigma(a.obj(v))),
        )
        # gamma is a colax morphism of comonads
        report.add_equality(
            f"gamma counit square at probe {k}", compose(d.counit(v), cell.gamma(v)), c.counit(v)
        )
        report.add_equality(
            f"gamma comultiplication square at probe {k}",
            compose(d.comult(v), cell.gamma(v)),
            compose_chain(d.map(cell.gamma(v)), cell.gamma(c.obj(v)), c.comult(v)),
        )
    return report


def bialgebra_law_coefficient(hopf: BialgebraData, action: LinMap, coaction: LinMap) -> LinMap:
    """Canonical right coefficient kernel for the bialgebra law from a left
    module + left comodule M: rho(h (x) m) = h_(1) m_(-1) (x) h_(2) m_(0)."""
    h = hopf.space
    m_space = action.codomain
    im = LinMap.identity(m_space)
    # (h, m) -> (h1, h2, m) -> (h1, h2, m_(-1), m_(0)) -> (h1, m_(-1), h2, m_(0))
    step1 = kron(hopf.comult, im)
    step2 = kron(kron(LinMap.identity(h), LinMap.identity(h)), coaction)
    step3 = permute_blocks([h, h, h, m_space], (0, 2, 1, 3))
    step4 = kron(hopf.mult, action)
    return compose_chain(step4, step3, step2, step1).with_spaces(
        h.tensor(m_space), h.tensor(m_space)
    )


def twist_right_kernel(cell: OneCell, rho_top: LinMap, m_space: Space) -> LinMap:
    """Lemma-style twist: rho' = gamma_M o rho_top o sigma_M on kernels."""
    return compose_chain(cell.gamma(m_space), rho_top, cell.sigma(m_space))

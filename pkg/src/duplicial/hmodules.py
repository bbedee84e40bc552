"""Module objects over a (Hopf) algebra and the strand functors acting on them.

Every functor in scope tensors a fixed carrier onto its argument, so functors
and natural transformations are represented by carrier data plus rules for
building the component matrix at a given object.  Module structures are the
only per-object data; naturality in the underlying space is structural.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .algebra import AlgebraData, BialgebraData, CoalgebraData, HopfData, StructureError
from .linalg import (
    LinMap,
    Space,
    compose,
    compose_chain,
    kron,
    permute_blocks,
    random_linmap,
    scalar_space,
)
from .reports import Report

RIGHT, LEFT = "right", "left"


@dataclass(frozen=True)
class HModule:
    """A left or right module over a bialgebra, given by its action matrix."""

    hopf: BialgebraData
    side: str
    space: Space
    action: LinMap  # right: X (x) H -> X;  left: H (x) X -> X

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError("side must be 'left' or 'right'")
        expected = (
            self.space.tensor(self.hopf.space)
            if self.side == RIGHT
            else self.hopf.space.tensor(self.space)
        )
        if self.action.domain.dim != expected.dim or self.action.codomain.dim != self.space.dim:
            raise StructureError("action matrix has the wrong shape")

    def check_axioms(self) -> Report:
        h = self.hopf
        ix = LinMap.identity(self.space)
        ih = LinMap.identity(h.space)
        report = Report(f"{self.side} module axioms")
        if self.side == RIGHT:
            report.add_equality(
                "associativity",
                compose(self.action, kron(self.action, ih)),
                compose(self.action, kron(ix, h.mult)),
            )
            report.add_equality("unitality", compose(self.action, kron(ix, h.unit)), ix)
        else:
            report.add_equality(
                "associativity",
                compose(self.action, kron(ih, self.action)),
                compose(self.action, kron(h.mult, ix)),
            )
            report.add_equality("unitality", compose(self.action, kron(h.unit, ix)), ix)
        return report


def trivial_module(hopf: BialgebraData, side: str = RIGHT) -> HModule:
    """The ground field with the counit action."""
    k = scalar_space(hopf.field)
    act = hopf.counit.with_spaces(
        k.tensor(hopf.space) if side == RIGHT else hopf.space.tensor(k), k
    )
    return HModule(hopf, side, k, act)


def regular_module(hopf: BialgebraData, side: str = RIGHT) -> HModule:
    """H acting on itself by multiplication."""
    return HModule(hopf, side, hopf.space, hopf.mult)


@dataclass(frozen=True)
class FreeForget:
    """The free/forgetful adjunction between k-Mod and one-sided H-modules."""

    hopf: BialgebraData
    side: str = RIGHT

    def free(self, v: Space) -> HModule:
        h = self.hopf
        if self.side == RIGHT:
            space = v.tensor(h.space)
            action = kron(LinMap.identity(v), h.mult).with_spaces(
                space.tensor(h.space), space
            )
        else:
            space = h.space.tensor(v)
            action = kron(h.mult, LinMap.identity(v)).with_spaces(
                h.space.tensor(space), space
            )
        return HModule(h, self.side, space, action)

    def free_map(self, f: LinMap) -> LinMap:
        ih = LinMap.identity(self.hopf.space)
        return kron(f, ih) if self.side == RIGHT else kron(ih, f)

    def unit(self, v: Space) -> LinMap:
        """eta_V: V -> U F V, insert the algebra unit."""
        iv = LinMap.identity(v)
        h = self.hopf
        out = kron(iv, h.unit) if self.side == RIGHT else kron(h.unit, iv)
        return out.with_spaces(v, self.free(v).space)

    def counit(self, x: HModule) -> LinMap:
        """eps_X: F U X -> X, the action."""
        return x.action

    def monad_obj(self, v: Space) -> Space:
        return self.free(v).space

    def monad_map(self, f: LinMap) -> LinMap:
        return self.free_map(f)

    def monad_mult(self, v: Space) -> LinMap:
        """mu_V = U eps_{F V}: B B V -> B V."""
        return self.free(v).action

    def hom_from_linear(self, phi: LinMap, target: HModule) -> LinMap:
        """Adjunct of phi: V -> U X, a module map F V -> X."""
        return compose(target.action, self.free_map(phi))

    def probe_modules(self) -> list[HModule]:
        """Axiom-check probes: dims 1, dim H, dim H^2 per the project convention."""
        h = self.hopf
        return [
            trivial_module(h, self.side),
            self.free(scalar_space(h.field)),
            self.free(Space(h.field, h.dim, tuple(f"v{i}" for i in range(h.dim)))),
        ]

    def probe_morphisms(self, seed: int = 0) -> list[tuple[HModule, HModule, LinMap]]:
        """Identity and pseudorandom module maps between probes (deterministic seed)."""
        rng = np.random.default_rng(seed)
        triv, f1, fh = self.probe_modules()
        out = [(f1, f1, LinMap.identity(f1.space))]
        bases = {id(f1): scalar_space(self.hopf.field), id(fh): Space(self.hopf.field, self.hopf.dim)}
        for src, dst in [(f1, f1), (f1, fh), (fh, f1), (fh, fh), (f1, triv), (fh, triv)]:
            phi = random_linmap(rng, bases[id(src)], dst.space, span=2)
            out.append((src, dst, self.hom_from_linear(phi, dst)))
        return out


# ---------------------------------------------------------------------------
# comonads on the module category


class InducedComonad:
    """T = F U with counit the action and comultiplication the unit insertion."""

    def __init__(self, adj: FreeForget):
        self.adj = adj
        self.hopf = adj.hopf

    def obj(self, x: HModule) -> HModule:
        return self.adj.free(x.space)

    def map(self, f: LinMap) -> LinMap:
        return self.adj.free_map(f)

    def counit(self, x: HModule) -> LinMap:
        return x.action

    def comult(self, x: HModule) -> LinMap:
        return self.adj.unit(self.obj(x).space).with_spaces(
            self.obj(x).space, self.obj(self.obj(x)).space
        )


@dataclass(frozen=True)
class StrandComonad:
    """Comonad W (x) - or - (x) W on k-Mod from a coalgebra structure on W."""

    coalgebra: CoalgebraData
    side: str = LEFT

    def obj(self, v: Space) -> Space:
        w = self.coalgebra.space
        return w.tensor(v) if self.side == LEFT else v.tensor(w)

    def map(self, f: LinMap) -> LinMap:
        iw = LinMap.identity(self.coalgebra.space)
        return kron(iw, f) if self.side == LEFT else kron(f, iw)

    def counit(self, v: Space) -> LinMap:
        iv = LinMap.identity(v)
        out = (
            kron(self.coalgebra.counit, iv)
            if self.side == LEFT
            else kron(iv, self.coalgebra.counit)
        )
        return out.with_spaces(self.obj(v), v)

    def comult(self, v: Space) -> LinMap:
        iv = LinMap.identity(v)
        out = (
            kron(self.coalgebra.comult, iv)
            if self.side == LEFT
            else kron(iv, self.coalgebra.comult)
        )
        return out.with_spaces(self.obj(v), self.obj(self.obj(v)))


@dataclass(frozen=True)
class StrandMonad:
    """Monad W (x) - or - (x) W on k-Mod from an algebra structure on W."""

    algebra: AlgebraData
    side: str = RIGHT

    def obj(self, v: Space) -> Space:
        w = self.algebra.space
        return w.tensor(v) if self.side == LEFT else v.tensor(w)

    def map(self, f: LinMap) -> LinMap:
        iw = LinMap.identity(self.algebra.space)
        return kron(iw, f) if self.side == LEFT else kron(f, iw)

    def unit(self, v: Space) -> LinMap:
        iv = LinMap.identity(v)
        out = kron(self.algebra.unit, iv) if self.side == LEFT else kron(iv, self.algebra.unit)
        return out.with_spaces(v, self.obj(v))

    def mult(self, v: Space) -> LinMap:
        iv = LinMap.identity(v)
        out = kron(self.algebra.mult, iv) if self.side == LEFT else kron(iv, self.algebra.mult)
        return out.with_spaces(self.obj(self.obj(v)), self.obj(v))


@dataclass(frozen=True)
class Lift:
    """A lift S through the adjunction of the strand functor on W, with iso Omega.

    The lifted module structure on S X is supplied by action_fn; Omega defaults
    to the identity (carrier spaces coincide).  When W carries a coalgebra, the
    lift is a comonad lift and comult/counit come from the carrier.
    """

    adj: FreeForget
    carrier: CoalgebraData
    carrier_side: str
    action_fn: Callable[[HModule], LinMap]
    name: str = ""
    omega_fn: Callable[[Space], LinMap] | None = None

    def extension(self) -> StrandComonad:
        return StrandComonad(self.carrier, self.carrier_side)

    def obj(self, x: HModule) -> HModule:
        space = (
            self.carrier.space.tensor(x.space)
            if self.carrier_side == LEFT
            else x.space.tensor(self.carrier.space)
        )
        return HModule(self.adj.hopf, self.adj.side, space, self.action_fn(x))

    def map(self, f: LinMap) -> LinMap:
        iw = LinMap.identity(self.carrier.space)
        return kron(iw, f) if self.carrier_side == LEFT else kron(f, iw)

    def counit(self, x: HModule) -> LinMap:
        return self.extension().counit(x.space).with_spaces(self.obj(x).space, x.space)

    def comult(self, x: HModule) -> LinMap:
        sx = self.obj(x)
        return self.extension().comult(x.space).with_spaces(sx.space, self.obj(sx).space)

    def omega(self, v: Space) -> LinMap:
        """Omega_X : C U X -> U S X, at an object with underlying space v."""
        if self.omega_fn is not None:
            return self.omega_fn(v)
        return LinMap.identity(self.extension().obj(v))


# ---------------------------------------------------------------------------
# concrete lifts


def translation_kernel(hopf: HopfData) -> LinMap:
    """h |-> h_+ (x) h_- = h_(1) (x) S(h_(2))."""
    return compose(kron(LinMap.identity(hopf.space), hopf.antipode), hopf.comult)


def yd_lift(hopf: HopfData) -> Lift:
    """The Yetter-Drinfel'd lift of H (x) - to right H-modules.

    S X = H (x) X with action (h (x) x) g = g_- h (x) x g_+.
    """
    adj = FreeForget(hopf, RIGHT)
    h = hopf.space
    trans = translation_kernel(hopf)

    def action_fn(x: HModule) -> LinMap:
        ix = LinMap.identity(x.space)
        ih = LinMap.identity(h)
        # (h, x, g) -> (h, x, g+, g-) -> (g-, h, x, g+) -> (g- h, x g+)
        expand = kron(kron(ih, ix), trans)
        to_slots = permute_blocks([h, x.space, h, h], (1, 2, 3, 0))
        contract = kron(hopf.mult, x.action)
        sx = h.tensor(x.space)
        return compose_chain(contract, to_slots, expand).with_spaces(sx.tensor(h), sx)

    return Lift(adj, hopf.coalgebra, LEFT, action_fn, name="yd_lift")


def canonical_left_lift(hopf: BialgebraData) -> Lift:
    """The lift S = T itself: H (x) X free on the first slot (left modules)."""
    adj = FreeForget(hopf, LEFT)

    def action_fn(x: HModule) -> LinMap:
        return adj.free(x.space).action

    return Lift(adj, hopf.coalgebra, LEFT, action_fn, name="canonical_lift")


def codiagonal_left_lift(hopf: BialgebraData) -> Lift:
    """The lift V: H (x) X with the codiagonal action g(h (x) y) = g_(1)h (x) g_(2)y."""
    adj = FreeForget(hopf, LEFT)
    h = hopf.space

    def action_fn(x: HModule) -> LinMap:
        ix = LinMap.identity(x.space)
        ih = LinMap.identity(h)
        # (g, h, y) -> (g1, g2, h, y) -> (g1, h, g2, y) -> (g1 h, g2 y)
        expand = kron(kron(hopf.comult, ih), ix)
        to_slots = permute_blocks([h, h, h, x.space], (0, 2, 1, 3))
        contract = kron(hopf.mult, x.action)
        sx = h.tensor(x.space)
        return compose_chain(contract, to_slots, expand).with_spaces(h.tensor(sx), sx)

    return Lift(adj, hopf.coalgebra, LEFT, action_fn, name="codiagonal_lift")


def banal_lift(hopf: BialgebraData, side: str = RIGHT) -> Lift:
    """Example with C = B and S = T, Omega = id; feeds the trivial distributive law."""
    adj = FreeForget(hopf, side)

    def action_fn(x: HModule) -> LinMap:
        return adj.free(x.space).action

    carrier_side = LEFT if side == LEFT else RIGHT
    return Lift(adj, hopf.coalgebra, carrier_side, action_fn, name="banal_lift")

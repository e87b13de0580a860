"""Orbit categories of D^b(kQ) by self-equivalences tau^p Sigma^s.

Hom(X, Y) in the orbit category is the direct sum over n of Hom(X, F^n Y).
Objects are canonical orbit representatives; morphisms are finitely
supported families of homotopy classes between projective realizations,
composed by (F^n g) o f using realization-level lifts of Sigma and nu.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Mapping

from .derivedcat import DbIndec, DerivedCategory, Realization, derived_category
from .dgkernel import (
    ChainMap,
    Complex,
    GradedMap,
    HomotopyClass,
    _hom,
    compose,
    homology_homs,
    is_quasi_isomorphism,
    shift_map,
)
from .exactlin import QQ, Field, Matrix, solve
from .quiverrep import Quiver, direct_sum, injective, nakayama_map

__all__ = [
    "AutoEquivalence",
    "OrbitCategory",
    "OrbitHom",
    "OrbitMorphism",
    "OrbitError",
    "cluster_category",
    "orbit_category",
    "CLUSTER",
]


class OrbitError(ValueError):
    pass


@dataclass(frozen=True)
class AutoEquivalence:
    """tau^tau_power Sigma^sigma_power acting on labels."""

    tau_power: int
    sigma_power: int

    def inverse(self) -> "AutoEquivalence":
        return AutoEquivalence(-self.tau_power, -self.sigma_power)

    def __str__(self) -> str:
        return f"tau^{self.tau_power} Sigma^{self.sigma_power}"


CLUSTER = AutoEquivalence(-1, 1)


@dataclass(frozen=True)
class OrbitHom:
    total: int
    support: dict = dc_field(default_factory=dict)


class OrbitCategory:
    """The orbit category D^b(kQ)/F with canonicalization and hom tables."""

    def __init__(self, quiver: Quiver, functor: AutoEquivalence, field: Field = QQ):
        self.cat: DerivedCategory = derived_category(quiver, field)
        self.quiver = quiver
        self.field = field
        self.F = functor
        self.period, self.tau_shift = self._tau_period()
        # F^N = Sigma^D on every label
        self.drift = functor.sigma_power * self.period + functor.tau_power * self.tau_shift
        if self.drift == 0:
            raise OrbitError(f"{functor} has a power equal to the identity; orbit homs would be infinite")
        self._canon: dict = {}
        self._nu_cache: dict = {}

    def _tau_period(self) -> tuple[int, int]:
        """Smallest N > 0 with tau^N = Sigma^c on all labels, and that c."""
        cat = self.cat
        starts = [DbIndec(k, 0) for k in range(len(cat.modules))]
        cur = list(starts)
        for steps in range(1, 4 * len(starts) + 8):
            cur = [cat.translate(x) for x in cur]
            if all(c.module_index == s.module_index for c, s in zip(cur, starts)):
                shifts = {c.shift for c in cur}
                if len(shifts) == 1:
                    return steps, shifts.pop()
        raise OrbitError("translate has no finite period up to shift")

    # -- label action -------------------------------------------------------

    def apply_F(self, x: DbIndec, n: int = 1) -> DbIndec:
        """F^n x; negative n uses the inverse."""
        if n == 0:
            return x
        q, r = divmod(n, self.period)
        x = x.suspend(q * self.drift)
        p, s = self.F.tau_power * r, self.F.sigma_power * r
        return self.cat.translate(x, p).suspend(s)

    def suspend(self, x: DbIndec, n: int = 1) -> DbIndec:
        return self.canonical(x.suspend(n))

    def canonical(self, x: DbIndec) -> DbIndec:
        """The orbit member with least non-negative shift, then least module index."""
        if x not in self._canon:
            d = abs(self.drift)
            best = None
            for k in range(self.period):
                y = self.apply_F(x, k)
                y = DbIndec(y.module_index, y.shift % d)
                key = (y.shift, y.module_index)
                if best is None or key < (best.shift, best.module_index):
                    best = y
            self._canon[x] = best
        return self._canon[x]

    @property
    def indecomposables(self) -> tuple[DbIndec, ...]:
        labels = self.cat.labels(range(abs(self.drift)))
        return tuple(sorted({self.canonical(x) for x in labels}, key=lambda x: (x.shift, x.module_index)))

    # -- homs ---------------------------------------------------------------

    def _candidate_powers(self, x: DbIndec, y: DbIndec) -> set[int]:
        """All n with F^n y in shift x.shift or x.shift + 1 (the only places Hom can live)."""
        out = set()
        for r in range(self.period):
            t = self.apply_F(y, r).shift
            for delta in (0, 1):
                num = x.shift + delta - t
                if num % self.drift == 0:
                    out.add(r + (num // self.drift) * self.period)
        return out

    def hom(self, x: DbIndec, y: DbIndec) -> OrbitHom:
        """Hom(X, F^n Y) for all n; raises if a nonzero term falls outside the predicted support."""
        cand = self._candidate_powers(x, y)
        lo = min(cand, default=0) - 2
        hi = max(cand, default=0) + 2
        support = {}
        for n in range(lo, hi + 1):
            d = self.cat.hom_dim(x, self.apply_F(y, n))
            if d:
                if n not in cand:
                    raise OrbitError(f"nonzero Hom(X, F^{n} Y) outside the predicted window")
                support[n] = d
        return OrbitHom(sum(support.values()), support)

    def verify_2cy(self, x: DbIndec, y: DbIndec) -> bool:
        return self.hom(x, y).total == self.hom(y, x.suspend(2)).total

    def ext1(self, x: DbIndec, y: DbIndec) -> int:
        return self.hom(x, y.suspend(1)).total

    # -- dg orbit category -------------------------------------------------

    def _stage(self, x: DbIndec, y: DbIndec, p: int, degrees: range, n_cap: int) -> dict[int, int]:
        """Homology dims of (+)_{n >= 0} Hom(real F^n X, real F^p Y) in the given degrees."""
        dims = {d: 0 for d in degrees}
        ry = self.cat.realize(self.apply_F(y, p)).complex
        for n in range(n_cap + 1):
            rx = self.cat.realize(self.apply_F(x, n)).complex
            if rx.is_zero() or ry.is_zero():
                continue
            # chain-level overlap of the hom complex with the degrees of interest
            if ry.low - rx.high > degrees.stop - 1 or ry.high - rx.low < degrees.start:
                continue
            hc = _hom(rx, ry)
            for d in degrees:
                dims[d] += hc.homology_dim(d)
        return dims

    def dg_hom(self, x: DbIndec, y: DbIndec, degrees: range = range(-3, 4)) -> tuple[dict[int, int], int]:
        """Stabilized colim_p of the dg orbit hom complex; returns (dims by degree, p*)."""
        span = abs(x.shift - y.shift) + len(degrees) + 4
        bound = self.period * (math.ceil(span / abs(self.drift)) + 2)
        final = self._stage(x, y, bound, degrees, 2 * bound)
        for p in range(bound + 1):
            if self._stage(x, y, p, degrees, 2 * bound) == final:
                return final, p
        raise OrbitError("dg orbit hom did not stabilize")

    # -- realization-level functors ----------------------------------------

    def _nu_complex(self, r: Realization) -> Complex:
        """nu applied degreewise to a complex of projectives."""
        cx = r.complex
        q, f = self.quiver, self.field
        objects = {n: direct_sum([injective(q, v, f) for v in r.at(n)], q, f) for n in cx.degrees}
        diffs = {n: nakayama_map(r.at(n), r.at(n - 1), cx.d(n)) for n in cx.degrees if n - 1 in objects}
        return Complex.build(objects, diffs, q, f)

    def _nu_on_map(self, g: GradedMap, ra: Realization, rb: Realization) -> GradedMap:
        na, nb = self._nu_complex(ra), self._nu_complex(rb)
        return GradedMap.from_function(na, nb, g.degree,
                                       lambda k: nakayama_map(ra.at(k), rb.at(k + g.degree), g.comp(k)))

    def _comparison(self, a: DbIndec) -> ChainMap:
        """A quasi-isomorphism real(nu a) -> nu(real a)."""
        key = ("phi", a)
        if key not in self._nu_cache:
            src = self.cat.realize(self.cat.serre(a)).complex
            tgt = self._nu_complex(self.cat.realize(a))
            dim, basis = homology_homs(src, tgt)
            if dim != 1:
                raise OrbitError(f"Hom(real nu A, nu real A) has dimension {dim}, expected 1")
            phi = basis[0].representative
            if not is_quasi_isomorphism(phi):
                raise OrbitError("Nakayama comparison map is not a quasi-isomorphism")
            self._nu_cache[key] = phi
        return self._nu_cache[key]

    def nu_lift(self, g: GradedMap, a: DbIndec, b: DbIndec) -> ChainMap:
        """The class x: real(nu a) -> real(nu b) with phi_b x ~ nu(g) phi_a."""
        ra, rb = self.cat.realize(a), self.cat.realize(b)
        na, nb = self.cat.serre(a), self.cat.serre(b)
        src = self.cat.realize(na).complex
        tgt = self.cat.realize(nb).complex
        phi_a, phi_b = self._comparison(a), self._comparison(b)
        want = compose(self._nu_on_map(g, ra, rb), phi_a)
        _, basis = homology_homs(src, tgt)
        h = _hom(src, phi_b.target)
        cols = [h.homology_coords(compose(phi_b, c.representative)) for c in basis]
        rhs = h.homology_coords(want)
        return self._combine(basis, cols, rhs, src, tgt)

    def nu_inverse_lift(self, g: GradedMap, a: DbIndec, b: DbIndec) -> ChainMap:
        """The class x: real(nu^-1 a) -> real(nu^-1 b) with nu_lift(x) ~ g."""
        a0, b0 = self.cat.serre(a, -1), self.cat.serre(b, -1)
        src = self.cat.realize(a0).complex
        tgt = self.cat.realize(b0).complex
        _, basis = homology_homs(src, tgt)
        h = _hom(g.source, g.target)
        cols = [h.homology_coords(self.nu_lift(c.representative, a0, b0)) for c in basis]
        rhs = h.homology_coords(g)
        return self._combine(basis, cols, rhs, src, tgt)

    def _combine(self, basis, cols, rhs, src, tgt) -> ChainMap:
        f = self.field
        if not rhs:
            return ChainMap.zero(src, tgt)
        if not cols:
            if any(x != 0 for x in rhs):
                raise OrbitError("class has no preimage")
            return ChainMap.zero(src, tgt)
        x = solve(Matrix.from_columns(cols, f, rows=len(rhs)), rhs)
        if x is None:
            raise OrbitError("class has no preimage under the lifted functor")
        out = GradedMap.zero(src, tgt)
        for c, b in zip(x, basis):
            if c != 0:
                out = out + b.representative.scale(c)
        return ChainMap.of(out)

    def F_lift(self, g: GradedMap, a: DbIndec, b: DbIndec, n: int = 1) -> tuple[ChainMap, DbIndec, DbIndec]:
        """Apply F^n = (nu^p Sigma^(s-p))^n to a map real(a) -> real(b)."""
        p, s = self.F.tau_power, self.F.sigma_power
        for _ in range(abs(n)):
            if n > 0:
                g, a, b = shift_map(g, s - p), a.suspend(s - p), b.suspend(s - p)
                for _ in range(abs(p)):
                    if p > 0:
                        g, a, b = self.nu_lift(g, a, b), self.cat.serre(a), self.cat.serre(b)
                    else:
                        g, a, b = self.nu_inverse_lift(g, a, b), self.cat.serre(a, -1), self.cat.serre(b, -1)
            else:
                for _ in range(abs(p)):
                    if p > 0:
                        g, a, b = self.nu_inverse_lift(g, a, b), self.cat.serre(a, -1), self.cat.serre(b, -1)
                    else:
                        g, a, b = self.nu_lift(g, a, b), self.cat.serre(a), self.cat.serre(b)
                g, a, b = shift_map(g, p - s), a.suspend(p - s), b.suspend(p - s)
        return ChainMap.of(g), a, b

    # -- morphisms ----------------------------------------------------------

    def identity(self, x: DbIndec) -> "OrbitMorphism":
        from .dgkernel import identity_map
        return OrbitMorphism(self, x, x, {0: HomotopyClass(identity_map(self.cat.realize(x).complex))})

    def zero(self, x: DbIndec, y: DbIndec) -> "OrbitMorphism":
        return OrbitMorphism(self, x, y, {})

    def hom_basis(self, x: DbIndec, y: DbIndec) -> list["OrbitMorphism"]:
        out = []
        for n in sorted(self.hom(x, y).support):
            rx = self.cat.realize(x).complex
            ry = self.cat.realize(self.apply_F(y, n)).complex
            for c in homology_homs(rx, ry)[1]:
                out.append(OrbitMorphism(self, x, y, {n: c}))
        return out

    def compose(self, g: "OrbitMorphism", f: "OrbitMorphism") -> "OrbitMorphism":
        """g o f with component at n + p the sum of (F^n g_p) o f_n."""
        if f.target != g.source:
            raise OrbitError("orbit morphisms are not composable")
        x, y, z = f.source, f.target, g.target
        comps: dict[int, GradedMap] = {}
        for n, fc in f.components.items():
            for p, gc in g.components.items():
                lifted, a, b = self.F_lift(gc.representative, y, self.apply_F(z, p), n)
                if a != self.apply_F(y, n) or b != self.apply_F(z, n + p):
                    raise ArithmeticError("lifted functor landed on the wrong labels")
                term = compose(lifted, fc.representative)
                comps[n + p] = comps[n + p] + term if n + p in comps else term
        classes = {k: HomotopyClass(ChainMap.of(v)) for k, v in comps.items()}
        return OrbitMorphism(self, x, z, classes)


@dataclass(frozen=True, eq=False)
class OrbitMorphism:
    category: OrbitCategory
    source: DbIndec
    target: DbIndec
    components: Mapping[int, HomotopyClass]

    def __post_init__(self):
        cat = self.category
        rx = cat.cat.realize(self.source).complex
        clean = {}
        for n, c in self.components.items():
            ry = cat.cat.realize(cat.apply_F(self.target, n)).complex
            if c.source != rx or c.target != ry:
                raise OrbitError(f"component {n} does not map real(X) -> real(F^{n} Y)")
            if not c.is_zero():
                clean[n] = c
        object.__setattr__(self, "components", clean)

    def __eq__(self, other):
        if not isinstance(other, OrbitMorphism):
            return NotImplemented
        if (self.source, self.target) != (other.source, other.target):
            return False
        keys = set(self.components) | set(other.components)
        for n in keys:
            a, b = self.components.get(n), other.components.get(n)
            if a is None or b is None:
                return False
            if a != b:
                return False
        return True

    __hash__ = None

    def __add__(self, other: "OrbitMorphism") -> "OrbitMorphism":
        comps = {}
        for n in set(self.components) | set(other.components):
            a, b = self.components.get(n), other.components.get(n)
            if a is None:
                comps[n] = b
            elif b is None:
                comps[n] = a
            else:
                comps[n] = HomotopyClass(ChainMap.of(a.representative + b.representative))
        return OrbitMorphism(self.category, self.source, self.target, comps)

    def scale(self, c) -> "OrbitMorphism":
        return OrbitMorphism(self.category, self.source, self.target,
                             {n: HomotopyClass(ChainMap.of(v.representative.scale(c))) for n, v in self.components.items()})

    def is_zero(self) -> bool:
        return not self.components


@lru_cache(maxsize=None)
def orbit_category(quiver: Quiver, functor: AutoEquivalence, field: Field = QQ) -> OrbitCategory:
    return OrbitCategory(quiver, functor, field)


def cluster_category(quiver: Quiver, field: Field = QQ) -> OrbitCategory:
    """The orbit category by F = tau^-1 Sigma (= nu^-1 Sigma^2)."""
    return orbit_category(quiver, CLUSTER, field)

"""Seeded random representations, complexes, chain maps and cofibrations."""

from __future__ import annotations

import random

from .dgkernel import ChainMap, Complex, GradedMap, cycle_homs
from .exactlin import QQ, Field, Matrix, kernel
from .quiverrep import Quiver, Rep, RepMorphism, block_morphism, direct_sum, hom_space, indecomposables

__all__ = ["random_rep", "random_complex", "random_chain_map", "random_cofibration"]

COEFFS = (-2, -1, 1, 2)


def _combination(rng: random.Random, basis, zero, field: Field):
    out = zero
    for b in basis:
        c = rng.choice((0,) + COEFFS)
        if c:
            out = out + b.scale(field(c))
    return out


def random_rep(rng: random.Random, q: Quiver, field: Field = QQ, max_dim: int = 3) -> Rep:
    """A direct sum of random interval modules of total dimension at most ``max_dim``."""
    parts = []
    total = 0
    inds = indecomposables(q, field)
    for _ in range(rng.randint(0, max_dim)):
        m = rng.choice(inds)
        if total + m.total_dim <= max_dim:
            parts.append(m)
            total += m.total_dim
    return direct_sum(parts, q, field)


def random_complex(rng: random.Random, q: Quiver, field: Field = QQ, degrees: tuple[int, int] = (-2, 2),
                   max_dim: int = 3) -> Complex:
    """Random objects in the degree window, differentials drawn from {d_n : d_{n-1} d_n = 0}."""
    lo, hi = degrees
    objects = {k: random_rep(rng, q, field, max_dim) for k in range(lo, hi + 1)}
    diffs = {}
    for k in range(lo + 1, hi + 1):
        h = hom_space(objects[k], objects[k - 1])
        prev = diffs.get(k - 1)
        if prev is None or not h.basis:
            allowed = list(h.basis)
        else:
            flat = [(prev @ b).flat() for b in h.basis]
            rows = len(flat[0])
            if rows == 0:
                allowed = list(h.basis)
            else:
                ker, _ = kernel(Matrix.from_columns(flat, field, rows=rows))
                allowed = [h.element(v) for v in ker]
        diffs[k] = _combination(rng, allowed, RepMorphism.zero(objects[k], objects[k - 1]), field)
    return Complex.build(objects, diffs, q, field)


def random_chain_map(rng: random.Random, X: Complex, Y: Complex) -> ChainMap:
    basis = cycle_homs(X, Y)
    return ChainMap.of(_combination(rng, basis, GradedMap.zero(X, Y), X.field))


def random_cofibration(rng: random.Random, q: Quiver, field: Field = QQ, degrees: tuple[int, int] = (-2, 2),
                       max_dim: int = 2) -> tuple[ChainMap, Complex]:
    """A degreewise split inclusion X -> Y where Y is X (+) W twisted by a (-1)-cycle h: W -> X.

    Returns the inclusion and W, which is the expected quotient.
    """
    from .dgkernel import _hom

    X = random_complex(rng, q, field, degrees, max_dim)
    W = random_complex(rng, q, field, degrees, max_dim)
    hc = _hom(W, X)
    h = _combination(rng, hc.cycles(-1), GradedMap.zero(W, X, -1), field)
    lo, hi = degrees
    objects, diffs = {}, {}
    for k in range(lo - 1, hi + 2):
        objects[k] = direct_sum([X.obj(k), W.obj(k)], q, field)
    for k in range(lo, hi + 2):
        grid = [[X.d(k), h.comp(k)], [None, W.d(k)]]
        diffs[k] = block_morphism([X.obj(k), W.obj(k)], [X.obj(k - 1), W.obj(k - 1)], grid,
                                  source=objects[k], target=objects[k - 1])
    Y = Complex.build(objects, diffs, q, field)

    def incl(k):
        return block_morphism([X.obj(k)], [X.obj(k), W.obj(k)], [[RepMorphism.identity(X.obj(k))], [None]],
                              source=X.obj(k), target=Y.obj(k))

    return ChainMap.from_function(X, Y, 0, incl), W

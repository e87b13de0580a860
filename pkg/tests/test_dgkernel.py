from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triorbit.dgkernel import (
    ChainMap,
    Complex,
    GradedMap,
    _hom,
    compose,
    cone,
    cone_triangle,
    cycle_homs,
    differential,
    has_homotopy_inverse,
    hom_complex,
    homology,
    homology_dims,
    homology_homs,
    identity_map,
    is_cofibration,
    is_nullhomotopic,
    is_quasi_isomorphism,
    is_weak_equivalence,
    shift,
    verify_cone_representability,
)
from triorbit.exactlin import GF, QQ, kernel, rank
from triorbit.quiverrep import Quiver, RepMorphism, hom_space, indecomposables, projective, projective_resolution
from triorbit.sampling import random_chain_map, random_complex
from triorbit.suites import brute_force_homotopy_dim, triangle_exactness

A2 = Quiver.linear(2)
seeds = st.integers(0, 2**32)


def _complex(seed, q=A2, field=QQ):
    return random_complex(random.Random(seed), q, field)


def _pair_map(seed, q=A2):
    rng = random.Random(seed)
    X, Y = random_complex(rng, q), random_complex(rng, q)
    return random_chain_map(rng, X, Y)


def _non_projective_simple(q):
    projs = {projective(q, v).dims for v in q.vertices}
    return next(m for m in indecomposables(q) if sum(m.dims) == 1 and m.dims not in projs)


def test_hom_complex_of_stalks():
    for m in indecomposables(A2):
        for n in indecomposables(A2):
            h = hom_complex(Complex.stalk(m), Complex.stalk(n))
            assert list(h.degrees) in ([], [0])
            assert h.dims().get(0, (0,))[0] == hom_space(m, n).dimension


@given(seeds)
def test_hom_complex_shift_reindexing(seed):
    rng = random.Random(seed)
    X, Y = random_complex(rng, A2), random_complex(rng, A2)
    h, hs = _hom(X, Y), _hom(X, shift(Y, 1))
    for n in range(-6, 7):
        assert hs.dim(n) == h.dim(n - 1)


def test_d_squared_zero_on_fifty_complexes():
    rng = random.Random(0)
    nonzero = 0
    for _ in range(50):
        X = random_complex(rng, A2)
        for n in X.degrees:
            assert (X.d(n) @ X.d(n + 1)).is_zero()
            nonzero += not X.d(n).is_zero()
        h = _hom(X, random_complex(rng, A2))
        for n in h.degrees:
            assert (h.differential_matrix(n) @ h.differential_matrix(n + 1)).is_zero()
    assert nonzero > 0


@given(seeds, st.integers(-3, 3))
def test_shift_laws(seed, n):
    X = _complex(seed)
    assert shift(X, 0) == X
    assert shift(shift(X, 1), -1) == X
    for k in range(-3, 4):
        assert homology(shift(X, n), k + n).dims == homology(X, k).dims


@given(seeds)
def test_cone_of_identity_is_acyclic(seed):
    X = _complex(seed)
    assert homology_dims(cone(identity_map(X))) == {}
    assert homology_homs(X, cone(identity_map(X)))[0] == 0


@given(seeds)
def test_cone_of_zero_map_splits(seed):
    rng = random.Random(seed)
    X, Y = random_complex(rng, A2), random_complex(rng, A2)
    c = homology_dims(cone(GradedMap.zero(X, Y)))
    hy, hsx = homology_dims(Y), homology_dims(shift(X, 1))
    for n in set(c) | set(hy) | set(hsx):
        expected = tuple(a + b for a, b in zip(hy.get(n, (0, 0)), hsx.get(n, (0, 0))))
        assert c.get(n, (0, 0)) == expected


@given(seeds, st.integers(-3, 3), st.sampled_from([1, 2]))
def test_long_exact_sequence_at_each_vertex(seed, degree, vertex):
    # Hom_K(P_v[degree], -) reads off H_degree at vertex v
    f = _pair_map(seed)
    Z = shift(Complex.stalk(projective(A2, vertex)), degree)
    for r_in, dim, r_out in triangle_exactness(f, Z):
        assert r_in + r_out == dim


def test_cone_representability_examples():
    X = _complex(3)
    assert verify_cone_representability(identity_map(X), _complex(4))
    rng = random.Random(1)
    for _ in range(30):
        X, Y, Z = (random_complex(rng, A2) for _ in range(3))
        assert verify_cone_representability(random_chain_map(rng, X, Y), Z)


@pytest.mark.parametrize("corruption", ["sign", "dropped", "swapped"])
def test_cone_corruptions_detected(corruption):
    X = Complex.stalk(indecomposables(A2)[1])
    assert not verify_cone_representability(identity_map(X), X, corruption=corruption)


def test_cycle_homs_of_stalks_is_module_hom():
    for m in indecomposables(A2):
        for n in indecomposables(A2):
            assert len(cycle_homs(Complex.stalk(m), Complex.stalk(n))) == hom_space(m, n).dimension
            assert homology_homs(Complex.stalk(m), Complex.stalk(n))[0] == hom_space(m, n).dimension


@given(seeds)
def test_cycle_homs_are_chain_maps_and_complete(seed):
    rng = random.Random(seed)
    X, Y = random_complex(rng, A2), random_complex(rng, A2)
    basis = cycle_homs(X, Y)
    for g in basis:
        assert differential(g).is_zero()
    h = _hom(X, Y)
    expected = len(kernel(h.differential_matrix(0))[0]) if h.dim(0) else 0
    assert len(basis) == expected
    d1 = h.differential_matrix(1) if h.dim(1) and h.dim(0) else None
    boundaries = rank(d1) if d1 is not None else 0
    assert homology_homs(X, Y)[0] == len(basis) - boundaries


@given(seeds)
def test_homology_homs_against_brute_force(seed):
    rng = random.Random(seed)
    X, Y = random_complex(rng, A2), random_complex(rng, A2)
    assert homology_homs(X, Y)[0] == brute_force_homotopy_dim(X, Y)


def test_homology_homs_over_prime_field():
    rng = random.Random(5)
    for _ in range(10):
        X, Y = random_complex(rng, A2, GF(3)), random_complex(rng, A2, GF(3))
        assert homology_homs(X, Y)[0] == brute_force_homotopy_dim(X, Y)


def test_cofibration_examples():
    X = next(c for c in map(_complex, range(7, 40)) if not c.is_zero())
    assert is_cofibration(identity_map(X))
    assert not is_cofibration(GradedMap.zero(X, X))
    f = _pair_map(9)
    assert is_cofibration(cone_triangle(f).inclusion)


def test_weak_equivalence_examples():
    X = _complex(2)
    assert is_weak_equivalence(identity_map(X))
    C = cone(identity_map(X))
    assert is_weak_equivalence(ChainMap.zero(Complex.zero(A2), C))
    # proper subcomplex with different homology
    q = Quiver.linear(2)
    s = next(m for m in indecomposables(q) if sum(m.dims) == 1 and hom_space(m, projective(q, 1)).dimension)
    incl = hom_space(s, projective(q, 1)).basis[0]
    f = ChainMap.from_function(Complex.stalk(s), Complex.stalk(projective(q, 1)), 0, lambda k: incl)
    assert not is_weak_equivalence(f)


def test_resolution_is_quasi_isomorphism_but_not_homotopy_equivalence():
    s = _non_projective_simple(A2)
    res = projective_resolution(s)
    P = Complex.build({1: res.d.source, 0: res.d.target}, {1: res.d}, A2, QQ)
    f = ChainMap.from_function(P, Complex.stalk(s), 0,
                               lambda k: res.cover if k == 0 else RepMorphism.zero(P.obj(k), Complex.stalk(s).obj(k)))
    assert is_quasi_isomorphism(f)
    assert not is_weak_equivalence(f)
    assert not has_homotopy_inverse(f)


@given(seeds)
def test_weak_equivalence_cross_check(seed):
    f = _pair_map(seed)
    assert is_weak_equivalence(f) == has_homotopy_inverse(f)


@given(seeds)
def test_composite_with_nullhomotopic_is_nullhomotopic(seed):
    rng = random.Random(seed)
    X, Y = random_complex(rng, A2), random_complex(rng, A2)
    h = _hom(X, Y)
    for b in h.basis(1)[:3]:
        null = differential(b)
        assert is_nullhomotopic(null)
        g = random_chain_map(rng, Y, random_complex(rng, A2))
        assert is_nullhomotopic(compose(g, null))

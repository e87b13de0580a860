from __future__ import annotations

import itertools
import random

import pytest

from triorbit.derivedcat import DbIndec, DbObject, derived_category
from triorbit.dgkernel import homology_homs
from triorbit.exactlin import GF
from triorbit.quiverrep import Quiver, coxeter_matrix, interval_of

A1, A2, A3 = (Quiver.linear(n) for n in (1, 2, 3))


def test_hereditary_vanishing_and_endomorphisms():
    for n in range(1, 5):
        cat = derived_category(Quiver.linear(n))
        for x in cat.labels([0]):
            assert cat.hom_dim(x, x) == 1
            for y in cat.labels([0]):
                assert cat.hom_dim(x, y.suspend(2)) == 0
                assert cat.hom_dim(x, y.suspend(-1)) == 0


def test_translate_a1():
    cat = derived_category(A1)
    p = DbIndec(0, 0)
    assert cat.translate(p) == DbIndec(0, -1)
    assert cat.serre(p) == p


def test_translate_projective_is_shifted_injective():
    for q in (A2, A3, Quiver(3, ((2, 1), (2, 3)))):
        cat = derived_category(q)
        for v in q.vertices:
            assert cat.translate(DbIndec(cat.projective_index[v], 0)) == DbIndec(cat.injective_index[v], -1)


def test_translate_is_bijection_a3():
    cat = derived_category(A3)
    labels = cat.labels(range(-3, 4))
    images = {cat.translate(x) for x in labels}
    assert len(images) == len(labels)
    assert all(cat.translate(cat.translate(x), -1) == x for x in labels)


def test_coxeter_shadow():
    for n in range(1, 6):
        q = Quiver.linear(n)
        cat, phi = derived_category(q), coxeter_matrix(q)
        for x in cat.labels([0]):
            t = cat.translate(x)
            if t.shift == 0:
                assert tuple(phi.apply(cat.module(x).dims)) == cat.module(t).dims


def test_suspension_laws():
    cat = derived_category(A2)
    labels = cat.labels(range(-2, 3))
    for x in labels:
        assert cat.suspend(x, 0) == x
        assert cat.suspend(cat.suspend(x, 1), -1) == x
        assert cat.serre(cat.suspend(x)) == cat.suspend(cat.serre(x))
        for y in labels:
            assert cat.hom_dim(x.suspend(1), y.suspend(1)) == cat.hom_dim(x, y)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_serre_duality(n):
    cat = derived_category(Quiver.linear(n))
    labels = cat.labels(range(-2, 3))
    assert all(cat.verify_serre_duality(x, y) for x in labels for y in labels)


def test_serre_negative_control():
    cat = derived_category(A2)
    labels = cat.labels(range(-2, 3))
    assert not all(cat.verify_serre_duality(x, y, nu=cat.translate) for x in labels for y in labels)


def test_serre_non_linear_orientation():
    q = Quiver(4, ((2, 1), (2, 3), (4, 3)))
    cat = derived_category(q)
    labels = cat.labels(range(-2, 3))
    assert all(cat.verify_serre_duality(x, y) for x in labels for y in labels)


def test_realization_shapes():
    cat = derived_category(A3)
    for x in cat.labels([0]):
        r = cat.realize(x).complex
        assert set(r.degrees) <= {0, 1}
        assert r.low + 1 >= 0
        rs = cat.realize(x.suspend(1)).complex
        assert set(rs.degrees) <= {1, 2}
    proj = DbIndec(cat.projective_index[1], 0)
    assert list(cat.realize(proj).complex.degrees) == [0]


def test_realization_bridge_a2():
    cat = derived_category(A2)
    labels = cat.labels(range(-2, 3))
    for x, y in itertools.product(labels, repeat=2):
        assert homology_homs(cat.realize(x).complex, cat.realize(y).complex)[0] == cat.hom_dim(x, y)


def test_realization_bridge_random_a3():
    cat = derived_category(A3)
    labels = cat.labels(range(-2, 3))
    rng = random.Random(0)
    for _ in range(30):
        x, y = rng.choice(labels), rng.choice(labels)
        assert homology_homs(cat.realize(x).complex, cat.realize(y).complex)[0] == cat.hom_dim(x, y)


def test_object_homs_are_additive():
    cat = derived_category(A2)
    a, b, c = cat.labels([0])
    x = DbObject.of([a, b, b])
    y = DbObject.of([c, a.suspend(1)])
    expected = sum(cat.hom_dim(u, v) for u in x for v in y)
    assert cat.hom_dim_obj(x, y) == expected
    r = cat.realize_object(x).complex
    assert homology_homs(r, cat.realize_object(y).complex)[0] == expected


def test_prime_field_agrees():
    cq, cp = derived_category(A3), derived_category(A3, GF(5))
    lq, lp = cq.labels(range(-1, 2)), cp.labels(range(-1, 2))
    for (x, xp), (y, yp) in itertools.product(zip(lq, lp), repeat=2):
        assert cq.hom_dim(x, y) == cp.hom_dim(xp, yp)
    assert [interval_of(m.dims, A3) for m in cq.modules] == [interval_of(m.dims, A3) for m in cp.modules]

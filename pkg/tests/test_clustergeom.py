from __future__ import annotations

import itertools

import pytest

from triorbit.clustergeom import (
    Diagonal,
    cluster_tilting_objects,
    crossing,
    crossing_graph_dot,
    diagonals,
    geom_bijection,
    triangulations,
)
from triorbit.orbitcat import cluster_category
from triorbit.quiverrep import Quiver

CATALAN = {1: 2, 2: 5, 3: 14, 4: 42, 5: 132}


@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 9), (4, 14)])
def test_diagonal_counts(n, count):
    assert len(diagonals(n)) == count == n * (n + 3) // 2


def test_sides_rejected():
    with pytest.raises(ValueError):
        Diagonal(0, 1, 1)
    with pytest.raises(ValueError):
        Diagonal(0, 3, 1)


def test_crossing_examples():
    a, b = diagonals(1)
    assert crossing(a, b)
    assert not crossing(Diagonal(0, 2, 2), Diagonal(0, 3, 2))
    for d, e in itertools.product(diagonals(2), repeat=2):
        assert crossing(d, e) == crossing(e, d)
        assert not crossing(d, d)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_triangulation_counts(n):
    tri = triangulations(n)
    assert len(tri) == CATALAN[n]
    for t in tri:
        assert len(t) == n
        assert not any(crossing(d, e) for d, e in itertools.combinations(t, 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tilting_objects(n):
    oc = cluster_category(Quiver.linear(n))
    tilt = cluster_tilting_objects(oc)
    assert len(tilt) == CATALAN[n]
    assert all(len(t) == n for t in tilt)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bijection_transports_triangulations(n):
    oc = cluster_category(Quiver.linear(n))
    b = geom_bijection(oc)
    assert sorted(b) == diagonals(n)
    assert set(b.values()) == set(oc.indecomposables)
    for d, e in itertools.product(b, repeat=2):
        assert crossing(d, e) == (oc.ext1(b[d], b[e]) > 0)
    moved = {frozenset(b[d] for d in t) for t in triangulations(n)}
    assert moved == set(cluster_tilting_objects(oc))


def test_crossing_number_sums_a2():
    oc = cluster_category(Quiver.linear(2))
    b = geom_bijection(oc)
    geo = sum(crossing(d, e) for d, e in itertools.combinations(b, 2))
    alg = sum(oc.ext1(x, y) > 0 for x, y in itertools.combinations(b.values(), 2))
    assert geo == alg == 5


def test_dot_is_deterministic():
    assert crossing_graph_dot(2) == crossing_graph_dot(2)
    assert crossing_graph_dot(2).count("--") == 5

"""Exact computations in derived and orbit categories of type-A path algebras."""

from __future__ import annotations

from .braidk0 import braid_generator, euler_matrix, orbit_quotient_action, smith_form, verify_braid_relations
from .clustergeom import Diagonal, cluster_tilting_objects, crossing, diagonals, geom_bijection, triangulations
from .derivedcat import DbIndec, DbObject, DerivedCategory, derived_category
from .dgkernel import ChainMap, Complex, GradedMap, cone, hom_complex, homology, is_cofibration, shift
from .exactlin import GF, QQ, Matrix, kernel, rank, rref, solve
from .orbitcat import CLUSTER, AutoEquivalence, OrbitCategory, cluster_category, orbit_category
from .quiverrep import (
    Quiver,
    QuiverError,
    Rep,
    RepMorphism,
    ar_translate,
    ext1_dim,
    hom_space,
    indecomposables,
    projective,
    validate_quiver,
)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "Matrix", "kernel", "rank", "rref", "solve",
    "Quiver", "QuiverError", "Rep", "RepMorphism", "ar_translate", "ext1_dim", "hom_space",
    "indecomposables", "projective", "validate_quiver",
    "ChainMap", "Complex", "GradedMap", "cone", "hom_complex", "homology", "is_cofibration", "shift",
    "DbIndec", "DbObject", "DerivedCategory", "derived_category",
    "CLUSTER", "AutoEquivalence", "OrbitCategory", "cluster_category", "orbit_category",
    "Diagonal", "cluster_tilting_objects", "crossing", "diagonals", "geom_bijection", "triangulations",
    "braid_generator", "euler_matrix", "orbit_quotient_action", "smith_form", "verify_braid_relations",
]

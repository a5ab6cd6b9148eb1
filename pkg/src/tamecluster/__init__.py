"""Cluster-tilted algebras of Euclidean type over Q: representations of tame
quivers, their AR combinatorics, tilting torsion classes, the cluster category,
the generator M' of mod B and the global dimension of End_B(M')."""

from .ar import Catalog, Homogeneous, Regular, Transjective, Window, enumerate_tubes
from .cluster import BMRContext, ClusterCategory, b_algebra
from .generator import (
    GeneratorError,
    build_generator,
    canonical_sequence,
    check_approximation,
    choose_slice,
    cogenerator_check,
    induced_b_sequence,
    verdict,
    verify_sample,
)
from .gldim import end_algebra, global_dimension, resolution_property
from .instances import InstanceSpec, bundled, load_spec, parse_spec
from .quiver import Quiver, Representation, ext1_dim, hom_dim
from .tilting import TiltingError, enumerate_torsion, maximal_cones, validate_tilting

__version__ = "0.1.0"

__all__ = [
    "BMRContext", "Catalog", "ClusterCategory", "GeneratorError", "Homogeneous", "InstanceSpec", "Quiver",
    "Regular", "Representation", "TiltingError", "Transjective", "Window", "b_algebra", "build_generator",
    "bundled", "canonical_sequence", "check_approximation", "choose_slice", "cogenerator_check", "end_algebra",
    "enumerate_torsion", "enumerate_tubes", "ext1_dim", "global_dimension", "hom_dim", "induced_b_sequence",
    "load_spec", "maximal_cones", "parse_spec", "resolution_property", "validate_tilting", "verdict",
    "verify_sample",
]

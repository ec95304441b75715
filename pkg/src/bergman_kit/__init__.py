"""Exact computations with Bergman complexes of matroids and oriented
matroids, graph associahedra and nested set complexes."""

from .bergman import (
    CoarseCell,
    CoarseSubdivision,
    LabeledForest,
    bergman_coarse,
    bergman_fine,
    covers,
    flag_of_weight,
    forest_of_flag,
    is_valid_flag,
    matroid_of_flag,
    positive_bergman,
    psi,
    tevelev_check,
)
from .coxeter import (
    CoxeterDiagram,
    RootSystem,
    build_root_system,
    coxeter_diagram,
    coxeter_oriented_matroid,
    support,
    weyl_generators,
)
from .matroid import Matroid, MatroidError, beta, from_circuits, from_rational_matrix, minor, mu, uniform
from .nested import forest_label_sets, irreducibles, nested_complex, positive_forest_label_sets
from .oriented import OrientedMatroid, bounded_topes, generic_extension
from .posets import FinitePoset, SimplicialComplex, Verdict, order_complex, reduced_euler_characteristic
from .tubings import SimpleGraph, are_compatible, face_poset, f_vector, tubes, tubings

__version__ = "0.1.0"

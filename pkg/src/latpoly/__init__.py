"""Exact computations on lattice polytopes and the polarized toric varieties
they define: smoothness, Cayley structures, blow-ups, jet separation,
Seshadri bounds, higher order Gauss maps and smooth polygon enumeration."""

from .cayley import CayleyStructure, cayley_sum, is_cayley, toric_blow_up
from .classify import (
    ClassificationRecord,
    SmoothFan2D,
    enumerate_smooth_fans_2d,
    list_smooth_2d,
    load_classification_3d,
    polygons_from_fan,
)
from .gauss import GaussMapResult, gauss_fiber, gauss_image, gauss_k_fiber, gauss_k_image, gauss_k_map
from .jets import (
    GENERIC,
    JetMatrix,
    PointConfiguration,
    degree_of_jet_separation,
    is_jet_spanned,
    jet_matrix,
    jet_separation_at_vertex,
)
from .polytope import Face, LatticePolytope, hypercube, simplex
from .seshadri import EpsilonBounds, epsilon_bounds, sqrt_degree_diagnostic

__version__ = "0.1.0"

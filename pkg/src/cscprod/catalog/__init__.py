"""Constructors for every hypersurface family in the classification."""

from .base import (
    DOMAIN_MARGIN,
    Chart,
    FocalPointError,
    InadmissibleError,
    ModelConfig,
)
from .parallel import (
    ParallelFamily,
    admissible_parallel_range,
    clifford_base_chart,
    clifford_chart,
    clifford_family,
    constant_angle_chart,
    constant_angle_normal,
    parallel_chart,
    parallel_normal,
    parallel_shape_operator,
)
from .profiles import (
    HYPERBOLIC_H,
    PARABOLIC_H,
    SPHERICAL_H,
    SPHERICAL_S,
    ProfileCurve,
    profile,
    profile_hyperbolic_H,
    profile_parabolic_H,
    profile_spherical_H,
    profile_spherical_S,
)
from .rotation import (
    FAMILY_OF_KIND,
    factor_metric,
    matching_warped_solution,
    rotation_chart,
    warping_function,
)
from .trivial import horosphere_chart, product_chart, slice_chart
from .warped import WarpedSolution, warped_rho

__all__ = [
    "DOMAIN_MARGIN",
    "Chart",
    "FocalPointError",
    "InadmissibleError",
    "ModelConfig",
    "ParallelFamily",
    "admissible_parallel_range",
    "clifford_base_chart",
    "clifford_chart",
    "clifford_family",
    "constant_angle_chart",
    "constant_angle_normal",
    "parallel_chart",
    "parallel_normal",
    "parallel_shape_operator",
    "HYPERBOLIC_H",
    "PARABOLIC_H",
    "SPHERICAL_H",
    "SPHERICAL_S",
    "ProfileCurve",
    "profile",
    "profile_hyperbolic_H",
    "profile_parabolic_H",
    "profile_spherical_H",
    "profile_spherical_S",
    "FAMILY_OF_KIND",
    "factor_metric",
    "matching_warped_solution",
    "rotation_chart",
    "warping_function",
    "horosphere_chart",
    "product_chart",
    "slice_chart",
    "WarpedSolution",
    "warped_rho",
]

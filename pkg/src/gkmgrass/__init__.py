"""gkmgrass: exact GKM computations on Grassmannians.

Builds the GKM graphs of complex, real and oriented Grassmannians under
their standard torus actions, represents equivariant cohomology classes as
fixed-point-indexed polynomial tuples, and computes canonical bases,
characteristic classes, basis-change and structure-constant data, Poincare
series and characteristic numbers by fixed-point localization.
"""

from .kernels import BACKEND
from .polyring import (
    LinearForm,
    Polynomial,
    RationalFunction,
    divisible_by_linear,
    parse_poly,
    poly_arith,
    quotient_by_linear,
    ratfn_sum,
    ratfn_to_poly,
    render_poly,
    sq_map,
)
from .spaces import (
    Family,
    FixedVertex,
    SpaceId,
    check_formality,
    dimension,
    fixed_points,
    isotropy_weights,
    parse_space,
    poincare_series,
    total_betti,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Family",
    "FixedVertex",
    "LinearForm",
    "Polynomial",
    "RationalFunction",
    "SpaceId",
    "check_formality",
    "dimension",
    "divisible_by_linear",
    "fixed_points",
    "isotropy_weights",
    "parse_poly",
    "parse_space",
    "poincare_series",
    "poly_arith",
    "quotient_by_linear",
    "ratfn_sum",
    "ratfn_to_poly",
    "render_poly",
    "sq_map",
    "total_betti",
]

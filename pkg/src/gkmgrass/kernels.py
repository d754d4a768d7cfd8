"""Kernel backend selection.

The polynomial term kernels exist twice: a compiled Cython extension
(``gkmgrass._poly_cy``) and a pure-Python fallback (``gkmgrass._poly_py``)
with identical behaviour.  The compiled one is preferred when it was built;
setting the environment variable ``GKMGRASS_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("GKMGRASS_PURE") == "1":
    from . import _poly_py as _impl
else:
    try:
        from . import _poly_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _poly_py as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND

add_terms = _impl.add_terms
sub_terms = _impl.sub_terms
neg_terms = _impl.neg_terms
scale_terms = _impl.scale_terms
mul_terms = _impl.mul_terms
mul_monomial = _impl.mul_monomial
sq_terms = _impl.sq_terms
eval_terms = _impl.eval_terms
substitute_linear = _impl.substitute_linear
divmod_linear = _impl.divmod_linear
divmod_poly = _impl.divmod_poly

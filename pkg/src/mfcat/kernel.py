"""Linear-algebra backend selector.

Imports the compiled kernel when available, otherwise (or when the
environment variable ``MFCAT_PURE_PYTHON`` is set to a non-empty value)
the pure-Python twin.  Both expose the same functions; see
:mod:`mfcat._kernel_py` for the API documentation.
"""

import os

if os.environ.get("MFCAT_PURE_PYTHON"):
    from mfcat import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from mfcat import _kernel as _impl

        BACKEND = "compiled"
    except ImportError:
        from mfcat import _kernel_py as _impl

        BACKEND = "python"

row_from_items = _impl.row_from_items
row_axpy = _impl.row_axpy
row_normalize = _impl.row_normalize
Echelon = _impl.Echelon
rank = _impl.rank
nullspace = _impl.nullspace
select_independent = _impl.select_independent
solve = _impl.solve
rank_modp = _impl.rank_modp
MODP = _impl.MODP
MODP_I = _impl.MODP_I

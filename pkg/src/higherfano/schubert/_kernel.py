"""Backend selection for the LR kernel.

The compiled extension is used when it is importable; set
``HIGHERFANO_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _lr_py

if os.environ.get("HIGHERFANO_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None
else:
    try:
        from . import _lrcore as _compiled
    except ImportError:
        _compiled = None

if _compiled is not None:
    lr_coefficient = _compiled.lr_coefficient
    BACKEND = "compiled"
else:
    lr_coefficient = _lr_py.lr_coefficient
    BACKEND = "python"

python_lr_coefficient = _lr_py.lr_coefficient
compiled_lr_coefficient = None if _compiled is None else _compiled.lr_coefficient

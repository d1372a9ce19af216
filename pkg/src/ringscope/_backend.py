"""Kernel backend selection.

The compiled Cython kernel is used when available; set RINGSCOPE_BACKEND=py
to force the pure-Python fallback (or =c to require the compiled one).
"""

import os

from ._howell_py import howell_mod as howell_mod_py

_choice = os.environ.get("RINGSCOPE_BACKEND", "").lower()

if _choice == "py":
    howell_mod = howell_mod_py
    BACKEND = "python"
else:
    try:
        from ._howell import howell_mod as _howell_mod_c
        howell_mod = _howell_mod_c
        BACKEND = "cython"
    except ImportError:
        if _choice == "c":
            raise
        howell_mod = howell_mod_py
        BACKEND = "python"

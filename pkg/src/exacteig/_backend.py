"""Scalar-backend selection.

Two interchangeable implementations of the scalar types exist:

* ``exacteig._kernel`` — compiled Cython extension (preferred),
* ``exacteig._kernel_py`` — pure Python on :class:`fractions.Fraction`.

The environment variable ``EXACTEIG_BACKEND`` picks one: ``compiled``,
``pure``, or ``auto`` (the default — compiled when built, else pure).
Selection happens once at import; everything above this module is
backend-agnostic.
"""

import os

from . import _kernel_py

_CHOICES = ("auto", "compiled", "pure")
_requested = os.environ.get("EXACTEIG_BACKEND", "auto").strip().lower()
if _requested not in _CHOICES:
    raise ImportError(
        f"EXACTEIG_BACKEND={_requested!r} is not one of {_CHOICES}")

if _requested == "pure":
    _kernel = _kernel_py
else:
    try:
        from . import _kernel
    except ImportError:
        if _requested == "compiled":
            raise ImportError(
                "EXACTEIG_BACKEND=compiled, but the compiled kernel is not "
                "built; reinstall with a C toolchain or unset the variable")
        _kernel = _kernel_py

Rational = _kernel.Rational
GaussianRational = _kernel.GaussianRational
BACKEND_NAME = _kernel.BACKEND_NAME


def active_backend():
    """Name of the scalar backend in use: ``"compiled"`` or ``"pure"``."""
    return BACKEND_NAME

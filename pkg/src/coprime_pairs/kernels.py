"""Backend selection for the batch kernels.

The compiled extension is preferred; if it was not built the pure-Python
module with the same functions is used. ``get_backend`` returns either one
by name for side-by-side comparison.
"""

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

DEFAULT = "compiled" if _ckernels is not None else "python"


def get_backend(name: str | None = None) -> ModuleType:
    name = name or DEFAULT
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"backend {name!r} unavailable; choose from {sorted(BACKENDS)}"
        ) from None

"""Numeric kernel selection.

The compiled extension is preferred when present; the pure-Python
reference implementation is the fallback.  Set HYPERMONO_PURE=1 to force
the fallback (useful for benchmarking and debugging).
"""

import os

from . import _ref

if os.environ.get("HYPERMONO_PURE") == "1":
    impl = _ref
else:
    try:
        from . import _fast as impl  # type: ignore[attr-defined]
    except ImportError:
        impl = _ref

IMPL_NAME = "fast" if impl is not _ref else "ref"

lgamma = impl.lgamma
gamma = impl.gamma
mb_integrand = impl.mb_integrand
zeta = impl.zeta

"""Exact contractibility and cohomology checks for bounded complexes of
permutation modules over elementary abelian p-groups.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Structured reports (criterion reports, counterexamples,
avoidance pairs) are returned as JSON strings.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
    from . import _core as _impl
except ImportError:  # development tree: extension next to the build dir
    from _core import *  # noqa: F401,F403
    import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"

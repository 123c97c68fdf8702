"""Morphisms from the projective plane to Gr(2, C^4).

Thin wrapper over the compiled extension: exact construction of split and
tangent-bundle morphisms, cohomology class computation, Cayley-Bacharach
checks and the realizability classification. All rationals cross the
boundary as "num/den" strings; all randomness is seeded.
"""

try:
    from ._grassmorph import *  # noqa: F401,F403
    from . import _grassmorph as _impl
except ImportError:  # development layout: extension on PYTHONPATH
    from _grassmorph import *  # noqa: F401,F403
    import _grassmorph as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "1.0.0"

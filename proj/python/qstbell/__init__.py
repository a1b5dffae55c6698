"""Quantum state targeting game on entangled qudit pairs and the Bell
inequality it generates.  Thin re-export of the compiled extension."""

try:
    from ._qstbell import *  # noqa: F401,F403
    from ._qstbell import __version__  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits on sys.path instead of inside
    # the package directory
    from _qstbell import *  # noqa: F401,F403
    from _qstbell import __version__  # noqa: F401

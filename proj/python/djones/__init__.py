"""Exact descendant colored Jones invariants and root-of-unity state sums."""

try:
    from djones._djones import *  # noqa: F401,F403  (installed layout)
    from djones._djones import __doc__ as _doc
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _djones import *  # noqa: F401,F403
    from _djones import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"

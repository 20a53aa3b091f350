"""Loader for compiled construction kernels.

The compiled extension is optional; when it is missing every lookup returns
None and the pure-Python sweep is used instead.
"""

try:
    from . import _core
except ImportError:  # extension not built
    _core = None


def available() -> bool:
    return _core is not None


def builder_for(fast_spec):
    """Return a zero-argument kernel producing (l_arcs, r_arcs), or None."""
    if _core is None or fast_spec is None:
        return None
    kind = fast_spec[0]
    if kind == "pi":
        _, n, cap = fast_spec
        return lambda: _core.build_pi(n, cap)
    if kind == "bp":
        _, n = fast_spec
        return lambda: _core.build_bp(n)
    return None

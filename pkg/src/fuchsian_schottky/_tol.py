"""Process-wide numerical tolerance, overridable per call or per block."""
from contextlib import contextmanager
from contextvars import ContextVar

DEFAULT_TOL = 1e-9

_current: ContextVar[float] = ContextVar("tol", default=DEFAULT_TOL)


def resolve(tol=None):
    """Return ``tol`` if given, else the tolerance currently in effect."""
    return _current.get() if tol is None else tol


def get_tol():
    return _current.get()


@contextmanager
def tolerance(value):
    """Temporarily change the default tolerance::

        with tolerance(1e-12):
            classify(T)
    """
    if not value > 0:
        raise ValueError("tolerance must be positive")
    token = _current.set(float(value))
    try:
        yield value
    finally:
        _current.reset(token)

"""Input validation helpers shared by the estimators, the engine and the CLI."""

import numbers
from collections.abc import Iterable, Iterator

from .exceptions import ConfigError


def check_int(value, name, min_val=None, max_val=None):
    """Return ``value`` as an ``int`` after range checking.

    Booleans are rejected even though they are ``numbers.Integral``.
    """
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if min_val is not None and value < min_val:
        raise ConfigError(f"{name} must be >= {min_val}, got {value}")
    if max_val is not None and value > max_val:
        raise ConfigError(f"{name} must be <= {max_val}, got {value}")
    return value


def check_selection_params(m, k, n):
    m = check_int(m, "m", min_val=2)
    k = check_int(k, "k", min_val=1)
    n = check_int(n, "n", min_val=2)
    if k >= n:
        raise ConfigError(f"k must be smaller than n (k={k}, n={n})")
    return m, k, n


def check_stream(stream):
    """Return an iterator over ``stream``; strings are rejected as streams."""
    if isinstance(stream, (str, bytes)):
        raise TypeError("a single string is not a stream; wrap it in a list")
    if isinstance(stream, Iterator):
        return stream
    if isinstance(stream, Iterable):
        return iter(stream)
    raise TypeError(f"expected an iterable stream, got {type(stream).__name__}")


def infer_kind(element):
    """Map a stream element to its measure kind: ``"string"`` or ``"numeric"``."""
    if isinstance(element, str):
        return "string"
    if isinstance(element, numbers.Real) and not isinstance(element, bool):
        return "numeric"
    raise TypeError(f"unsupported element type {type(element).__name__}")


class CountingStream:
    """Iterator wrapper that counts how many elements were pulled.

    Used to check the single-pass property: each element is handed out once
    and ``reads`` never exceeds the number of elements in the source.
    """

    def __init__(self, source):
        self._it = check_stream(source)
        self.reads = 0

    def __iter__(self):
        return self

    def __next__(self):
        item = next(self._it)
        self.reads += 1
        return item

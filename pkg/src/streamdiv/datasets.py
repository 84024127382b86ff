"""Line-oriented readers and seeded synthetic generators."""

import re
import string
from dataclasses import dataclass

import numpy as np

from .exceptions import ParseError

NUMERIC_LOW, NUMERIC_HIGH = -1000.0, 1000.0
STRING_LENGTHS = (4, 8)
ALPHABET = string.ascii_lowercase + string.ascii_uppercase

# optional sign, digits with optional decimal point, optional exponent
_NUMBER = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


@dataclass(frozen=True)
class DatasetSpec:
    kind: str
    source: str | None = None
    count: int | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ("numeric", "string"):
            raise ValueError(f"kind must be 'numeric' or 'string', got {self.kind!r}")

    def open(self):
        if self.source is not None:
            return read_numeric(self.source) if self.kind == "numeric" else read_strings(self.source)
        gen = generate_numeric if self.kind == "numeric" else generate_strings
        return gen(self.count or 0, self.seed)


def _lines(path):
    # newline="" keeps "\r" so CRLF is stripped explicitly below
    with open(path, encoding="utf-8", errors="strict", newline="") as fh:
        for line_no, line in enumerate(fh, 1):
            yield line_no, line.rstrip("\r\n")


def read_numeric(path):
    """Lazily yield one float per non-blank line."""
    for line_no, line in _lines(path):
        text = line.strip()
        if not text:
            continue
        if not _NUMBER.fullmatch(text):
            raise ParseError(path, line_no, text)
        yield float(text)


def read_strings(path):
    """Lazily yield each non-blank line verbatim, minus its line terminator."""
    for _, line in _lines(path):
        if line.strip():
            yield line


def generate_numeric(count, seed=None):
    """Uniform doubles on [-1000, 1000], reproducible per seed."""
    rng = np.random.default_rng(seed)
    yield from rng.uniform(NUMERIC_LOW, NUMERIC_HIGH, size=count).tolist()


def generate_strings(count, seed=None):
    """Strings of 4 to 8 letters drawn uniformly from a-z and A-Z."""
    rng = np.random.default_rng(seed)
    lo, hi = STRING_LENGTHS
    lengths = rng.integers(lo, hi + 1, size=count)
    letters = rng.integers(0, len(ALPHABET), size=int(lengths.sum()))
    chars = np.array(list(ALPHABET))[letters]
    pos = 0
    for n in lengths.tolist():
        yield "".join(chars[pos:pos + n])
        pos += n

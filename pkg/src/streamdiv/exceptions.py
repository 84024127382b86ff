"""Exception hierarchy for streamdiv."""


class StreamDivError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(StreamDivError, ValueError):
    """Invalid parameter combination (k >= n, a too small, ...)."""


class StreamExhausted(StreamDivError):
    """The stream ended before the required number of elements was read."""


class ZeroBaselineDiversity(StreamDivError, ZeroDivisionError):
    """The initial buffer has zero diversity so the increase rate is undefined."""


class EmptySet(StreamDivError, ValueError):
    pass


class EmptyWindow(StreamDivError, ValueError):
    pass


class InsufficientData(StreamDivError, ValueError):
    pass


class InvalidKN(ConfigError):
    pass


class InvalidN(ConfigError):
    pass


class DeltaOutOfRange(ConfigError):
    pass


class ZeroSegmentSize(ConfigError):
    pass


class TooManySegmentsRequested(ConfigError):
    pass


class ParseError(StreamDivError, ValueError):
    """A line of an input file could not be parsed."""

    def __init__(self, path, line_no, text):
        self.path = path
        self.line_no = line_no
        self.text = text
        super().__init__(f"{path}:{line_no}: cannot parse {text!r}")

"""Exception types shared across the pipeline, mapped to CLI exit codes."""


class ConfigError(Exception):
    """Invalid run configuration (unknown key, bad type, bad value). Exit code 2."""


class DataError(Exception):
    """Problem with input data (unreadable, malformed, failed verification). Exit code 3."""


class ParseError(DataError):
    """Malformed edge-list input; message names the offending line."""


class ChecksumError(DataError):
    """A cached dataset file does not match its recorded checksum."""

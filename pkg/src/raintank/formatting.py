"""Canonical text rendering shared by the CSV writers."""


def format_decimal(x: float) -> str:
    """Shortest decimal that round-trips; integral values drop the .0."""
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x))

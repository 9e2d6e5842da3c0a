"""Error types separating bad input from failed geometric verification."""


class MhomError(Exception):
    pass


class InputError(MhomError):
    """Malformed files, inconsistent dimensions, unknown names."""


class GeometryError(MhomError):
    """A geometric precondition or certificate failed verification."""


class LocalityError(GeometryError):
    """A filling hypothesis is violated by the cover (no local filling exists)."""

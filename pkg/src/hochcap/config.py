"""Runtime limits.

Chain spaces grow like r * d**n, so a careless degree bound can ask for
billions of coordinates.  Every routine that materializes a complex
checks its largest space against the cap below before allocating.
"""

from .errors import MemoryGuardError

# default cap: 2**24 coordinates in any single chain or cochain space
_DEFAULT_CAP = 1 << 24
_max_coordinates = _DEFAULT_CAP


def max_coordinates():
    return _max_coordinates


def set_max_coordinates(n):
    global _max_coordinates
    if n is not None and n < 1:
        raise ValueError("coordinate cap must be positive")
    _max_coordinates = _DEFAULT_CAP if n is None else int(n)


def guard(ncoords, what=""):
    """Raise MemoryGuardError if a space of ncoords coordinates is too big."""
    if ncoords > _max_coordinates:
        label = f" for {what}" if what else ""
        raise MemoryGuardError(
            f"refusing to allocate {ncoords} coordinates{label} "
            f"(cap is {_max_coordinates}; raise it with set_max_coordinates "
            f"or --memory-cap)"
        )

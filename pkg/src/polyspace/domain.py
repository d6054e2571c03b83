"""Planar domains the library works on: the open unit disk and the upper half-plane."""

import enum

import numpy as np


class Domain(enum.Enum):
    DISK = "disk"
    HALFPLANE = "halfplane"

    def __str__(self):
        return self.value


def interior_mask(z, domain):
    """Boolean mask of the points of ``z`` lying strictly inside ``domain``."""
    z = np.asarray(z)
    if domain is Domain.DISK:
        return np.abs(z) < 1.0
    return np.imag(z) > 0.0


def require_interior(z, domain, what="point"):
    """Raise ``ValueError`` naming the first offending point if any of ``z`` is
    on or outside the boundary of ``domain``."""
    z = np.asarray(z)
    ok = interior_mask(z, domain)
    if not np.all(ok):
        bad = z.reshape(-1)[np.flatnonzero(~np.atleast_1d(ok).reshape(-1))[0]]
        raise ValueError(f"{what} {bad} is not strictly inside the {domain}")
    return z

"""Weighted Bergman, Dirichlet and Besov (semi)norms for polyanalytic functions.

On the unit disk the three norms are

    Bergman:    ||f||^p = integral |f|^p w dA
    Dirichlet:  ||f||^p = |f(0)|^p + integral (|d_z f|^p + |d_zbar f|^p) w dA
    Besov:      ||f||^p = |f(0)|^p + integral (...) (1-|z|^2)^(p-2) w dA,  p >= 2

and on the upper half-plane the base point moves to ``i`` while the measure
gains ``Im(z)^alpha exp(-beta |z|^2)`` (Besov: ``Im(z)^(alpha+p-2)``).  At
``p = 2`` the Besov boundary factor is identically one, so the Besov and
Dirichlet norms coincide; the implementation shares the code path bit for bit.

Derivatives are exact coefficient operations — no finite differences anywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import polyfun, quadrature
from .domain import Domain
from .weights import Weight, eval_weight

__all__ = [
    "SpaceKind",
    "SpaceSpec",
    "QuadSettings",
    "QuadratureFlags",
    "NormResult",
    "space_norm",
    "bergman_norm",
    "dirichlet_norm",
    "besov_norm",
    "norm_of_difference",
]


class SpaceKind(enum.Enum):
    BERGMAN = "bergman"
    DIRICHLET = "dirichlet"
    BESOV = "besov"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class QuadSettings:
    """Grid resolution and refinement policy for norm evaluation."""

    n_r: int = quadrature.DEFAULT_N_R
    n_theta: int = quadrature.DEFAULT_N_THETA
    rel_tol: float = quadrature.DEFAULT_REL_TOL
    max_level: int = quadrature.DEFAULT_MAX_LEVEL
    refine: bool = True


DEFAULT_SETTINGS = QuadSettings()


@dataclass(frozen=True)
class SpaceSpec:
    """A concrete function space: domain, norm kind, exponent, weight, and (on
    the half-plane) the measure parameters ``alpha``, ``beta``.

    ``beta = 0`` removes the Gaussian confinement, which is only allowed with
    an explicit truncation radius ``quad_R``; such evaluations are marked
    truncated in every report.
    """

    domain: Domain
    kind: SpaceKind
    p: float
    weight: Weight
    alpha: float | None = None
    beta: float | None = None
    quad_R: float | None = None

    def __post_init__(self):
        if not self.p > 0:
            raise ValueError("p must be positive")
        if self.kind is SpaceKind.BESOV and self.p < 2:
            raise ValueError("besov requires p >= 2")
        if self.domain is Domain.HALFPLANE:
            if self.alpha is None or self.beta is None:
                raise ValueError("half-plane spaces need alpha and beta")
            if self.alpha < 0 or self.beta < 0:
                raise ValueError("alpha and beta must be nonnegative")
            if self.beta == 0 and self.quad_R is None:
                raise ValueError(
                    "halfplane with beta = 0 requires an explicit truncation radius"
                )
        else:
            if self.alpha is not None or self.beta is not None:
                raise ValueError("alpha and beta apply to the half-plane only")
        # integrability screen: the measure density must be finite on a coarse grid
        coarse = self._grid(QuadSettings(n_r=16, n_theta=32), level=0)
        dens = _measure_density(self, coarse.nodes)
        if not np.all(np.isfinite(dens)):
            raise ValueError("weight is not integrable against the space's measure")

    @property
    def base_point(self):
        return 1j if self.domain is Domain.HALFPLANE else 0j

    @property
    def truncation_radius(self):
        if self.domain is not Domain.HALFPLANE:
            return None
        if self.quad_R is not None:
            return float(self.quad_R)
        return quadrature.default_radius(self.beta)

    @property
    def truncated(self):
        return self.domain is Domain.HALFPLANE and (
            self.quad_R is not None or self.beta == 0
        )

    def _grid(self, settings, level):
        if self.domain is Domain.DISK:
            return quadrature.disk_grid(
                settings.n_r << level, settings.n_theta << level
            )
        return quadrature.halfplane_grid(
            self.truncation_radius, settings.n_r << level, settings.n_theta << level
        )

    def describe(self):
        s = f"{self.kind}:{self.domain}:p={self.p:g}:{self.weight.describe()}"
        if self.domain is Domain.HALFPLANE:
            s += f":alpha={self.alpha:g}:beta={self.beta:g}"
        return s


@dataclass(frozen=True)
class QuadratureFlags:
    """How the integral behind a norm was obtained."""

    refined: bool
    converged: bool
    level: int
    rel_change: float
    truncated: bool

    def describe(self):
        mode = "refined" if self.refined else "fixed-grid"
        out = f"{mode}(level={self.level},rel_change={self.rel_change:.3g})"
        if not self.converged:
            out += ":NOT-CONVERGED"
        if self.truncated:
            out += ":truncated"
        return out


@dataclass(frozen=True)
class NormResult:
    """Full norm together with its decomposition
    ``full_norm^p = point_term + seminorm^p``.

    For Bergman norms the point term is zero and ``full_norm == seminorm``.
    """

    full_norm: float
    seminorm: float
    point_term: float
    flags: QuadratureFlags


def _measure_density(spec, nodes):
    """Weight times the kind/domain-specific measure factors at the nodes."""
    dens = eval_weight(spec.weight, nodes, spec.domain)
    if spec.domain is Domain.DISK:
        if spec.kind is SpaceKind.BESOV and spec.p != 2:
            dens = dens * (1.0 - np.abs(nodes) ** 2) ** (spec.p - 2.0)
    else:
        expo = spec.alpha + (spec.p - 2.0 if spec.kind is SpaceKind.BESOV else 0.0)
        if expo != 0.0:
            dens = dens * np.imag(nodes) ** expo
        if spec.beta != 0.0:
            dens = dens * np.exp(-spec.beta * np.abs(nodes) ** 2)
    return dens


def _integrand(parts, spec):
    p = spec.p

    def g(nodes):
        total = np.zeros(nodes.shape, dtype=float)
        for part in parts:
            total += np.abs(part(nodes)) ** p
        return total * _measure_density(spec, nodes)

    return g


def space_norm(f, spec, settings=None):
    """Norm of ``f`` in the space ``spec``; dispatches on ``spec.kind``."""
    settings = settings or DEFAULT_SETTINGS
    if spec.kind is SpaceKind.BERGMAN:
        parts = [f]
        point_term = 0.0
    else:
        parts = [polyfun.d_z(f), polyfun.d_zbar(f)]
        point_term = abs(f(spec.base_point)) ** spec.p
    g = _integrand(parts, spec)
    if settings.refine:
        res = quadrature.refine_until(
            g,
            lambda level: spec._grid(settings, level),
            rel_tol=settings.rel_tol,
            max_level=settings.max_level,
        )
        integral, converged = res.value, res.converged
        flags = QuadratureFlags(True, converged, res.level, res.rel_change, spec.truncated)
    else:
        integral = quadrature.integrate(g, spec._grid(settings, 0))
        flags = QuadratureFlags(False, True, 0, math.nan, spec.truncated)
    integral = max(integral, 0.0)
    seminorm = integral ** (1.0 / spec.p)
    if spec.kind is SpaceKind.BERGMAN:
        return NormResult(seminorm, seminorm, 0.0, flags)
    full = (point_term + integral) ** (1.0 / spec.p)
    return NormResult(full, seminorm, point_term, flags)


def _kind_norm(f, spec, settings, kind, name):
    if spec.kind is not kind:
        raise ValueError(f"{name} expects a spec of kind {kind}, got {spec.kind}")
    return space_norm(f, spec, settings)


def bergman_norm(f, spec, settings=None):
    """p-integral norm of ``f`` itself (no derivatives, no point term)."""
    return _kind_norm(f, spec, settings, SpaceKind.BERGMAN, "bergman_norm")


def dirichlet_norm(f, spec, settings=None):
    """Point value at the base point plus the two first-order Wirtinger
    seminorm integrals."""
    return _kind_norm(f, spec, settings, SpaceKind.DIRICHLET, "dirichlet_norm")


def besov_norm(f, spec, settings=None):
    """Dirichlet-type norm with the boundary-distance factor; coincides with
    the Dirichlet norm at ``p = 2``."""
    return _kind_norm(f, spec, settings, SpaceKind.BESOV, "besov_norm")


def norm_of_difference(f, g, spec, settings=None):
    """Norm of ``f - g`` in ``spec`` — the workhorse of every convergence
    experiment."""
    return space_norm(polyfun.sub(f, g), spec, settings)


def weighted_p_integral(g, spec, settings=None):
    """``integral |g|^p`` against the full measure of ``spec`` (weight times
    boundary/confinement factors), for a single function ``g``.

    This is one half of a Dirichlet/Besov seminorm; the dilatation-limit
    experiments compare these part integrals side by side.
    """
    settings = settings or DEFAULT_SETTINGS
    integrand = _integrand([g], spec)
    if settings.refine:
        res = quadrature.refine_until(
            integrand,
            lambda level: spec._grid(settings, level),
            rel_tol=settings.rel_tol,
            max_level=settings.max_level,
        )
        return res.value
    return quadrature.integrate(integrand, spec._grid(settings, 0))

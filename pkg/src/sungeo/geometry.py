"""Riemannian API for SU(n) with the bi-invariant Frobenius metric.

Distances come from spectra of the relative matrix P^*Q: the squared
distance is the minimal squared norm of an su(n)-logarithm of P^*Q, and
geodesics are the one-parameter curves t -> P exp(tX). The winding of the
relative spectrum is oriented deterministically at the API boundary: both
endpoints of a pair induce the same oriented spectrum, which makes the
distance numerically symmetric and the uniqueness classification well
defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ShapeError, UnsupportedOrderError
from .matrixcore import (
    SkewHermitianTraceless,
    SpecialUnitary,
    expm_skew,
    frobenius_norm,
    unitary_product,
    validate_special_unitary,
)
from .logmin import ThetaDescriptor, _descriptor_from_spectral, canonical_log, m_value, theta_sample
from .spectral import SpectralData, adjoint_spectrum, spectral_summary
from .tolerances import Tolerances

__all__ = [
    "GeodesicSegment",
    "GeodesicFamily",
    "DiametralReport",
    "distance",
    "log_map",
    "geodesic_family",
    "geodesic_eval",
    "diameter",
    "diametral_points",
    "relative_spectrum",
]


def relative_spectrum(p: SpecialUnitary, q: SpecialUnitary,
                      tols: Tolerances | None = None) -> SpectralData:
    """Spectral data of the relative matrix P^*Q."""
    if p.n != q.n:
        raise ShapeError(f"order mismatch: {p.n} vs {q.n}")
    tols = Tolerances.default(p.n) if tols is None else tols
    rel = unitary_product(p.adjoint(), q, tol=10.0 * tols.group)
    return spectral_summary(rel, cluster_tol=tols.cluster, zeta_tol=tols.zeta,
                            eig_tol=tols.eig)


def _oriented(sd: SpectralData) -> tuple[SpectralData, bool]:
    """Pick whichever of P^*Q, Q^*P has the larger winding (ties keep P^*Q).

    The larger of zeta and s - zeta is never negative, so the closed forms
    apply directly to the oriented spectrum.
    """
    if sd.zeta < sd.s - sd.zeta:
        return adjoint_spectrum(sd), True
    return sd, False


@dataclass(frozen=True, eq=False)
class GeodesicSegment:
    """Geodesic t -> P exp(tX); at t = 1 it reaches P exp(X)."""

    P: SpecialUnitary
    X: SkewHermitianTraceless
    length: float

    def at(self, t: float) -> SpecialUnitary:
        return geodesic_eval(self, t)


@dataclass(frozen=True, eq=False)
class GeodesicFamily:
    """All minimizing geodesic segments between two points.

    ``canonical`` is the deterministic representative; when ``unique`` is
    false the remaining segments are reached by sampling the descriptor's
    Grassmannian family of velocities.
    """

    P: SpecialUnitary
    Q: SpecialUnitary
    unique: bool
    canonical: GeodesicSegment
    theta: ThetaDescriptor
    distance: float

    def sample(self, r) -> GeodesicSegment:
        """Minimizing segment with velocity drawn from the family; ``r`` is
        a unitary of order nu1 + nu2."""
        rel = unitary_product(self.P.adjoint(), self.Q)
        x = theta_sample(self.theta, rel, r)
        return GeodesicSegment(self.P, x, frobenius_norm(x.entries))


@dataclass(frozen=True, eq=False)
class DiametralReport:
    """Diameter of SU(n) and the diametral partners of a point."""

    n: int
    diameter: float
    points: tuple[SpecialUnitary, ...]


def distance(p: SpecialUnitary, q: SpecialUnitary,
             tols: Tolerances | None = None) -> float:
    """Geodesic distance induced by the Frobenius metric."""
    sd, _ = _oriented(relative_spectrum(p, q, tols=tols))
    return math.sqrt(max(m_value(sd), 0.0))


def log_map(p: SpecialUnitary, q: SpecialUnitary,
            tols: Tolerances | None = None) -> SkewHermitianTraceless:
    """Canonical velocity X with P exp(X) = Q and ||X|| = d(P, Q)."""
    tols = Tolerances.default(p.n) if tols is None else tols
    sd, swapped = _oriented(relative_spectrum(p, q, tols=tols))
    x = canonical_log(sd, alg_tolerance=tols.alg)
    return -x if swapped else x


def geodesic_family(p: SpecialUnitary, q: SpecialUnitary,
                    tols: Tolerances | None = None) -> GeodesicFamily:
    """Classify and parametrize the minimizing geodesics joining P and Q.

    The segment is unique iff the oriented relative spectrum has zeta = 0,
    or zeta >= 1 with distinct eigenvalues on the two sides of the kept /
    shifted boundary; otherwise the family is a complex Grassmannian
    recorded in the descriptor.
    """
    tols = Tolerances.default(p.n) if tols is None else tols
    sd, swapped = _oriented(relative_spectrum(p, q, tols=tols))
    td = _descriptor_from_spectral(sd, oriented=swapped, alg_tolerance=tols.alg)
    x = td.base_log
    length = frobenius_norm(x.entries)
    seg = GeodesicSegment(p, x, length)
    return GeodesicFamily(P=p, Q=q, unique=td.is_singleton, canonical=seg,
                          theta=td, distance=length)


def geodesic_eval(seg: GeodesicSegment, t: float,
                  tols: Tolerances | None = None) -> SpecialUnitary:
    """Point P exp(tX) on the (complete) geodesic through the segment."""
    n = seg.P.n
    tols = Tolerances.default(n) if tols is None else tols
    e = expm_skew(seg.X.scaled(t), tol=tols.group)
    # Accumulated tolerance headroom, as for any internal product.
    return validate_special_unitary(seg.P.entries @ e.entries,
                                    tol=10.0 * tols.group)


def diameter(n: int) -> float:
    """Diameter of SU(n): pi sqrt(n) for even n, pi sqrt(n - 1/n) for odd."""
    if n < 2:
        raise UnsupportedOrderError("diameter requires order at least 2")
    if n % 2 == 0:
        return math.pi * math.sqrt(n)
    return math.pi * math.sqrt(n - 1.0 / n)


def diametral_points(p: SpecialUnitary,
                     tols: Tolerances | None = None) -> DiametralReport:
    """Points at maximal distance from P.

    For even n the unique diametral partner is -P; for odd n there are
    exactly two, e^{+-(n-1) pi i / n} P.
    """
    n = p.n
    if n < 2:
        raise UnsupportedOrderError("diametral points require order at least 2")
    tols = Tolerances.default(n) if tols is None else tols
    if n % 2 == 0:
        points = (validate_special_unitary(-p.entries, tol=tols.group),)
    else:
        phase = (n - 1) * math.pi / n
        points = (
            validate_special_unitary(np.exp(1j * phase) * p.entries, tol=tols.group),
            validate_special_unitary(np.exp(-1j * phase) * p.entries, tol=tols.group),
        )
    return DiametralReport(n=n, diameter=diameter(n), points=points)

"""Product quadrature on the unit sphere with the normalized measure."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np


class SphereRule(NamedTuple):
    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray


def sphere_rule(n_theta: int = 64, n_phi: int = 64) -> SphereRule:
    """Gauss-Legendre in cos(theta) times equispaced trapezoid in phi.

    The returned nodes are flattened; weights sum to one, so
    ``sum(w * f(theta, phi))`` approximates the average of ``f`` over the
    sphere (``1/4pi`` times the surface integral).
    """
    if n_theta < 2 or n_phi < 2:
        raise ValueError("quadrature orders must be at least 2")
    x, w = np.polynomial.legendre.leggauss(n_theta)
    theta = np.arccos(x)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    tt, pp = np.meshgrid(theta, phi, indexing="ij")
    ww = np.repeat(w / 2.0, n_phi) / n_phi
    return SphereRule(tt.ravel(), pp.ravel(), ww)


def bloch_kets(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Rows cos(t/2)|0> + e^{ip} sin(t/2)|1> for arrays of angles."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    return np.stack([np.cos(theta / 2) + 0j, np.exp(1j * phi) * np.sin(theta / 2)], axis=-1)

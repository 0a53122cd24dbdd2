"""Reproduction drivers: constants, bounds and figure curves.

Each driver returns plain numbers or :class:`Curve` objects;
:func:`reproduce_all` collects them into an :class:`ExperimentReport` with
a pass/fail verdict per expected value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable

import numpy as np
from scipy import optimize

from . import entanglers as ent
from .linalg import hermitian_eigenvalues, ket_to_projector, partial_trace
from .metrics import (
    bures_distance,
    fidelity_pure,
    hs_distance,
    hs_distance_to_pure,
    ppt_min_eigenvalue,
    von_neumann_entropy,
)
from .quadrature import bloch_kets, sphere_rule
from .states import (
    KET0,
    KET1,
    DensityMatrix,
    PureState,
    antisymmetrized_ideal,
    make_rng,
    orthogonal_state,
    qubit,
    random_bloch,
    random_qubits,
    symmetrized_ideal,
)

LN2 = np.log(2.0)
QUOTED_MEASUREMENT_AVERAGE = 54 + 112 * LN2**2 - 154.5 * LN2
EXACT_MEASUREMENT_AVERAGE = 55 + 112 * LN2**2 - 156 * LN2
MEASUREMENT_BOUND = 4 * LN2 - 2

D1, D2, D3 = 2 * LN2 - 1, 3 - 4 * LN2, 8 * LN2 - 5
C1, C2, C3 = 3 - 4 * LN2, 12 * LN2 - 8, np.sqrt(2) * (3 - 4 * LN2)

UNOT_ENTANGLING_FIDELITY = 1 / 3
UNOT_FLIP_FIDELITY = 2 / 3
UNOT_CLONE_FIDELITY = 5 / 6
UNOT_PPT_EIGENVALUE = (2 - np.sqrt(5)) / 6
UNOT_BURES = np.sqrt(2 - 2 / np.sqrt(3))

TOLERANCES = {
    "hermitian": 1e-10,
    "psd_clamp": -1e-10,
    "constant_spread": 1e-12,
    "bound": 1e-6,
}


@lru_cache(maxsize=1)
def frozen_oracles() -> dict:
    """Expected values precomputed by ``tools/freeze_oracles.py``."""
    text = resources.files("entangler_lab").joinpath("data/oracles.json").read_text()
    return json.loads(text)


def oracle(name: str) -> float:
    return frozen_oracles()[name]["value"]


# --------------------------------------------------------------------------
# report containers


@dataclass
class Check:
    """One expected value with its verdict.

    ``relation`` is ``"=="`` (|computed - expected| <= tolerance), ``"<"`` or
    ``">"`` (computed strictly beyond ``expected``).
    """

    name: str
    computed: float
    expected: float
    tolerance: float = 0.0
    relation: str = "=="
    source: str = "quoted"
    note: str = ""

    @property
    def passed(self) -> bool:
        if not np.isfinite(self.computed):
            return False
        if self.relation == "==":
            return abs(self.computed - self.expected) <= self.tolerance
        if self.relation == "<":
            return self.computed < self.expected
        if self.relation == ">":
            return self.computed > self.expected
        raise ValueError(f"unknown relation {self.relation!r}")

    def to_dict(self) -> dict:
        return {
            "computed": float(self.computed),
            "expected": float(self.expected),
            "tolerance": float(self.tolerance),
            "relation": self.relation,
            "source": self.source,
            "passed": bool(self.passed),
            "note": self.note,
        }


@dataclass
class Curve:
    name: str
    parameter: str
    grid: np.ndarray
    series: dict[str, np.ndarray]

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        if np.any(np.diff(self.grid) <= 0):
            raise ValueError("curve grid must be strictly increasing")
        for key, vals in self.series.items():
            vals = np.asarray(vals, dtype=float)
            if vals.shape != self.grid.shape:
                raise ValueError(f"series {key!r} does not match grid length")
            self.series[key] = vals

    def columns(self) -> list[str]:
        return [self.parameter, *self.series]

    def rows(self):
        for i, x in enumerate(self.grid):
            yield [x, *(vals[i] for vals in self.series.values())]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "parameter": self.parameter,
            "grid": self.grid.tolist(),
            "series": {k: v.tolist() for k, v in self.series.items()},
        }


@dataclass
class ExperimentReport:
    checks: list[Check] = field(default_factory=list)
    curves: list[Curve] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    annotations: list[str] = field(default_factory=list)

    def add(self, *checks: Check) -> None:
        self.checks.extend(checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "schema_version": "1",
            "metadata": self.metadata,
            "scalars": {c.name: c.to_dict() for c in self.checks},
            "curves": [c.to_dict() for c in self.curves],
            "annotations": list(self.annotations),
            "all_passed": self.all_passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------------------
# measurement-based strategy


def _symmetrized_with_zero(kets: np.ndarray) -> np.ndarray:
    a, b = kets[..., 0], kets[..., 1]
    out = np.stack([2 * a, b, b, np.zeros_like(a)], axis=-1)
    return out / np.linalg.norm(out, axis=-1, keepdims=True)


def _perp(kets: np.ndarray) -> np.ndarray:
    return np.stack([np.conj(kets[..., 1]), -np.conj(kets[..., 0])], axis=-1)


def measurement_integrand(psi: np.ndarray, eta: np.ndarray) -> np.ndarray:
    """Fidelity of the measure-and-prepare output for input/direction kets.

    Arrays broadcast over leading axes; the last axis holds the two amplitudes.
    """
    ideal = _symmetrized_with_zero(psi)
    eta_perp = _perp(eta)
    p_pos = np.abs(np.sum(eta.conj() * psi, axis=-1)) ** 2
    good = np.abs(np.sum(ideal.conj() * _symmetrized_with_zero(eta), axis=-1)) ** 2
    bad = np.abs(np.sum(ideal.conj() * _symmetrized_with_zero(eta_perp), axis=-1)) ** 2
    return p_pos * good + (1 - p_pos) * bad


def measurement_avg_fidelity_quadrature(n_theta: int = 64, n_phi: int = 64, route: str = "full") -> float:
    """Input-averaged fidelity of the random-direction measurement strategy.

    ``route="full"`` runs the 4-D tensor rule (input sphere x direction
    sphere). ``route="reduced"`` uses the fact that the integrand depends on
    the two azimuths only through their difference, pins the input azimuth
    at 0 and integrates the remaining three angles.
    """
    rule = sphere_rule(n_theta, n_phi)
    eta = bloch_kets(rule.theta, rule.phi)
    if route == "full":
        psi = bloch_kets(rule.theta, rule.phi)
        total = 0.0
        for start in range(0, len(psi), 256):
            block = measurement_integrand(psi[start:start + 256, None, :], eta[None, :, :])
            total += rule.weights[start:start + 256] @ block @ rule.weights
        return float(total)
    if route == "reduced":
        x, w = np.polynomial.legendre.leggauss(n_theta)
        psi = bloch_kets(np.arccos(x), np.zeros(n_theta))
        block = measurement_integrand(psi[:, None, :], eta[None, :, :])
        return float((w / 2) @ block @ rule.weights)
    raise ValueError(f"unknown route {route!r}")


def measurement_avg_fidelity_mc(n_samples: int, rng: np.random.Generator, batch: int = 200_000):
    """Monte Carlo estimate ``(mean, standard_error)`` of the same average."""
    acc = acc2 = 0.0
    done = 0
    while done < n_samples:
        n = min(batch, n_samples - done)
        psi = bloch_kets(*random_bloch(rng, n))
        eta = bloch_kets(*random_bloch(rng, n))
        vals = measurement_integrand(psi, eta)
        acc += vals.sum()
        acc2 += (vals**2).sum()
        done += n
    mean = acc / n_samples
    var = acc2 / n_samples - mean**2
    return float(mean), float(np.sqrt(var / (n_samples - 1)))


def strategy_f(which: int, theta2, dphi, theta1):
    """Fidelity kernel of a generic measure-and-prepare strategy.

    ``which=1`` is the positive-readout kernel, ``which=0`` the negative one.
    Arguments are the preparation polar angle ``theta2``, the azimuth
    difference ``dphi`` between preparation and measurement, and the
    measurement polar angle ``theta1``.
    """
    c1, s1 = np.cos(theta1 / 2) ** 2, np.sin(theta1 / 2) ** 2
    c2, s2 = np.cos(theta2 / 2) ** 2, np.sin(theta2 / 2) ** 2
    cross = np.sqrt(2) * D2 * np.cos(dphi) * np.cos(theta2 / 2) * np.cos(theta1 / 2) * np.sin(theta2 / 2) * np.sin(theta1 / 2)
    if which == 0:
        return D1 * c2 * s1 + D2 * c2 * c1 + 0.5 * D2 * s2 * s1 + 0.5 * D3 * s2 * c1 - cross
    if which == 1:
        return D1 * c2 * c1 + D2 * c2 * s1 + 0.5 * D2 * s2 * c1 + 0.5 * D3 * s2 * s1 + cross
    raise ValueError("which must be 0 or 1")


def strategy_f_reduced(which: int, theta2, theta1):
    """Kernel at its optimal azimuth (pi for ``which=0``, 0 for ``which=1``)."""
    sign = -1 if which == 0 else 1
    return 0.25 * (
        1 + C1 * np.cos(theta2) + sign * C2 * np.cos(theta2) * np.cos(theta1)
        + C3 * np.sin(theta2) * np.sin(theta1)
    )


def strategy_f_by_quadrature(which: int, theta2: float, phi2: float, theta1: float, phi1: float, order: int = 48) -> float:
    """Same kernel straight from its defining average over input states."""
    rule = sphere_rule(order, order)
    psi = bloch_kets(rule.theta, rule.phi)
    gamma_amp = np.array([np.cos(theta2 / 2), np.exp(1j * phi2) * np.sin(theta2 / 2)])
    gamma = gamma_amp[0] * ent.KET00 + gamma_amp[1] * ent.KET_PLUS
    ideal = _symmetrized_with_zero(psi)
    overlap = np.abs(ideal.conj() @ gamma) ** 2
    eta = bloch_kets(theta1, phi1)
    p_pos = np.abs(psi @ eta.conj()) ** 2
    weight = p_pos if which == 1 else 1 - p_pos
    return float(rule.weights @ (overlap * weight))


@dataclass
class StrategyBound:
    f0_max: float
    f0_at: tuple[float, float]
    f1_max: float
    f1_at: tuple[float, float]
    dphi_gap: tuple[float, float]

    @property
    def bound(self) -> float:
        return self.f0_max + self.f1_max


def _maximize_on_square(fun: Callable, n_grid: int) -> tuple[float, tuple[float, float]]:
    g = np.linspace(0, np.pi, n_grid)
    t1, t2 = np.meshgrid(g, g, indexing="ij")
    vals = fun(t2, t1)
    i, j = np.unravel_index(np.argmax(vals), vals.shape)
    x0 = np.array([g[i], g[j]])
    res = optimize.minimize(
        lambda x: -fun(x[1], x[0]), x0, method="L-BFGS-B",
        bounds=[(0, np.pi), (0, np.pi)], options={"ftol": 1e-15, "gtol": 1e-12},
    )
    best = max((float(vals[i, j]), tuple(x0)), (float(-res.fun), tuple(res.x)))
    return best[0], (float(best[1][0]), float(best[1][1]))


def measurement_strategy_bound(n_grid: int = 181, n_phase: int = 72) -> StrategyBound:
    """Suprema of the two strategy kernels over all angles.

    The polar angles are maximized on a dense grid of the reduced kernel with
    bounded L-BFGS-B refinement; locations are ``(theta_measure,
    theta_prepare)``. ``dphi_gap`` holds, per kernel, the largest amount by
    which any azimuth on a coarse 3-D grid beats the assumed optimal one
    (pi for the negative kernel, 0 for the positive); it should not exceed
    rounding.
    """
    g = np.linspace(0, np.pi, 37)
    dphis = 2 * np.pi * np.arange(n_phase) / n_phase
    t2, dp, t1 = np.meshgrid(g, dphis, g, indexing="ij")
    gaps = []
    for which, opt in ((0, np.pi), (1, 0.0)):
        gaps.append(float(np.max(strategy_f(which, t2, dp, t1) - strategy_f(which, t2, opt, t1))))
    f0, at0 = _maximize_on_square(lambda b, a: strategy_f_reduced(0, b, a), n_grid)
    f1, at1 = _maximize_on_square(lambda b, a: strategy_f_reduced(1, b, a), n_grid)
    return StrategyBound(f0, at0, f1, at1, (gaps[0], gaps[1]))


# --------------------------------------------------------------------------
# figure curves


def _real_qubit(alpha: float) -> PureState:
    alpha = min(max(alpha, 0.0), 1.0)
    return qubit(alpha, np.sqrt(max(0.0, 1 - alpha**2)))


def entropy_curves(grid_points: int = 201) -> tuple[Curve, Curve]:
    """Single-qubit and two-qubit entropies against alpha^2 (real amplitudes).

    Returns the single-qubit curve (ideal target and entangler output) and
    the two-qubit output curve. Each carries extra ``*_over_ln2`` series.
    """
    a2 = np.linspace(0.0, 1.0, grid_points)
    ideal, out, total = [], [], []
    ref = PureState(KET0)
    for x in a2:
        psi = _real_qubit(np.sqrt(x))
        target = symmetrized_ideal(psi, ref).projector()
        rho = ent.apply_optimal_entangler(psi)
        ideal.append(von_neumann_entropy(partial_trace(target.matrix, (2, 2), (0,))))
        out.append(von_neumann_entropy(partial_trace(rho.matrix, (2, 2), (0,))))
        total.append(von_neumann_entropy(rho))
    ideal, out, total = map(np.array, (ideal, out, total))
    fig1 = Curve("fig1", "alpha_sq", a2, {
        "ideal_entropy": ideal, "output_entropy": out,
        "ideal_entropy_over_ln2": ideal / LN2, "output_entropy_over_ln2": out / LN2,
    })
    fig2 = Curve("fig2", "alpha_sq", a2, {
        "output_total_entropy": total, "output_total_entropy_over_ln2": total / LN2,
    })
    return fig1, fig2


def ideal_ppt_closed_form(alpha):
    alpha = np.asarray(alpha, dtype=float)
    return (alpha**2 - 1) / (2 * (alpha**2 + 1))


def ppt_curves(grid_points: int = 201) -> Curve:
    """Minimal partial-transpose eigenvalue against alpha (real amplitudes)."""
    alphas = np.linspace(0.0, 1.0, grid_points)
    ideal, out = [], []
    ref = PureState(KET0)
    for a in alphas:
        psi = _real_qubit(a)
        ideal.append(ppt_min_eigenvalue(symmetrized_ideal(psi, ref).projector()))
        out.append(ppt_min_eigenvalue(ent.apply_optimal_entangler(psi)))
    return Curve("fig3", "alpha", alphas, {"ideal_min_eig": np.array(ideal), "output_min_eig": np.array(out)})


# --------------------------------------------------------------------------
# no-signaling bound


def nosignaling_output(eta: float, t: float, t_xy: float) -> np.ndarray:
    """Covariant, no-signaling output for the +z input in the |+-z> product basis."""
    return 0.25 * np.array([
        [1 + 2 * eta + t, 0, 0, 0],
        [0, 1 - t, 2 * (t + 1j * t_xy), 0],
        [0, 2 * (t - 1j * t_xy), 1 - t, 0],
        [0, 0, 0, 1 - 2 * eta + t],
    ], dtype=complex)


def nosignaling_eigenvalues(eta, t, t_xy):
    root = np.sqrt(np.square(t) + np.square(t_xy))
    return (
        0.25 * (1 + 2 * np.asarray(eta) + t),
        0.25 * (1 - 2 * np.asarray(eta) + t),
        0.25 * (1 - t + 2 * root),
        0.25 * (1 - t - 2 * root),
    )


@dataclass
class NoSignalingResult:
    t: float
    t_xy: float
    eta: float
    fidelity: float
    grid_fidelity: float
    active_constraint: float
    min_eigenvalue: float
    eta_interval: tuple[float, float]


def nosignaling_bound_search(resolution: int = 1001) -> NoSignalingResult:
    """Maximize (1 + t)/4 over covariant no-signaling outputs.

    A ``resolution`` x ``resolution`` grid over (t, t_xy) in [-1, 1]^2 locates
    the optimum; the largest feasible t at that t_xy is then refined by
    bracketed root finding on the binding eigenvalue. F does not depend on
    eta, so the midpoint of its feasible interval is reported.
    """
    if resolution < 1000:
        raise ValueError("resolution must be at least 1000 points per axis")
    g = np.linspace(-1.0, 1.0, resolution)
    tt, xy = np.meshgrid(g, g, indexing="ij")
    # eta = 0 is feasible exactly when 1 + t >= 0, which the grid already satisfies
    ev = nosignaling_eigenvalues(0.0, tt, xy)
    feasible = np.all([e >= 0 for e in ev], axis=0)
    fid = np.where(feasible, (1 + tt) / 4, -np.inf)
    best = fid.max()
    i = int(np.argmax(fid.max(axis=1)))
    tied = g[fid[i] == best]
    step = g[1] - g[0]

    def t_max(x):
        return optimize.brentq(lambda t: 1 - t - 2 * np.hypot(t, x), 0.0, 1.0, xtol=1e-15, rtol=1e-15)

    # every t_xy in the tied row shares the grid optimum; refine over the whole row
    res = optimize.minimize_scalar(
        lambda x: -t_max(x), bounds=(tied.min() - step, tied.max() + step), method="bounded",
        options={"xatol": 1e-12},
    )
    xy_best, t_star = float(res.x), float(t_max(res.x))
    binding = lambda t, x: 1 - t - 2 * np.hypot(t, x)

    lo_eta, hi_eta = -(1 + t_star) / 2, (1 + t_star) / 2
    eta_star = 0.5 * (lo_eta + hi_eta)
    rho = nosignaling_output(eta_star, t_star, xy_best)
    return NoSignalingResult(
        t=t_star,
        t_xy=xy_best,
        eta=eta_star,
        fidelity=(1 + t_star) / 4,
        grid_fidelity=float(best),
        active_constraint=float(binding(t_star, xy_best)),
        min_eigenvalue=float(hermitian_eigenvalues(rho)[0]),
        eta_interval=(lo_eta, hi_eta),
    )


def nosignaling_parameters(rho: np.ndarray) -> tuple[float, float, float]:
    """Read (eta, t, t_xy) back off a +z output written in the product basis."""
    m = 4 * np.asarray(rho)
    t = 1 - m[1, 1].real
    eta = (m[0, 0].real - 1 - t) / 2
    t_xy = m[1, 2].imag / 2
    return float(eta), float(t), float(t_xy)


# --------------------------------------------------------------------------
# covariance


def random_su2(rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return q / np.sqrt(np.linalg.det(q))


CHANNELS = {
    "optimal": ent.apply_optimal_entangler,
    "unot": lambda psi: ent.apply_unot_entangler(psi)[0],
    "antisymmetric": ent.antisymmetric_entangler,
}


def covariance_witness(channel: str, samples: int, rng: np.random.Generator) -> dict:
    """Compare channel(u psi) with (u x u) channel(psi) (u x u)^H.

    For the symmetrizer the fixed reference qubit breaks full covariance, so
    the spread of its fidelity to the ideal target is reported instead.
    """
    if channel not in CHANNELS:
        raise KeyError(f"unknown channel {channel!r}; choose from {sorted(CHANNELS)}")
    fn = CHANNELS[channel]
    if channel == "optimal":
        ref = PureState(KET0)
        fids = [fidelity_pure(fn(p), symmetrized_ideal(p, ref)) for p in random_qubits(rng, samples)]
        return {"channel": channel, "mode": "fidelity_spread", "value": float(np.ptp(fids))}
    worst = 0.0
    outputs = []
    for psi in random_qubits(rng, samples):
        u = random_su2(rng)
        uu = np.kron(u, u)
        lhs = fn(PureState(u @ psi.vector)).matrix
        rhs = uu @ fn(psi).matrix @ uu.conj().T
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
        outputs.append(lhs)
    result = {"channel": channel, "mode": "covariance", "value": worst}
    if channel == "antisymmetric":
        result["constancy"] = float(max(np.max(np.abs(o - outputs[0])) for o in outputs))
    return result


# --------------------------------------------------------------------------
# aggregate


def _spread(values) -> float:
    return float(np.ptp(np.asarray(values)))


def reproduce_all(seed: int = 0, n_theta: int = 64, n_phi: int = 64, grid_points: int = 201,
                  n_random: int = 1000, mc_samples: int = 1_000_000) -> ExperimentReport:
    """Recompute every constant, bound and curve and grade them."""
    if n_theta < 32 or n_phi < 32:
        raise ValueError("measurement averages need quadrature orders of at least 32")
    streams = make_rng(seed).spawn(8)
    rep = ExperimentReport(metadata={
        "seed": seed,
        "quad_theta": n_theta,
        "quad_phi": n_phi,
        "grid_points": grid_points,
        "random_inputs": n_random,
        "mc_samples": mc_samples,
        "rng": "numpy Philox, SeedSequence(seed).spawn(8)",
        "tolerances": TOLERANCES,
    })
    ref0, ref1 = PureState(KET0), PureState(KET1)

    # optimal symmetrizer
    machine = ent.optimal_entangler_machine()
    chan = ent.optimal_channel()
    fids, bures, closed_dev = [], [], 0.0
    for psi in random_qubits(streams[0], n_random):
        rho = chan(psi)
        target = symmetrized_ideal(psi, ref0)
        fids.append(fidelity_pure(rho, target))
        bures.append(bures_distance(rho, target))
        closed_dev = max(closed_dev, float(np.max(np.abs(rho.matrix - ent.optimal_output_closed_form(psi).matrix))))
    fids = np.array(fids)
    rep.add(
        Check("optimal_fidelity", float(np.max(np.abs(fids - ent.OPTIMAL_FIDELITY)) + ent.OPTIMAL_FIDELITY),
              ent.OPTIMAL_FIDELITY, 1e-12, note="(9+3*sqrt2)/14, worst case over random inputs"),
        Check("optimal_fidelity_spread", _spread(fids), 0.0, 1e-12),
        Check("optimal_machine_norm_w0", float(np.vdot(machine.w0, machine.w0).real), ent.OPTIMAL_FIDELITY, 1e-12),
        Check("optimal_machine_unitarity", float(max(abs(r) for r in machine.unitarity_residuals())), 0.0, 1e-12),
        Check("optimal_machine_cos_mu", machine.cos_mu(), 1.0, 1e-12),
        Check("optimal_isometry_defect", chan.isometry_defect(), 0.0, 1e-12, source="derived"),
        Check("optimal_closed_form_match", closed_dev, 0.0, 1e-12, source="derived"),
        Check("optimal_bures", float(np.max(bures)), oracle("bures_optimal"), 1e-9, source="derived",
              note="sqrt(2 - 2 sqrt F); frozen oracle"),
        Check("optimal_bures_spread", _spread(bures), 0.0, 1e-9, source="derived"),
    )
    rep.annotations.append(
        f"Bures distance of the optimal symmetrizer computes to {np.mean(bures):.6f}; the printed "
        f"value 0.0541 matches its square {np.mean(bures) ** 2:.6f} and sin^2 of the machine angle "
        f"{ent.OPTIMAL_SIN2:.6f}, not 2 sin(theta/2) = {2 * np.sin(np.arccos(np.sqrt(ent.OPTIMAL_FIDELITY)) / 2):.6f}."
    )
    hs_lo = hs_distance(ent.apply_optimal_entangler(_real_qubit(0.0)), symmetrized_ideal(_real_qubit(0.0), ref0).projector())
    hs_mid = hs_distance(ent.apply_optimal_entangler(_real_qubit(np.sqrt(0.5))),
                         symmetrized_ideal(_real_qubit(np.sqrt(0.5)), ref0).projector())
    hs_lo_alt = hs_distance_to_pure(ent.apply_optimal_entangler(_real_qubit(0.0)), symmetrized_ideal(_real_qubit(0.0), ref0))
    rep.add(
        Check("optimal_hs_alpha0", hs_lo, oracle("hs_optimal_alpha0"), 1e-10, source="derived"),
        Check("optimal_hs_routes_agree", abs(hs_lo - hs_lo_alt), 0.0, 1e-12, source="derived"),
        Check("optimal_hs_input_dependence", abs(hs_mid - hs_lo), 1e-3, relation=">",
              note="alpha=0 against alpha^2=1/2; the alpha=0 and alpha=1 values coincide"),
    )

    # measurement strategy
    quad_full = measurement_avg_fidelity_quadrature(n_theta, n_phi, "full")
    quad_32_full = measurement_avg_fidelity_quadrature(32, 32, "full")
    quad_32_red = measurement_avg_fidelity_quadrature(32, 32, "reduced")
    mc_mean, mc_err = measurement_avg_fidelity_mc(mc_samples, streams[1])
    rep.add(
        Check("measurement_average_vs_printed_closed_form", quad_full, QUOTED_MEASUREMENT_AVERAGE, 1e-4,
              note="54 + 112 ln^2 2 - 154.5 ln 2"),
        Check("measurement_average_exact", quad_full, oracle("measurement_average_exact"), 1e-10,
              source="derived", note="55 + 112 ln^2 2 - 156 ln 2 by symbolic integration"),
        Check("measurement_average_routes_agree", abs(quad_32_full - quad_32_red), 0.0, 1e-12, source="derived"),
        Check("measurement_average_mc_vs_printed_sigmas", abs(mc_mean - QUOTED_MEASUREMENT_AVERAGE) / mc_err, 3.0,
              relation="<", note=f"Monte Carlo {mc_mean:.6f} +- {mc_err:.1e}"),
        Check("measurement_average_mc_vs_exact_sigmas", abs(mc_mean - oracle("measurement_average_exact")) / mc_err,
              3.0, relation="<", source="derived"),
    )
    rep.annotations.append(
        f"Measurement-strategy average: quadrature gives {quad_full:.10f}, equal to "
        f"55 + 112 ln^2 2 - 156 ln 2 = {EXACT_MEASUREMENT_AVERAGE:.10f}; the printed closed form "
        f"54 + 112 ln^2 2 - 154.5 ln 2 evaluates to {QUOTED_MEASUREMENT_AVERAGE:.10f}."
    )
    sb = measurement_strategy_bound()
    rep.add(
        Check("strategy_f0_max", sb.f0_max, MEASUREMENT_BOUND / 2, 1e-6, note=f"at {sb.f0_at}"),
        Check("strategy_f1_max", sb.f1_max, MEASUREMENT_BOUND / 2, 1e-6, note=f"at {sb.f1_at}"),
        Check("strategy_f0_location", float(np.hypot(sb.f0_at[0] - np.pi, sb.f0_at[1])), 0.0, 1e-6),
        Check("strategy_f1_location", float(np.hypot(*sb.f1_at)), 0.0, 1e-6),
        Check("strategy_f0_dphi_pi_optimal", sb.dphi_gap[0], 0.0, 1e-15, source="derived"),
        Check("strategy_f1_dphi_0_optimal", sb.dphi_gap[1], 0.0, 1e-15, source="derived"),
        Check("measurement_bound", sb.bound, MEASUREMENT_BOUND, 2e-6, note="4 ln 2 - 2"),
    )

    # controlled swap
    swap_dev = 0.0
    qs = random_qubits(streams[2], 200)
    for psi, phi in zip(qs[::2], qs[1::2]):
        plus, minus = ent.swap_post_select(psi, phi)
        ov = abs(psi.overlap(phi)) ** 2
        swap_dev = max(swap_dev, abs(plus.probability - (1 + ov) / 2), abs(minus.probability - (1 - ov) / 2))
    d3_plus, _ = ent.swap_post_select(PureState([1, 1, 0] / np.sqrt(2)), PureState([1, 0, 0]))
    orth_plus, orth_minus = ent.swap_post_select(ref0, ref1)
    rep.add(
        Check("swap_probability_formula", swap_dev, 0.0, 1e-12),
        Check("swap_d3_plus_probability", d3_plus.probability, oracle("swap_d3_plus_probability"), 1e-12, source="derived"),
        Check("swap_orthogonal_plus", orth_plus.probability, 0.5, 1e-12),
        Check("swap_orthogonal_minus", orth_minus.probability, 0.5, 1e-12),
    )

    # U-NOT
    ent_f, flip_f, clone_f, ppt_u, bures_u, closed_u = [], [], [], [], [], 0.0
    for psi in random_qubits(streams[3], n_random):
        ab, c, _ = ent.apply_unot_entangler(psi)
        target = ent.unot_target(psi)
        ent_f.append(fidelity_pure(ab, target))
        flip_f.append(fidelity_pure(c, orthogonal_state(psi)))
        clone_f.append(fidelity_pure(partial_trace(ab.matrix, (2, 2), (0,)), psi))
        ppt_u.append(ppt_min_eigenvalue(ab))
        bures_u.append(bures_distance(ab, target))
        closed_u = max(closed_u, float(np.max(np.abs(ab.matrix - ent.unot_ab_closed_form(psi).matrix))))
    for name, vals, expected in (
        ("unot_entangling_fidelity", ent_f, UNOT_ENTANGLING_FIDELITY),
        ("unot_flip_fidelity", flip_f, UNOT_FLIP_FIDELITY),
        ("unot_clone_fidelity", clone_f, UNOT_CLONE_FIDELITY),
        ("unot_ppt_eigenvalue", ppt_u, UNOT_PPT_EIGENVALUE),
        ("unot_bures", bures_u, UNOT_BURES),
    ):
        vals = np.asarray(vals)
        worst = vals[np.argmax(np.abs(vals - expected))]
        rep.add(
            Check(name, float(worst), expected, 1e-12),
            Check(name + "_spread", _spread(vals), 0.0, 1e-12),
        )
    rep.add(
        Check("unot_closed_form_match", closed_u, 0.0, 1e-12, source="derived"),
        Check("unot_isometry_defect", ent.unot_channel().isometry_defect(), 0.0, 1e-12, source="derived"),
    )

    # no-signaling bound and the U-NOT output sitting on it
    ns = nosignaling_bound_search(1001)
    u_eta, u_t, u_txy = nosignaling_parameters(ent.apply_unot_entangler(ref0)[0].matrix)
    rep.add(
        Check("nosignaling_fidelity", ns.fidelity, oracle("nosignaling_f_star"), 1e-6, note="1/3"),
        Check("nosignaling_t", ns.t, oracle("nosignaling_t_star"), 1e-4),
        Check("nosignaling_t_xy", ns.t_xy, 0.0, 1e-6),
        Check("nosignaling_constraint_active", ns.active_constraint, 0.0, 1e-9, source="derived"),
        Check("nosignaling_output_psd", ns.min_eigenvalue, -1e-12, relation=">", source="derived"),
        Check("unot_output_on_bound_t", u_t, 1 / 3, 1e-12, source="derived"),
        Check("unot_output_on_bound_t_xy", u_txy, 0.0, 1e-12, source="derived"),
    )

    # figures
    fig1, fig2 = entropy_curves(grid_points)
    fig3 = ppt_curves(grid_points)
    rep.curves.extend([fig1, fig2, fig3])
    s_id, s_out = fig1.series["ideal_entropy"], fig1.series["output_entropy"]
    total = fig2.series["output_total_entropy"]
    a2_min = float(fig2.grid[np.argmin(total)])
    rep.add(
        Check("fig1_ideal_alpha_sq0", float(s_id[0]), LN2, 1e-10, note="ln 2"),
        Check("fig1_ideal_alpha_sq1", float(s_id[-1]), 0.0, 1e-10),
        Check("fig1_output_alpha_sq0_over_ln2", float(s_out[0] / LN2), 0.998, 0.001),
        Check("fig1_output_alpha_sq0", float(s_out[0]), oracle("entropy_output_reduced_alpha0"), 1e-9, source="derived"),
        Check("fig2_argmin_alpha_sq", a2_min, 0.5, 0.5 / (grid_points - 1) + 1e-12,
              note=f"oracle argmin {oracle('fig2_argmin_alpha_sq'):.8f}"),
        Check("fig3_ideal_closed_form", float(np.max(np.abs(fig3.series["ideal_min_eig"] - ideal_ppt_closed_form(fig3.grid)))),
              0.0, 1e-10),
        Check("fig3_output_alpha0", float(fig3.series["output_min_eig"][0]), -0.447, 1e-3),
        Check("fig3_output_alpha1", float(fig3.series["output_min_eig"][-1]), -0.001, 1e-3),
        Check("fig3_output_alpha0_oracle", float(fig3.series["output_min_eig"][0]), oracle("ppt_output_alpha0"), 1e-9, source="derived"),
        Check("fig3_output_alpha1_oracle", float(fig3.series["output_min_eig"][-1]), oracle("ppt_output_alpha1"), 1e-9, source="derived"),
        Check("fig3_output_negative", float(np.max(fig3.series["output_min_eig"])), 0.0, relation="<"),
    )
    below = fig1.grid[s_out < s_id]
    if below.size:
        rep.annotations.append(
            f"Single-qubit output entropy falls below the ideal one for alpha^2 <= {below.max():.4f} "
            "on this grid (at alpha^2=0: 0.998 ln 2 against ln 2)."
        )
    rep.annotations.append(
        "Minimal PPT eigenvalue of the symmetrizer output: alpha=0 gives "
        f"{fig3.series['output_min_eig'][0]:.6f} = (sin^2 - sqrt(cos^4 + sin^4))/2 and alpha=1 gives "
        f"{fig3.series['output_min_eig'][-1]:.6f} = (cos^2 - sqrt(cos^4 + sin^4))/2; the printed "
        "formulas carry the opposite alpha labels."
    )

    # Charlie's measurement
    worst = 0.0
    for psi in random_qubits(streams[4], 100):
        for outcome, known in ((1, ref0), (0, ref1)):
            ab, _ = ent.charlie_protocol(psi, outcome)
            worst = max(worst, abs(1 - abs(ab.overlap(symmetrized_ideal(psi, known)))))
    _, p1 = ent.charlie_protocol(ref0, 1)
    rep.add(
        Check("charlie_overlap", worst, 0.0, 1e-12),
        Check("charlie_psi0_outcome1_probability", p1, oracle("charlie_psi0_outcome1_probability"), 1e-12, source="derived"),
    )

    # antisymmetric channel and covariance witnesses
    cov_unot = covariance_witness("unot", 200, streams[5])
    cov_anti = covariance_witness("antisymmetric", 200, streams[6])
    cov_opt = covariance_witness("optimal", n_random, streams[7])
    anti = ent.antisymmetric_entangler(qubit(0.6, 0.8j))
    rep.add(
        Check("unot_covariance", cov_unot["value"], 0.0, 1e-12),
        Check("antisym_covariance", cov_anti["value"], 0.0, 1e-12),
        Check("antisym_constancy", cov_anti["constancy"], 0.0, 0.0),
        Check("optimal_covariance_fidelity_spread", cov_opt["value"], 0.0, 1e-12),
        Check("antisym_fidelity", fidelity_pure(anti, antisymmetrized_ideal(qubit(0.6, 0.8j), ref0)), 1.0, 1e-12),
        Check("antisym_reduction_a", float(np.max(np.abs(partial_trace(anti.matrix, (2, 2), (0,)) - np.eye(2) / 2))), 0.0, 1e-12),
        Check("antisym_reduction_b", float(np.max(np.abs(partial_trace(anti.matrix, (2, 2), (1,)) - np.eye(2) / 2))), 0.0, 1e-12),
        Check("antisym_entropy", von_neumann_entropy(anti), 0.0, 1e-12),
    )
    return rep

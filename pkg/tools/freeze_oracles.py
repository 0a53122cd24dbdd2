"""Compute independently derived expected values and freeze them to JSON.

Nothing here imports entangler_lab: every value comes from sympy, from
numpy.linalg on matrices written out by hand, or from scipy root finding.
Run from the repository root:

    python tools/freeze_oracles.py
"""

import json
from pathlib import Path

import numpy as np
import sympy as sp
from scipy import optimize

OUT = Path(__file__).resolve().parents[1] / "src" / "entangler_lab" / "data" / "oracles.json"

R2 = np.sqrt(2.0)
C2 = (9 + 3 * R2) / 14  # cos^2 of the optimal machine angle
S2 = (5 - 3 * R2) / 14


def measurement_average_exact():
    # input u = cos^2(theta/2), direction v = cos^2(theta'/2), both uniform on [0, 1];
    # the relative azimuth is averaged analytically (cos^2 -> 1/2).
    u, v = sp.symbols("u v", positive=True)
    a = u * v + (1 - u) * (1 - v)
    bq = 8 * u * (1 - u) * v * (1 - v)
    p = 4 * u * v + (1 - u) * (1 - v)
    r = 4 * u * (1 - v) + (1 - u) * v
    d1 = (1 + u) * (1 + v)
    d2 = (1 + u) * (2 - v)
    g = a * p / d1 + bq / (2 * d1) + (1 - a) * r / d2 + bq / (2 * d2)
    inner = sp.integrate(sp.apart(sp.expand(g), v), (v, 0, 1))
    total = sp.integrate(sp.apart(sp.expand(sp.simplify(inner)), u), (u, 0, 1))
    ln2 = sp.log(2)
    closed = 55 + 112 * ln2**2 - 156 * ln2
    assert sp.simplify(sp.expand_log(total - closed, force=True)) == 0
    return float(sp.N(closed, 30)), str(closed)


def rho_out(alpha):
    beta = np.sqrt(1 - alpha**2)
    e00 = np.array([1, 0, 0, 0.0])
    ep = np.array([0, 1, 1, 0.0]) / R2
    return (
        (alpha**2 * C2 + beta**2 * S2) * np.outer(e00, e00)
        + (alpha**2 * S2 + beta**2 * C2) * np.outer(ep, ep)
        + C2 * alpha * beta * (np.outer(e00, ep) + np.outer(ep, e00))
    )


def pt2(m):
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def entropy(m):
    w = np.linalg.eigvalsh(m)
    w = w[w > 1e-12]
    return float(-np.sum(w * np.log(w)))


def reduce_a(m):
    return np.trace(m.reshape(2, 2, 2, 2), axis1=1, axis2=3)


def main():
    vals = {}

    value, text = measurement_average_exact()
    vals["measurement_average_exact"] = {"value": value, "expr": text}

    for alpha in (0.0, 1.0):
        eig = float(np.linalg.eigvalsh(pt2(rho_out(alpha)))[0])
        closed = 0.5 * ((S2 if alpha == 0 else C2) - np.sqrt(C2**2 + S2**2))
        assert abs(eig - closed) < 1e-9, (alpha, eig, closed)
        vals[f"ppt_output_alpha{int(alpha)}"] = {"value": eig, "closed_form": closed}

    vals["bures_optimal"] = {"value": float(np.sqrt(2 - 2 * np.sqrt(C2)))}
    vals["bures_optimal_squared"] = {"value": float(2 - 2 * np.sqrt(C2))}

    s_out0 = entropy(reduce_a(rho_out(0.0)))
    vals["entropy_output_reduced_alpha0"] = {"value": s_out0, "over_ln2": s_out0 / np.log(2)}

    res = optimize.minimize_scalar(
        lambda a2: entropy(rho_out(np.sqrt(a2))), bounds=(0.05, 0.95), method="bounded",
        options={"xatol": 1e-10},
    )
    vals["fig2_argmin_alpha_sq"] = {"value": float(res.x), "min_entropy": float(res.fun)}

    def ideal(alpha):
        b = np.sqrt(1 - alpha**2)
        vec = np.array([2 * alpha, b, b, 0.0])  # 2a|00> + sqrt2 b|+>
        return np.outer(vec, vec) / (vec @ vec)

    for label, alpha in (("alpha0", 0.0), ("alpha_sq_half", np.sqrt(0.5)), ("alpha1", 1.0)):
        d = rho_out(alpha) - ideal(alpha)
        vals[f"hs_optimal_{label}"] = {"value": float(np.sqrt(np.trace(d @ d)))}

    # |psi> = |0>: C holds gamma0|0,0>|perp> + gamma1|{0,perp}>|0>, perp = -|1>
    g0, g1 = np.sqrt(2 / 3), -np.sqrt(1 / 3)
    amp_c1 = g0 * -1.0  # |00>|1> component
    vals["charlie_psi0_outcome1_probability"] = {"value": float(amp_c1**2)}
    vals["charlie_psi0_outcome0_probability"] = {"value": float(g1**2)}

    # D = 3, psi = (u1 + u2)/sqrt2, phi = u1: |<psi|phi>|^2 = 1/2
    vals["swap_d3_plus_probability"] = {"value": (1 + 0.5) / 2}

    # no-signaling: largest t with 1 - t - 2 sqrt(t^2 + txy^2) >= 0 at txy = 0
    t_star = optimize.brentq(lambda t: 1 - t - 2 * abs(t), 0.0, 1.0, xtol=1e-15)
    vals["nosignaling_t_star"] = {"value": t_star}
    vals["nosignaling_f_star"] = {"value": (1 + t_star) / 4}

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(vals, indent=2, sort_keys=True) + "\n")
    print(json.dumps(vals, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()

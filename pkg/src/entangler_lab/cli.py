"""Command-line front end: ``entangler-lab <reproduce|sweep|channel|bound>``.

Exit status: 0 when every check passes, 1 when a reproduction check fails,
2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

import numpy as np

from . import entanglers as ent
from . import experiments as exp
from .linalg import partial_trace
from .metrics import bures_distance, fidelity_pure, ppt_min_eigenvalue, von_neumann_entropy
from .states import (
    KET0,
    BlochAngles,
    DegenerateInputError,
    DensityMatrix,
    PureState,
    antisymmetrized_ideal,
    bell_states,
    ket_from_bloch,
    symmetrized_ideal,
)

CURVES = ("fig1", "fig2", "fig3")
CHANNEL_NAMES = ("optimal", "unot", "swap", "measurement", "antisym")
BOUNDS = ("measurement", "nosignaling")


def _at_least(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_at_least(0), default=0)
    common.add_argument("--quad-theta", type=_at_least(2), default=64)
    common.add_argument("--quad-phi", type=_at_least(2), default=64)
    common.add_argument("--grid-points", type=_at_least(2), default=201)
    common.add_argument("--format", choices=("table", "csv", "json"), default=None)
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")

    parser = argparse.ArgumentParser(prog="entangler-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("reproduce", parents=[common], help="recompute and grade every constant")
    sw = sub.add_parser("sweep", parents=[common], help="emit a figure curve")
    sw.add_argument("curve", choices=CURVES)
    ch = sub.add_parser("channel", parents=[common], help="evaluate one entangler on one input")
    ch.add_argument("channel", choices=CHANNEL_NAMES)
    ch.add_argument("--theta", type=float, default=0.0, help="input polar angle in radians, [0, pi]")
    ch.add_argument("--phi", type=float, default=0.0, help="input azimuth in radians, [0, 2pi)")
    bd = sub.add_parser("bound", parents=[common], help="run a fidelity bound search")
    bd.add_argument("which", choices=BOUNDS)
    return parser


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [
        [_fmt(v) if isinstance(v, (float, np.floating)) else str(v) for v in row] for row in rows
    ]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _complex_json(m: np.ndarray) -> dict:
    return {"real": m.real.tolist(), "imag": m.imag.tolist()}


def _render(fmt: str, header, rows, payload) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        return _json(payload)
    return _table(header, rows)


def cmd_reproduce(args) -> tuple[str, int]:
    start = time.perf_counter()
    report = exp.reproduce_all(args.seed, args.quad_theta, args.quad_phi, args.grid_points)
    elapsed = time.perf_counter() - start
    fmt = args.format or "table"
    header = ["check", "expected", "computed", "tolerance", "relation", "status"]
    rows = [[c.name, c.expected, c.computed, c.tolerance, c.relation, "PASS" if c.passed else "FAIL"]
            for c in report.checks]
    if fmt == "json":
        text = report.to_json()
    else:
        text = _render(fmt, header, rows, None)
        if fmt == "table":
            text += "\n" + "\n".join(f"note: {a}" for a in report.annotations) + "\n"
            n_fail = len(report.failures())
            text += f"\n{len(report.checks) - n_fail}/{len(report.checks)} checks passed\n"
    # wall time stays out of the payload so reports are byte-reproducible
    print(f"reproduce finished in {elapsed:.1f} s", file=sys.stderr)
    return text, 0 if report.all_passed else 1


def _curve(name: str, points: int) -> exp.Curve:
    if name == "fig3":
        return exp.ppt_curves(points)
    fig1, fig2 = exp.entropy_curves(points)
    if name == "fig1":
        return exp.Curve("fig1", "alpha_sq", fig1.grid, {
            k: fig1.series[k] for k in ("ideal_entropy", "output_entropy")})
    return exp.Curve("fig2", "alpha_sq", fig2.grid, {"output_total_entropy": fig2.series["output_total_entropy"]})


def cmd_sweep(args) -> tuple[str, int]:
    curve = _curve(args.curve, args.grid_points)
    fmt = args.format or "csv"
    return _render(fmt, curve.columns(), list(curve.rows()), curve.to_dict()), 0


def _channel_output(name: str, psi: PureState, args):
    """Return (output density matrix, ideal target, extra scalars)."""
    ref = PureState(KET0)
    if name == "optimal":
        return ent.apply_optimal_entangler(psi), symmetrized_ideal(psi, ref), {}
    if name == "unot":
        ab, c, _ = ent.apply_unot_entangler(psi)
        return ab, ent.unot_target(psi), {"flip_fidelity": fidelity_pure(c, ent.orthogonal_state(psi))}
    if name == "swap":
        plus, minus = ent.swap_post_select(psi, ref)
        return plus.state.projector(), symmetrized_ideal(psi, ref), {
            "probability_symmetric": plus.probability, "probability_antisymmetric": minus.probability}
    if name == "measurement":
        rho = ent.measurement_entangler_averaged(psi, args.quad_theta, args.quad_phi)
        return rho, symmetrized_ideal(psi, ref), {}
    try:
        target = antisymmetrized_ideal(psi, ref)
    except DegenerateInputError:
        target = bell_states()[1]
    return ent.antisymmetric_entangler(psi), target, {}


def cmd_channel(args) -> tuple[str, int]:
    psi = ket_from_bloch(BlochAngles(args.theta, args.phi))
    rho, target, extra = _channel_output(args.channel, psi, args)
    m = rho.matrix
    scalars = {
        "fidelity": fidelity_pure(rho, target),
        "bures_distance": bures_distance(rho, target),
        "entropy": von_neumann_entropy(rho),
        "entropy_a": von_neumann_entropy(partial_trace(m, (2, 2), (0,))),
        "ppt_min_eigenvalue": ppt_min_eigenvalue(rho),
        **extra,
    }
    fmt = args.format or "table"
    if fmt == "json":
        return _json({
            "channel": args.channel, "theta": args.theta, "phi": args.phi,
            "rho_real": m.real.tolist(), "rho_imag": m.imag.tolist(),
            "reduced_a": _complex_json(partial_trace(m, (2, 2), (0,))),
            "reduced_b": _complex_json(partial_trace(m, (2, 2), (1,))),
            "scalars": scalars,
        }), 0
    if fmt == "csv":
        return _csv(["quantity", "value"], list(scalars.items())), 0
    basis = ["00", "01", "10", "11"]
    lines = [f"channel {args.channel}, input theta={args.theta:g} phi={args.phi:g}", "", "output rho (real part)"]
    lines.append(_table(["", *basis], [[b, *m.real[i]] for i, b in enumerate(basis)]))
    lines.append("output rho (imaginary part)")
    lines.append(_table(["", *basis], [[b, *m.imag[i]] for i, b in enumerate(basis)]))
    for label, keep in (("reduced state A", 0), ("reduced state B", 1)):
        r = partial_trace(m, (2, 2), (keep,))
        lines.append(f"{label}: [[{_fmt(r[0, 0].real)}, {_fmt(r[0, 1].real)}{r[0, 1].imag:+.6g}j], "
                     f"[{_fmt(r[1, 0].real)}{r[1, 0].imag:+.6g}j, {_fmt(r[1, 1].real)}]]")
    lines.append("")
    lines.append(_table(["quantity", "value"], list(scalars.items())))
    return "\n".join(lines), 0


def cmd_bound(args) -> tuple[str, int]:
    fmt = args.format or "table"
    if args.which == "measurement":
        sb = exp.measurement_strategy_bound()
        rows = [
            ["f0_max", sb.f0_max], ["f0_theta_measure", sb.f0_at[0]], ["f0_theta_prepare", sb.f0_at[1]],
            ["f1_max", sb.f1_max], ["f1_theta_measure", sb.f1_at[0]], ["f1_theta_prepare", sb.f1_at[1]],
            ["bound", sb.bound], ["bound_closed_form", exp.MEASUREMENT_BOUND],
        ]
        ok = abs(sb.bound - exp.MEASUREMENT_BOUND) <= 2e-6
    else:
        ns = exp.nosignaling_bound_search(max(1001, args.grid_points))
        rows = [
            ["fidelity", ns.fidelity], ["t", ns.t], ["t_xy", ns.t_xy], ["eta", ns.eta],
            ["eta_min", ns.eta_interval[0]], ["eta_max", ns.eta_interval[1]],
            ["active_constraint", ns.active_constraint], ["output_min_eigenvalue", ns.min_eigenvalue],
        ]
        ok = abs(ns.fidelity - 1 / 3) <= 1e-6
    return _render(fmt, ["quantity", "value"], rows, {k: float(v) for k, v in rows}), 0 if ok else 1


COMMANDS = {"reproduce": cmd_reproduce, "sweep": cmd_sweep, "channel": cmd_channel, "bound": cmd_bound}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "channel":
        if not 0.0 <= args.theta <= np.pi or not 0.0 <= args.phi < 2 * np.pi:
            parser.error("--theta must lie in [0, pi] and --phi in [0, 2pi)")
    try:
        text, status = COMMANDS[args.command](args)
    except ValueError as err:
        parser.error(str(err))
    if args.out:
        try:
            with open(args.out, "w", newline="\n", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as err:
            print(f"entangler-lab: cannot write {args.out}: {err}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line driver.

Subcommands: ``spectrum``, ``thermal``, ``cycle``, ``sweep``, ``figure`` and
``verify``. Any subcommand accepts ``--config FILE`` holding ``key=value``
lines (keys are flag names, with or without dashes); command-line flags win.

Exit codes: 0 success, 1 failed verification, 2 invalid arguments,
3 output could not be written.
"""
from __future__ import annotations

import argparse
import math
import sys

from . import sweep as sweep_mod
from .correlations import correlations_at
from .cycle import carnot_efficiency, evaluate_cycle
from .spin_model import SubstanceParams, energy_gaps, spectrum
from .thermal import populations, reduced_entropy, thermal_xstate, von_neumann_entropy
from .verify import run_checks

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return value


def _nonneg(text: str) -> float:
    value = _finite(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text!r}")
    return value


def _positive(text: str) -> float:
    value = _finite(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text!r}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def _count(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return parse


def _add_cycle_flags(p):
    d = sweep_mod.DEFAULT_KNOBS
    p.add_argument("--mu-h", type=_nonneg, default=d["mu_h"], help="twisting strength at the hot bath")
    p.add_argument("--mu-l", type=_nonneg, default=d["mu_l"], help="twisting strength at the cold bath")
    p.add_argument("--omega-h", type=_nonneg, default=d["omega_h"], help="field at the hot bath")
    p.add_argument("--omega-l", type=_nonneg, default=d["omega_l"], help="field at the cold bath")
    p.add_argument("--t-h", type=_positive, default=d["t_h"], help="hot bath temperature")
    p.add_argument("--t-l", type=_positive, default=d["t_l"], help="cold bath temperature")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spin-otto",
        description="Two-spin one-axis-twisting quantum Otto engine.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file merged before flags")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="energies, eigenvectors and gaps")
    p.add_argument("--mu", type=_nonneg, required=True)
    p.add_argument("--omega", type=_nonneg, required=True)

    p = sub.add_parser("thermal", parents=[common], help="Gibbs state, entropies and correlations")
    p.add_argument("--mu", type=_nonneg, required=True)
    p.add_argument("--omega", type=_nonneg, required=True)
    p.add_argument("--t", type=_positive, required=True, help="temperature")

    p = sub.add_parser("cycle", parents=[common], help="one Otto cycle")
    _add_cycle_flags(p)

    p = sub.add_parser("sweep", parents=[common], help="linear scan of one knob, written as CSV")
    _add_cycle_flags(p)
    p.add_argument("--var", required=True, choices=sorted(sweep_mod.VARIABLES))
    p.add_argument("--from", dest="start", type=_finite, required=True)
    p.add_argument("--to", dest="stop", type=_finite, required=True)
    p.add_argument("--points", type=_count(2), required=True)
    p.add_argument("--out", required=True, help="CSV path")
    p.add_argument("--jobs", type=_count(1), default=1)

    p = sub.add_parser("figure", parents=[common], help="reproduce a figure preset as CSV files")
    p.add_argument("name", help=f"one of {', '.join(sweep_mod.PRESETS)}")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--jobs", type=_count(1), default=1)

    p = sub.add_parser("verify", parents=[common], help="compare closed forms against brute-force oracles")
    p.add_argument("--n", type=_count(1), default=100, help="ensemble size")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--coarse-n", type=_count(64), default=181, help="discord search grid")
    return parser


def _subparsers(parser) -> dict:
    action = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    return action.choices


def read_config(path: str) -> dict:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are skipped."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.lstrip("-").replace("-", "_")] = value
    return out


def _apply_config(parser, argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    try:
        config = read_config(known.config)
    except (OSError, ValueError) as exc:
        parser.error(f"argument --config: {exc}")
    aliases = {"from": "start", "to": "stop"}
    config = {aliases.get(k, k): v for k, v in config.items()}
    for sp in _subparsers(parser).values():
        dests = {a.dest for a in sp._actions}
        sp.set_defaults(**{k: v for k, v in config.items() if k in dests})
        for action in sp._actions:
            # a config value satisfies a required flag
            if action.dest in config:
                action.required = False


def _fmt(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, float):
        return sweep_mod.format_float(value)
    return str(value)


def _print_kv(pairs):
    for key, value in pairs:
        print(f"{key}={_fmt(value)}")


def _cycle_spec(parser, args):
    if not args.t_h > args.t_l:
        parser.error(f"argument --t-h: must exceed --t-l (got {args.t_h:g} <= {args.t_l:g})")
    return sweep_mod.spec_from_knobs(
        dict(mu_h=args.mu_h, mu_l=args.mu_l, omega_h=args.omega_h,
             omega_l=args.omega_l, t_h=args.t_h, t_l=args.t_l)
    )


def cmd_spectrum(args):
    spec = spectrum(SubstanceParams(args.mu, args.omega))
    pairs = [(f"E{n + 1}", float(e)) for n, e in enumerate(spec.energies)]
    pairs += [("kappa", spec.kappa), ("A_minus", spec.a_minus), ("A_plus", spec.a_plus)]
    pairs += [(f"gap{n + 1}{n + 2}", float(g)) for n, g in enumerate(energy_gaps(spec))]
    for n in range(4):
        vec = " ".join(_fmt(float(c)) for c in spec.eigenvectors[:, n])
        pairs.append((f"psi{n + 1}", vec))
    _print_kv(pairs)
    return EXIT_OK


def cmd_thermal(args):
    params = SubstanceParams(args.mu, args.omega)
    pops = populations(spectrum(params), args.t)
    x = thermal_xstate(params, args.t)
    report = correlations_at(params, args.t)
    pairs = [(f"P{n + 1}", float(p)) for n, p in enumerate(pops.p)]
    pairs += [("log_Z", pops.log_z), ("a", x.a), ("b", x.b), ("d", x.d), ("w", x.w), ("z", x.z)]
    pairs += [
        ("S", von_neumann_entropy(pops)),
        ("S_A", reduced_entropy(x)),
        ("D", report.discord),
        ("D1", report.d1),
        ("D2", report.d2),
        ("C", report.concurrence),
        ("E", report.eof),
    ]
    _print_kv(pairs)
    return EXIT_OK


def cmd_cycle(parser, args):
    spec = _cycle_spec(parser, args)
    result = evaluate_cycle(spec)
    row = sweep_mod.evaluate_point(spec)
    eta = "n/a" if result.efficiency is None else f"{result.efficiency:.4f}"
    print(
        f"W={result.work:.4f} Q_in={result.q_in:.4f} Q_out={result.q_out:.4f} eta={eta} "
        f"regime={result.regime.token} D_H={row.d_hot:.4f} D_L={row.d_cold:.4f} "
        f"E_H={row.e_hot:.4f} E_L={row.e_cold:.4f}"
    )
    _print_kv(
        [
            ("W", result.work),
            ("Q_in", result.q_in),
            ("Q_out", result.q_out),
            ("eta", result.efficiency),
            ("eta_carnot", carnot_efficiency(spec)),
            ("regime", result.regime.token),
            ("D_H", row.d_hot),
            ("D_L", row.d_cold),
            ("E_H", row.e_hot),
            ("E_L", row.e_cold),
        ]
    )
    return EXIT_OK


def cmd_sweep(parser, args):
    fixed = dict(mu_h=args.mu_h, mu_l=args.mu_l, omega_h=args.omega_h,
                 omega_l=args.omega_l, t_h=args.t_h, t_l=args.t_l)
    try:
        spec = sweep_mod.SweepSpec(args.var, args.start, args.stop, args.points, fixed)
    except ValueError as exc:
        parser.error(f"argument --var/--from/--to: {exc}")
    rows = sweep_mod.run_sweep(spec, jobs=args.jobs)
    try:
        sweep_mod.write_csv(rows, args.out)
    except OSError as exc:
        print(f"spin-otto: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_figure(parser, args):
    if args.name not in sweep_mod.PRESETS:
        parser.error(f"argument name: unknown preset {args.name!r}; valid names: {', '.join(sweep_mod.PRESETS)}")
    try:
        paths = sweep_mod.run_figure(args.name, args.out, jobs=args.jobs)
    except OSError as exc:
        print(f"spin-otto: cannot write into {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    for path in paths:
        print(f"wrote {path}")
    return EXIT_OK


def cmd_verify(args):
    results = run_checks(args.n, args.seed, coarse_n=args.coarse_n)
    for result in results:
        print(result.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    subparser = _subparsers(parser)[args.command]
    try:
        if args.command == "spectrum":
            return cmd_spectrum(args)
        if args.command == "thermal":
            return cmd_thermal(args)
        if args.command == "cycle":
            return cmd_cycle(subparser, args)
        if args.command == "sweep":
            return cmd_sweep(subparser, args)
        if args.command == "figure":
            return cmd_figure(subparser, args)
        return cmd_verify(args)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

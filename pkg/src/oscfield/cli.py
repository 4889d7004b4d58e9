"""Command-line front end.

    oscfield entropy --s1 0 --s2 1 --alpha 1 --points 9
    oscfield figure1 --output figs/
    oscfield sweep --alphas 1,0.5 --pairs 0:10,5:10
    oscfield validate

Exit status: 0 success, 1 failed validation, 2 usage error, 3 numeric
domain error.  ``--config FILE`` reads ``key=value`` lines mirroring the
long flags (``command=entropy`` selects the subcommand).  The sweep worker
pool size comes from ``OSCFIELD_WORKERS``.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import records
from .amplitudes import AmplitudeOverflowError, amplitude_row
from .dynamics import DEFAULT_POINTS, EvolutionSpec, default_grid
from .entanglement import entropy_series
from .oracle import DEFAULT_MARGIN, OracleError
from .params import (
    Branch,
    DomainError,
    PhysicalInputs,
    derive_coupling,
    eigenenergy,
    symmetrized_energy,
)
from .special import JacobiOverflowError
from .validation import FIGURE_ALPHAS, run_all

COMMANDS = ("entropy", "amplitudes", "energies", "figure1", "sweep", "validate")
FIGURE_PANELS = (("a", 0, 10), ("b", 5, 10), ("c", 10, 10), ("d", 20, 10))
WORKERS_ENV = "OSCFIELD_WORKERS"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from exc


def _pair_list(text: str) -> list[tuple[int, int]]:
    pairs = []
    for item in text.split(","):
        try:
            a, b = item.split(":")
            pairs.append((int(a), int(b)))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad pair {item!r}, expected s1:s2") from exc
    return pairs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscfield",
        description="Entanglement dynamics of an oscillator coupled to one field mode.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    physical = argparse.ArgumentParser(add_help=False)
    physical.add_argument("--alpha", type=float, help="mixing parameter, |alpha| <= 1")
    physical.add_argument("--omega", type=float, help="field frequency (a.u.)")
    physical.add_argument("--omega-c", type=float, help="oscillator frequency (a.u.)")
    physical.add_argument("--beta", type=float, help="coupling constant")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--s1", type=int, required=True, help="initial oscillator quanta")
    source.add_argument("--s2", type=int, required=True, help="initial photon number")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--points", type=int, default=DEFAULT_POINTS)
    grid.add_argument("--max-phase", type=float, default=2 * math.pi)

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("-o", "--output", help="output file (directory for figure1); default stdout")
    output.add_argument("--format", choices=("csv", "json"), default="csv")
    output.add_argument("--bits", action="store_true", help="entropy in bits instead of nats")

    sub.add_parser("entropy", parents=[source, physical, grid, output],
                   help="entropy series for one initial state")
    p = sub.add_parser("amplitudes", parents=[source, physical, output],
                       help="transition amplitudes on a manifold")
    p.set_defaults(bits=False)
    p = sub.add_parser("energies", parents=[physical, output], help="eigenenergy table")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--m-max", type=int, default=3)
    sub.add_parser("figure1", parents=[grid, output],
                   help="four panels x five alphas of entropy series")
    p = sub.add_parser("sweep", parents=[physical, grid, output],
                       help="max-entropy summary over a parameter grid")
    p.add_argument("--alphas", type=_float_list, help="comma-separated alpha values")
    p.add_argument("--pairs", type=_pair_list, help="comma-separated s1:s2 pairs")
    p.add_argument("--s1", type=int)
    p.add_argument("--s2", type=int)
    p.add_argument("--from-files", nargs="+", metavar="JSON",
                   help="summarize previously written JSON entropy series")
    p = sub.add_parser("validate", parents=[output], help="compare against the oracles")
    p.add_argument("--margin", type=int, default=DEFAULT_MARGIN,
                   help="Fock layers above N kept by the Hamiltonian oracle")
    p.add_argument("--inject-alpha-mismatch", type=float, default=0.0, help=argparse.SUPPRESS)
    return parser


def expand_config(argv: list[str]) -> list[str]:
    """Splice ``--config FILE`` contents into argv; explicit flags win."""
    if "--config" not in argv:
        return list(argv)
    argv = list(argv)
    i = argv.index("--config")
    try:
        path = argv[i + 1]
    except IndexError:
        raise UsageError("--config needs a path") from None
    del argv[i:i + 2]
    command = None
    file_args: list[str] = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"config line without '=': {raw!r}")
        key, value = key.strip().replace("_", "-"), value.strip()
        if key == "command":
            command = value
            continue
        if value.lower() in ("true", "yes", "on"):
            file_args.append(f"--{key}")
        elif value.lower() in ("false", "no", "off"):
            continue
        else:
            file_args += [f"--{key}", value]
    if argv and argv[0] in COMMANDS:
        command, argv = argv[0], argv[1:]
    if command is None:
        raise UsageError("no subcommand given on the command line or in the config file")
    return [command] + file_args + argv


def _coupling_or_alpha(args):
    """-> (alpha, CouplingConfig | None, metadata)."""
    triple = (args.omega, args.omega_c, args.beta)
    given = [v is not None for v in triple]
    if args.alpha is not None and any(given):
        raise UsageError("give either --alpha or --omega/--omega-c/--beta, not both")
    if args.alpha is not None:
        if not abs(args.alpha) <= 1.0:
            raise UsageError(f"|alpha| must be <= 1, got {args.alpha}")
        return args.alpha, None, {"alpha": float(args.alpha)}
    if not all(given):
        raise UsageError("need --alpha or all of --omega, --omega-c, --beta")
    cfg = derive_coupling(PhysicalInputs(*triple))
    return cfg.alpha, cfg, coupling_metadata(cfg)


def coupling_metadata(cfg) -> dict:
    inp = cfg.inputs
    return {
        "omega": inp.omega,
        "omega_c": inp.omega_c,
        "beta": inp.beta,
        "epsilon": cfg.epsilon,
        "branch": cfg.branch.value,
        "alpha": cfg.alpha,
        "alpha_exact": cfg.alpha_exact,
        "gamma": cfg.gamma,
        "sigma_exact": cfg.sigma_exact,
        "sigma_reduced": cfg.sigma_reduced,
        "lambda_cap": cfg.lambda_cap,
        "kappa": cfg.kappa,
        "delta": cfg.delta,
        "delta_first_order": cfg.delta_first_order,
    }


def _grid(args):
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    if not (args.max_phase > 0 and math.isfinite(args.max_phase)):
        raise UsageError("--max-phase must be positive")
    return default_grid(args.points, args.max_phase)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _series_table(source, alpha, coupling, phases, meta, bits, command):
    spec = EvolutionSpec(source=source, alpha=alpha, phases=phases, coupling=coupling)
    series = entropy_series(spec)
    header = {"command": command, "s1": source[0], "s2": source[1]}
    header.update(meta)
    header.update({"points": len(phases), "max_phase": float(phases[-1])})
    return series, records.series_table(series, header, bits=bits)


def cmd_entropy(args) -> int:
    alpha, cfg, meta = _coupling_or_alpha(args)
    _, table = _series_table((args.s1, args.s2), alpha, cfg, _grid(args), meta, args.bits, "entropy")
    _emit(records.render(table, args.format), args.output)
    return EXIT_OK


def cmd_amplitudes(args) -> int:
    alpha, _, meta = _coupling_or_alpha(args)
    row = amplitude_row(args.s1, args.s2, alpha)
    total = args.s1 + args.s2
    rows = [[n, total - n, float(abs(v) ** 2), float(math.atan2(v.imag, v.real))]
            for n, v in enumerate(row.values)]
    header = {"tool": "oscfield", "version": records.TOOL_VERSION, "command": "amplitudes",
              "s1": args.s1, "s2": args.s2}
    header.update(meta)
    table = records.Table(header, ["n", "m", "probability", "phase"], rows)
    _emit(records.render(table, args.format), args.output)
    return EXIT_OK


def cmd_energies(args) -> int:
    if args.alpha is not None:
        raise UsageError("energies need --omega, --omega-c and --beta")
    if None in (args.omega, args.omega_c, args.beta):
        raise UsageError("energies need --omega, --omega-c and --beta")
    header = {"tool": "oscfield", "version": records.TOOL_VERSION, "command": "energies"}
    quanta = [(n, m) for n in range(args.n_max + 1) for m in range(args.m_max + 1)]
    if args.beta == 0.0:
        # uncoupled oscillators; the coupled formulas reduce to G = S = 1
        header.update({"omega": args.omega, "omega_c": args.omega_c, "beta": 0.0})
        rows = [[n, m, symmetrized_energy(args.omega, args.omega_c, 0.0, n, m), 1.0, 1.0]
                for n, m in quanta]
        columns = ["n", "m", "energy", "g_factor", "s_factor"]
    else:
        cfg = derive_coupling(PhysicalInputs(args.omega, args.omega_c, args.beta))
        header.update(coupling_metadata(cfg))
        columns = ["n", "m", "energy", "g_factor", "s_factor"]
        rows = []
        for n, m in quanta:
            e = eigenenergy(cfg, n, m)
            rows.append([n, m, e.value, e.g_factor, e.s_factor])
        if cfg.branch is Branch.EPSILON_ZERO:
            header["energy_formula"] = "symmetrized epsilon-zero"
    table = records.Table(header, columns, rows)
    _emit(records.render(table, args.format), args.output)
    return EXIT_OK


def _alpha_label(alpha: float) -> str:
    return f"{alpha:g}".replace("-", "m")


def figure1_tables(phases, bits=False):
    """Yield (filename stem, EntropySeries, Table) for every panel and alpha."""
    for letter, s1, s2 in FIGURE_PANELS:
        for alpha in FIGURE_ALPHAS:
            series, table = _series_table((s1, s2), alpha, None, phases,
                                          {"alpha": alpha, "panel": letter}, bits, "figure1")
            yield f"panel_{letter}_s1_{s1}_s2_{s2}_alpha_{_alpha_label(alpha)}", series, table


def cmd_figure1(args) -> int:
    outdir = Path(args.output or "figure1")
    outdir.mkdir(parents=True, exist_ok=True)
    for stem, _, table in figure1_tables(_grid(args), args.bits):
        (outdir / f"{stem}.{args.format}").write_text(records.render(table, args.format))
    return EXIT_OK


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return min(8, os.cpu_count() or 1)


def cmd_sweep(args) -> int:
    header = {"tool": "oscfield", "version": records.TOOL_VERSION, "command": "sweep"}
    if args.from_files:
        rows = [records.summary_from_table(i, records.read_json(Path(f).read_text()))
                for i, f in enumerate(args.from_files)]
        header["sources"] = len(rows)
    else:
        if args.alphas is not None:
            alphas = args.alphas
            coupling = None
            if any(v is not None for v in (args.alpha, args.omega, args.omega_c, args.beta)):
                raise UsageError("--alphas excludes --alpha and the physical triple")
        else:
            alpha, coupling, meta = _coupling_or_alpha(args)
            alphas = [alpha]
            header.update(meta)
        if args.pairs is not None:
            pairs = args.pairs
        elif args.s1 is not None and args.s2 is not None:
            pairs = [(args.s1, args.s2)]
        else:
            raise UsageError("sweep needs --pairs or --s1/--s2")
        for a in alphas:
            if not abs(a) <= 1.0:
                raise UsageError(f"|alpha| must be <= 1, got {a}")
        phases = _grid(args)
        points = [(pair, a) for pair in pairs for a in alphas]

        def run(item):
            pair, a = item
            return entropy_series(EvolutionSpec(pair, a, phases, coupling))

        with ThreadPoolExecutor(max_workers=worker_count()) as pool:
            series = list(pool.map(run, points))
        rows = [records.summary_row(i, s) for i, s in enumerate(series)]
        header.update({"points": len(phases), "max_phase": float(phases[-1])})
    table = records.Table(header, list(records.SUMMARY_COLUMNS), rows)
    _emit(records.render(table, args.format), args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    results = run_all(margin=args.margin, alpha_offset=args.inject_alpha_mismatch)
    ok = all(r.passed for r in results)
    header = {"tool": "oscfield", "version": records.TOOL_VERSION, "command": "validate",
              "margin": args.margin, "passed": "true" if ok else "false"}
    rows = [[r.name, r.max_deviation, r.tolerance, "pass" if r.passed else "fail", r.note or "-"]
            for r in results]
    table = records.Table(header, ["check", "max_deviation", "tolerance", "status", "note"], rows)
    _emit(records.render(table, args.format), args.output)
    for r in results:
        if not r.passed:
            print(f"FAILED {r.name}: {r.max_deviation:.3g} (tol {r.tolerance:g}) {r.note}",
                  file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


HANDLERS = {
    "entropy": cmd_entropy,
    "amplitudes": cmd_amplitudes,
    "energies": cmd_energies,
    "figure1": cmd_figure1,
    "sweep": cmd_sweep,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(expand_config(argv))
        except SystemExit as exc:
            return EXIT_USAGE if exc.code else EXIT_OK
        return HANDLERS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"oscfield: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, JacobiOverflowError, AmplitudeOverflowError, OracleError,
            ArithmeticError) as exc:
        print(f"oscfield: numeric domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"oscfield: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"oscfield: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

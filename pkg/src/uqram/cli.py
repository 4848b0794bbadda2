"""Command-line front end.

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import circuit as circ
from . import harness
from . import permutation as perm
from . import simulator as sim
from .registers import MemoryConfig, make_params, validate_memory


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for item in text.split(","):
        n, _, k = item.partition(":")
        try:
            pairs.append((int(n), int(k)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad pair {item!r}; expected N:K")
    return pairs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqram",
        description="Universal QRAM construction, verification, and Grover demo")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification campaign")
    p.add_argument("--pairs", type=_parse_pairs, default=None,
                   metavar="N:K,N:K,...")
    p.add_argument("--out", default=None, metavar="report.json|csv")

    p = sub.add_parser("build", help="build and export a permutation table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["bin", "json"], default="bin")
    p.add_argument("--out", required=True)

    p = sub.add_parser("grover", help="run the Grover search demo")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--data", required=True, metavar="W,W,...")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--iters", type=int, default=None)
    p.add_argument("--out", default=None, metavar="FILE.csv")

    p = sub.add_parser("export", help="export a circuit as JSON or QASM")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--data", default=None, metavar="W,W,...")
    p.add_argument("--format", choices=["json", "qasm"], required=True)
    p.add_argument("--qrom", action="store_true",
                   help="export the data-dependent baseline instead")

    p = sub.add_parser("compare-qrom",
                       help="check baseline circuits against memory blocks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gates", help="print gate counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    return parser


def _cmd_verify(args) -> int:
    pairs = args.pairs if args.pairs is not None else harness.DEFAULT_PAIRS
    rows = harness.run_verification_suite(pairs)
    print(harness.format_table(rows))
    if args.out:
        text = (harness.rows_to_csv(rows) if args.out.endswith(".csv")
                else harness.rows_to_json(rows))
        with open(args.out, "w") as f:
            f.write(text)
    return 0 if all(r.passed for r in rows) else 1


def _cmd_build(args) -> int:
    params = make_params(args.n, args.k)
    table = perm.build_permutation(params)
    if args.format == "bin":
        with open(args.out, "wb") as f:
            perm.write_permutation_binary(table, f)
    else:
        with open(args.out, "w") as f:
            f.write(perm.permutation_to_json(table))
    print(f"wrote {args.out} (dim {table.dim})")
    return 0


def _cmd_grover(args) -> int:
    params = make_params(args.n, args.k)
    data = MemoryConfig.from_text(args.data)
    validate_memory(params, data)
    n_marked = sum(1 for w in data.words if w == args.target)
    iters = args.iters
    if iters is None:
        iters = sim.optimal_iterations(params.n_addresses, max(n_marked, 1))
    dist = sim.run_grover(params, data, args.target, iters)
    csv = dist.to_csv()
    if args.out:
        with open(args.out, "w") as f:
            f.write(csv)
    else:
        sys.stdout.write(csv)
    return 0


def _cmd_export(args) -> int:
    params = make_params(args.n, args.k)
    if args.qrom:
        if args.data is None:
            print("error: --qrom requires --data", file=sys.stderr)
            return 2
        data = MemoryConfig.from_text(args.data)
        circuit = circ.decompose_qrom(params, data)
    else:
        circuit = circ.decompose_qram(params)
    sys.stdout.write(circ.export_circuit(circuit, args.format))
    return 0


def _cmd_compare_qrom(args) -> int:
    params = make_params(args.n, args.k)
    report = harness.run_qrom_equivalence(params, trials=args.trials,
                                          seed=args.seed)
    mode = "exhaustive" if report["exhaustive"] else "randomized"
    print(f"{report['configs_checked']} configs checked ({mode}), "
          f"{report['failures']} failures")
    return 0 if report["failures"] == 0 else 1


def _cmd_gates(args) -> int:
    params = make_params(args.n, args.k)
    report = circ.gate_count_report(params)
    print(f"universal={report['universal']} qrom_max={report['qrom_max']} "
          f"generic_estimate={report['generic_estimate']}")
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "build": _cmd_build,
    "grover": _cmd_grover,
    "export": _cmd_export,
    "compare-qrom": _cmd_compare_qrom,
    "gates": _cmd_gates,
}


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else int(e.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()

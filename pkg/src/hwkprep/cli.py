"""Command-line front end.

Exit codes: 0 success, 1 bad input or I/O failure, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import circuit as cir
from .sim import MAX_QUBITS, TooManyQubits, compare_to_spec, run
from .state import HWkStateSpec, SpecError, dicke, dumps_spec, load_spec, random_hwk, validate
from .synth import synthesize
from .tree import build_hamming_tree, count_nodes, to_dot

DEFAULT_SEED = 20240601

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


def _range(text: str) -> range:
    """Parse ``A`` or ``A:B`` (inclusive) into a range."""
    lo, _, hi = text.partition(":")
    return range(int(lo), int(hi or lo) + 1)


def _add_spec_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("spec", nargs="?", type=Path, help="spec JSON file")
    src.add_argument("--dicke", nargs=2, type=int, metavar=("N", "K"))
    src.add_argument("--random", nargs=2, type=int, metavar=("N", "K"))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--sparsity", type=float, default=0.0)
    p.add_argument("--renormalize", action="store_true", help="rescale input amplitudes to unit norm")


def _add_synth_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--peephole", action="store_true", help="cancel adjacent X pairs")
    p.add_argument("--prune-zero", action="store_true", help="skip zero-weight subtrees")
    p.add_argument("--decompose-u3", action="store_true", help="rewrite U3/CU3 into Ry/Rz form")


def _check_size(n: int) -> None:
    total = n + max(0, n - 3)
    if total > MAX_QUBITS:
        raise TooManyQubits(f"n={n} needs {total} qubits, limit is {MAX_QUBITS}")


def _load(args, guard: bool = False) -> HWkStateSpec:
    if args.spec is not None:
        spec = load_spec(args.spec)
        if guard:
            _check_size(spec.n)
        return validate(spec, renormalize=args.renormalize)
    n, k = args.dicke or args.random
    if guard:
        _check_size(n)
    if args.dicke:
        return dicke(n, k)
    return random_hwk(n, k, args.seed, sparsity=args.sparsity)


def _build(spec: HWkStateSpec, args) -> cir.Circuit:
    c = synthesize(spec, prune_zero=args.prune_zero)
    if args.peephole:
        c = cir.peephole_cancel_x(c)
    if args.decompose_u3:
        c = cir.decompose_circuit(c)
    return c


def _summary(spec: HWkStateSpec, c: cir.Circuit) -> str:
    _, internal = count_nodes(build_hamming_tree(spec.n, spec.k))
    counts = ", ".join(f"{k}={v}" for k, v in sorted(cir.gate_counts(c).items()))
    return (
        f"n={spec.n} k={spec.k} C(n,k)={math.comb(spec.n, spec.k)} internal_nodes={internal} "
        f"ancillas={c.layout.m} total_gates={cir.total_gates(c)} depth={cir.depth(c)} [{counts}]"
    )


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_synth(args) -> int:
    spec = _load(args)
    c = _build(spec, args)
    if args.format == "json":
        text = json.dumps(cir.circuit_to_json(c), indent=1) + "\n"
    else:
        text = cir.emit_qasm(c)
    _write(text, args.output)
    print(_summary(spec, c), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _load(args, guard=True)
    c = _build(spec, args)
    if args.corrupt_angle:
        gates = list(c.gates)
        for i, g in enumerate(gates):
            if g.params:
                gates[i] = cir.Gate(g.kind, g.qubits, (g.params[0] + args.corrupt_angle,) + g.params[1:])
                break
        c = c.with_gates(gates)
    report = compare_to_spec(run(c), spec)
    ok = report.passes()
    print(_summary(spec, c))
    print(f"fidelity={report.fidelity:.15f}")
    print(f"max_amp_error={report.max_amp_error:.3e}")
    print(f"ancilla_residual={report.ancilla_residual:.3e}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY


STATS_COLUMNS = [
    "n", "k", "binom", "internal", "gates", "gates_peephole", "depth", "ancillas",
    "ratio", "ref_binom_k", "ref_binom_log2n",
]


def stats_row(n: int, k: int) -> dict:
    spec = dicke(n, k)
    c = synthesize(spec)
    binom = math.comb(n, k)
    _, internal = count_nodes(build_hamming_tree(n, k))
    return {
        "n": n,
        "k": k,
        "binom": binom,
        "internal": internal,
        "gates": cir.total_gates(c),
        "gates_peephole": cir.total_gates(cir.peephole_cancel_x(c)),
        "depth": cir.depth(c),
        "ancillas": c.layout.m,
        "ratio": round(cir.total_gates(c) / binom, 4),
        "ref_binom_k": binom * k,
        "ref_binom_log2n": round(binom * math.log2(n), 2) if n > 1 else 0,
    }


def cmd_stats(args) -> int:
    ns = _range(args.n)
    if max(ns) > 16 or min(ns) < 1:
        raise SpecError("stats supports 1 <= n <= 16")
    print("\t".join(STATS_COLUMNS))
    for n in ns:
        ks = range(0, n + 1) if args.k is None else [k for k in _range(args.k) if 0 <= k <= n]
        for k in ks:
            row = stats_row(n, k)
            print("\t".join(str(row[col]) for col in STATS_COLUMNS))
    return EXIT_OK


def cmd_tree(args) -> int:
    _write(to_dot(build_hamming_tree(args.n, args.k)), args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    spec = random_hwk(args.n, args.k, args.seed, sparsity=args.sparsity)
    _write(dumps_spec(spec) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hwkprep", description="Fixed-Hamming-weight state preparation compiler")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize a circuit for a spec")
    _add_spec_source(p)
    _add_synth_flags(p)
    p.add_argument("--format", choices=["qasm", "json"], default="qasm")
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="synthesize, simulate and compare against the spec")
    _add_spec_source(p)
    _add_synth_flags(p)
    p.add_argument("--corrupt-angle", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="gate-count table (TSV on stdout)")
    p.add_argument("--n", default="2:12", help="N or N1:N2 (inclusive)")
    p.add_argument("--k", default=None, help="K or K1:K2 (default: all)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("tree", help="Graphviz dot for a Hamming tree")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("random", help="write a seeded random spec as JSON")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--sparsity", type=float, default=0.0)
    p.add_argument("-o", "--output", type=Path)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, TooManyQubits, cir.QasmError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

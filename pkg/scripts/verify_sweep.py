"""Synthesize and simulate random specs over a range of (n, k); print worst errors.

    python scripts/verify_sweep.py --n-max 10 --seeds 5 --complex
"""
import argparse

from hwkprep.sim import compare_to_spec, run
from hwkprep.state import random_hwk
from hwkprep.synth import synthesize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=9)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--sparsity", type=float, default=0.0)
    ap.add_argument("--real", action="store_true", help="real amplitudes only")
    ap.add_argument("--prune-zero", action="store_true")
    args = ap.parse_args()

    print("n\tk\tmin_fidelity\tmax_amp_error\tmax_ancilla_residual")
    for n in range(1, args.n_max + 1):
        for k in range(n + 1):
            reports = []
            for seed in range(args.seeds):
                spec = random_hwk(n, k, seed, sparsity=args.sparsity, real=args.real)
                reports.append(compare_to_spec(run(synthesize(spec, prune_zero=args.prune_zero)), spec))
            print(f"{n}\t{k}\t{min(r.fidelity for r in reports):.15f}\t"
                  f"{max(r.max_amp_error for r in reports):.2e}\t{max(r.ancilla_residual for r in reports):.2e}")


if __name__ == "__main__":
    main()

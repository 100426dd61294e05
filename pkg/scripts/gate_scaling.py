"""Gate counts, depth and synthesis time along the k = n // 2 diagonal.

    python scripts/gate_scaling.py --n-max 16 [--plot scaling.png]
"""
import argparse
import math
import time

from hwkprep.circuit import depth, peephole_cancel_x, total_gates
from hwkprep.state import dicke
from hwkprep.synth import synthesize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=16)
    ap.add_argument("--plot", default=None, help="write a log-log plot (needs matplotlib)")
    args = ap.parse_args()

    rows = []
    print("n\tk\tC(n,k)\tgates\tpeephole\tdepth\tgates/C\tus/C")
    for n in range(args.n_min, args.n_max + 1):
        k = n // 2
        spec = dicke(n, k)
        t0 = time.perf_counter()
        c = synthesize(spec)
        dt = time.perf_counter() - t0
        binom = math.comb(n, k)
        rows.append((n, binom, total_gates(c)))
        print(f"{n}\t{k}\t{binom}\t{total_gates(c)}\t{total_gates(peephole_cancel_x(c))}\t"
              f"{depth(c)}\t{total_gates(c) / binom:.3f}\t{1e6 * dt / binom:.1f}")

    if args.plot:
        import matplotlib.pyplot as plt

        ns, binoms, gates = zip(*rows)
        plt.loglog(binoms, gates, "o-", label="emitted gates")
        plt.loglog(binoms, [10 * b for b in binoms], "--", label="10 C(n,k)")
        plt.loglog(binoms, [b * (n // 2) for n, b in zip(ns, binoms)], ":", label="k C(n,k)")
        plt.xlabel("C(n, n//2)")
        plt.ylabel("gates")
        plt.legend()
        plt.savefig(args.plot, dpi=150)


if __name__ == "__main__":
    main()

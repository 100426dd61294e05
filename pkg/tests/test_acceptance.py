"""Exit criteria. Each test records one PASS/FAIL line, shown in the pytest summary."""
import math
import time

import numpy as np
import pytest

from hwkprep.circuit import (
    BASE_GATE_SET,
    DECOMPOSED_GATE_SET,
    decompose_circuit,
    decompose_u3,
    gate_counts,
    gate_matrix,
    peephole_cancel_x,
    total_gates,
    u3_matrix,
)
from hwkprep.sim import compare_to_spec, run
from hwkprep.state import dicke, random_hwk
from hwkprep.synth import gate_count_certificate, synthesize
from hwkprep.tree import build_hamming_tree, count_nodes, leaves_preorder

FIDELITY_TOL = 1e-9
AMP_TOL = 1e-10
RESIDUAL_TOL = 1e-12

RESULTS: list[str] = []


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _check(spec, circuit=None):
    r = compare_to_spec(run(circuit or synthesize(spec)), spec)
    ok = r.fidelity >= 1 - FIDELITY_TOL and r.max_amp_error <= AMP_TOL and r.ancilla_residual <= RESIDUAL_TOL
    return ok, r


def test_01_correctness_sweep():
    t0 = time.perf_counter()
    failures, cases, worst = [], 0, 0.0
    for n in range(1, 9):
        for k in range(n + 1):
            specs = [dicke(n, k)] + [random_hwk(n, k, seed=1000 * n + 10 * k + s) for s in range(5)]
            for spec in specs:
                ok, r = _check(spec)
                cases += 1
                worst = max(worst, r.max_amp_error)
                if not ok:
                    failures.append((n, k, r))
    elapsed = time.perf_counter() - t0
    record(1, "correctness sweep n<=8, all k", not failures and elapsed < 60,
           f"{cases} specs, worst amp err {worst:.1e}, {elapsed:.1f}s, failures={failures[:3]}")


def test_02_complex_phases():
    failures, worst = [], 0.0
    for seed in range(20):
        spec = random_hwk(6, 3, seed=seed)
        assert any(abs(a.imag) > 1e-3 for a in spec.amplitudes.values())
        ok, r = _check(spec)
        worst = max(worst, r.max_amp_error)
        if not ok:
            failures.append(seed)
    record(2, "complex amplitudes n=6 k=3", not failures, f"20 seeds, worst amp err {worst:.1e}")


def test_03_sparse_support_with_and_without_pruning():
    failures, worst_diff, saved = [], 0.0, 0
    for seed in range(20):
        spec = random_hwk(7, 3, seed=seed, sparsity=0.5)
        plain, pruned = synthesize(spec), synthesize(spec, prune_zero=True)
        ok_plain, _ = _check(spec, plain)
        ok_pruned, _ = _check(spec, pruned)
        diff = float(np.max(np.abs(run(plain).amplitudes - run(pruned).amplitudes)))
        worst_diff = max(worst_diff, diff)
        saved += len(plain) - len(pruned)
        if not (ok_plain and ok_pruned and diff <= AMP_TOL):
            failures.append(seed)
    record(3, "sparse support n=7 k=3, pruning off/on", not failures,
           f"worst output diff {worst_diff:.1e}, {saved} gates pruned over 20 specs")


def test_04_gate_count_bound():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 13):
        for k in range(n + 1):
            spec = dicke(n, k)
            cert = gate_count_certificate(spec)
            if not cert.ok or cert.internal_nodes != math.comb(n, k) - 1:
                bad.append((n, k))
            if 0 < k and n <= 10 and not gate_count_certificate(random_hwk(n, k, seed=n + k)).ok:
                bad.append((n, k, "random"))
    elapsed = time.perf_counter() - t0
    record(4, "total_gates <= 10(C-1)+k and internal = C-1, n<=12", not bad and elapsed < 10,
           f"{elapsed:.2f}s, violations={bad}")


def test_05_ancilla_bound():
    bad = []
    for n in range(1, 13):
        for k in range(n + 1):
            c = synthesize(dicke(n, k))
            used = sorted({q for g in c.gates for q in g.qubits if q >= n})
            m = max(0, n - 3)
            expect = list(range(n, n + m)) if 0 < k < n else []
            if c.layout.m != m or used != expect or (n <= 3 and used):
                bad.append((n, k))
    record(5, "ancillas = max(0, n-3), none for n<=3", not bad, f"violations={bad}")


def test_06_gate_set_and_decomposition():
    bad, worst = [], 0.0
    for n in range(1, 8):
        for k in range(n + 1):
            spec = random_hwk(n, k, seed=77 + n * k)
            c = synthesize(spec)
            d = decompose_circuit(c)
            diff = float(np.max(np.abs(run(c).amplitudes - run(d).amplitudes)))
            worst = max(worst, diff)
            if not set(gate_counts(c)) <= BASE_GATE_SET or not set(gate_counts(d)) <= DECOMPOSED_GATE_SET:
                bad.append((n, k, "gate set"))
            if diff > AMP_TOL:
                bad.append((n, k, diff))
    record(6, "gate set {X,CNOT,CCX,U3,CU3}; decomposed {X,CNOT,CCX,Ry,Rz,CRy,CRz}", not bad,
           f"worst decomposed diff {worst:.1e}")


def test_07_tree_fixture():
    tree = build_hamming_tree(4, 2)
    ok = (
        tree.root.full_string == "0011"
        and count_nodes(tree) == (6, 5)
        and leaves_preorder(tree) == ["1100", "1010", "0110", "1001", "0101", "0011"]
    )
    record(7, "Hamming tree n=4 k=2", ok, f"root {tree.root.full_string}, leaves {leaves_preorder(tree)}")


def test_08_decomposition_identity():
    rng = np.random.default_rng(8)
    worst = 0.0
    for theta, phi, lam in rng.uniform(-2 * math.pi, 2 * math.pi, size=(100, 3)):
        prod = np.eye(2, dtype=complex)
        for g in decompose_u3(theta, phi, lam):
            prod = gate_matrix(g) @ prod
        worst = max(worst, float(np.max(np.abs(prod - u3_matrix(theta, phi, lam)))))
    record(8, "Rz(phi) Ry(theta) Rz(lam) == U3, 100 triples", worst <= 1e-12, f"max entry err {worst:.1e}")


@pytest.mark.parametrize("n", [3, 4])
def test_09_peephole(n):
    spec = random_hwk(n, 1, seed=n)
    c = synthesize(spec)
    p = peephole_cancel_x(c)
    removed = gate_counts(c)["x"] - gate_counts(p)["x"]
    diff = float(np.max(np.abs(run(c).amplitudes - run(p).amplitudes)))
    record(9, f"peephole on n={n} k=1", removed >= 2 and diff <= 1e-12 and total_gates(p) == total_gates(c) - removed,
           f"removed {removed} X gates, output diff {diff:.1e}")


def test_10_linear_scaling():
    ratios = {}
    for n in range(6, 15):
        k = n // 2
        ratios[n] = total_gates(synthesize(dicke(n, k))) / math.comb(n, k)
    ok = all(3 <= r <= 10.5 for r in ratios.values())
    record(10, "gates/C(n,k) in [3, 10.5] along k=n//2, n=6..14", ok,
           ", ".join(f"n={n}:{r:.2f}" for n, r in ratios.items()))

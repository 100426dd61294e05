import itertools

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


def all_strings(n):
    """Every length-n bitstring, by brute force over integers."""
    return [format(i, f"0{n}b") for i in range(2**n)]


def brute_weight_k(n, k):
    return sorted(x for x in all_strings(n) if x.count("1") == k)


def dense_gate_unitary(gate, num_qubits):
    """Full 2^q x 2^q unitary of a gate built column by column from its local matrix."""
    from hwkprep.circuit import gate_matrix

    local = gate_matrix(gate)
    dim = 2**num_qubits
    u = np.zeros((dim, dim), dtype=complex)
    shifts = [num_qubits - 1 - q for q in gate.qubits]
    for col in range(dim):
        bits = [(col >> s) & 1 for s in shifts]
        local_col = int("".join(map(str, bits)), 2)
        for local_row in range(local.shape[0]):
            row = col
            for pos, s in enumerate(shifts):
                bit = (local_row >> (len(shifts) - 1 - pos)) & 1
                row = (row & ~(1 << s)) | (bit << s)
            u[row, col] += local[local_row, local_col]
    return u


def random_circuit(rng, num_qubits, length, kinds=("x", "cx", "ccx", "u3", "cu3")):
    from hwkprep.circuit import GATE_SHAPES, Gate

    kinds = [k for k in kinds if GATE_SHAPES[k][0] <= num_qubits]
    gates = []
    for _ in range(length):
        kind = kinds[rng.integers(len(kinds))]
        nq, npar = GATE_SHAPES[kind]
        qubits = tuple(int(q) for q in rng.choice(num_qubits, size=nq, replace=False))
        gates.append(Gate(kind, qubits, tuple(rng.uniform(-np.pi, np.pi, npar))))
    return gates


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

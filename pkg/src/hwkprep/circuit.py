"""Gate-level circuit IR, OpenQASM 2.0 I/O and small rewrite passes.

Rotation conventions (note ``Rz`` is *not* the half-angle gate)::

    U3(t, p, l) = [[cos(t/2),          -e^{il} sin(t/2)],
                   [e^{ip} sin(t/2),   e^{i(p+l)} cos(t/2)]]
    Ry(t)       = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
    Rz(t)       = diag(1, e^{it})

With these, ``U3(t, p, l) == Rz(p) @ Ry(t) @ Rz(l)`` holds exactly, so the
controlled versions decompose without any phase correction.

Qubits are flat indices. For an ``n``-qubit working register the layout is
``q_i -> i - 1`` and ancilla ``a_j -> n + (n - 1 - j)`` for ``3 <= j <= n - 1``.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

# kind -> (number of qubits, number of angle parameters)
GATE_SHAPES = {
    "x": (1, 0),
    "cx": (2, 0),
    "ccx": (3, 0),
    "u3": (1, 3),
    "cu3": (2, 3),
    "ry": (1, 1),
    "rz": (1, 1),
    "cry": (2, 1),
    "crz": (2, 1),
}
BASE_GATE_SET = frozenset({"x", "cx", "ccx", "u3", "cu3"})
DECOMPOSED_GATE_SET = frozenset({"x", "cx", "ccx", "ry", "rz", "cry", "crz"})


@dataclass(frozen=True)
class QubitLayout:
    n: int

    @property
    def m(self) -> int:
        return max(0, self.n - 3)

    @property
    def num_qubits(self) -> int:
        return self.n + self.m

    def q(self, i: int) -> int:
        """Flat index of working qubit ``q_i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"q_{i} does not exist for n={self.n}")
        return i - 1

    def a(self, j: int) -> int:
        """Flat index of ancilla ``a_j``, ``3 <= j <= n - 1``."""
        if not 3 <= j <= self.n - 1:
            raise IndexError(f"a_{j} does not exist for n={self.n}")
        return self.n + (self.n - 1 - j)

    def is_ancilla(self, index: int) -> bool:
        return self.n <= index < self.num_qubits

    def label(self, index: int) -> str:
        if 0 <= index < self.n:
            return f"q_{index + 1}"
        if self.is_ancilla(index):
            return f"a_{2 * self.n - 1 - index}"
        raise IndexError(index)

    @classmethod
    def from_num_qubits(cls, total: int) -> QubitLayout:
        """Invert ``num_qubits``; the map ``n -> n + max(0, n - 3)`` is injective."""
        if total <= 3:
            return cls(total)
        if (total + 3) % 2:
            raise ValueError(f"{total} qubits is not n + max(0, n - 3) for any n")
        return cls((total + 3) // 2)


@dataclass(frozen=True)
class Gate:
    """One gate. ``qubits`` lists controls first and the target last."""

    kind: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in GATE_SHAPES:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        nq, npar = GATE_SHAPES[self.kind]
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if len(self.qubits) != nq or len(self.params) != npar:
            raise ValueError(f"{self.kind} takes {nq} qubits and {npar} params, got {self}")
        if len(set(self.qubits)) != nq:
            raise ValueError(f"repeated qubit in {self}")
        if min(self.qubits) < 0:
            raise ValueError(f"negative qubit index in {self}")

    @property
    def target(self) -> int:
        return self.qubits[-1]

    @property
    def controls(self) -> tuple[int, ...]:
        return self.qubits[:-1]


def X(t: int) -> Gate:
    return Gate("x", (t,))


def CNOT(c: int, t: int) -> Gate:
    return Gate("cx", (c, t))


def CCX(c1: int, c2: int, t: int) -> Gate:
    return Gate("ccx", (c1, c2, t))


def U3(theta: float, phi: float, lam: float, t: int) -> Gate:
    return Gate("u3", (t,), (theta, phi, lam))


def CU3(c: int, theta: float, phi: float, lam: float, t: int) -> Gate:
    return Gate("cu3", (c, t), (theta, phi, lam))


def RY(theta: float, t: int) -> Gate:
    return Gate("ry", (t,), (theta,))


def RZ(theta: float, t: int) -> Gate:
    return Gate("rz", (t,), (theta,))


def CRY(c: int, theta: float, t: int) -> Gate:
    return Gate("cry", (c, t), (theta,))


def CRZ(c: int, theta: float, t: int) -> Gate:
    return Gate("crz", (c, t), (theta,))


@dataclass(frozen=True)
class Circuit:
    layout: QubitLayout
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if max(g.qubits) >= self.layout.num_qubits:
                raise ValueError(f"{g} addresses a qubit outside [0, {self.layout.num_qubits})")

    @property
    def num_qubits(self) -> int:
        return self.layout.num_qubits

    def __len__(self) -> int:
        return len(self.gates)

    def with_gates(self, gates) -> Circuit:
        return Circuit(self.layout, tuple(gates))


# --- matrices -------------------------------------------------------------

def u3_matrix(theta: float, phi: float, lam: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [
            [c, -np.exp(1j * lam) * s],
            [np.exp(1j * phi) * s, np.exp(1j * (phi + lam)) * c],
        ],
        dtype=complex,
    )


def ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz_matrix(theta: float) -> np.ndarray:
    return np.array([[1, 0], [0, np.exp(1j * theta)]], dtype=complex)


_X_MATRIX = np.array([[0, 1], [1, 0]], dtype=complex)


def target_matrix(g: Gate) -> np.ndarray:
    """The 2x2 matrix applied to the target when every control is 1."""
    base = g.kind.lstrip("c")
    if base == "x":
        return _X_MATRIX.copy()
    if base == "u3":
        return u3_matrix(*g.params)
    if base == "ry":
        return ry_matrix(*g.params)
    if base == "rz":
        return rz_matrix(*g.params)
    raise ValueError(g.kind)


def gate_matrix(g: Gate) -> np.ndarray:
    """Full unitary on the gate's own qubits, ordered as ``g.qubits``.

    The first listed qubit is the most significant bit of the local index.
    Controlled gates act as the identity unless all controls are 1.
    """
    u = target_matrix(g)
    dim = 2 ** len(g.qubits)
    full = np.eye(dim, dtype=complex)
    full[dim - 2 :, dim - 2 :] = u
    return full


def decompose_u3(theta: float, phi: float, lam: float, target: int = 0, control: int | None = None) -> list[Gate]:
    """``U3`` as ``Rz(lam)``, then ``Ry(theta)``, then ``Rz(phi)`` (application order)."""
    if control is None:
        return [RZ(lam, target), RY(theta, target), RZ(phi, target)]
    return [CRZ(control, lam, target), CRY(control, theta, target), CRZ(control, phi, target)]


def decompose_circuit(c: Circuit) -> Circuit:
    out: list[Gate] = []
    for g in c.gates:
        if g.kind == "u3":
            out.extend(decompose_u3(*g.params, target=g.target))
        elif g.kind == "cu3":
            out.extend(decompose_u3(*g.params, target=g.target, control=g.controls[0]))
        else:
            out.append(g)
    return c.with_gates(out)


# --- passes and metrics ---------------------------------------------------

def peephole_cancel_x(c: Circuit) -> Circuit:
    """Remove pairs of X gates on one wire with nothing else on that wire between them.

    A single pass with a per-wire stack reaches the fixed point, so the result
    is already irreducible.
    """
    out: list[Gate | None] = []
    last_on_wire: dict[int, list[int]] = {}
    for g in c.gates:
        if g.kind == "x":
            stack = last_on_wire.setdefault(g.target, [])
            if stack and out[stack[-1]] is not None and out[stack[-1]].kind == "x":
                out[stack.pop()] = None
                continue
        pos = len(out)
        out.append(g)
        for q in g.qubits:
            last_on_wire.setdefault(q, []).append(pos)
    return c.with_gates(g for g in out if g is not None)


def gate_counts(c: Circuit) -> Counter:
    return Counter(g.kind for g in c.gates)


def total_gates(c: Circuit) -> int:
    return len(c.gates)


def depth(c: Circuit) -> int:
    """ASAP layer count; a multi-qubit gate occupies all of its wires for one layer."""
    busy: dict[int, int] = {}
    d = 0
    for g in c.gates:
        layer = 1 + max(busy.get(q, 0) for q in g.qubits)
        for q in g.qubits:
            busy[q] = layer
        d = max(d, layer)
    return d


# --- OpenQASM 2.0 -----------------------------------------------------------

# Rz here is diag(1, e^{it}), which is qelib1's u1; its controlled form is cu1.
_QASM_NAMES = {"x": "x", "cx": "cx", "ccx": "ccx", "u3": "u3", "cu3": "cu3",
               "ry": "ry", "rz": "u1", "cry": "cry", "crz": "cu1"}
_QASM_KINDS = {v: k for k, v in _QASM_NAMES.items()}


def _fmt_angle(x: float) -> str:
    return format(x, ".17g")


def emit_qasm(c: Circuit) -> str:
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"// working qubits q[0..{c.layout.n - 1}], ancillas q[{c.layout.n}..{c.num_qubits - 1}]",
        f"qreg q[{c.num_qubits}];",
    ]
    for g in c.gates:
        name = _QASM_NAMES[g.kind]
        if g.params:
            name += "(" + ",".join(_fmt_angle(p) for p in g.params) + ")"
        lines.append(f"{name} " + ",".join(f"q[{q}]" for q in g.qubits) + ";")
    return "\n".join(lines) + "\n"


_STMT = re.compile(r"^([a-z0-9]+)\s*(?:\(([^)]*)\))?\s+(.+)$")
_QREF = re.compile(r"^q\[(\d+)\]$")


class QasmError(ValueError):
    pass


def parse_qasm(text: str) -> Circuit:
    """Read back the subset of OpenQASM 2.0 that :func:`emit_qasm` writes."""
    layout = None
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("//", 1)[0].strip()
        if not line:
            continue
        if not line.endswith(";"):
            raise QasmError(f"line {lineno}: missing ';'")
        line = line[:-1].strip()
        if line.startswith("OPENQASM"):
            if line.split()[1] != "2.0":
                raise QasmError(f"line {lineno}: unsupported version")
            continue
        if line.startswith("include"):
            continue
        if line.startswith("qreg"):
            mt = re.fullmatch(r"qreg\s+q\[(\d+)\]", line)
            if not mt or layout is not None:
                raise QasmError(f"line {lineno}: expected a single 'qreg q[N]'")
            layout = QubitLayout.from_num_qubits(int(mt.group(1)))
            continue
        mt = _STMT.match(line)
        if not mt or mt.group(1) not in _QASM_KINDS:
            raise QasmError(f"line {lineno}: unsupported statement {raw.strip()!r}")
        if layout is None:
            raise QasmError(f"line {lineno}: gate before qreg")
        params = tuple(float(p) for p in mt.group(2).split(",")) if mt.group(2) else ()
        qubits = []
        for ref in mt.group(3).split(","):
            qm = _QREF.match(ref.strip())
            if not qm:
                raise QasmError(f"line {lineno}: bad qubit reference {ref!r}")
            qubits.append(int(qm.group(1)))
        gates.append(Gate(_QASM_KINDS[mt.group(1)], tuple(qubits), params))
    if layout is None:
        raise QasmError("no qreg declaration")
    return Circuit(layout, tuple(gates))


def circuit_to_json(c: Circuit) -> dict:
    return {
        "n": c.layout.n,
        "num_qubits": c.num_qubits,
        "gates": [{"kind": g.kind, "qubits": list(g.qubits), "params": list(g.params)} for g in c.gates],
    }


def circuit_from_json(doc: dict) -> Circuit:
    layout = QubitLayout(int(doc["n"]))
    return Circuit(layout, tuple(Gate(g["kind"], tuple(g["qubits"]), tuple(g.get("params", ()))) for g in doc["gates"]))

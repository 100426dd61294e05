"""Circuit synthesis for fixed-Hamming-weight states by Hamming-tree traversal.

The circuit starts from ``|0^(n+m)>``, writes the root string ``0^(n-k) 1^k``
with X gates, then walks the Hamming tree in preorder. At each internal node
a (controlled) U3 on the node's pivot qubit ``q_(n-i)`` splits the amplitude
between the two children, and an X / CNOT-or-Toffoli / X group moves the
left child's 1 into place. Ancilla ``a_j`` flags "the suffix ``q_j..q_n``
matches the current node's suffix", so only the node's own basis state is
touched. Every ancilla is uncomputed on the way back up.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .circuit import CCX, CNOT, CU3, U3, X, Circuit, Gate, QubitLayout, total_gates
from .state import HWkStateSpec, validate
from .tree import HammingNode, HammingTree, build_hamming_tree, count_nodes

WeightTable = dict  # HammingNode -> float (subtree probability mass)


def subtree_weights(tree: HammingTree, spec: HWkStateSpec) -> WeightTable:
    """Probability mass below every node, in one post-order pass."""
    if (tree.n, tree.k) != (spec.n, spec.k):
        raise ValueError("tree and spec disagree on (n, k)")
    weights: WeightTable = {}
    for v in reversed(list(tree.preorder())):
        if v.is_leaf:
            weights[v] = abs(spec.amplitude(v.full_string)) ** 2
        else:
            weights[v] = weights[v.left] + weights[v.right]
    return weights


def _arg(z: complex) -> float:
    return cmath.phase(z) if z != 0 else 0.0


@dataclass(frozen=True)
class BranchParams:
    p0: complex
    p1: complex
    theta: float
    phi: float
    lam: float

    @property
    def norm(self) -> float:
        return math.hypot(abs(self.p0), abs(self.p1))


def params_from_amplitudes(p0: complex, p1: complex) -> BranchParams:
    """Angles with ``U3(theta, phi, lam)|1> == (p0|0> + p1|1>) / N``.

    From the U3 matrix the second column is
    ``(-e^{i lam} sin(theta/2), e^{i(phi+lam)} cos(theta/2))``. ``theta`` is
    ``2 arccos(|p1| / N)``, evaluated as ``2 atan2(|p0|, |p1|)``: arccos loses
    every digit of a small ``|p0|`` once the ratio rounds to 1.
    """
    norm = math.hypot(abs(p0), abs(p1))
    if norm == 0.0:
        return BranchParams(p0, p1, 0.0, 0.0, 0.0)
    theta = 2.0 * math.atan2(abs(p0), abs(p1))
    lam = _arg(p0) + math.pi
    phi = _arg(p1) - _arg(p0) - math.pi
    return BranchParams(complex(p0), complex(p1), theta, phi, lam)


def branch_params(node: HammingNode, weights: WeightTable, spec: HWkStateSpec) -> BranchParams:
    if node.is_leaf:
        raise ValueError("branch parameters are only defined for internal nodes")

    def child_amp(child: HammingNode) -> complex:
        if child.is_leaf:
            return spec.amplitude(child.full_string)
        return complex(math.sqrt(weights[child]))

    return params_from_amplitudes(child_amp(node.left), child_amp(node.right))


# Called as on_enter(node, control_qubit_or_None, gates_emitted_so_far).
EnterHook = Callable[[HammingNode, "int | None", int], None]


def synthesize(
    spec: HWkStateSpec,
    prune_zero: bool = False,
    on_enter: EnterHook | None = None,
    check: bool = True,
) -> Circuit:
    """Build a circuit mapping ``|0^(n+m)>`` to ``sum_x alpha_x |x> |0^m>``.

    ``prune_zero`` skips zero-weight subtrees entirely (fewer gates, same state).
    """
    if check:
        spec = validate(spec)
    n, k = spec.n, spec.k
    layout = QubitLayout(n)
    q, a = layout.q, layout.a
    tree = build_hamming_tree(n, k)
    weights = subtree_weights(tree, spec)
    gates: list[Gate] = [X(q(i)) for i in range(n - k + 1, n + 1)]

    def live(child: HammingNode) -> bool:
        return not child.is_leaf and not (prune_zero and weights[child] == 0.0)

    def visit(v: HammingNode) -> None:
        i, ones = v.level, v.ones
        bp = branch_params(v, weights, spec)
        pivot = q(n - i)
        skip_split = prune_zero and weights[v.left] == 0.0
        if i == 0:
            if on_enter:
                on_enter(v, None, len(gates))
            gates.append(U3(bp.theta, bp.phi, bp.lam, pivot))
            if not skip_split:
                gates.extend([X(pivot), CNOT(pivot, q(n - k)), X(pivot)])
            if live(v.left):
                gates.append(X(pivot))
                visit(v.left)
                gates.append(X(pivot))
            if live(v.right):
                visit(v.right)
            return

        c = q(n) if i == 1 else a(n - i + 1)
        if on_enter:
            on_enter(v, c, len(gates))
        gates.append(CU3(c, bp.theta, bp.phi, bp.lam, pivot))
        if not skip_split:
            gates.extend([X(pivot), CCX(c, pivot, q(n - i - ones)), X(pivot)])
        if live(v.left):
            flag = a(n - i)
            gates.extend([X(pivot), CCX(c, pivot, flag)])
            visit(v.left)
            gates.extend([CCX(c, pivot, flag), X(pivot)])
        if live(v.right):
            flag = a(n - i)
            gates.append(CCX(c, pivot, flag))
            visit(v.right)
            gates.append(CCX(c, pivot, flag))

    if not tree.root.is_leaf:
        visit(tree.root)
    else:
        gates = _single_string(spec, layout, gates)
    return Circuit(layout, tuple(gates))


def _single_string(spec: HWkStateSpec, layout: QubitLayout, gates: list[Gate]) -> list[Gate]:
    # One basis state: only its phase is left to fix. U3(pi, g, 0)|0> = e^{ig}|1>.
    gamma = _arg(spec.amplitude("0" * (spec.n - spec.k) + "1" * spec.k))
    if gamma == 0.0:
        return gates
    if spec.k:
        return gates[:-1] + [U3(math.pi, gamma, 0.0, layout.q(spec.n))]
    # |0> cannot pick up a phase from U3 alone, so flip there and back.
    return [U3(math.pi, gamma, 0.0, layout.q(1)), X(layout.q(1))]


@dataclass(frozen=True)
class GateCountCertificate:
    n: int
    k: int
    internal_nodes: int
    total_gates: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.total_gates <= self.bound


def gate_count_certificate(spec: HWkStateSpec, circuit: Circuit | None = None) -> GateCountCertificate:
    """Check the emitted size against ``10 * (C(n, k) - 1) + k``.

    Per internal node: 4 gates, plus 4 for an internal left child and 2 for an
    internal right child; the initial string costs ``k`` X gates.
    """
    if circuit is None:
        circuit = synthesize(spec)
    _, internal = count_nodes(build_hamming_tree(spec.n, spec.k))
    return GateCountCertificate(
        n=spec.n,
        k=spec.k,
        internal_nodes=internal,
        total_gates=total_gates(circuit),
        bound=10 * (math.comb(spec.n, spec.k) - 1) + spec.k,
    )

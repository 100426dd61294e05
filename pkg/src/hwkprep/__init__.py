"""Circuits for fixed-Hamming-weight quantum states, with a statevector checker."""
from .circuit import Circuit, Gate, QubitLayout, decompose_circuit, emit_qasm, parse_qasm, peephole_cancel_x
from .sim import compare_to_spec, run
from .state import HWkStateSpec, dicke, random_hwk, validate
from .synth import gate_count_certificate, synthesize
from .tree import build_hamming_tree

__all__ = [
    "Circuit",
    "Gate",
    "HWkStateSpec",
    "QubitLayout",
    "build_hamming_tree",
    "compare_to_spec",
    "decompose_circuit",
    "dicke",
    "emit_qasm",
    "gate_count_certificate",
    "parse_qasm",
    "peephole_cancel_x",
    "random_hwk",
    "run",
    "synthesize",
    "validate",
]

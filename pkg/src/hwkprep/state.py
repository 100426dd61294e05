"""Target states supported on a single Hamming-weight sector.

Bitstrings are plain ``str`` objects over ``"01"``. The leftmost character is
``x_1`` (qubit ``q_1``); the rightmost is ``x_n``. A suffix ``s`` selects the
strings whose last ``len(s)`` characters equal ``s``.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

import numpy as np

NORM_TOL = 1e-9
MAX_DRAW_ATTEMPTS = 16


class SpecError(ValueError):
    """Base class for malformed state specifications."""


class WrongWeight(SpecError):
    pass


class WrongLength(SpecError):
    pass


class NotNormalized(SpecError):
    pass


class DuplicateKey(SpecError):
    pass


class InvalidK(SpecError):
    pass


class DegenerateDraw(SpecError):
    pass


# Alias used by the synthesizer and CLI for "anything validate() rejects".
InvalidSpec = SpecError


@dataclass(frozen=True)
class HWkStateSpec:
    """An ``n``-qubit state with support on weight-``k`` basis states only.

    ``amplitudes`` maps bitstrings to complex amplitudes; absent keys are zero.
    Construction does not validate; call :func:`validate`.
    """

    n: int
    k: int
    amplitudes: Mapping[str, complex] = field(default_factory=dict)

    def __post_init__(self):
        amps = {str(key): complex(val) for key, val in dict(self.amplitudes).items()}
        object.__setattr__(self, "amplitudes", MappingProxyType(amps))

    @classmethod
    def from_pairs(cls, n: int, k: int, pairs: Iterable[tuple[str, complex]]) -> HWkStateSpec:
        amps: dict[str, complex] = {}
        for key, val in pairs:
            if key in amps:
                raise DuplicateKey(f"amplitude for {key!r} given more than once")
            amps[key] = complex(val)
        return cls(n, k, amps)

    def amplitude(self, x: str) -> complex:
        return self.amplitudes.get(x, 0j)

    def norm_squared(self) -> float:
        return math.fsum(abs(a) ** 2 for a in self.amplitudes.values())

    @property
    def num_ancillas(self) -> int:
        return max(0, self.n - 3)


def hamming_weight(x: str) -> int:
    return x.count("1")


def weight_k_strings(n: int, k: int) -> Iterator[str]:
    """All length-``n`` strings with exactly ``k`` ones, in lexicographic order."""
    for ones in itertools.combinations(range(n), k):
        bits = ["0"] * n
        for pos in ones:
            bits[pos] = "1"
        yield "".join(bits)


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise InvalidK(f"n must be positive, got {n}")
    if not 0 <= k <= n:
        raise InvalidK(f"k={k} outside [0, {n}]")


def validate(spec: HWkStateSpec, renormalize: bool = False) -> HWkStateSpec:
    """Check every spec invariant and return the spec (renormalized on request).

    Tiny amplitudes are kept as written.
    """
    _check_nk(spec.n, spec.k)
    for key in spec.amplitudes:
        if len(key) != spec.n:
            raise WrongLength(f"key {key!r} has length {len(key)}, expected {spec.n}")
        if set(key) - {"0", "1"}:
            raise WrongLength(f"key {key!r} is not a bitstring")
        if hamming_weight(key) != spec.k:
            raise WrongWeight(f"key {key!r} has Hamming weight {hamming_weight(key)}, expected {spec.k}")
    norm2 = spec.norm_squared()
    if renormalize:
        if norm2 == 0.0:
            raise NotNormalized("cannot renormalize the zero vector")
        scale = 1.0 / math.sqrt(norm2)
        return HWkStateSpec(spec.n, spec.k, {x: a * scale for x, a in spec.amplitudes.items()})
    if abs(norm2 - 1.0) > NORM_TOL:
        raise NotNormalized(f"sum of |amplitude|^2 is {norm2!r}, expected 1")
    return spec


def dicke(n: int, k: int) -> HWkStateSpec:
    """Uniform superposition over all weight-``k`` strings."""
    _check_nk(n, k)
    amp = 1.0 / math.sqrt(math.comb(n, k))
    return HWkStateSpec(n, k, {x: amp for x in weight_k_strings(n, k)})


def random_hwk(n: int, k: int, seed: int, sparsity: float = 0.0, real: bool = False) -> HWkStateSpec:
    """Seeded random state on the weight-``k`` sector.

    Real and imaginary parts are independent standard normals. With
    ``sparsity`` in ``[0, 1)``, that fraction of entries (rounded, at least one
    entry survives) is set to exactly zero before normalizing.
    """
    _check_nk(n, k)
    if not 0.0 <= sparsity < 1.0:
        raise ValueError(f"sparsity must lie in [0, 1), got {sparsity}")
    keys = list(weight_k_strings(n, k))
    rng = np.random.default_rng(seed)
    for _ in range(MAX_DRAW_ATTEMPTS):
        vals = rng.standard_normal(len(keys))
        if not real:
            vals = vals + 1j * rng.standard_normal(len(keys))
        n_zero = min(int(round(sparsity * len(keys))), len(keys) - 1)
        if n_zero:
            vals[rng.choice(len(keys), size=n_zero, replace=False)] = 0.0
        norm = float(np.linalg.norm(vals))
        if norm > 0.0:
            break
    else:
        raise DegenerateDraw(f"all draws were zero after {MAX_DRAW_ATTEMPTS} attempts")
    vals = vals / norm
    return HWkStateSpec(n, k, {x: complex(v) for x, v in zip(keys, vals)})


def suffix_weight(spec: HWkStateSpec, s: str) -> float:
    """Total probability of the strings ending in ``s`` (direct summation)."""
    if len(s) > spec.n:
        return 0.0
    return math.fsum(abs(a) ** 2 for x, a in spec.amplitudes.items() if x.endswith(s))


def to_vector(spec: HWkStateSpec, num_ancillas: int = 0) -> np.ndarray:
    """Dense amplitudes of ``spec`` tensored with ``|0...0>`` ancillas.

    Qubit ``q_1`` is the most significant bit of the basis index.
    """
    vec = np.zeros(2 ** (spec.n + num_ancillas), dtype=complex)
    for x, a in spec.amplitudes.items():
        vec[int(x, 2) << num_ancillas] = a
    return vec


def to_json(spec: HWkStateSpec) -> dict:
    return {
        "n": spec.n,
        "k": spec.k,
        "amplitudes": {x: [a.real, a.imag] for x, a in spec.amplitudes.items()},
    }


def from_json(doc: Mapping | list) -> HWkStateSpec:
    """Build a spec from the JSON document format.

    ``doc["amplitudes"]`` may be a mapping or a list of ``(key, value)`` pairs;
    the latter is what :func:`loads_spec` produces so duplicate keys survive
    long enough to be reported.
    """
    try:
        n, k, amps = int(doc["n"]), int(doc["k"]), doc["amplitudes"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"malformed spec document: {exc}") from exc
    pairs = amps.items() if isinstance(amps, Mapping) else amps

    def _value(v) -> complex:
        if isinstance(v, (list, tuple)) and len(v) == 2:
            return complex(float(v[0]), float(v[1]))
        if isinstance(v, (int, float)):
            return complex(v)
        raise SpecError(f"amplitude must be [re, im], got {v!r}")

    return HWkStateSpec.from_pairs(n, k, ((str(x), _value(v)) for x, v in pairs))


def loads_spec(text: str) -> HWkStateSpec:
    def hook(pairs):
        # Keep the amplitude object as pairs so repeated keys are detectable.
        keys = [key for key, _ in pairs]
        if "amplitudes" in keys or "n" in keys:
            return dict(pairs)
        return pairs

    try:
        doc = json.loads(text, object_pairs_hook=hook)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SpecError("spec document must be a JSON object")
    return from_json(doc)


def load_spec(path: str | Path) -> HWkStateSpec:
    return loads_spec(Path(path).read_text())


def dumps_spec(spec: HWkStateSpec) -> str:
    return json.dumps(to_json(spec), indent=2, sort_keys=False)


def save_spec(spec: HWkStateSpec, path: str | Path) -> None:
    Path(path).write_text(dumps_spec(spec) + "\n")

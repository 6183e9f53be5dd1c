"""Multi-qubit pure states, single-qubit factors, and projective points.

Amplitude indexing: a state on ``m`` qubits stores ``2**m`` complex
amplitudes ordered so that index ``x`` encodes the bitstring
``(x_m, ..., x_1)`` with ``x = x_m 2**(m-1) + ... + x_1 2**0``; qubit ``m``
is the most significant bit. Sequences of per-qubit factors follow the same
ket order, so the first factor in a sequence belongs to the most significant
qubit.

All values are immutable after construction and every operation is a pure
function of its inputs; they are safe to share between threads.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyFactorListError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NonFiniteAmplitudeError,
    SchemaError,
    UnknownNameError,
    ZeroStateError,
)

__all__ = [
    "MultiQubitState",
    "QubitFactor",
    "ProjectivePoint",
    "make_state",
    "conjugate_state",
    "segre_embed",
    "inner_product",
    "named_state",
    "index_bits",
    "bits_to_index",
    "state_to_dict",
    "state_from_dict",
    "point_to_dict",
    "point_from_dict",
    "parse_complex_pair",
]


def _complex_vector(values, *, what: str) -> np.ndarray:
    """Copy ``values`` into a finite, 1-d complex128 array."""
    arr = np.array(values, dtype=complex, copy=True)
    if arr.ndim != 1:
        raise LengthMismatchError(f"{what} must be a flat sequence, got shape {arr.shape}")
    if not (np.isfinite(arr.real).all() and np.isfinite(arr.imag).all()):
        raise NonFiniteAmplitudeError(f"{what} contain NaN or infinite entries")
    return arr


@dataclass(frozen=True)
class MultiQubitState:
    """A pure state on ``num_qubits`` qubits as ``2**num_qubits`` amplitudes.

    The vector need not be normalized (the state is a projective object),
    but it must be finite and not identically zero.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if not isinstance(self.num_qubits, (int, np.integer)) or self.num_qubits < 1:
            raise LengthMismatchError("num_qubits must be a positive integer")
        amps = _complex_vector(self.amplitudes, what="amplitudes")
        expected = 1 << int(self.num_qubits)
        if amps.size != expected:
            raise LengthMismatchError(f"expected {expected} amplitudes, found {amps.size}")
        if not amps.any():
            raise ZeroStateError("the zero vector does not define a state")
        amps.setflags(write=False)
        object.__setattr__(self, "num_qubits", int(self.num_qubits))
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "MultiQubitState":
        """The same projective state scaled to unit norm."""
        return MultiQubitState(self.num_qubits, self.amplitudes / self.norm)


@dataclass(frozen=True)
class QubitFactor:
    """Homogeneous coordinates ``[a0 : a1]`` of a single qubit, a point of P^1."""

    a0: complex
    a1: complex

    def __post_init__(self) -> None:
        a0, a1 = complex(self.a0), complex(self.a1)
        if not (cmath.isfinite(a0) and cmath.isfinite(a1)):
            raise NonFiniteAmplitudeError("factor components must be finite")
        if a0 == 0 and a1 == 0:
            raise ZeroStateError("(0, 0) does not define a point of P^1")
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "a1", a1)

    def as_array(self) -> np.ndarray:
        return np.array([self.a0, self.a1])

    def normalized(self) -> "QubitFactor":
        scale = abs(self.a0) ** 2 + abs(self.a1) ** 2
        scale = scale ** 0.5
        return QubitFactor(self.a0 / scale, self.a1 / scale)


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of P^(n-1) as n >= 2 homogeneous complex coordinates."""

    coords: np.ndarray

    def __post_init__(self) -> None:
        coords = _complex_vector(self.coords, what="coordinates")
        if coords.size < 2:
            raise LengthMismatchError("a projective point needs at least 2 coordinates")
        if not coords.any():
            raise ZeroStateError("the zero vector does not define a projective point")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)


def index_bits(x: int, num_qubits: int) -> tuple[int, ...]:
    """Bits ``(x_m, ..., x_1)`` of amplitude index ``x``, most significant first."""
    if not 0 <= x < (1 << num_qubits):
        raise IndexOutOfRangeError(f"index {x} outside [0, 2**{num_qubits})")
    return tuple((x >> (num_qubits - 1 - p)) & 1 for p in range(num_qubits))


def bits_to_index(bits: Sequence[int]) -> int:
    """Inverse of :func:`index_bits`."""
    out = 0
    for b in bits:
        if b not in (0, 1):
            raise IndexOutOfRangeError(f"bit value {b!r} is not 0 or 1")
        out = (out << 1) | int(b)
    return out


def make_state(num_qubits: int, amplitudes, normalize: bool = True) -> MultiQubitState:
    """Validate and build a state; scale to unit norm when ``normalize``."""
    state = MultiQubitState(num_qubits, amplitudes)
    return state.normalized() if normalize else state


def conjugate_state(state: MultiQubitState) -> MultiQubitState:
    """Complex-conjugate every amplitude. An involution; preserves the norm."""
    return MultiQubitState(state.num_qubits, np.conj(state.amplitudes))


def segre_embed(factors: Sequence[QubitFactor]) -> MultiQubitState:
    """Tensor (Segre) product of single-qubit factors, in ket order.

    The amplitude at index ``(x_m ... x_1)`` is the product over qubits of
    the chosen factor component, so the output is a fully separable state.
    The result is not normalized: scaling any factor by ``c`` scales every
    amplitude by ``c``.
    """
    factors = list(factors)
    if not factors:
        raise EmptyFactorListError("need at least one factor")
    amplitudes = reduce(np.kron, (f.as_array() for f in factors))
    return MultiQubitState(len(factors), amplitudes)


def inner_product(a: MultiQubitState, b: MultiQubitState) -> complex:
    """Hermitian inner product ``sum_x conj(a_x) b_x``."""
    if a.num_qubits != b.num_qubits:
        raise DimensionMismatchError(
            f"states act on {a.num_qubits} and {b.num_qubits} qubits"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))


_GHZ_NAME = re.compile(r"^ghz(\d+)$")


def named_state(name: str) -> MultiQubitState:
    """Fixture states by name: ``bell``, ``ghz<m>`` (m >= 2), ``w3``."""
    key = name.strip().lower()
    if key == "bell":
        key = "ghz2"
    if key == "w3":
        amps = np.zeros(8, dtype=complex)
        amps[[1, 2, 4]] = 1.0
        return make_state(3, amps, normalize=True)
    match = _GHZ_NAME.match(key)
    if match:
        m = int(match.group(1))
        if m < 2:
            raise UnknownNameError("ghz requires at least 2 qubits")
        amps = np.zeros(1 << m, dtype=complex)
        amps[0] = amps[-1] = 1.0
        return make_state(m, amps, normalize=True)
    raise UnknownNameError(f"unknown state name {name!r}")


# ---------------------------------------------------------------------------
# JSON schemas
#
# State files:   {"qubits": m, "amplitudes": [[re, im], ...], "normalize": bool?}
# Point files:   {"coords": [[re, im], ...]}
# ---------------------------------------------------------------------------


def parse_complex_pair(value, field: str) -> complex:
    """Read one ``[re, im]`` pair, naming ``field`` in error messages."""
    ok = (
        isinstance(value, (list, tuple))
        and len(value) == 2
        and all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in value)
    )
    if not ok:
        raise SchemaError(f'"{field}" must be a [re, im] number pair')
    return complex(value[0], value[1])


def state_to_dict(state: MultiQubitState) -> dict:
    return {
        "qubits": state.num_qubits,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }


def state_from_dict(data) -> MultiQubitState:
    if not isinstance(data, dict):
        raise SchemaError("state JSON must be an object")
    if "qubits" not in data:
        raise SchemaError('missing field "qubits"')
    qubits = data["qubits"]
    if not isinstance(qubits, int) or isinstance(qubits, bool) or qubits < 1:
        raise SchemaError('"qubits" must be a positive integer')
    if "amplitudes" not in data:
        raise SchemaError('missing field "amplitudes"')
    raw = data["amplitudes"]
    if not isinstance(raw, list):
        raise SchemaError('"amplitudes" must be an array of [re, im] pairs')
    amps = [parse_complex_pair(v, f"amplitudes[{i}]") for i, v in enumerate(raw)]
    normalize = data.get("normalize", True)
    if not isinstance(normalize, bool):
        raise SchemaError('"normalize" must be a boolean')
    return make_state(qubits, amps, normalize=normalize)


def point_to_dict(point: ProjectivePoint) -> dict:
    return {"coords": [[float(c.real), float(c.imag)] for c in point.coords]}


def point_from_dict(data) -> ProjectivePoint:
    if not isinstance(data, dict) or "coords" not in data:
        raise SchemaError('point JSON must be an object with a "coords" field')
    raw = data["coords"]
    if not isinstance(raw, list):
        raise SchemaError('"coords" must be an array of [re, im] pairs')
    coords = [parse_complex_pair(v, f"coords[{i}]") for i, v in enumerate(raw)]
    return ProjectivePoint(np.array(coords, dtype=complex))

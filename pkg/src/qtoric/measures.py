"""Entanglement measures and polynomial invariants for small qubit systems.

The spin-flip family: with ``~s`` the spin-flip of a state (the y-Pauli on
every qubit after complex conjugation), the concurrence of two qubits and the
m-tangle of an even number of qubits are both ``|<s|~s>|^2``.

Three qubits: the tangle is four times the absolute hyperdeterminant of the
2x2x2 amplitude tensor, assembled from the three sums over complementary
index pairs.

Four qubits: the degree-2 invariant ``H`` pairs each amplitude with its
bitwise complement, signed by index parity; ``I1`` builds the same quantity
from the symplectic pairing ``g = J (x) J`` on the four amplitude blocks and
equals ``H / 2`` identically. An independent epsilon-contraction over all
2^16 index assignments gives the four-tangle a third route; under these
definitions both tangle routes equal ``4|H|^2``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import LengthMismatchError, OddQubitCountError, WrongQubitCountError
from .states import MultiQubitState, inner_product

__all__ = [
    "J",
    "G",
    "FourQubitVectors",
    "Tau4IdentityReport",
    "spin_flip",
    "concurrence",
    "m_tangle",
    "three_tangle",
    "invariant_H",
    "bilinear_g",
    "invariant_I1",
    "four_qubit_vectors",
    "tau4_epsilon_oracle",
    "check_tau4_identities",
]

J = np.array([[0, 1], [-1, 0]], dtype=np.int64)
"""Symplectic unit: J @ J = -I, and M J M^T = J for M in SL(2, C)."""
J.setflags(write=False)

G = np.kron(J, J)
"""The 4x4 pairing matrix of :func:`bilinear_g`."""
G.setflags(write=False)


@lru_cache(maxsize=None)
def _flip_coefficients(m: int) -> np.ndarray:
    # Amplitude x of the spin-flip picks up prod_j sigma_y[x_j, 1-x_j],
    # which is (-i)^m times the parity of x.
    signs = np.array([(-1.0) ** x.bit_count() for x in range(1 << m)])
    coefficients = ((-1j) ** m) * signs
    coefficients.setflags(write=False)
    return coefficients


def spin_flip(state: MultiQubitState) -> MultiQubitState:
    """Apply the y-Pauli to every qubit of the conjugated state.

    Componentwise the amplitude at x becomes ``(-i)^m (-1)^parity(x)`` times
    the conjugate amplitude at the bitwise complement of x; the norm is
    preserved.
    """
    coefficients = _flip_coefficients(state.num_qubits)
    return MultiQubitState(state.num_qubits, coefficients * np.conj(state.amplitudes[::-1]))


def m_tangle(state: MultiQubitState) -> float:
    """``|<s|~s>|^2`` for an even number of qubits, on the normalized state."""
    if state.num_qubits % 2:
        raise OddQubitCountError(
            f"the m-tangle is defined for even qubit counts, got {state.num_qubits}"
        )
    unit = state.normalized()
    return float(abs(inner_product(unit, spin_flip(unit))) ** 2)


def concurrence(state: MultiQubitState) -> float:
    """Two-qubit concurrence ``|<s|~s>|^2``; 1 on Bell states, 0 on products."""
    if state.num_qubits != 2:
        raise WrongQubitCountError(f"concurrence needs 2 qubits, got {state.num_qubits}")
    return m_tangle(state)


def _hyperdet3(a: np.ndarray) -> complex:
    # The three sums run over complementary index pairs of the 2x2x2 tensor:
    # squares of the four pair products, the six products of two distinct
    # pairs, and the two odd/even four-cycles.
    d1 = (
        a[0] ** 2 * a[7] ** 2
        + a[1] ** 2 * a[6] ** 2
        + a[2] ** 2 * a[5] ** 2
        + a[4] ** 2 * a[3] ** 2
    )
    d2 = (
        a[0] * a[7] * a[1] * a[6]
        + a[0] * a[7] * a[2] * a[5]
        + a[0] * a[7] * a[4] * a[3]
        + a[1] * a[6] * a[2] * a[5]
        + a[1] * a[6] * a[4] * a[3]
        + a[2] * a[5] * a[4] * a[3]
    )
    d4 = a[0] * a[6] * a[5] * a[3] + a[7] * a[1] * a[2] * a[4]
    return complex(d1 - 2 * d2 + 4 * d4)


def three_tangle(state: MultiQubitState) -> float:
    """Residual three-way entanglement: ``4 |d1 - 2 d2 + 4 d4|``.

    1 on the GHZ state, 0 on the W state and on every product state. The
    absolute value makes the complex-valued hyperdeterminant a measure.
    """
    if state.num_qubits != 3:
        raise WrongQubitCountError(f"the three-tangle needs 3 qubits, got {state.num_qubits}")
    return float(4.0 * abs(_hyperdet3(state.normalized().amplitudes)))


_H_SIGNS = np.array([1.0, -1.0, -1.0, 1.0, -1.0, 1.0, 1.0, -1.0])
_H_SIGNS.setflags(write=False)


def invariant_H(state: MultiQubitState) -> complex:
    """Degree-2 four-qubit invariant.

    ``H = a0 a15 - a1 a14 - a2 a13 + a3 a12 - a4 a11 + a5 a10 + a6 a9 - a7 a8``:
    the term pairing x with its complement carries sign (-1)^parity(x).
    Computed on the amplitudes as given (no normalization), so it is exactly
    invariant under SL(2, C) maps on each qubit.
    """
    if state.num_qubits != 4:
        raise WrongQubitCountError(f"H needs 4 qubits, got {state.num_qubits}")
    a = state.amplitudes
    return complex(np.sum(_H_SIGNS * a[:8] * a[:7:-1]))


def bilinear_g(u, v) -> complex:
    """The pairing ``g(u, v) = u0 v3 - u1 v2 - u2 v1 + u3 v0`` with g = J (x) J."""
    u = np.asarray(u, dtype=complex).reshape(-1)
    v = np.asarray(v, dtype=complex).reshape(-1)
    if u.size != 4 or v.size != 4:
        raise LengthMismatchError("the bilinear form takes two length-4 vectors")
    return complex(u[0] * v[3] - u[1] * v[2] - u[2] * v[1] + u[3] * v[0])


class FourQubitVectors(NamedTuple):
    """The four consecutive length-4 blocks of a 4-qubit amplitude vector."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray


def four_qubit_vectors(state: MultiQubitState) -> FourQubitVectors:
    if state.num_qubits != 4:
        raise WrongQubitCountError(f"block slicing needs 4 qubits, got {state.num_qubits}")
    amps = state.amplitudes
    return FourQubitVectors(amps[0:4], amps[4:8], amps[8:12], amps[12:16])


def invariant_I1(state: MultiQubitState) -> complex:
    """First SLOCC invariant ``(g(A, D) - g(B, C)) / 2``; equals H / 2."""
    blocks = four_qubit_vectors(state)
    return 0.5 * (bilinear_g(blocks.a, blocks.d) - bilinear_g(blocks.b, blocks.c))


def _bits4(x: int) -> tuple[int, int, int, int]:
    return (x >> 3) & 1, (x >> 2) & 1, (x >> 1) & 1, x & 1


@lru_cache(maxsize=None)
def _epsilon_tensor() -> np.ndarray:
    # Coefficient of a_k a_l a_m a_n in the four-tangle contraction, with
    # eps[0][1] = +1. Built once by direct enumeration of all 2^16 entries.
    eps = ((0.0, 1.0), (-1.0, 0.0))
    tensor = np.zeros((16, 16, 16, 16))
    for k, l, mu, nu in itertools.product(range(16), repeat=4):
        k4, k3, k2, k1 = _bits4(k)
        l4, l3, l2, l1 = _bits4(l)
        m4, m3, m2, m1 = _bits4(mu)
        n4, n3, n2, n1 = _bits4(nu)
        tensor[k, l, mu, nu] = (
            eps[k4][l4] * eps[k3][l3] * eps[k2][l2]
            * eps[m4][n4] * eps[m3][n3] * eps[m2][n2]
            * eps[k1][m1] * eps[l1][n1]
        )
    tensor.setflags(write=False)
    return tensor


def _tau4_contraction(amplitudes: np.ndarray) -> complex:
    # Full 2^16-term contraction; einsum keeps the reduction order fixed, so
    # repeated evaluations are bit-identical. Equals 2 H^2 as a complex number.
    return complex(
        np.einsum("klmn,k,l,m,n->", _epsilon_tensor(), *([amplitudes] * 4))
    )


def tau4_epsilon_oracle(state: MultiQubitState) -> float:
    """Four-tangle by brute-force epsilon contraction over all 2^16 terms.

    Returns ``2 |sum|`` on the normalized amplitudes. Agrees with the
    spin-flip m-tangle and with ``4|H|^2``.
    """
    if state.num_qubits != 4:
        raise WrongQubitCountError(f"the four-tangle needs 4 qubits, got {state.num_qubits}")
    return float(2.0 * abs(_tau4_contraction(state.normalized().amplitudes)))


def _ratio(numerator: float, denominator: float) -> float:
    return numerator / denominator if denominator != 0.0 else math.nan


@dataclass(frozen=True)
class Tau4IdentityReport:
    """All four-tangle routes on one normalized state, with pairwise ratios.

    ``tau4_spinflip`` and ``tau4_epsilon`` agree with ``four_abs_h_sq``; the
    alternative ``|H|^2`` normalization is smaller by the constant factor 4,
    which ``h_sq_factor`` exposes.
    """

    tau4_spinflip: float
    tau4_epsilon: float
    h: complex
    i1: complex
    abs_h_sq: float
    four_abs_h_sq: float
    four_abs_i1_sq: float
    ratios: dict[str, float]
    note: str

    @property
    def h_sq_factor(self) -> float:
        return self.ratios["tau4_spinflip/abs_h_sq"]

    def to_dict(self) -> dict:
        return {
            "tau4_spinflip": self.tau4_spinflip,
            "tau4_epsilon": self.tau4_epsilon,
            "H": [self.h.real, self.h.imag],
            "I1": [self.i1.real, self.i1.imag],
            "abs_H_sq": self.abs_h_sq,
            "four_abs_H_sq": self.four_abs_h_sq,
            "four_abs_I1_sq": self.four_abs_i1_sq,
            "ratios": dict(self.ratios),
            "note": self.note,
        }


_TAU4_NOTE = (
    "tau4_spinflip and tau4_epsilon both equal 4|H|^2 (= 16|I1|^2); "
    "the normalization tau4 = |H|^2 is off by the constant factor 4 "
    "under these definitions."
)


def check_tau4_identities(state: MultiQubitState) -> Tau4IdentityReport:
    """Evaluate every four-tangle route on one state and report the ratios."""
    if state.num_qubits != 4:
        raise WrongQubitCountError(f"the identity report needs 4 qubits, got {state.num_qubits}")
    unit = state.normalized()
    tau_flip = m_tangle(unit)
    tau_eps = tau4_epsilon_oracle(unit)
    h = invariant_H(unit)
    i1 = invariant_I1(unit)
    abs_h_sq = abs(h) ** 2
    four_abs_i1_sq = 4.0 * abs(i1) ** 2
    ratios = {
        "tau4_spinflip/tau4_epsilon": _ratio(tau_flip, tau_eps),
        "tau4_spinflip/abs_h_sq": _ratio(tau_flip, abs_h_sq),
        "tau4_epsilon/abs_h_sq": _ratio(tau_eps, abs_h_sq),
        "tau4_spinflip/four_abs_h_sq": _ratio(tau_flip, 4.0 * abs_h_sq),
        "four_abs_i1_sq/abs_h_sq": _ratio(four_abs_i1_sq, abs_h_sq),
    }
    return Tau4IdentityReport(
        tau4_spinflip=tau_flip,
        tau4_epsilon=tau_eps,
        h=h,
        i1=i1,
        abs_h_sq=abs_h_sq,
        four_abs_h_sq=4.0 * abs_h_sq,
        four_abs_i1_sq=four_abs_i1_sq,
        ratios=ratios,
        note=_TAU4_NOTE,
    )

"""Separability pipeline: residual certificate, factor extraction, report.

A state is reported separable when its largest Segre relation residual is
within tolerance and a factorization is recovered; the recovered factors
then place the state on the moment polytope. Entangled states keep the
residual as their certificate and the applicable entanglement measures are
reported either way.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import WrongQubitCountError
from .measures import check_tau4_identities, concurrence, m_tangle, three_tangle
from .moment import moment_product
from .states import MultiQubitState, QubitFactor, inner_product, segre_embed
from .toric import max_segre_residual

__all__ = ["AnalysisReport", "extract_factors", "analyze"]

DEFAULT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the pipeline learned about one state.

    ``factors`` and ``moment_image`` are present exactly when the state is
    separable.
    """

    num_qubits: int
    separable: bool
    max_residual: float
    factors: tuple[QubitFactor, ...] | None
    moment_image: np.ndarray | None
    measures: dict[str, float | complex]
    tolerance: float

    @property
    def borderline(self) -> bool:
        """Residual within a factor of 10 of the tolerance, either side."""
        return self.tolerance / 10 <= self.max_residual <= self.tolerance * 10

    def to_dict(self) -> dict:
        factors = None
        if self.factors is not None:
            factors = [
                [[f.a0.real, f.a0.imag], [f.a1.real, f.a1.imag]] for f in self.factors
            ]
        measures = {}
        for name, value in self.measures.items():
            if isinstance(value, complex):
                measures[name] = [value.real, value.imag]
            else:
                measures[name] = float(value)
        return {
            "qubits": self.num_qubits,
            "separable": self.separable,
            "max_residual": self.max_residual,
            "factors": factors,
            "moment_image": None if self.moment_image is None else [float(t) for t in self.moment_image],
            "measures": measures,
            "tolerance": self.tolerance,
        }


def extract_factors(
    state: MultiQubitState, tol: float
) -> tuple[QubitFactor, ...] | None:
    """Invert the Segre embedding by the pivot method, or return None.

    The pivot is the largest-magnitude amplitude; factor j is read off the
    amplitude pair at the pivot index with bit j cleared and set, then unit
    normalized. The factorization is accepted when the embedded product
    matches the state to ``10 * tol`` after phase alignment.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    unit = state.normalized()
    m = state.num_qubits
    pivot = int(np.argmax(np.abs(unit.amplitudes)))
    factors = []
    for position in range(m):  # ket order: position 0 is the most significant bit
        bit = 1 << (m - 1 - position)
        a0 = unit.amplitudes[pivot & ~bit]
        a1 = unit.amplitudes[pivot | bit]
        factors.append(QubitFactor(a0, a1).normalized())
    embedded = segre_embed(factors)
    overlap = inner_product(embedded, unit)
    if overlap == 0:
        return None
    # Difference against the phase-aligned product; forming sqrt(2 - 2|overlap|)
    # instead would cancel catastrophically near zero error.
    phase = overlap / abs(overlap)
    error = float(np.linalg.norm(unit.amplitudes - phase * embedded.amplitudes))
    return tuple(factors) if error <= 10.0 * tol else None


def analyze(state: MultiQubitState, tol: float = DEFAULT_TOLERANCE) -> AnalysisReport:
    """Run the full pipeline on one state."""
    if state.num_qubits < 2:
        raise WrongQubitCountError("analysis needs at least 2 qubits")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    max_residual = max_segre_residual(state)
    factors = extract_factors(state, tol)
    separable = bool(max_residual <= tol) and factors is not None
    if not separable:
        factors = None
    moment_image = moment_product(factors) if factors is not None else None
    return AnalysisReport(
        num_qubits=state.num_qubits,
        separable=separable,
        max_residual=max_residual,
        factors=factors,
        moment_image=moment_image,
        measures=_applicable_measures(state),
        tolerance=float(tol),
    )


def _applicable_measures(state: MultiQubitState) -> dict[str, float | complex]:
    m = state.num_qubits
    measures: dict[str, float | complex] = {}
    if m == 2:
        measures["concurrence"] = concurrence(state)
    elif m == 3:
        measures["three_tangle"] = three_tangle(state)
    elif m == 4:
        report = check_tau4_identities(state)
        measures["m_tangle"] = report.tau4_spinflip
        measures["H"] = report.h
        measures["I1"] = report.i1
        measures["tau4_spinflip"] = report.tau4_spinflip
        measures["tau4_epsilon"] = report.tau4_epsilon
    elif m % 2 == 0:
        measures["m_tangle"] = m_tangle(state)
    return measures

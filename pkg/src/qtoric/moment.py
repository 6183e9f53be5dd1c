"""Torus moment maps on projective space and products of projective lines.

The map used throughout, in the Fubini-Study normalization, is

    mu[a_0 : ... : a_{n-1}] = -1/2 (|a_1|^2 / S, ..., |a_{n-1}|^2 / S),

with ``S = sum_k |a_k|^2``. Its image is the simplex spanned by the origin
and the vectors ``-1/2 e_k``; on an m-fold product of projective lines the
image is the box ``[-1/2, 0]^m``. The alternative height-function
normalization on the sphere, with image ``[-1, 1]`` per axis, is the affine
image ``t -> 4t + 1`` of this convention and has no separate code path.

Entangled states have no image under :func:`moment_product`: the map is
defined on tuples of single-qubit factors, not on the ambient state space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyFactorListError,
    NonFiniteAmplitudeError,
)
from .states import ProjectivePoint, QubitFactor

__all__ = [
    "BoxPolytope",
    "moment_projective",
    "moment_product",
    "fixed_point_images",
    "s1_moment_disk",
    "in_polytope",
]


@dataclass(frozen=True)
class BoxPolytope:
    """An axis-aligned box, one closed real interval per axis."""

    lows: np.ndarray
    highs: np.ndarray

    def __post_init__(self) -> None:
        lows = np.array(self.lows, dtype=float, copy=True).reshape(-1)
        highs = np.array(self.highs, dtype=float, copy=True).reshape(-1)
        if lows.size != highs.size:
            raise DimensionMismatchError("lower and upper bounds differ in length")
        if lows.size == 0:
            raise DimensionMismatchError("a box needs at least one axis")
        if not (np.isfinite(lows).all() and np.isfinite(highs).all()):
            raise NonFiniteAmplitudeError("box bounds must be finite")
        if np.any(lows > highs):
            raise DimensionMismatchError("every axis needs lo <= hi")
        lows.setflags(write=False)
        highs.setflags(write=False)
        object.__setattr__(self, "lows", lows)
        object.__setattr__(self, "highs", highs)

    @property
    def dim(self) -> int:
        return self.lows.size

    @classmethod
    def moment_box(cls, dim: int) -> "BoxPolytope":
        """The moment polytope ``[-1/2, 0]^dim`` of a product of lines."""
        return cls(np.full(dim, -0.5), np.zeros(dim))


def moment_projective(point: ProjectivePoint) -> np.ndarray:
    """Moment-map image of a projective point, a vector of length n - 1.

    Invariant under rescaling the point by any nonzero complex number and
    under the torus action multiplying coordinates 1..n-1 by unit phases.
    """
    weights = np.abs(point.coords) ** 2
    image = -0.5 * (weights[1:] / weights.sum())
    return image + 0.0  # never expose -0.0


def moment_product(factors: Sequence[QubitFactor]) -> np.ndarray:
    """Moment-map image of a factor tuple; component j comes from factor j.

    Each component is ``-1/2 |a1|^2 / (|a0|^2 + |a1|^2)``, i.e. the image of
    the factor under :func:`moment_projective` as a point of P^1, so the
    image sits in the box ``[-1/2, 0]^m``.
    """
    factors = list(factors)
    if not factors:
        raise EmptyFactorListError("need at least one factor")
    return np.concatenate(
        [moment_projective(ProjectivePoint(f.as_array())) for f in factors]
    )


def fixed_point_images(n: int) -> list[tuple[ProjectivePoint, np.ndarray]]:
    """The n torus-fixed basis points of P^(n-1) paired with their images.

    ``[1:0:...:0]`` maps to the origin and the remaining basis points map to
    ``-1/2`` times the standard unit vectors; together they are exactly the
    vertices of the moment polytope.
    """
    if n < 2:
        raise DimensionMismatchError("projective space needs n >= 2 coordinates")
    pairs = []
    for k in range(n):
        coords = np.zeros(n, dtype=complex)
        coords[k] = 1.0
        pairs.append((ProjectivePoint(coords), moment_projective(ProjectivePoint(coords))))
    return pairs


def s1_moment_disk(vector) -> float:
    """Moment map of the scalar circle action on C^n: ``-|v|^2/2 + 1/2``.

    Zero exactly on the unit sphere, which is the level set reduced to
    projective space.
    """
    arr = np.asarray(vector, dtype=complex).reshape(-1)
    if not (np.isfinite(arr.real).all() and np.isfinite(arr.imag).all()):
        raise NonFiniteAmplitudeError("vector contains NaN or infinite entries")
    return float(0.5 - 0.5 * np.linalg.norm(arr) ** 2)


def in_polytope(image, box: BoxPolytope, tol: float) -> bool:
    """Whether every coordinate of ``image`` is within ``tol`` of the box."""
    arr = np.asarray(image, dtype=float).reshape(-1)
    if arr.size != box.dim:
        raise DimensionMismatchError(
            f"image has {arr.size} coordinates, box has {box.dim} axes"
        )
    return bool(np.all(arr >= box.lows - tol) and np.all(arr <= box.highs + tol))

"""Validated orthogonal ensembles of two-qubit pure states."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptySet, InvalidSet
from .states import (
    EPS_ORTH,
    EPS_ZERO,
    PureState,
    concurrence,
    entanglement_profile,
    make_state,
)

TAU_OVERLAP = 1e-7


@dataclass(frozen=True)
class Tolerances:
    eps_orth: float = EPS_ORTH
    eps_zero: float = EPS_ZERO
    tau_overlap: float = TAU_OVERLAP


@dataclass(frozen=True)
class OrthogonalSet:
    """A pairwise-orthogonal collection of 2 to 4 two-qubit pure states.

    Orthogonality implies linear independence, so cardinality never exceeds 4.
    """

    states: tuple[PureState, ...]
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        n = len(self.states)
        if not 2 <= n <= 4:
            raise InvalidSet(f"cardinality must be 2, 3, or 4, got {n}")
        for i in range(n):
            for j in range(i + 1, n):
                ov = abs(self.states[i].overlap(self.states[j]))
                if ov >= self.tolerances.eps_orth:
                    raise InvalidSet(
                        f"states {i} and {j} are not orthogonal: "
                        f"|<{i}|{j}>| = {ov:.3e}"
                    )

    def __len__(self):
        return len(self.states)

    def __getitem__(self, i) -> PureState:
        return self.states[i]

    def matrix(self) -> np.ndarray:
        """4 x n matrix whose columns are the state amplitude vectors."""
        return np.column_stack([s.amps for s in self.states])

    def entangled_count(self) -> int:
        """Number of members with concurrence above the zero tolerance."""
        eps = self.tolerances.eps_zero
        return sum(1 for s in self.states if concurrence(s) >= eps)

    def span_projector(self) -> np.ndarray:
        """Orthogonal projector onto the span of the members."""
        b = self.matrix()
        return b @ b.conj().T


def average_entanglement(ensemble: OrthogonalSet) -> float:
    """Arithmetic mean of the members' entanglement entropies, in ebits."""
    if len(ensemble) == 0:
        raise EmptySet("cannot average over an empty ensemble")
    return float(np.mean([entanglement_profile(s).entropy for s in ensemble.states]))


def random_orthogonal_set(seed: int, size: int = 3) -> OrthogonalSet:
    """Seeded Haar-random orthonormal set of the requested cardinality.

    Columns of a Haar-random 4x4 unitary, obtained by QR of a complex
    Gaussian matrix with the phase convention fixed on R's diagonal.
    """
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    q, r = np.linalg.qr(g)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    return OrthogonalSet(tuple(make_state(q[:, k]) for k in range(size)))

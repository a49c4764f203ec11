"""Finite-dimensional complex Hilbert space primitives.

States are normalized vectors in C^d; observables are labeled orthonormal
bases. The inner product is conjugate-linear in the FIRST argument, so
``inner_product(p, q) == conj(inner_product(q, p))``. Fidelity, angles and
measurement probabilities are invariant under global phase.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionError,
    LabelError,
    NormalizationError,
    OrthogonalityError,
)
from .tolerances import DEFAULT_TOLERANCES, ToleranceConfig

HALF_PI = float(np.pi / 2.0)


def _as_complex_vector(amps) -> np.ndarray:
    arr = np.asarray(amps, dtype=np.complex128)
    if arr.ndim != 1:
        raise DimensionError(f"state vector must be one-dimensional, got shape {arr.shape}")
    if not (np.isfinite(arr.real).all() and np.isfinite(arr.imag).all()):
        raise ValueError("state vector contains non-finite amplitudes")
    return arr


class StateVector:
    """A normalized vector in a d-dimensional complex Hilbert space (d >= 2).

    Unnormalized input is rejected; use :meth:`normalized` to build a state
    from an arbitrary nonzero vector. Instances are immutable.
    """

    __slots__ = ("_amps",)

    def __init__(self, amps, *, tolerances: ToleranceConfig = DEFAULT_TOLERANCES):
        arr = _as_complex_vector(amps).copy()
        if arr.shape[0] < 2:
            raise DimensionError(f"state dimension must be >= 2, got {arr.shape[0]}")
        norm = float(np.linalg.norm(arr))
        if abs(norm - 1.0) > tolerances.normalization:
            raise NormalizationError(
                f"state vector has norm {norm!r}, expected 1 within {tolerances.normalization}"
            )
        arr.setflags(write=False)
        self._amps = arr

    @classmethod
    def normalized(cls, amps, *, tolerances: ToleranceConfig = DEFAULT_TOLERANCES) -> "StateVector":
        """Explicitly normalize an arbitrary nonzero vector into a state."""
        arr = _as_complex_vector(amps)
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise NormalizationError("cannot normalize the zero vector")
        return cls(arr / norm, tolerances=tolerances)

    @classmethod
    def basis_state(cls, dim: int, index: int) -> "StateVector":
        """The computational basis vector e_index in dimension dim."""
        if not 0 <= index < dim:
            raise IndexError(f"basis index {index} out of range for dimension {dim}")
        arr = np.zeros(dim, dtype=np.complex128)
        arr[index] = 1.0
        return cls(arr)

    @property
    def amps(self) -> np.ndarray:
        """Read-only amplitude array (complex128, shape (dim,))."""
        return self._amps

    @property
    def dim(self) -> int:
        return self._amps.shape[0]

    def phase_shifted(self, phase: float) -> "StateVector":
        """The physically identical state e^{i phase} * self."""
        return StateVector(self._amps * np.exp(1j * phase))

    def __repr__(self) -> str:
        return f"StateVector(dim={self.dim}, amps={np.array2string(self._amps, precision=6)})"


class ObservableBasis:
    """A labeled orthonormal family {b_1, ..., b_d} spanning C^d.

    Rows of :attr:`matrix` are the basis vectors. Construction validates
    distinct labels, vector count, normalization and pairwise orthogonality.
    """

    __slots__ = ("_matrix", "_labels", "_vectors")

    def __init__(self, vectors: Sequence, labels: Sequence[str],
                 *, tolerances: ToleranceConfig = DEFAULT_TOLERANCES):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise LabelError(f"basis labels must be distinct, got {labels}")
        states = tuple(
            v if isinstance(v, StateVector) else StateVector(v, tolerances=tolerances)
            for v in vectors
        )
        if not states:
            raise DimensionError("basis needs at least 2 vectors")
        if len(states) != len(labels):
            raise DimensionError(
                f"basis has {len(states)} vectors but {len(labels)} labels"
            )
        dim = states[0].dim if states else 0
        if len(states) != dim:
            raise DimensionError(
                f"an orthonormal basis of C^{dim} needs exactly {dim} vectors, got {len(states)}"
            )
        for s in states:
            if s.dim != dim:
                raise DimensionError("basis vectors have mixed dimensions")
        matrix = np.stack([s.amps for s in states])
        gram = matrix.conj() @ matrix.T
        off = gram - np.eye(dim)
        for i in range(dim):
            for j in range(dim):
                if i == j:
                    continue
                if abs(gram[i, j]) > tolerances.orthogonality:
                    raise OrthogonalityError(
                        f"|<{labels[i]},{labels[j]}>| = {abs(gram[i, j])!r} exceeds "
                        f"{tolerances.orthogonality}"
                    )
        # Diagonal deviation is bounded by the StateVector norm check already,
        # but re-assert against the basis tolerance for explicit vectors.
        diag_err = float(np.abs(np.diag(off)).max()) if dim else 0.0
        if diag_err > 2 * tolerances.normalization + 1e-15:
            raise NormalizationError(f"basis vector norm deviates by {diag_err!r}")
        matrix.setflags(write=False)
        self._matrix = matrix
        self._labels = labels
        self._vectors = states

    @classmethod
    def computational(cls, dim: int, labels: Sequence[str] | None = None) -> "ObservableBasis":
        """The computational basis of C^dim with labels b1..bd by default."""
        if labels is None:
            labels = [f"b{i + 1}" for i in range(dim)]
        return cls(np.eye(dim, dtype=np.complex128), labels)

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def vectors(self) -> tuple[StateVector, ...]:
        return self._vectors

    @property
    def matrix(self) -> np.ndarray:
        """Read-only (d, d) array whose rows are the basis vectors."""
        return self._matrix

    def index_of(self, label: str) -> int:
        try:
            return self._labels.index(label)
        except ValueError:
            raise LabelError(f"unknown basis label {label!r}; known: {self._labels}") from None

    def __repr__(self) -> str:
        return f"ObservableBasis(dim={self.dim}, labels={self._labels})"


def validate_basis(vectors: Iterable, labels: Sequence[str],
                   *, tolerances: ToleranceConfig = DEFAULT_TOLERANCES) -> ObservableBasis:
    """Validate vectors/labels into an :class:`ObservableBasis` or raise."""
    return ObservableBasis(list(vectors), labels, tolerances=tolerances)


def _check_same_dim(p: StateVector, q: StateVector) -> None:
    if p.dim != q.dim:
        raise DimensionError(f"dimension mismatch: {p.dim} vs {q.dim}")


def inner_product(p: StateVector, q: StateVector) -> complex:
    """<p, q>, conjugate-linear in the first argument."""
    _check_same_dim(p, q)
    return complex(np.vdot(p.amps, q.amps))


def fidelity(p: StateVector, q: StateVector) -> float:
    """|<p, q>| in [0, 1]; symmetric and invariant under global phase."""
    _check_same_dim(p, q)
    return float(abs(np.vdot(p.amps, q.amps)))


def angle(p: StateVector, q: StateVector) -> float:
    """arccos of the fidelity, clamped into [0, pi/2]."""
    return float(np.arccos(min(fidelity(p, q), 1.0)))


def chord_distance(p: StateVector, q: StateVector) -> float:
    """Phase-minimized distance min_phi ||p - e^{i phi} q|| = 2 sin(theta/2).

    The raw Euclidean distance depends on the relative phase of the two
    vectors; minimizing over phase yields sqrt(2 - 2 |<p,q>|), which is a
    strictly increasing function of the angle between the states.
    """
    f = min(fidelity(p, q), 1.0)
    return float(np.sqrt(max(2.0 - 2.0 * f, 0.0)))


def measurement_distribution(q: StateVector, basis: ObservableBasis) -> np.ndarray:
    """Probabilities (|<q, b_i>|^2)_i of observing q in each basis state.

    Computed as squared components of the projection coefficients, so exact
    0/0.5/1 entries are representable; entries are clipped into [0, 1] and
    sum to 1 within normalization tolerance.
    """
    if q.dim != basis.dim:
        raise DimensionError(f"dimension mismatch: state {q.dim} vs basis {basis.dim}")
    coeff = basis.matrix @ q.amps.conj()
    probs = coeff.real * coeff.real + coeff.imag * coeff.imag
    return np.clip(probs, 0.0, 1.0)


def angles_to_basis(q: StateVector, basis: ObservableBasis) -> np.ndarray:
    """Angles (arccos |<q, b_i>|)_i to every basis vector, in [0, pi/2]."""
    if q.dim != basis.dim:
        raise DimensionError(f"dimension mismatch: state {q.dim} vs basis {basis.dim}")
    fid = np.abs(basis.matrix.conj() @ q.amps)
    return np.arccos(np.clip(fid, 0.0, 1.0))


def tensor(p: StateVector, q: StateVector) -> StateVector:
    """Tensor product state with amplitude p_i * q_j at index i * q.dim + j."""
    return StateVector(np.kron(p.amps, q.amps))


def phase_equal(p: StateVector, q: StateVector, tol: float = 1e-9) -> bool:
    """True when p and q are the same physical state: 1 - |<p,q>| <= tol."""
    return 1.0 - fidelity(p, q) <= tol

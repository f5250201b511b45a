"""Spectral evolution, the dynamical generator and channel QFI.

The response of the evolved state to the estimated acceleration is
encoded in the Hermitian generator G = i U(lambda)^dag d/dlambda U(lambda)
with U = exp(-i t H(lambda)). Its seminorm (spectral spread) squared is
the QFI maximized over initial pure states, and 4 Var_psi(G) is the QFI
of a particular input psi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericsError
from .hamiltonians import HermitianOperator, total_hamiltonian
from .modes import SystemParams
from .spin_core import DickeState, SpinOperators, variance

__all__ = [
    "SpectralDecomposition",
    "GeneratorResult",
    "decompose",
    "evolve",
    "dynamical_generator",
    "qfi_pure_state",
    "cqfi_upper_bound",
]

# Below this spacing (relative to the spectral radius) two levels are treated
# as degenerate and the generator element takes its t-linear limit.
DEGENERACY_RTOL = 1e-9

_RECONSTRUCTION_TOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in ascending order and the matching unitary of column eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        vals = np.array(self.eigenvalues, dtype=float)
        vecs = np.array(self.eigenvectors, dtype=complex)
        vals.setflags(write=False)
        vecs.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)
        object.__setattr__(self, "eigenvectors", vecs)
        dim = vals.shape[0]
        ortho = np.abs(vecs.conj().T @ vecs - np.eye(dim)).max()
        if ortho > _RECONSTRUCTION_TOL:
            raise NumericsError(f"eigenvectors deviate from unitarity by {ortho!r}")

    @property
    def dimension(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        return (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T


def decompose(h: HermitianOperator) -> SpectralDecomposition:
    """Full eigendecomposition with a deterministic phase convention.

    Eigenvalues come out ascending; each eigenvector is rotated so its
    largest-magnitude component is real and positive.
    """
    try:
        vals, vecs = np.linalg.eigh(h.matrix)
    except np.linalg.LinAlgError as exc:
        raise NumericsError("eigendecomposition failed") from exc
    idx = np.abs(vecs).argmax(axis=0)
    anchors = vecs[idx, np.arange(vecs.shape[1])]
    phases = anchors / np.abs(anchors)
    vecs = vecs / phases[np.newaxis, :]
    dec = SpectralDecomposition(eigenvalues=vals, eigenvectors=vecs)
    defect = np.abs(dec.reconstruct() - h.matrix).max()
    if defect > _RECONSTRUCTION_TOL * dec.dimension:
        raise NumericsError(f"spectral reconstruction defect {defect!r}")
    return dec


def evolve(h: HermitianOperator, t: float, state: DickeState) -> DickeState:
    """Apply exp(-i H t) through the spectral decomposition of H."""
    if h.dimension != state.dimension:
        raise ValueError(
            f"operator dimension {h.dimension} does not match state dimension {state.dimension}"
        )
    dec = decompose(h)
    coeffs = dec.eigenvectors.conj().T @ state.amplitudes
    out = dec.eigenvectors @ (np.exp(-1j * dec.eigenvalues * t) * coeffs)
    return DickeState(amplitudes=out / np.linalg.norm(out))


@dataclass(frozen=True)
class GeneratorResult:
    """Dynamical generator together with its seminorm, the channel QFI and
    the state that saturates it (equal superposition of the extremal
    eigenvectors)."""

    generator: HermitianOperator
    seminorm: float
    cqfi: float
    optimal_state: DickeState


def dynamical_generator(p: SystemParams, ops: SpinOperators) -> GeneratorResult:
    """Generator of the acceleration imprint after time p.t.

    In the eigenbasis {E_k, |k>} of H(lambda) the generator is
    <k|G|l> = <k|Jx|l> (e^{i(E_k-E_l)t} - 1) / (i(E_k-E_l)), with the
    limit t <k|Jx|l> on (near-)degenerate pairs. This realizes
    G = int_0^t e^{iHs} Jx e^{-iHs} ds, since dH/dlambda = Jx. The channel
    QFI is the squared spread of G's spectrum.
    """
    h = total_hamiltonian(p, ops)
    dec = decompose(h)
    energies = dec.eigenvalues
    v = dec.eigenvectors
    jx_eig = v.conj().T @ ops.jx @ v

    gaps = energies[:, np.newaxis] - energies[np.newaxis, :]
    tol = DEGENERACY_RTOL * np.abs(energies).max()
    degenerate = np.abs(gaps) <= tol
    safe = np.where(degenerate, 1.0, gaps)
    phase_factor = np.where(
        degenerate,
        p.t,
        (np.exp(1j * gaps * p.t) - 1.0) / (1j * safe),
    )
    gen_eig = jx_eig * phase_factor
    gen_mat = v @ gen_eig @ v.conj().T
    generator = HermitianOperator(matrix=(gen_mat + gen_mat.conj().T) / 2.0)

    gen_dec = decompose(generator)
    seminorm = float(gen_dec.eigenvalues[-1] - gen_dec.eigenvalues[0])
    optimal = (gen_dec.eigenvectors[:, -1] + gen_dec.eigenvectors[:, 0]) / np.sqrt(2.0)
    optimal /= np.linalg.norm(optimal)
    return GeneratorResult(
        generator=generator,
        seminorm=seminorm,
        cqfi=seminorm * seminorm,
        optimal_state=DickeState(amplitudes=optimal),
    )


def qfi_pure_state(gen: GeneratorResult, state: DickeState) -> float:
    """QFI of a specific input state: 4 Var_psi(G)."""
    if gen.generator.dimension != state.dimension:
        raise ValueError(
            f"generator dimension {gen.generator.dimension} does not match "
            f"state dimension {state.dimension}"
        )
    return 4.0 * variance(gen.generator, state)


def cqfi_upper_bound(n_particles: int, t: float) -> float:
    """Heisenberg ceiling N^2 t^2; no dynamics can push the channel QFI above it."""
    return float(n_particles * t) ** 2

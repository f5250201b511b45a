"""Quantum Fisher information for acceleration sensing with two-mode bosons
in a single trap: collective-spin model, dynamical generator, channel QFI,
ground-state protocols and parameter sweeps."""

from .analytic import cqfi_noninteracting, ideal_qfi
from .dynamics import (
    GeneratorResult,
    SpectralDecomposition,
    cqfi_upper_bound,
    decompose,
    dynamical_generator,
    evolve,
    qfi_pure_state,
)
from .errors import InvariantError, NumericsError
from .hamiltonians import (
    DoubleWellParams,
    HermitianOperator,
    acceleration_hamiltonian,
    double_well_hamiltonian,
    single_well_hamiltonian,
    total_hamiltonian,
)
from .modes import (
    ModeIntegrals,
    SystemParams,
    derive_params,
    harmonic_mode_integrals,
    renormalized_q,
    validity_gamma,
)
from .protocols import ProtocolResult, ProtocolSpec, beam_splitter, run_protocol
from .spin_core import (
    DickeState,
    SpinOperators,
    build_spin_operators,
    degree_of_fragmentation,
    expectation,
    fragmented_ground_state,
    spin_coherent_state,
    variance,
)
from .sweeps import SweepResult, SweepSpec, emit_csv, emit_plot, load_csv, run_sweep

__version__ = "0.1.0"

__all__ = [
    "InvariantError",
    "NumericsError",
    "SpinOperators",
    "DickeState",
    "build_spin_operators",
    "spin_coherent_state",
    "fragmented_ground_state",
    "degree_of_fragmentation",
    "expectation",
    "variance",
    "ModeIntegrals",
    "SystemParams",
    "harmonic_mode_integrals",
    "derive_params",
    "renormalized_q",
    "validity_gamma",
    "HermitianOperator",
    "DoubleWellParams",
    "single_well_hamiltonian",
    "acceleration_hamiltonian",
    "double_well_hamiltonian",
    "total_hamiltonian",
    "SpectralDecomposition",
    "GeneratorResult",
    "decompose",
    "evolve",
    "dynamical_generator",
    "qfi_pure_state",
    "cqfi_upper_bound",
    "cqfi_noninteracting",
    "ideal_qfi",
    "ProtocolSpec",
    "ProtocolResult",
    "beam_splitter",
    "run_protocol",
    "SweepSpec",
    "SweepResult",
    "run_sweep",
    "emit_csv",
    "emit_plot",
    "load_csv",
]

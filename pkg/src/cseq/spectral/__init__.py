"""Spectral diagnostics: multiplicities, eigenspaces, pairing and the conditional checks."""

from .basic import is_nilpotent, is_semisimple_zero, mult_zero, zero_eigenspace
from .eigenspace import (
    TOL_RANK,
    EigenspaceBasis,
    gen_eigenspace,
    jordan_block_sizes,
    jordan_chains,
    numeric_rank,
)
from .pairing import TOL_MATCH, PairingResult, default_samples, pairing_check, sample_collisions
from .props import (
    NuF,
    Prop3Report,
    Prop5Report,
    SpectralReport,
    check_prop2,
    check_prop3,
    check_prop5,
    nu_and_F,
    spectral_report,
)
from .roots import TOL_CLUSTER, Eigenvalue, Spectrum, spectrum

__all__ = [
    "TOL_CLUSTER",
    "TOL_MATCH",
    "TOL_RANK",
    "EigenspaceBasis",
    "Eigenvalue",
    "NuF",
    "PairingResult",
    "Prop3Report",
    "Prop5Report",
    "Spectrum",
    "SpectralReport",
    "check_prop2",
    "check_prop3",
    "check_prop5",
    "default_samples",
    "gen_eigenspace",
    "is_nilpotent",
    "is_semisimple_zero",
    "jordan_block_sizes",
    "jordan_chains",
    "mult_zero",
    "nu_and_F",
    "numeric_rank",
    "pairing_check",
    "sample_collisions",
    "spectral_report",
    "spectrum",
    "zero_eigenspace",
]

"""Event-based corpuscular simulation of single-photon optics experiments.

Messengers (particles carrying a two-component complex message) are routed
one at a time through adaptive processing units whose event-by-event
statistics converge to the closed-form wave-theory intensities shipped in
:mod:`ebcm.oracles`.
"""
from .analysis import (
    RECORD_DTYPE,
    CoincidenceTable,
    compare_to_oracle,
    correlation,
    count_coincidences,
    fit_amplitude,
    fit_cosine,
    make_records,
    single_particle_averages,
    visibility,
)
from .dlm import ScalarDlm, VectorDlm
from .experiments import (
    EXPERIMENT_NAMES,
    ExperimentConfig,
    ExperimentResult,
    default_sweep,
    make_config,
    run_experiment,
)
from .kernels import BACKEND
from .messaging import Message, Messenger, Source, SourceKind, SourceSpec, propagate
from .units import (
    DetectorUnit,
    FresnelCoefficients,
    InterfaceUnit,
    TotalInternalReflection,
    fresnel_energy_coefficients,
    ftir_transmittance,
    make_bs_unit,
    make_gap_unit,
    make_interface_unit,
    make_pbs_unit,
    mirror_apply,
    rotator_matrix,
    snell_refract,
    waveplate_apply,
    waveplate_matrix,
)

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "RECORD_DTYPE",
    "CoincidenceTable",
    "DetectorUnit",
    "EXPERIMENT_NAMES",
    "ExperimentConfig",
    "ExperimentResult",
    "FresnelCoefficients",
    "InterfaceUnit",
    "Message",
    "Messenger",
    "ScalarDlm",
    "Source",
    "SourceKind",
    "SourceSpec",
    "TotalInternalReflection",
    "VectorDlm",
    "compare_to_oracle",
    "correlation",
    "count_coincidences",
    "default_sweep",
    "fit_amplitude",
    "fit_cosine",
    "fresnel_energy_coefficients",
    "ftir_transmittance",
    "make_bs_unit",
    "make_config",
    "make_gap_unit",
    "make_interface_unit",
    "make_pbs_unit",
    "make_records",
    "mirror_apply",
    "propagate",
    "rotator_matrix",
    "run_experiment",
    "single_particle_averages",
    "snell_refract",
    "visibility",
    "waveplate_apply",
    "waveplate_matrix",
]

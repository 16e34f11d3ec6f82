"""Trigonometric ERKN integrators for highly oscillatory Hamiltonian systems."""

from .conditions import (ConditionReport, adjoint_roundtrip, check_newcond,
                         check_order2, check_symmetry, check_symplecticity,
                         jacobian_symplecticity)
from .errors import (DivergenceError, DomainError, ErknError, ResourceError,
                     ShapeError, SingularCoefficientError,
                     UnsupportedOrderError)
from .harness import (EnergySeries, ExperimentConfig, build_reference_system,
                      parse_config, read_config, run_checks, run_convergence,
                      run_longrun, run_resonance)
from .integrator import SampleSeries, StepWorkspace, integrate, step
from .phi import phi, sinc
from .resonance import ResonanceScan, nonresonance_margin, resonance_scan
from .schemes import (BUILTIN_NAMES, ErknScheme, builtin_scheme,
                      modified_energies, sigma)
from .system import FrequencyBlock, OscillatorySystem, State

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES", "ConditionReport", "DivergenceError", "DomainError",
    "EnergySeries", "ErknError", "ErknScheme", "ExperimentConfig",
    "FrequencyBlock", "OscillatorySystem", "ResonanceScan", "ResourceError",
    "SampleSeries", "ShapeError", "SingularCoefficientError", "State",
    "StepWorkspace", "UnsupportedOrderError", "adjoint_roundtrip",
    "build_reference_system", "builtin_scheme", "check_newcond", "check_order2",
    "check_symmetry", "check_symplecticity", "integrate",
    "jacobian_symplecticity", "modified_energies", "nonresonance_margin",
    "parse_config", "phi", "read_config", "resonance_scan", "run_checks",
    "run_convergence", "run_longrun", "run_resonance", "sigma", "sinc",
    "step",
]

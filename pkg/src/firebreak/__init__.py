"""Boundary heat-flux control of a coupled temperature/fuel wildfire model.

A finite-difference engine for a 2D reaction-advection-diffusion temperature
field coupled to a fuel-depletion equation, with three closures of the
protected subregion's boundary (open loop, known-wind flux feedback, adaptive
flux feedback) and energy diagnostics certifying the decay of the protected
region's temperature deviation.
"""

from .control import (
    ADAPTIVE,
    KNOWN_WIND,
    OPEN_LOOP,
    AdaptiveState,
    ControllerSpec,
    EdgeCoefficients,
    adaptive_flux,
    apply_adaptive,
    apply_feedback,
    apply_open_loop,
    apply_outer_boundary,
    boundary_flux_samples,
    cardano_root,
    edge_coefficients,
    feedback_flux,
    initial_adaptive_state,
)
from .diagnostics import (
    DecayCondition,
    EnergyTrace,
    adaptive_energy,
    check_decay_condition,
    decay_envelope,
    decay_rate,
    deviation_energy,
    s0_sup_protected,
)
from .errors import (
    DegenerateDenominatorError,
    FirebreakError,
    InteriorIndexError,
    InvalidResolutionError,
    NegativeDiscriminantError,
    NonAlignedBoundaryError,
    NotOnBoundaryError,
    NumericalBlowupError,
    ScenarioParseError,
    ScenarioValidationError,
    UnknownPresetError,
)
from .geometry import DomainGeometry, Grid, boundary_nodes, boundary_normal, build_grid
from .physics import (
    PhysicalParameters,
    State,
    WindField,
    arrhenius,
    fuel_rhs,
    gaussian_initial_state,
    temperature_rhs,
    uniform_initial_state,
)
from .presets import PRESET_NAMES, preset_scenario, run_preset
from .scenario import InitialCondition, Scenario, parse_scenario, serialize_scenario
from .stepper import (
    RunArtifacts,
    RunConfig,
    StabilityReport,
    simulate,
    stability_advisory,
    step,
    step_diffusion_reflective,
)

__version__ = "0.1.0"

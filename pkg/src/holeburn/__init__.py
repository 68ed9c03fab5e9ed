"""Binomial and hole-burned Fock states, their normally-ordered moments, and
nonclassicality witnesses (antibunching, higher-order sub-Poissonian
statistics, moment-matrix determinants), plus a sweep engine and CLI."""

from .errors import (
    DegenerateStateError,
    HoleburnError,
    OrderCapError,
    SweepConfigError,
)
from .numerics import (
    ORDER_CAP,
    determinant,
    log_binomial,
    log_falling_factorial,
    stirling2,
)
from .states import (
    BinomialParams,
    DEGENERACY_THRESHOLD,
    FockSuperposition,
    binomial_state,
    fock_state,
    hole_burn,
    photon_distribution,
    vacuum_filtered_binomial,
)
from .moments import (
    MomentOrder,
    mean_photon_number,
    moment,
    moment_closed_form_vfb,
)
from .witnesses import (
    BUILTIN_BASES,
    DEFAULT_BASIS,
    NUMBER_BASIS,
    WitnessKind,
    WitnessRecord,
    antibunching,
    hosps,
    vogel_det,
    vogel_matrix,
)
from .sweep import (
    CSV_HEADER,
    FAMILIES,
    FORMATS,
    PRESETS,
    Preset,
    SweepConfig,
    SweepResult,
    SweepRow,
    WitnessSpec,
    build_state,
    emit,
    grid_points,
    read_sweep_csv,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "HoleburnError",
    "DegenerateStateError",
    "OrderCapError",
    "SweepConfigError",
    "ORDER_CAP",
    "log_binomial",
    "log_falling_factorial",
    "stirling2",
    "determinant",
    "DEGENERACY_THRESHOLD",
    "FockSuperposition",
    "BinomialParams",
    "fock_state",
    "binomial_state",
    "hole_burn",
    "vacuum_filtered_binomial",
    "photon_distribution",
    "MomentOrder",
    "moment",
    "moment_closed_form_vfb",
    "mean_photon_number",
    "WitnessKind",
    "WitnessRecord",
    "BUILTIN_BASES",
    "DEFAULT_BASIS",
    "NUMBER_BASIS",
    "antibunching",
    "hosps",
    "vogel_matrix",
    "vogel_det",
    "FAMILIES",
    "FORMATS",
    "CSV_HEADER",
    "WitnessSpec",
    "SweepConfig",
    "SweepRow",
    "SweepResult",
    "Preset",
    "PRESETS",
    "build_state",
    "grid_points",
    "run_sweep",
    "emit",
    "read_sweep_csv",
]

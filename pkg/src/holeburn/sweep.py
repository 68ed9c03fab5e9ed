"""Parameter sweeps over (family, M, p) grids with deterministic emission.

A sweep evaluates every requested witness at every grid point, collects the
results into rows sorted by (witness, order, M, p), and renders them as CSV
or JSON.  Grid points whose state construction degenerates (e.g. vacuum
filtering at p = 0) become status rows instead of aborting the run, so the
output file always covers the full grid.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .errors import DegenerateStateError, SweepConfigError
from .numerics import ORDER_CAP
from .states import (
    BinomialParams,
    FockSuperposition,
    binomial_state,
    hole_burn,
    vacuum_filtered_binomial,
)
from .witnesses import (
    BUILTIN_BASES,
    WitnessKind,
    WitnessRecord,
    antibunching,
    hosps,
    vogel_det,
)

__all__ = [
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
    "render_csv",
    "render_json",
    "emit",
    "read_sweep_csv",
]

FAMILIES = ("binomial", "vacuum_filtered", "hole_burned")
FORMATS = ("csv", "json")

CSV_HEADER = "family,M,p,hole,witness,order,value,nonclassical,status"


@dataclass(frozen=True)
class WitnessSpec:
    """One witness to evaluate: kind plus order (or basis name for vogel)."""

    kind: WitnessKind
    order: int | None = None
    basis: str | None = None

    @property
    def row_order(self) -> int:
        """Order recorded in output rows; matrix dimension for vogel."""
        if self.kind is WitnessKind.VOGEL:
            return len(BUILTIN_BASES[self.basis or "default"])
        return int(self.order)  # type: ignore[arg-type]


@dataclass(frozen=True)
class SweepConfig:
    """Full description of a sweep run.

    ``p_grid`` is (start, stop, step) with both endpoints included when the
    step lands on them.  ``hole_index`` must be present exactly when the
    family is ``hole_burned``.
    """

    family: str
    M_values: tuple[int, ...]
    p_grid: tuple[float, float, float]
    witnesses: tuple[WitnessSpec, ...]
    hole_index: int | None = None
    output_path: str | None = None
    format: str = "csv"


@dataclass(frozen=True)
class SweepRow:
    """One output row; ``value``/``nonclassical`` are None on degenerate points."""

    family: str
    M: int
    p: float
    hole: int | None
    witness: str
    order: int
    value: float | None
    nonclassical: bool | None
    status: str


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]


def grid_points(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid, each point rounded to 12 decimals."""
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def validate_config(config: SweepConfig) -> None:
    """Raise SweepConfigError on any invalid field or combination."""
    if config.family not in FAMILIES:
        raise SweepConfigError(f"unknown family {config.family!r}")
    if config.format not in FORMATS:
        raise SweepConfigError(f"unknown format {config.format!r}")
    if not config.M_values:
        raise SweepConfigError("M_values must not be empty")
    for m in config.M_values:
        if m < 0:
            raise SweepConfigError(f"M must be non-negative, got {m}")
    start, stop, step = config.p_grid
    if step <= 0:
        raise SweepConfigError(f"p-grid step must be positive, got {step}")
    if not (0.0 <= start <= stop <= 1.0):
        raise SweepConfigError(f"p-grid [{start}, {stop}] must lie inside [0, 1]")
    if not config.witnesses:
        raise SweepConfigError("at least one witness is required")
    for spec in config.witnesses:
        if not isinstance(spec.kind, WitnessKind):
            raise SweepConfigError(f"unknown witness kind {spec.kind!r}")
        if spec.kind is WitnessKind.VOGEL:
            basis = spec.basis or "default"
            if basis not in BUILTIN_BASES:
                raise SweepConfigError(
                    f"unknown basis {basis!r}; choose from {sorted(BUILTIN_BASES)}"
                )
        else:
            if spec.order is None:
                raise SweepConfigError(f"witness {spec.kind} requires an order")
            if not 2 <= spec.order <= ORDER_CAP:
                raise SweepConfigError(
                    f"witness order must lie in 2..{ORDER_CAP}, got {spec.order}"
                )
    if config.family == "hole_burned":
        if config.hole_index is None:
            raise SweepConfigError("family hole_burned requires hole_index")
        if config.hole_index < 0:
            raise SweepConfigError(f"hole_index must be non-negative, got {config.hole_index}")
        if config.hole_index > min(config.M_values):
            raise SweepConfigError(
                f"hole_index {config.hole_index} exceeds smallest M {min(config.M_values)}"
            )
    elif config.hole_index is not None:
        raise SweepConfigError(f"family {config.family} does not take a hole_index")


def build_state(family: str, p: float, M: int, hole_index: int | None = None) -> FockSuperposition:
    """Construct the state for one grid point of the given family."""
    params = BinomialParams(p=p, M=M)
    if family == "binomial":
        return binomial_state(params)
    if family == "vacuum_filtered":
        return vacuum_filtered_binomial(params)
    if family == "hole_burned":
        if hole_index is None:
            raise ValueError("hole_burned requires a hole index")
        return hole_burn(binomial_state(params), hole_index)
    raise ValueError(f"unknown family {family!r}")


def _hole_column(config: SweepConfig) -> int | None:
    if config.family == "vacuum_filtered":
        return 0
    return config.hole_index


def _evaluate(state: FockSuperposition, spec: WitnessSpec) -> WitnessRecord:
    if spec.kind is WitnessKind.ANTIBUNCHING:
        return antibunching(state, spec.order)
    if spec.kind is WitnessKind.HOSPS:
        return hosps(state, spec.order)
    return vogel_det(state, BUILTIN_BASES[spec.basis or "default"])


def _point_rows(config: SweepConfig, M: int, p: float) -> list[SweepRow]:
    hole = _hole_column(config)
    common = dict(family=config.family, M=M, p=p, hole=hole)
    try:
        state = build_state(config.family, p, M, config.hole_index)
    except DegenerateStateError:
        return [
            SweepRow(
                **common,
                witness=str(spec.kind),
                order=spec.row_order,
                value=None,
                nonclassical=None,
                status="degenerate",
            )
            for spec in config.witnesses
        ]
    rows = []
    for spec in config.witnesses:
        record = _evaluate(state, spec)
        rows.append(
            SweepRow(
                **common,
                witness=str(record.kind),
                order=record.order,
                value=record.value,
                nonclassical=record.nonclassical,
                status="ok",
            )
        )
    return rows


def run_sweep(config: SweepConfig, workers: int = 1) -> SweepResult:
    """Evaluate every (witness, M, p) combination of the config.

    Grid points may be evaluated concurrently (``workers`` threads); rows are
    sorted into (witness, order, M, p) order afterwards, so the result is
    identical for any worker count.
    """
    validate_config(config)
    points = [(M, p) for M in config.M_values for p in grid_points(*config.p_grid)]
    if workers <= 1:
        batches = [_point_rows(config, M, p) for M, p in points]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda mp: _point_rows(config, *mp), points))
    rows = [row for batch in batches for row in batch]
    rows.sort(key=lambda r: (r.witness, r.order, r.M, r.p))
    return SweepResult(rows=tuple(rows))


def format_value(value: float) -> str:
    """Render a float at 12-digit precision.

    Plain decimal notation covers magnitudes in [0.1, 1e16) and exact zero;
    scientific notation keeps 12+ significant digits elsewhere.
    """
    if value == 0.0 or 0.1 <= abs(value) < 1e16:
        return f"{value:.12f}"
    return f"{value:.12e}"


def _csv_line(row: SweepRow) -> str:
    hole = "" if row.hole is None else str(row.hole)
    if row.value is None:
        value = ""
        flag = ""
    else:
        value = format_value(row.value)
        flag = "true" if row.nonclassical else "false"
    return ",".join(
        [
            row.family,
            str(row.M),
            f"{row.p:.12g}",
            hole,
            row.witness,
            str(row.order),
            value,
            flag,
            row.status,
        ]
    )


def render_csv(result: SweepResult) -> str:
    return "\n".join([CSV_HEADER, *(_csv_line(row) for row in result.rows)]) + "\n"


def render_json(result: SweepResult) -> str:
    return json.dumps([asdict(row) for row in result.rows], indent=2) + "\n"


def emit(result: SweepResult, fmt: str = "csv", path: str | Path | None = None) -> str:
    """Render a result and optionally write it to a file.

    Returns the rendered text; when ``path`` is given the exact bytes are
    written there, so repeated runs of the same config reproduce the file
    byte for byte.
    """
    if fmt not in FORMATS:
        raise SweepConfigError(f"unknown format {fmt!r}")
    text = render_csv(result) if fmt == "csv" else render_json(result)
    if path is not None:
        Path(path).write_bytes(text.encode("utf-8"))
    return text


def read_sweep_csv(path: str | Path) -> SweepResult:
    """Parse a CSV file produced by :func:`emit` back into rows."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path} does not start with the sweep CSV header")
    rows = []
    for record in csv.reader(lines[1:]):
        family, m, p, hole, witness, order, value, flag, status = record
        rows.append(
            SweepRow(
                family=family,
                M=int(m),
                p=float(p),
                hole=None if hole == "" else int(hole),
                witness=witness,
                order=int(order),
                value=None if value == "" else float(value),
                nonclassical=None if flag == "" else flag == "true",
                status=status,
            )
        )
    return SweepResult(rows=tuple(rows))


@dataclass(frozen=True)
class Preset:
    """Named built-in sweep; parameter choices are representative defaults."""

    name: str
    description: str
    config: SweepConfig


def _preset(name, description, family, witnesses, M_values, p_grid, hole_index=None):
    return Preset(
        name=name,
        description=description,
        config=SweepConfig(
            family=family,
            M_values=M_values,
            p_grid=p_grid,
            witnesses=witnesses,
            hole_index=hole_index,
        ),
    )


_FULL_P = (0.01, 0.99, 0.01)
_AB = WitnessKind.ANTIBUNCHING
_HO = WitnessKind.HOSPS
_VO = WitnessKind.VOGEL

PRESETS: dict[str, Preset] = {
    preset.name: preset
    for preset in [
        _preset(
            "fig1a",
            "antibunching order 2 vs p, vacuum-filtered, M in {5,10,15}",
            "vacuum_filtered",
            (WitnessSpec(_AB, order=2),),
            (5, 10, 15),
            _FULL_P,
        ),
        _preset(
            "fig1b",
            "antibunching order 3 vs p, vacuum-filtered, M in {5,10,15}",
            "vacuum_filtered",
            (WitnessSpec(_AB, order=3),),
            (5, 10, 15),
            _FULL_P,
        ),
        _preset(
            "fig1c",
            "antibunching orders 2..5 vs p, vacuum-filtered, M = 10",
            "vacuum_filtered",
            tuple(WitnessSpec(_AB, order=l) for l in (2, 3, 4, 5)),
            (10,),
            _FULL_P,
        ),
        _preset(
            "fig2a",
            "sub-Poissonian order 2 vs p, vacuum-filtered, M in {5,10,15}",
            "vacuum_filtered",
            (WitnessSpec(_HO, order=2),),
            (5, 10, 15),
            _FULL_P,
        ),
        _preset(
            "fig2b",
            "sub-Poissonian order 3 vs p, vacuum-filtered, M in {5,10,15}",
            "vacuum_filtered",
            (WitnessSpec(_HO, order=3),),
            (5, 10, 15),
            _FULL_P,
        ),
        _preset(
            "fig2c",
            "sub-Poissonian order 4 vs p, vacuum-filtered, M in {5,10,15}",
            "vacuum_filtered",
            (WitnessSpec(_HO, order=4),),
            (5, 10, 15),
            _FULL_P,
        ),
        _preset(
            "fig2d",
            "sub-Poissonian orders 2..5 vs p, vacuum-filtered, M = 10",
            "vacuum_filtered",
            tuple(WitnessSpec(_HO, order=l) for l in (2, 3, 4, 5)),
            (10,),
            _FULL_P,
        ),
        _preset(
            "fig3a",
            "moment-matrix determinant vs p, vacuum-filtered, M in {5,10,15}",
            "vacuum_filtered",
            (WitnessSpec(_VO, basis="default"),),
            (5, 10, 15),
            _FULL_P,
        ),
        _preset(
            "fig3b",
            "moment-matrix determinant vs M at p = 0.5, vacuum-filtered",
            "vacuum_filtered",
            (WitnessSpec(_VO, basis="default"),),
            tuple(range(1, 16)),
            (0.5, 0.5, 0.01),
        ),
        _preset(
            "fig3c",
            "moment-matrix determinant vs M at p = 0.2, vacuum-filtered",
            "vacuum_filtered",
            (WitnessSpec(_VO, basis="default"),),
            tuple(range(1, 16)),
            (0.2, 0.2, 0.01),
        ),
    ]
}

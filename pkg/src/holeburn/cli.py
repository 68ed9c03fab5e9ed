"""Command-line interface for states, moments, witnesses, and sweeps.

Exit codes: 0 success, 2 configuration error, 3 numerical/degenerate error
in single-point mode.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import DegenerateStateError, SweepConfigError
from .moments import moment
from .states import photon_distribution
from .sweep import (
    FAMILIES,
    FORMATS,
    PRESETS,
    SweepConfig,
    SweepResult,
    SweepRow,
    WitnessSpec,
    build_state,
    emit,
    format_value,
    run_sweep,
)
from .witnesses import BUILTIN_BASES, WitnessKind, antibunching, hosps, vogel_det

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _parse_p_grid(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise SweepConfigError(f"--p-grid expects start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError as exc:
        raise SweepConfigError(f"bad --p-grid value {text!r}: {exc}") from None
    return start, stop, step


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise SweepConfigError(f"{flag} expects a comma-separated integer list, got {text!r}") from None


def _parse_kind(name: str) -> WitnessKind:
    try:
        return WitnessKind(name)
    except ValueError:
        raise SweepConfigError(
            f"unknown witness {name!r}; choose from {[k.value for k in WitnessKind]}"
        ) from None


def _witness_specs(witness_args, order_args, default_basis) -> tuple[WitnessSpec, ...]:
    """Expand `kind[:order|:basis]` arguments into witness specs."""
    orders = []
    for arg in order_args or []:
        orders.extend(_parse_int_list(arg, "--order"))
    specs = []
    for arg in witness_args:
        name, _, extra = arg.partition(":")
        kind = _parse_kind(name)
        if kind is WitnessKind.VOGEL:
            specs.append(WitnessSpec(kind, basis=extra or default_basis or "default"))
        elif extra:
            try:
                specs.append(WitnessSpec(kind, order=int(extra)))
            except ValueError:
                raise SweepConfigError(f"bad order {extra!r} in {arg!r}") from None
        else:
            for order in orders or [2]:
                specs.append(WitnessSpec(kind, order=order))
    return tuple(specs)


def _load_config_file(path: str) -> dict:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise SweepConfigError(f"cannot read config file {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise SweepConfigError(f"config file {path} must hold a JSON object")
    known = {"family", "hole_index", "M_values", "p_grid", "witnesses", "output_path", "format"}
    unknown = set(raw) - known
    if unknown:
        raise SweepConfigError(f"unknown config keys {sorted(unknown)}")
    if "witnesses" in raw:
        specs = []
        for entry in raw["witnesses"]:
            kind = _parse_kind(entry.get("kind", ""))
            specs.append(
                WitnessSpec(kind, order=entry.get("order"), basis=entry.get("basis"))
            )
        raw["witnesses"] = tuple(specs)
    if "M_values" in raw:
        raw["M_values"] = tuple(int(m) for m in raw["M_values"])
    if "p_grid" in raw:
        raw["p_grid"] = tuple(float(x) for x in raw["p_grid"])
    return raw


def _sweep_config(args) -> SweepConfig:
    """Layer preset, config file, and explicit flags into one config."""
    merged: dict = {}
    if getattr(args, "preset", None):
        if args.preset not in PRESETS:
            raise SweepConfigError(f"unknown preset {args.preset!r}; run `holeburn preset` to list")
        base = PRESETS[args.preset].config
        merged.update(
            family=base.family,
            M_values=base.M_values,
            p_grid=base.p_grid,
            witnesses=base.witnesses,
            hole_index=base.hole_index,
            output_path=base.output_path,
            format=base.format,
        )
    if getattr(args, "config", None):
        merged.update(_load_config_file(args.config))
    if args.family is not None:
        merged["family"] = args.family
    if args.M is not None:
        merged["M_values"] = _parse_int_list(args.M, "--M")
    if args.p_grid is not None:
        merged["p_grid"] = _parse_p_grid(args.p_grid)
    if args.hole is not None:
        merged["hole_index"] = args.hole
    if args.witness:
        merged["witnesses"] = _witness_specs(args.witness, args.order, args.basis)
    if args.out is not None:
        merged["output_path"] = args.out
    if args.format is not None:
        merged["format"] = args.format
    for key in ("family", "M_values", "p_grid"):
        if key not in merged or merged[key] is None:
            raise SweepConfigError(f"sweep needs {key} (flag, config file, or preset)")
    if not merged.get("witnesses"):
        raise SweepConfigError("sweep needs at least one --witness")
    merged.setdefault("hole_index", None)
    merged.setdefault("output_path", None)
    merged.setdefault("format", "csv")
    return SweepConfig(**merged)


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_bytes(text.encode("utf-8"))


def _point_state(args):
    if args.family == "hole_burned" and args.hole is None:
        raise SweepConfigError("family hole_burned requires --hole")
    if args.family != "hole_burned" and args.hole is not None:
        raise SweepConfigError(f"family {args.family} does not take --hole")
    try:
        return build_state(args.family, args.p, args.M, args.hole)
    except (DegenerateStateError,):
        raise
    except ValueError as exc:
        raise SweepConfigError(str(exc)) from None


def _hole_for(args) -> int | None:
    if args.family == "vacuum_filtered":
        return 0
    return args.hole


def cmd_state(args) -> int:
    state = _point_state(args)
    if args.distribution:
        probs = photon_distribution(state)
        records = [{"n": n, "prob": float(probs[n])} for n in range(state.dim)]
        if args.format == "json":
            text = json.dumps(records, indent=2) + "\n"
        else:
            lines = ["n,prob"]
            lines += [f"{rec['n']},{format_value(rec['prob'])}" for rec in records]
            text = "\n".join(lines) + "\n"
    else:
        amps = state.amplitudes
        records = [
            {"n": n, "re": float(amps[n].real), "im": float(amps[n].imag)}
            for n in range(state.dim)
        ]
        if args.format == "json":
            text = json.dumps(records, indent=2) + "\n"
        else:
            lines = ["n,re,im"]
            lines += [
                f"{rec['n']},{format_value(rec['re'])},{format_value(rec['im'])}"
                for rec in records
            ]
            text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    return EXIT_OK


def cmd_moment(args) -> int:
    state = _point_state(args)
    value = moment(state, (args.t, args.r))
    if args.format == "json":
        text = (
            json.dumps(
                [{"t": args.t, "r": args.r, "re": value.real, "im": value.imag}],
                indent=2,
            )
            + "\n"
        )
    else:
        text = "t,r,re,im\n" + ",".join(
            [str(args.t), str(args.r), format_value(value.real), format_value(value.imag)]
        ) + "\n"
    _write_output(text, args.out)
    return EXIT_OK


def cmd_witness(args) -> int:
    state = _point_state(args)
    kind = _parse_kind(args.witness)
    if kind is WitnessKind.ANTIBUNCHING:
        record = antibunching(state, args.order)
    elif kind is WitnessKind.HOSPS:
        record = hosps(state, args.order)
    else:
        if args.basis not in BUILTIN_BASES:
            raise SweepConfigError(
                f"unknown basis {args.basis!r}; choose from {sorted(BUILTIN_BASES)}"
            )
        record = vogel_det(state, BUILTIN_BASES[args.basis])
    row = SweepRow(
        family=args.family,
        M=args.M,
        p=args.p,
        hole=_hole_for(args),
        witness=str(record.kind),
        order=record.order,
        value=record.value,
        nonclassical=record.nonclassical,
        status="ok",
    )
    text = emit(SweepResult(rows=(row,)), fmt=args.format or "csv")
    _write_output(text, args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = _sweep_config(args)
    result = run_sweep(config, workers=args.workers)
    text = emit(result, fmt=config.format)
    _write_output(text, config.output_path)
    return EXIT_OK


def cmd_preset(args) -> int:
    if args.name is None:
        for preset in PRESETS.values():
            cfg = preset.config
            print(f"{preset.name}: {preset.description}")
            print(
                f"    family={cfg.family} M={list(cfg.M_values)} "
                f"p={cfg.p_grid[0]}:{cfg.p_grid[1]}:{cfg.p_grid[2]}"
            )
        return EXIT_OK
    if args.name not in PRESETS:
        raise SweepConfigError(f"unknown preset {args.name!r}; run `holeburn preset` to list")
    config = PRESETS[args.name].config
    result = run_sweep(config, workers=args.workers)
    text = emit(result, fmt=args.format or "csv")
    _write_output(text, args.out)
    return EXIT_OK


def _add_point_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=FAMILIES, default="binomial")
    parser.add_argument("--M", type=int, required=True, help="maximum photon number")
    parser.add_argument("--p", type=float, required=True, help="binomial weight in [0, 1]")
    parser.add_argument("--hole", type=int, default=None, metavar="K",
                        help="burned Fock index (family hole_burned only)")
    parser.add_argument("--out", default=None, help="output file (default stdout)")
    parser.add_argument("--format", choices=FORMATS, default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holeburn",
        description="Binomial and hole-burned Fock states: moments and nonclassicality witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", help="print amplitudes or the photon distribution")
    _add_point_arguments(p_state)
    p_state.add_argument("--distribution", action="store_true",
                         help="print probabilities instead of amplitudes")
    p_state.set_defaults(func=cmd_state)

    p_moment = sub.add_parser("moment", help="one normally-ordered moment <adag^t a^r>")
    _add_point_arguments(p_moment)
    p_moment.add_argument("--t", type=int, required=True, help="creation power")
    p_moment.add_argument("--r", type=int, required=True, help="annihilation power")
    p_moment.set_defaults(func=cmd_moment)

    p_witness = sub.add_parser("witness", help="one witness value at a single point")
    _add_point_arguments(p_witness)
    p_witness.add_argument("--witness", required=True,
                           help="antibunching, hosps, or vogel")
    p_witness.add_argument("--order", type=int, default=2, metavar="L")
    p_witness.add_argument("--basis", choices=sorted(BUILTIN_BASES), default="default")
    p_witness.set_defaults(func=cmd_witness)

    p_sweep = sub.add_parser("sweep", help="evaluate witnesses over a (M, p) grid")
    p_sweep.add_argument("--family", choices=FAMILIES, default=None)
    p_sweep.add_argument("--M", default=None, help="comma-separated M list, e.g. 5,10,15")
    p_sweep.add_argument("--p-grid", dest="p_grid", default=None, metavar="START:STOP:STEP")
    p_sweep.add_argument("--hole", type=int, default=None, metavar="K")
    p_sweep.add_argument("--witness", action="append", default=[],
                         help="kind[:order] or vogel[:basis]; repeatable")
    p_sweep.add_argument("--order", action="append", default=[], metavar="L",
                         help="default order(s) for witnesses given without one; repeatable")
    p_sweep.add_argument("--basis", choices=sorted(BUILTIN_BASES), default=None)
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--format", choices=FORMATS, default=None)
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--config", default=None, help="JSON config file; flags override")
    p_sweep.add_argument("--preset", default=None, help="start from a named preset")
    p_sweep.set_defaults(func=cmd_sweep)

    p_preset = sub.add_parser("preset", help="list bundled sweeps, or run one by name")
    p_preset.add_argument("name", nargs="?", default=None)
    p_preset.add_argument("--out", default=None)
    p_preset.add_argument("--format", choices=FORMATS, default=None)
    p_preset.add_argument("--workers", type=int, default=1)
    p_preset.set_defaults(func=cmd_preset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SweepConfigError as exc:
        print(f"holeburn: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateStateError as exc:
        print(f"holeburn: degenerate state: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"holeburn: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"holeburn: i/o error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""Batch entry point: train models, roll out modulations, sweep parameters.

Exit codes: 0 ok, 2 parse/read error, 3 learn error, 4 validation error,
5 numeric abort. `--json-errors` renders failures as one JSON object on
stderr for harness scripting. Output depends only on inputs and flags.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

import numpy as np

from . import formats
from .errors import FormatError, LearnError, NumericAbort, ValidationError
from .learning import learn
from .principles import ModulationConfig, modulated_rollout
from .rollout import RolloutOptions, rollout

EXIT_PARSE = 2
EXIT_LEARN = 3
EXIT_VALIDATION = 4
EXIT_NUMERIC = 5

SWEEPABLE = ("p_arc", "p_ant", "t_ant", "slow_k", "p_time", "p_exa",
             "p_sec", "p_follow", "p_rand")


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from None


def _write(path: str, data) -> None:
    p = Path(path)
    if p.parent != Path(""):
        p.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, bytes):
        p.write_bytes(data)
    else:
        p.write_text(data, encoding="utf-8")


def _load_inputs(args):
    model = formats.model_from_json(_read_text(args.model))
    config = ModulationConfig()
    if getattr(args, "mod", None):
        config = formats.modulation_from_json(_read_text(args.mod))
    robot = None
    if getattr(args, "robot", None):
        robot = formats.robot_from_json(_read_text(args.robot))
    return model, config, robot


def reconstruction_rmse(model, demo) -> float:
    """Range-normalized RMSE of the model's rollout against its demo."""
    traj = rollout(model, RolloutOptions(steps=demo.n_steps - 1, settle_steps=0))
    err = np.sqrt(np.mean((traj.positions - demo.positions) ** 2))
    ranges = demo.positions.max(axis=0) - demo.positions.min(axis=0)
    span = float(ranges.max())
    return float(err / span) if span > 0.0 else float(err)


def cmd_train(args) -> int:
    demo = formats.parse_demo_csv(_read_text(args.demo))
    model = learn(demo, args.n_basis, tau=args.tau, alpha=args.alpha)
    rmse = reconstruction_rmse(model, demo)
    _write(args.out, formats.model_to_json(model))
    print(f"wrote {args.out}")
    print(f"reconstruction rmse: {rmse:.6g} (fraction of motion range)")
    return 0


def cmd_rollout(args) -> int:
    model, config, robot = _load_inputs(args)
    traj = modulated_rollout(model, config, robot=robot,
                             settle_fraction=args.settle)
    _write(args.out, formats.trajectory_export(traj, args.format))
    print(f"wrote {args.out} ({traj.n_steps} rows, {traj.n_dims} dims)")
    return 0


def cmd_sweep(args) -> int:
    model, config, robot = _load_inputs(args)
    if args.param not in SWEEPABLE:
        raise ValidationError(
            f"unknown parameter {args.param!r}; sweepable: "
            + ", ".join(SWEEPABLE))
    try:
        values = [float(v) for v in args.values.split(",") if v.strip() != ""]
    except ValueError as e:
        raise FormatError(f"cannot parse --values: {e}") from None
    if not values:
        raise ValidationError("empty value list")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = {}
    for value in values:
        point = dataclasses.replace(config, **{args.param: value})
        traj = modulated_rollout(model, point, robot=robot,
                                 settle_fraction=args.settle)
        name = f"{args.param}_{value:g}.{args.format}"
        _write(str(out_dir / name), formats.trajectory_export(traj, args.format))
        files[f"{value:g}"] = name
        print(f"{args.param}={value:g} -> {name} ({traj.n_steps} rows)")
    manifest = {
        "format_version": formats.FORMAT_VERSION,
        "kind": "sweep-manifest",
        "parameter": args.param,
        "values": values,
        "files": files,
    }
    _write(str(out_dir / "manifest.json"),
           json.dumps(manifest, indent=2, allow_nan=False) + "\n")
    print(f"wrote {out_dir / 'manifest.json'}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(ui_dir=args.ui, persist_dir=args.persist,
                     preload_samples=not args.no_samples)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-errors", action="store_true",
                        help="report failures as JSON on stderr")

    parser = argparse.ArgumentParser(
        prog="animdmp",
        description="Learn motion primitives and generate modulated rollouts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", parents=[common],
                       help="learn a model from a demonstration CSV")
    p.add_argument("--demo", required=True, help="demonstration CSV path")
    p.add_argument("--n-basis", type=int, required=True, dest="n_basis")
    p.add_argument("--out", required=True, help="model JSON output path")
    p.add_argument("--tau", type=float, default=None,
                   help="execution time (default: demo duration)")
    p.add_argument("--alpha", type=float, default=25.0,
                   help="attractor gain (beta = alpha/4)")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("rollout", parents=[common],
                       help="roll out a model under a modulation config")
    p.add_argument("--model", required=True)
    p.add_argument("--mod", default=None, help="modulation config JSON")
    p.add_argument("--robot", default=None, help="robot config JSON")
    p.add_argument("--out", required=True)
    p.add_argument("--settle", type=float, default=0.5,
                   help="settling window as a fraction of tau")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_rollout)

    p = sub.add_parser("sweep", parents=[common],
                       help="roll out one trajectory per parameter value")
    p.add_argument("--model", required=True)
    p.add_argument("--param", required=True,
                   help="parameter name, e.g. p_exa")
    p.add_argument("--values", required=True,
                   help="comma-separated values, e.g. 0,0.5,1,1.5")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--mod", default=None, help="base modulation config JSON")
    p.add_argument("--robot", default=None)
    p.add_argument("--settle", type=float, default=0.5)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("serve", parents=[common],
                       help="launch the HTTP service and playground")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ui", default=None,
                   help="directory with the built playground bundle")
    p.add_argument("--persist", default=None,
                   help="directory for artifact persistence")
    p.add_argument("--no-samples", action="store_true",
                   help="skip preloading sample demonstrations")
    p.set_defaults(func=cmd_serve)
    return parser


def _fail(args, code: int, kind: str, exc: Exception) -> int:
    if getattr(args, "json_errors", False):
        payload = {"error": {"code": code, "kind": kind, "message": str(exc)}}
        if isinstance(exc, ValidationError) and exc.violations:
            payload["error"]["violations"] = [
                {"rule": v.rule, "message": v.message} for v in exc.violations]
        print(json.dumps(payload), file=sys.stderr)
    else:
        print(f"error ({kind}): {exc}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as e:
        return _fail(args, EXIT_PARSE, "parse", e)
    except LearnError as e:
        return _fail(args, EXIT_LEARN, "learn", e)
    except ValidationError as e:
        return _fail(args, EXIT_VALIDATION, "validation", e)
    except NumericAbort as e:
        return _fail(args, EXIT_NUMERIC, "numeric", e)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

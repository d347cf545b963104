"""Deterministic, versioned serialization for all shared artifacts.

Five kinds travel through files and the HTTP API: demonstrations
(semicolon CSV with a `# dt=` header), models, modulation configs,
robot configs (JSON envelopes with `format_version` and `kind`), and
trajectories (JSON envelope or semicolon CSV). Parsers are total: any
byte input yields either a value or a FormatError, never a crash.
Floats are emitted as their shortest round-trippable decimal, so
serialize/parse round-trips reproduce values exactly.
"""

from __future__ import annotations

import json
from importlib import resources

import numpy as np

from .demonstration import Demonstration
from .errors import FormatError, ValidationError
from .basis import BasisSet
from .kinematics import JointInfo, RobotConfig
from .model import DmpModel
from .principles import Coupling, ModulationConfig
from .rollout import Trajectory

FORMAT_VERSION = 1
KINDS = ("demonstration", "model", "modulation", "robot", "trajectory")


def _reject_constant(token):
    raise FormatError(f"non-finite JSON constant {token!r} is not allowed")


def _load_json(data) -> dict:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"not valid UTF-8: {e}") from None
    try:
        obj = json.loads(data, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    except RecursionError:
        raise FormatError("JSON nesting too deep") from None
    if not isinstance(obj, dict):
        raise FormatError("top-level JSON value must be an object")
    return obj


def _check_envelope(obj: dict, expected_kind: str):
    version = obj.get("format_version")
    if version is None:
        raise FormatError("missing format_version field")
    if not isinstance(version, int) or isinstance(version, bool):
        raise FormatError("format_version must be an integer")
    if version > FORMAT_VERSION:
        raise FormatError(
            f"format_version {version} is newer than supported "
            f"version {FORMAT_VERSION}")
    if version < 1:
        raise FormatError(f"format_version {version} is not valid")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise FormatError(f"unknown kind {kind!r}")
    if kind != expected_kind:
        raise FormatError(f"expected kind {expected_kind!r}, found {kind!r}")


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _get(obj: dict, key: str):
    if key not in obj:
        raise FormatError(f"missing field {key!r}")
    return obj[key]


def _float(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FormatError(f"{where}: expected a number, found {value!r}")
    f = float(value)
    if not np.isfinite(f):
        raise FormatError(f"{where}: value must be finite")
    return f


def _float_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise FormatError(f"{where}: expected a list")
    return [_float(v, f"{where}[{i}]") for i, v in enumerate(value)]


def _float_matrix(value, where: str) -> list:
    if not isinstance(value, list) or not value:
        raise FormatError(f"{where}: expected a non-empty list of rows")
    rows = [_float_list(r, f"{where}[{i}]") for i, r in enumerate(value)]
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise FormatError(f"{where}: rows have unequal lengths")
    return rows


def _wrap_validation(builder, *args, **kwargs):
    try:
        return builder(*args, **kwargs)
    except (ValidationError, ValueError, TypeError) as e:
        raise FormatError(f"invalid content: {e}") from None


# ---------------------------------------------------------------------------
# demonstration CSV


def serialize_demo_csv(demo: Demonstration) -> str:
    lines = [f"# dt={demo.dt!r}"]
    if demo.dim_names is not None:
        lines.append("# dims=" + ";".join(demo.dim_names))
    for row in demo.positions:
        lines.append(";".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_demo_csv(data) -> Demonstration:
    """Parse a demonstration from semicolon CSV.

    The first line must be the comment `# dt=<seconds>`; an optional
    `# dims=<name;name;...>` comment names the columns. Every further
    non-comment line holds one `.`-decimal number per dimension.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"not valid UTF-8: {e}") from None
    dt = None
    dim_names = None
    rows = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("dt="):
                if dt is not None:
                    raise FormatError(f"line {lineno}: duplicate dt header")
                try:
                    dt = float(body[3:].strip())
                except ValueError:
                    raise FormatError(
                        f"line {lineno}: cannot parse dt value") from None
                if not np.isfinite(dt) or dt <= 0.0:
                    raise FormatError(f"line {lineno}: dt must be positive")
            elif body.startswith("dims="):
                dim_names = tuple(body[5:].split(";"))
            continue
        if dt is None:
            raise FormatError(
                f"line {lineno}: data before the required '# dt=<seconds>' "
                "header")
        cells = line.split(";")
        values = []
        for col, cell in enumerate(cells):
            try:
                v = float(cell)
            except ValueError:
                raise FormatError(
                    f"line {lineno}, column {col}: {cell!r} is not a "
                    "number") from None
            if not np.isfinite(v):
                raise FormatError(
                    f"line {lineno}, column {col}: non-finite value")
            values.append(v)
        if rows and len(values) != len(rows[0]):
            raise FormatError(
                f"line {lineno}: ragged row ({len(values)} cells, expected "
                f"{len(rows[0])})")
        rows.append(values)
    if dt is None:
        raise FormatError("missing '# dt=<seconds>' header line")
    if not rows:
        raise FormatError("no data rows")
    if dim_names is not None and len(dim_names) != len(rows[0]):
        raise FormatError("dims header does not match the column count")
    return _wrap_validation(Demonstration, dt=dt, positions=np.array(rows),
                            dim_names=dim_names)


# ---------------------------------------------------------------------------
# model JSON


def model_to_json(model: DmpModel) -> str:
    obj = {
        "format_version": FORMAT_VERSION,
        "kind": "model",
        "alpha": model.alpha,
        "beta": model.beta,
        "tau": model.tau,
        "dt": model.dt,
        "basis": {
            "count": model.basis.count,
            "centers": [float(c) for c in model.basis.centers],
            "widths": [float(w) for w in model.basis.widths],
        },
        "weights": [[float(v) for v in row] for row in model.weights],
        "goal": [float(v) for v in model.goal],
        "start": [float(v) for v in model.start],
    }
    if model.dim_names is not None:
        obj["dim_names"] = list(model.dim_names)
    return _dump_json(obj)


def model_from_json(data) -> DmpModel:
    obj = _load_json(data)
    _check_envelope(obj, "model")
    alpha = _float(_get(obj, "alpha"), "alpha")
    beta = _float(_get(obj, "beta"), "beta")
    if alpha != 4.0 * beta:
        raise FormatError(
            f"gains alpha={alpha!r}, beta={beta!r} break the critical-"
            "damping invariant alpha == 4 * beta")
    basis_obj = _get(obj, "basis")
    if not isinstance(basis_obj, dict):
        raise FormatError("basis: expected an object")
    centers = _float_list(_get(basis_obj, "centers"), "basis.centers")
    widths = _float_list(_get(basis_obj, "widths"), "basis.widths")
    count = _get(basis_obj, "count")
    if count != len(centers):
        raise FormatError("basis.count does not match centers length")
    basis = _wrap_validation(BasisSet, centers=np.array(centers),
                             widths=np.array(widths))
    weights = _float_matrix(_get(obj, "weights"), "weights")
    dim_names = obj.get("dim_names")
    if dim_names is not None:
        if (not isinstance(dim_names, list)
                or not all(isinstance(n, str) for n in dim_names)):
            raise FormatError("dim_names must be a list of strings")
        dim_names = tuple(dim_names)
    return _wrap_validation(
        DmpModel,
        basis=basis,
        weights=np.array(weights),
        goal=np.array(_float_list(_get(obj, "goal"), "goal")),
        start=np.array(_float_list(_get(obj, "start"), "start")),
        tau=_float(_get(obj, "tau"), "tau"),
        dt=_float(_get(obj, "dt"), "dt"),
        alpha=alpha,
        beta=beta,
        dim_names=dim_names,
    )


# ---------------------------------------------------------------------------
# modulation config JSON


def _coupling_to_obj(c: Coupling) -> dict:
    return {"source": c.source, "target": c.target, "delta": c.delta}


def _coupling_from_obj(obj, where: str) -> Coupling:
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected an object")
    for key in ("source", "target"):
        v = _get(obj, key)
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise FormatError(f"{where}.{key}: expected a non-negative integer")
    delta = obj.get("delta", 1)
    if delta not in (-1, 1):
        raise FormatError(f"{where}.delta: must be 1 or -1")
    return _wrap_validation(Coupling, source=obj["source"],
                            target=obj["target"], delta=delta)


def modulation_to_json(config: ModulationConfig) -> str:
    obj = {
        "format_version": FORMAT_VERSION,
        "kind": "modulation",
        "p_arc": config.p_arc,
        "p_ant": config.p_ant,
        "t_ant": config.t_ant,
        "t_ant_fraction": config.t_ant_fraction,
        "n_ant": config.n_ant,
        "important_dims": (list(config.important_dims)
                           if config.important_dims is not None else None),
        "slow_k": config.slow_k,
        "p_time": config.p_time,
        "timing_sectors": ([[f, s] for f, s in config.timing_sectors]
                           if config.timing_sectors is not None else None),
        "p_exa": config.p_exa,
        "p_sec": config.p_sec,
        "sec_couplings": [_coupling_to_obj(c) for c in config.sec_couplings],
        "p_follow": config.p_follow,
        "follow_couplings": [_coupling_to_obj(c) for c in config.follow_couplings],
        "p_rand": config.p_rand,
        "seed": config.seed,
        "goal_override": (list(config.goal_override)
                          if config.goal_override is not None else None),
    }
    return _dump_json(obj)


def modulation_from_json(data) -> ModulationConfig:
    obj = _load_json(data)
    _check_envelope(obj, "modulation")
    kwargs = {}
    for key in ("p_arc", "p_ant", "t_ant", "p_time", "p_exa", "p_sec",
                "p_follow", "p_rand"):
        if key in obj:
            kwargs[key] = _float(obj[key], key)
    for key in ("t_ant_fraction", "slow_k"):
        if obj.get(key) is not None:
            kwargs[key] = _float(obj[key], key)
    for key in ("n_ant", "seed"):
        if key in obj:
            v = obj[key]
            if not isinstance(v, int) or isinstance(v, bool):
                raise FormatError(f"{key}: expected an integer")
            kwargs[key] = v
    if obj.get("important_dims") is not None:
        dims = obj["important_dims"]
        if (not isinstance(dims, list)
                or not all(isinstance(d, int) and not isinstance(d, bool)
                           and d >= 0 for d in dims)):
            raise FormatError("important_dims must be a list of indices")
        kwargs["important_dims"] = tuple(dims)
    if obj.get("timing_sectors") is not None:
        sectors = obj["timing_sectors"]
        if not isinstance(sectors, list):
            raise FormatError("timing_sectors must be a list of pairs")
        parsed = []
        for i, pair in enumerate(sectors):
            if not isinstance(pair, list) or len(pair) != 2:
                raise FormatError(
                    f"timing_sectors[{i}]: expected [fraction, speed]")
            parsed.append((_float(pair[0], f"timing_sectors[{i}][0]"),
                           _float(pair[1], f"timing_sectors[{i}][1]")))
        kwargs["timing_sectors"] = tuple(parsed)
    for key in ("sec_couplings", "follow_couplings"):
        if key in obj:
            lst = obj[key]
            if not isinstance(lst, list):
                raise FormatError(f"{key}: expected a list")
            kwargs[key] = tuple(_coupling_from_obj(c, f"{key}[{i}]")
                                for i, c in enumerate(lst))
    if obj.get("goal_override") is not None:
        kwargs["goal_override"] = tuple(
            _float_list(obj["goal_override"], "goal_override"))
    return _wrap_validation(ModulationConfig, **kwargs)


# ---------------------------------------------------------------------------
# robot config JSON


def robot_to_json(robot: RobotConfig) -> str:
    obj = {
        "format_version": FORMAT_VERSION,
        "kind": "robot",
        "axis_threshold_deg": robot.axis_threshold,
        "joints": [
            {
                "name": j.name,
                "parent": j.parent,
                "axis": list(j.axis),
                "dim_index": j.dim_index,
                **({"limits": list(j.limits)} if j.limits is not None else {}),
            }
            for j in robot.joints
        ],
    }
    return _dump_json(obj)


def robot_from_json(data) -> RobotConfig:
    obj = _load_json(data)
    _check_envelope(obj, "robot")
    joints_obj = _get(obj, "joints")
    if not isinstance(joints_obj, list) or not joints_obj:
        raise FormatError("joints: expected a non-empty list")
    joints = []
    for i, jo in enumerate(joints_obj):
        where = f"joints[{i}]"
        if not isinstance(jo, dict):
            raise FormatError(f"{where}: expected an object")
        name = _get(jo, "name")
        if not isinstance(name, str) or not name:
            raise FormatError(f"{where}.name: expected a non-empty string")
        parent = jo.get("parent")
        if parent is not None and not isinstance(parent, str):
            raise FormatError(f"{where}.parent: expected a string or null")
        axis = _float_list(_get(jo, "axis"), f"{where}.axis")
        dim_index = _get(jo, "dim_index")
        if not isinstance(dim_index, int) or isinstance(dim_index, bool):
            raise FormatError(f"{where}.dim_index: expected an integer")
        limits = jo.get("limits")
        if limits is not None:
            limits = tuple(_float_list(limits, f"{where}.limits"))
            if len(limits) != 2:
                raise FormatError(f"{where}.limits: expected [min, max]")
        joints.append(_wrap_validation(
            JointInfo, name=name, parent=parent, axis=tuple(axis),
            dim_index=dim_index, limits=limits))
    threshold = obj.get("axis_threshold_deg", 10.0)
    return _wrap_validation(RobotConfig, joints=tuple(joints),
                            axis_threshold=_float(threshold,
                                                  "axis_threshold_deg"))


def builtin_robot_names() -> list:
    """Names of the example robot configs shipped with the package."""
    return ["head_1dof", "arm_7dof", "humanoid_17dof"]


def builtin_robot(name: str) -> RobotConfig:
    """Load a shipped example robot config by name."""
    if name not in builtin_robot_names():
        raise FormatError(f"unknown built-in robot {name!r}; available: "
                          + ", ".join(builtin_robot_names()))
    text = resources.files("animdmp.robots").joinpath(f"{name}.json").read_text()
    return robot_from_json(text)


# ---------------------------------------------------------------------------
# trajectory JSON / CSV


def trajectory_to_json(traj: Trajectory) -> str:
    obj = {
        "format_version": FORMAT_VERSION,
        "kind": "trajectory",
        "dt": traj.dt,
        "positions": [[float(v) for v in row] for row in traj.positions],
        "velocities": [[float(v) for v in row] for row in traj.velocities],
        "accelerations": [[float(v) for v in row] for row in traj.accelerations],
        "phase": [float(v) for v in traj.phase],
    }
    return _dump_json(obj)


def trajectory_from_json(data) -> Trajectory:
    obj = _load_json(data)
    _check_envelope(obj, "trajectory")
    return _wrap_validation(
        Trajectory,
        dt=_float(_get(obj, "dt"), "dt"),
        positions=np.array(_float_matrix(_get(obj, "positions"), "positions")),
        velocities=np.array(_float_matrix(_get(obj, "velocities"), "velocities")),
        accelerations=np.array(_float_matrix(_get(obj, "accelerations"),
                                             "accelerations")),
        phase=np.array(_float_list(_get(obj, "phase"), "phase")),
    )


def trajectory_to_csv(traj: Trajectory) -> str:
    """Semicolon CSV: time, per-dim positions/velocities/accelerations, phase."""
    ndim = traj.n_dims
    header = ["time"]
    header += [f"pos_{d}" for d in range(ndim)]
    header += [f"vel_{d}" for d in range(ndim)]
    header += [f"acc_{d}" for d in range(ndim)]
    header.append("phase")
    lines = [f"# dt={traj.dt!r}", ";".join(header)]
    times = traj.times()
    for i in range(traj.n_steps):
        cells = [repr(float(times[i]))]
        cells += [repr(float(v)) for v in traj.positions[i]]
        cells += [repr(float(v)) for v in traj.velocities[i]]
        cells += [repr(float(v)) for v in traj.accelerations[i]]
        cells.append(repr(float(traj.phase[i])))
        lines.append(";".join(cells))
    return "\n".join(lines) + "\n"


def trajectory_from_csv(data) -> Trajectory:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"not valid UTF-8: {e}") from None
    dt = None
    header = None
    rows = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("dt="):
                try:
                    dt = float(body[3:].strip())
                except ValueError:
                    raise FormatError(
                        f"line {lineno}: cannot parse dt value") from None
            continue
        if header is None:
            header = line.split(";")
            if header[0] != "time" or header[-1] != "phase":
                raise FormatError(
                    f"line {lineno}: expected a 'time;...;phase' header row")
            if (len(header) - 2) % 3 != 0 or len(header) < 5:
                raise FormatError(f"line {lineno}: malformed column set")
            continue
        cells = line.split(";")
        if len(cells) != len(header):
            raise FormatError(
                f"line {lineno}: ragged row ({len(cells)} cells, expected "
                f"{len(header)})")
        values = []
        for col, cell in enumerate(cells):
            try:
                values.append(float(cell))
            except ValueError:
                raise FormatError(
                    f"line {lineno}, column {col}: {cell!r} is not a "
                    "number") from None
        rows.append(values)
    if dt is None:
        raise FormatError("missing '# dt=<seconds>' header line")
    if header is None or not rows:
        raise FormatError("no data rows")
    data_arr = np.array(rows)
    ndim = (len(header) - 2) // 3
    return _wrap_validation(
        Trajectory,
        dt=dt,
        positions=data_arr[:, 1:1 + ndim],
        velocities=data_arr[:, 1 + ndim:1 + 2 * ndim],
        accelerations=data_arr[:, 1 + 2 * ndim:1 + 3 * ndim],
        phase=data_arr[:, -1],
    )


def trajectory_export(traj: Trajectory, fmt: str) -> bytes:
    """Render a trajectory as 'csv' or 'json' bytes (deterministic)."""
    if fmt == "csv":
        return trajectory_to_csv(traj).encode("utf-8")
    if fmt == "json":
        return trajectory_to_json(traj).encode("utf-8")
    raise FormatError(f"unknown trajectory format {fmt!r}")

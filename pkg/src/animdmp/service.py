"""HTTP facade for the playground: store demos/models, serve rollouts.

Every response is a pure function of stored artifacts and the request;
trajectory bytes come from the same serializers the CLI uses, so the two
surfaces produce numerically identical output. The store is in-memory,
append-only, and keyed by content hash, which makes uploads idempotent
and race-free; an optional directory persists artifacts across restarts.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import formats
from .errors import FormatError, LearnError, NumericAbort, ValidationError
from .kinematics import Violation
from .learning import learn
from .principles import modulated_rollout

MAX_STEPS_DEFAULT = 1_000_000


def _content_id(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()[:16]


class ArtifactStore:
    """Append-only content-addressed store for demos and models."""

    def __init__(self, persist_dir: str | None = None):
        self.demos = {}
        self.models = {}
        self.model_meta = {}
        self.persist_dir = Path(persist_dir) if persist_dir else None
        if self.persist_dir is not None:
            self._load_persisted()

    def _load_persisted(self):
        for path in sorted(self.persist_dir.glob("demo_*.csv")):
            raw = path.read_bytes()
            self.demos[_content_id(raw)] = (formats.parse_demo_csv(raw), raw)
        for path in sorted(self.persist_dir.glob("model_*.json")):
            raw = path.read_bytes()
            self.models[_content_id(raw)] = (formats.model_from_json(raw), raw)

    def _persist(self, prefix: str, artifact_id: str, suffix: str, raw: bytes):
        if self.persist_dir is None:
            return
        self.persist_dir.mkdir(parents=True, exist_ok=True)
        path = self.persist_dir / f"{prefix}_{artifact_id}.{suffix}"
        if not path.exists():
            path.write_bytes(raw)

    def add_demo(self, raw: bytes) -> str:
        demo_id = _content_id(raw)
        if demo_id not in self.demos:
            self.demos[demo_id] = (formats.parse_demo_csv(raw), raw)
            self._persist("demo", demo_id, "csv", raw)
        return demo_id

    def add_model(self, model, meta: dict) -> str:
        raw = formats.model_to_json(model).encode("utf-8")
        model_id = _content_id(raw)
        if model_id not in self.models:
            self.models[model_id] = (model, raw)
            self.model_meta[model_id] = meta
            self._persist("model", model_id, "json", raw)
        return model_id


def _error(status: int, message: str, violations=None) -> JSONResponse:
    body = {"error": {"message": message}}
    if violations:
        body["error"]["violations"] = [
            {"rule": v.rule, "message": v.message} for v in violations]
    return JSONResponse(body, status_code=status)


def create_app(ui_dir: str | None = None, persist_dir: str | None = None,
               max_steps: int = MAX_STEPS_DEFAULT,
               preload_samples: bool = False) -> FastAPI:
    """Build the service app.

    ui_dir serves a built playground bundle at the root path;
    max_steps caps the rollout row count per response.
    """
    app = FastAPI(title="animdmp service", docs_url="/docs")
    store = ArtifactStore(persist_dir)
    app.state.store = store

    if preload_samples:
        from .synth import feature_demo, min_jerk_demo, sphere_spiral_demo

        for demo in (min_jerk_demo(), feature_demo(), sphere_spiral_demo()):
            store.add_demo(formats.serialize_demo_csv(demo).encode("utf-8"))

    @app.post("/api/demos", status_code=201)
    async def upload_demo(request: Request):
        raw = await request.body()
        try:
            demo_id = store.add_demo(raw)
        except FormatError as e:
            return _error(400, str(e))
        return JSONResponse({"demo_id": demo_id}, status_code=201)

    @app.get("/api/demos")
    def list_demos():
        return {
            "demos": [
                {"demo_id": demo_id, "n_steps": demo.n_steps,
                 "n_dims": demo.n_dims, "dt": demo.dt,
                 "dim_names": list(demo.dim_names) if demo.dim_names else None}
                for demo_id, (demo, _) in sorted(store.demos.items())
            ]
        }

    @app.get("/api/demos/{demo_id}")
    def get_demo(demo_id: str):
        if demo_id not in store.demos:
            return _error(404, f"unknown demo {demo_id!r}")
        demo, _ = store.demos[demo_id]
        return Response(content=formats.serialize_demo_csv(demo),
                        media_type="text/csv")

    @app.post("/api/models", status_code=201)
    async def train_model(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "request body must be JSON")
        if not isinstance(body, dict) or "demo_id" not in body:
            return _error(400, "body must be an object with demo_id")
        demo_id = body["demo_id"]
        if demo_id not in store.demos:
            return _error(404, f"unknown demo {demo_id!r}")
        n_basis = body.get("n_basis", 30)
        tau = body.get("tau")
        alpha = body.get("alpha", 25.0)
        demo, _ = store.demos[demo_id]
        try:
            model = learn(demo, int(n_basis), tau=tau, alpha=float(alpha))
        except (LearnError, ValidationError, TypeError, ValueError) as e:
            return _error(422, str(e))
        from .cli import reconstruction_rmse

        rmse = reconstruction_rmse(model, demo)
        model_id = store.add_model(model, {"demo_id": demo_id,
                                           "n_basis": int(n_basis),
                                           "rmse": rmse})
        return JSONResponse({"model_id": model_id, "rmse": rmse},
                            status_code=201)

    @app.get("/api/models")
    def list_models():
        return {
            "models": [
                {"model_id": model_id, "n_dims": model.n_dims,
                 "tau": model.tau, "dt": model.dt,
                 "dim_names": list(model.dim_names) if model.dim_names else None,
                 **store.model_meta.get(model_id, {})}
                for model_id, (model, _) in sorted(store.models.items())
            ]
        }

    @app.get("/api/models/{model_id}")
    def get_model(model_id: str):
        if model_id not in store.models:
            return _error(404, f"unknown model {model_id!r}")
        _, raw = store.models[model_id]
        return Response(content=raw, media_type="application/json")

    @app.get("/api/robots")
    def list_robots():
        return {"robots": formats.builtin_robot_names()}

    @app.get("/api/robots/{name}")
    def get_robot(name: str):
        try:
            robot = formats.builtin_robot(name)
        except FormatError as e:
            return _error(404, str(e))
        return Response(content=formats.robot_to_json(robot),
                        media_type="application/json")

    @app.post("/api/models/{model_id}/rollout")
    async def rollout_model(model_id: str, request: Request,
                            robot: str | None = None, settle: float = 0.5,
                            format: str = "json"):
        if model_id not in store.models:
            return _error(404, f"unknown model {model_id!r}")
        model, _ = store.models[model_id]
        raw = await request.body()
        try:
            config = formats.modulation_from_json(raw)
        except FormatError as e:
            return _error(400, str(e))
        robot_config = None
        if robot is not None:
            try:
                robot_config = formats.builtin_robot(robot)
            except FormatError as e:
                return _error(404, str(e))
        if format not in ("json", "csv"):
            return _error(400, f"unknown format {format!r}")
        if settle < 0.0:
            return _error(422, "settle must be >= 0")
        scaled_tau = config.p_time * model.tau
        rows = (int(round(scaled_tau / model.dt)) + 1
                + int(round(settle * scaled_tau / model.dt)))
        if rows > max_steps:
            return _error(
                422, f"rollout would produce {rows} rows, over the "
                f"configured cap of {max_steps}",
                violations=[Violation(rule="max-steps",
                                      message="row cap exceeded")])
        try:
            traj = modulated_rollout(model, config, robot=robot_config,
                                     settle_fraction=settle)
        except ValidationError as e:
            violations = e.violations
            if not violations and e.rule is not None:
                violations = [Violation(rule=e.rule, message=str(e))]
            return _error(422, str(e), violations=violations)
        except NumericAbort as e:
            return _error(422, str(e))
        media = "text/csv" if format == "csv" else "application/json"
        return Response(content=formats.trajectory_export(traj, format),
                        media_type=media)

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app

"""HTTP query service over an ingested dataset and its mined artifacts.

Endpoints:
    GET  /users
    GET  /users/{user_id}/patterns?min_support=
    GET  /users/{user_id}/graph?min_support=
    GET  /crowd?hour=&min_support=&precision=
    POST /users?replace=&relax=          (body: foursquare-tsv for one user)
    POST /sweep                          (body: {"thresholds": [...]})

Errors are ``{"code", "message"}`` bodies with conventional status codes.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, replace
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import crowd, experiments, ingest, mining, pattern_graph, storage
from .errors import DatasetFormatError, EmptyDatabaseError
from .grid import DEFAULT_PRECISION

DEFAULT_MIN_SUPPORT = 0.5


@dataclass(frozen=True)
class ServiceConfig:
    data_dir: Path | None = None
    default_min_support: float = DEFAULT_MIN_SUPPORT
    default_precision: float = DEFAULT_PRECISION
    anonymize: bool = False
    cors_origins: tuple[str, ...] = ("*",)

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        """Defaults from CROWDMOB_* environment variables, then overrides."""
        env = os.environ
        values = {
            "data_dir": Path(env["CROWDMOB_DATA_DIR"]) if env.get("CROWDMOB_DATA_DIR") else None,
            "default_min_support": float(env.get("CROWDMOB_MIN_SUPPORT", DEFAULT_MIN_SUPPORT)),
            "default_precision": float(env.get("CROWDMOB_PRECISION", DEFAULT_PRECISION)),
            "anonymize": env.get("CROWDMOB_ANONYMIZE", "") in ("1", "true", "yes"),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class ApiError(Exception):
    def __init__(self, status_code: int, code: str, message: str):
        super().__init__(message)
        self.status_code = status_code
        self.code = code
        self.message = message


class ServiceState:
    """Holds the current dataset; uploads swap it atomically under a lock."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self._write_lock = threading.Lock()
        self.dataset: storage.DatasetState | None = None
        if config.data_dir and (Path(config.data_dir) / storage.META_FILE).exists():
            checkins, meta = storage.load_dataset(config.data_dir)
            self.dataset = storage.DatasetState(checkins, meta, cache_dir=Path(config.data_dir) / "cache")

    def require_dataset(self) -> storage.DatasetState:
        dataset = self.dataset
        if dataset is None:
            raise ApiError(409, "no_dataset", "no dataset is loaded")
        return dataset

    def upload(self, body: bytes, replace_user: bool, relax: bool) -> dict:
        try:
            parsed = ingest.parse_checkins(body)
        except DatasetFormatError as exc:
            raise ApiError(422, "unprocessable", str(exc))
        user_ids = {c.user_id for c in parsed.records}
        if len(user_ids) != 1:
            raise ApiError(422, "unprocessable", f"body must contain exactly one user, got {len(user_ids)}")
        user_id = user_ids.pop()

        with self._write_lock:
            current = self.dataset
            if current is None:
                checkins, meta = [], storage.DatasetMeta(precision=self.config.default_precision)
            else:
                checkins, meta = current.checkins, current.meta
            if any(c.user_id == user_id for c in checkins):
                if not replace_user:
                    raise ApiError(409, "conflict", f"user {user_id!r} already exists; set replace=1 to overwrite")
                checkins = [c for c in checkins if c.user_id != user_id]
            merged = checkins + parsed.records
            relaxed = set(meta.relaxed_users)
            if relax:
                relaxed.add(user_id)
            else:
                relaxed.discard(user_id)
            meta = replace(meta, relaxed_users=frozenset(relaxed))
            cache_dir = None
            if self.config.data_dir:
                storage.save_dataset(self.config.data_dir, merged, meta)
                cache_dir = Path(self.config.data_dir) / "cache"
            fresh = storage.DatasetState(merged, meta, cache_dir=cache_dir)
            self.dataset = fresh

        warnings = []
        if parsed.malformed:
            warnings.append(
                f"skipped {len(parsed.malformed)} malformed line(s), first at line {parsed.malformed[0][0]}"
            )
        day_count = len(fresh.qualification().qualifying_days.get(user_id, frozenset()))
        if user_id not in fresh.qualified_users():
            warnings.append(
                f"user {user_id!r} does not meet the qualification thresholds "
                f"({day_count} qualifying day(s), more than {fresh.meta.min_days} required)"
            )
        return {"user_id": user_id, "qualifying_day_count": day_count, "warnings": warnings}


def _check_min_support(value: float) -> float:
    if not 0.0 < value <= 1.0:
        raise ApiError(400, "bad_request", f"min_support must be in (0, 1], got {value}")
    return value


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    app = FastAPI(title="crowdmob", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    state = ServiceState(config)
    app.state.service = state

    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status_code, content={"code": exc.code, "message": exc.message})

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"code": "bad_request", "message": str(exc.errors())})

    @app.get("/users")
    def list_users():
        dataset = state.require_dataset()
        qual = dataset.qualification()
        per_user = dataset.user_events()
        return [
            {
                "user_id": user,
                "qualifying_day_count": len(qual.qualifying_days.get(user, frozenset())),
                "record_count": len(per_user.get(user, [])),
            }
            for user in dataset.qualified_users()
        ]

    def _user_patterns(user_id: str, min_support: float) -> mining.PatternSet:
        dataset = state.require_dataset()
        _check_min_support(min_support)
        if not dataset.is_known_user(user_id):
            raise ApiError(404, "not_found", f"unknown user {user_id!r}")
        if user_id not in dataset.qualified_users():
            raise ApiError(404, "not_found", f"user {user_id!r} has no qualifying days to mine")
        try:
            return dataset.patterns(user_id, mining.MinerConfig(min_support=min_support))
        except EmptyDatabaseError as exc:
            raise ApiError(404, "not_found", str(exc))

    @app.get("/users/{user_id}/patterns")
    def get_user_patterns(user_id: str, min_support: float | None = None):
        sigma = config.default_min_support if min_support is None else min_support
        return mining.patterns_document(_user_patterns(user_id, sigma))

    @app.get("/users/{user_id}/graph")
    def get_user_graph(user_id: str, min_support: float | None = None):
        sigma = config.default_min_support if min_support is None else min_support
        patterns = _user_patterns(user_id, sigma)
        doc = pattern_graph.graph_document(pattern_graph.build_graph(patterns))
        doc["user_id"] = user_id
        doc["min_support"] = sigma
        return doc

    @app.get("/crowd")
    def get_crowd(hour: int, min_support: float | None = None, precision: float | None = None):
        dataset = state.require_dataset()
        if not 0 <= hour <= 23:
            raise ApiError(400, "bad_request", f"hour must be in [0, 23], got {hour}")
        sigma = _check_min_support(config.default_min_support if min_support is None else min_support)
        precision = config.default_precision if precision is None else precision
        if precision <= 0:
            raise ApiError(400, "bad_request", f"precision must be positive, got {precision}")
        snapshot = dataset.snapshots(sigma, precision)[hour]
        doc = crowd.snapshot_document(
            snapshot,
            dominant=dataset.dominant_categories(precision),
            anonymize=config.anonymize,
        )
        doc["min_support"] = sigma
        doc["precision"] = precision
        return doc

    @app.post("/users", status_code=201)
    async def upload_history(request: Request, replace: bool = False, relax: bool = False):
        body = await request.body()
        return state.upload(body, replace_user=replace, relax=relax)

    @app.post("/sweep")
    def run_sweep(body: dict):
        dataset = state.require_dataset()
        thresholds = body.get("thresholds")
        if not isinstance(thresholds, list) or not thresholds:
            raise ApiError(400, "bad_request", "body must be {\"thresholds\": [..]} with at least one value")
        for sigma in thresholds:
            if not isinstance(sigma, (int, float)) or not 0.0 < float(sigma) <= 1.0:
                raise ApiError(400, "bad_request", f"min_support must be in (0, 1], got {sigma}")
        dbs = []
        for user in dataset.qualified_users():
            try:
                dbs.append(dataset.database(user))
            except EmptyDatabaseError:
                continue
        if not dbs:
            raise ApiError(409, "no_dataset", "no minable users in the dataset")
        results = experiments.support_sweep(dbs, [float(s) for s in thresholds])
        return [
            {
                "min_support": r.min_support,
                "mean_count": r.mean_count,
                "mean_avg_length": r.mean_avg_length,
                "per_user_counts": r.per_user_counts,
                "per_user_avg_length": r.per_user_avg_length,
                "skipped_users": list(r.skipped_users),
            }
            for r in results
        ]

    return app

"""Record real service responses as JSON fixtures for the UI contract tests.

Run from the repository root (needs the crowdmob package installed):

    python frontend/fixtures/record_fixtures.py
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from crowdmob import parse_checkins
from crowdmob.service import ServiceConfig, create_app
from crowdmob.storage import DatasetMeta, save_dataset
from crowdmob.synthetic import two_user_fixture_lines

OUT = Path(__file__).resolve().parent


def record() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        records = parse_checkins("\n".join(two_user_fixture_lines())).records
        save_dataset(Path(tmp) / "data", records, DatasetMeta())
        app = create_app(ServiceConfig(data_dir=Path(tmp) / "data"))
        with TestClient(app) as client:
            fixtures = {
                "users.json": client.get("/users"),
                "user_u1_patterns.json": client.get("/users/u1/patterns", params={"min_support": 0.5}),
                "user_u1_graph.json": client.get("/users/u1/graph", params={"min_support": 0.5}),
                "crowd_hour8.json": client.get("/crowd", params={"hour": 8, "min_support": 0.5}),
                "crowd_hour3.json": client.get("/crowd", params={"hour": 3, "min_support": 0.5}),
                "sweep.json": client.post("/sweep", json={"thresholds": [0.25, 0.5, 0.75]}),
            }
            for name, response in fixtures.items():
                assert response.status_code == 200, (name, response.status_code, response.text)
                (OUT / name).write_text(json.dumps(response.json(), indent=2) + "\n", encoding="utf-8")
                print(f"wrote {OUT / name}")


if __name__ == "__main__":
    record()

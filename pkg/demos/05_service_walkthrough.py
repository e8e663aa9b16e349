"""Walkthrough: the HTTP service end to end, in process via the test client.

Run with: python demos/05_service_walkthrough.py
(For a real server: crowdmob serve --dataset <dir> --port 8000)
"""

import json
import tempfile
from datetime import time
from pathlib import Path

from fastapi.testclient import TestClient

from crowdmob import parse_checkins
from crowdmob.service import ServiceConfig, create_app
from crowdmob.storage import DatasetMeta, save_dataset
from crowdmob.synthetic import daily_routine_lines, two_user_fixture_lines


def show(label, payload):
    print(f"\n=== {label} ===")
    print(json.dumps(payload, indent=2)[:800])


with tempfile.TemporaryDirectory() as tmp:
    data_dir = Path(tmp) / "data"
    records = parse_checkins("\n".join(two_user_fixture_lines())).records
    save_dataset(data_dir, records, DatasetMeta())

    app = create_app(ServiceConfig(data_dir=data_dir))
    with TestClient(app) as client:
        show("GET /users", client.get("/users").json())
        show(
            "GET /users/u1/patterns?min_support=0.5",
            client.get("/users/u1/patterns", params={"min_support": 0.5}).json(),
        )
        show(
            "GET /users/u1/graph?min_support=0.5",
            client.get("/users/u1/graph", params={"min_support": 0.5}).json(),
        )
        show("GET /crowd?hour=8", client.get("/crowd", params={"hour": 8}).json())
        show("GET /crowd?hour=3 (nobody is anywhere at 3am)", client.get("/crowd", params={"hour": 3}).json())

        # A visitor shares ten days of history; relax admits them for the demo.
        body = "\n".join(daily_routine_lines("visitor", 10, [(time(12, 0), "Eatery"), (time(13, 0), "Shops")]))
        show(
            "POST /users?relax=true (ten-day visitor history)",
            client.post("/users", params={"relax": "true"}, content=body).json(),
        )
        show("GET /users (visitor now listed)", client.get("/users").json())
        show(
            "GET /users/visitor/graph?min_support=0.8",
            client.get("/users/visitor/graph", params={"min_support": 0.8}).json(),
        )
        show("POST /sweep {thresholds: [0.25, 0.5, 0.75]}", client.post(
            "/sweep", json={"thresholds": [0.25, 0.5, 0.75]}
        ).json())

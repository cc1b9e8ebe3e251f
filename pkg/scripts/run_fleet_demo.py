#!/usr/bin/env python3
"""Two simulated bins reporting to an in-process fleet server.

Starts the telemetry server on a local port, subscribes to its event
stream, runs a small scenario per bin with the ground-truth oracle, and
prints what the fleet saw.
"""

import argparse
import json
import threading
import time

import httpx
import uvicorn

from binsort.classifier import GroundTruthOracle
from binsort.device import DeviceConfig
from binsort.simulator import generate_synthetic_corpus, run_scenario, scenario_from_corpus
from binsort.taxonomy import BinKind
from binsort.telemetry import DeviceClient, EventLog, FleetService, create_app


def start_server(port: int, log_path: str) -> uvicorn.Server:
    service = FleetService(EventLog(log_path))
    server = uvicorn.Server(
        uvicorn.Config(create_app(service), host="127.0.0.1", port=port, log_level="warning")
    )
    threading.Thread(target=server.run, daemon=True).start()
    while not server.started:
        time.sleep(0.05)
    return server


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--port", type=int, default=8765)
    parser.add_argument("--log", default="/tmp/binsort-demo-events.log")
    parser.add_argument("--items", type=int, default=12)
    args = parser.parse_args()

    server = start_server(args.port, args.log)
    base = f"http://127.0.0.1:{args.port}"
    print(f"server up at {base}")

    corpus = generate_synthetic_corpus(seed=42, per_class=4)
    oracle = GroundTruthOracle.from_items(corpus)
    caps = {BinKind.RECYCLABLE: 4, BinKind.NON_RECYCLABLE: 4}

    for i, bin_id in enumerate(("bin-01", "bin-02"), start=1):
        scenario = scenario_from_corpus(corpus, seed=100 + i, capacities=caps, count=args.items)
        client = DeviceClient(base)
        trace = run_scenario(
            scenario, oracle, corpus, sink=client, config=DeviceConfig(bin_id=bin_id)
        )
        client.close()
        print(
            f"{bin_id}: {len(trace.cycles)} items sorted, "
            f"{trace.full_alert_count(BinKind.RECYCLABLE)} + "
            f"{trace.full_alert_count(BinKind.NON_RECYCLABLE)} full alerts"
        )

    with httpx.Client(base_url=base) as http:
        print("\nfleet registry:")
        for record in http.get("/bins").json():
            print(f"  {record['id']}: status={record['status']} locate={record['locate']}")
        frames = http.get("/events").json()
        print(f"\nevent log ({len(frames)} frames):")
        for frame in frames:
            print(" ", json.dumps({k: frame[k] for k in ("offset", "type", "bin_id")}))

    server.should_exit = True
    time.sleep(0.2)


if __name__ == "__main__":
    main()

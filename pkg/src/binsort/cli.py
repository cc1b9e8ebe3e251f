"""Command-line entry point.

Subcommands: serve, simulate, corpus, augment, train, eval, watch.
Exit codes: 0 success, 1 runtime error, 2 usage error, 3 I/O error.
Environment: BINSORT_SERVER (default server address), BINSORT_TOKEN
(bearer token, optional).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classifier.baseline import load_model, save_model, train_baseline
from .classifier.evaluate import evaluate
from .classifier.oracle import GroundTruthOracle
from .taxonomy import TrashCategory
from .imaging.augment import augment_one
from .imaging.dataset import split_dataset
from .imaging.pnm import load_corpus, save_corpus
from .rng import SplitMix64
from .simulator.corpus import generate_synthetic_corpus
from .simulator.runner import run_scenario
from .simulator.scenario import load_scenario

DEFAULT_SERVER = "http://127.0.0.1:8765"


def _env_server() -> str:
    return os.environ.get("BINSORT_SERVER", DEFAULT_SERVER)


def _env_token() -> str | None:
    return os.environ.get("BINSORT_TOKEN") or None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binsort",
        description="Smart trash bin toolkit: simulator, classifier pipeline, fleet server.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the fleet telemetry server")
    p.add_argument("--addr", default="127.0.0.1:8765", help="host:port to bind")
    p.add_argument("--log", default="events.log", help="event log file (JSON lines)")
    p.add_argument("--token", default=None, help="require this bearer token")
    p.add_argument("--ui", default=None, help="serve a dashboard build from this directory at /app")

    p = sub.add_parser("simulate", help="run a scenario on the virtual bin")
    p.add_argument("--scenario", required=True, help="scenario JSON file")
    p.add_argument("--corpus", required=True, help="image corpus directory")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--model", help="trained model file")
    group.add_argument("--oracle", action="store_true", help="use the ground-truth oracle")
    target = p.add_mutually_exclusive_group()
    target.add_argument("--server", nargs="?", const="", default=None,
                        help="send telemetry to this server (default: $BINSORT_SERVER)")
    target.add_argument("--local", action="store_true", help="record telemetry in memory only")
    p.add_argument("--bin-id", default="bin-01")
    p.add_argument("--out", default="trace.jsonl", help="trace output (JSON lines)")

    p = sub.add_parser("corpus", help="generate the synthetic labeled corpus")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--per-class", type=int, default=10)
    p.add_argument("--out", required=True, help="corpus output directory")

    p = sub.add_parser("augment", help="write 4 augmented variants per corpus image")
    p.add_argument("--in", dest="in_dir", required=True, help="input corpus directory")
    p.add_argument("--out", required=True, help="output corpus directory")
    p.add_argument("--seed", type=int, default=7)

    p = sub.add_parser("train", help="train the baseline classifier on an 80/20 split")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True, help="model output file")
    p.add_argument("--seed", type=int, default=7, help="split seed")
    p.add_argument("--train-fraction", type=float, default=0.8)

    p = sub.add_parser("eval", help="evaluate a model on a corpus")
    p.add_argument("--model", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--split-seed", type=int, default=None,
                   help="evaluate only one side of the 80/20 split with this seed")
    p.add_argument("--split", choices=("train", "val"), default="val")
    p.add_argument("--train-fraction", type=float, default=0.8)
    p.add_argument("--json", action="store_true", help="print the report as JSON")

    p = sub.add_parser("watch", help="stream fleet events to stdout")
    p.add_argument("--server", default=None, help="server address (default: $BINSORT_SERVER)")
    p.add_argument("--since", type=int, default=None, help="replay from this offset")

    return parser


def cmd_serve(args) -> int:
    import uvicorn

    from .telemetry.eventlog import EventLog
    from .telemetry.registry import FleetService
    from .telemetry.server import create_app

    host, _, port = args.addr.rpartition(":")
    service = FleetService(EventLog(args.log))
    app = create_app(service, token=args.token or _env_token(), ui_dir=args.ui)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port), log_level="info")
    return 0


def cmd_simulate(args) -> int:
    scenario = load_scenario(args.scenario)
    corpus = load_corpus(args.corpus)
    if args.oracle:
        classifier = GroundTruthOracle.from_items(corpus)
    else:
        classifier = load_model(args.model)

    sink = None
    client = None
    if args.server is not None:
        from .telemetry.client import DeviceClient

        client = DeviceClient(args.server or _env_server(), token=_env_token())
        sink = client
    try:
        from .device.config import DeviceConfig

        trace = run_scenario(
            scenario, classifier, corpus, sink=sink, config=DeviceConfig(bin_id=args.bin_id)
        )
    finally:
        if client is not None:
            client.close()

    trace.write_jsonl(args.out)
    print(f"cycles completed: {len(trace.cycles)}  aborted: {len(trace.aborted)}")
    print(f"classification accuracy: {trace.classification_accuracy:.4f}")
    print(f"bin accuracy: {trace.bin_accuracy:.4f}")
    for kind, state in trace.final_fill.items():
        print(f"{kind.slug}: {state.item_count}/{state.capacity} items, "
              f"{trace.full_alert_count(kind)} full alert(s)")
    print(f"trace written to {args.out}")
    return 0


def cmd_corpus(args) -> int:
    items = generate_synthetic_corpus(args.seed, args.per_class)
    save_corpus(items, args.out)
    print(f"wrote {len(items)} images ({args.per_class} per class) to {args.out}")
    return 0


def cmd_augment(args) -> int:
    items = load_corpus(args.in_dir)
    if not items:
        raise ValueError(f"no images found in {args.in_dir}")
    root = SplitMix64(args.seed)
    out_items = []
    for item in items:  # corpus load order; one generator split per image
        child = root.split()
        out_items.append(item)
        out_items.extend(augment_one(item, child))
    save_corpus(out_items, args.out)
    print(f"wrote {len(out_items)} images ({len(items)} originals + "
          f"{len(out_items) - len(items)} variants) to {args.out}")
    return 0


def cmd_train(args) -> int:
    items = load_corpus(args.corpus)
    if not items:
        raise ValueError(f"no images found in {args.corpus}")
    split = split_dataset(items, args.train_fraction, args.seed)
    model = train_baseline(split.train)
    save_model(model, args.out)
    print(f"trained on {len(split.train)} images, {len(split.validation)} held out")
    print(f"model written to {args.out}")
    return 0


def _print_report(report, as_json: bool) -> None:
    slugs = [cat.slug for cat in TrashCategory]
    if as_json:
        print(json.dumps({
            "accuracy": report.accuracy,
            "total": report.total,
            "categories": slugs,
            "confusion": report.confusion.tolist(),
        }, sort_keys=True))
        return
    print(f"accuracy: {report.accuracy:.4f} ({report.total} items)")
    width = max(len(s) for s in slugs)
    header = " " * (width + 2) + " ".join(f"{i:>4d}" for i in range(len(slugs)))
    print(header)
    for i, slug in enumerate(slugs):
        row = " ".join(f"{int(n):>4d}" for n in report.confusion[i])
        print(f"{slug:<{width}} {i}: {row}")


def cmd_eval(args) -> int:
    model = load_model(args.model)
    items = load_corpus(args.corpus)
    if not items:
        raise ValueError(f"no images found in {args.corpus}")
    if args.split_seed is not None:
        split = split_dataset(items, args.train_fraction, args.split_seed)
        items = split.train if args.split == "train" else split.validation
    report = evaluate(model, items)
    _print_report(report, args.json)
    return 0


def cmd_watch(args) -> int:
    from .telemetry.client import watch_events

    def on_frame(frame) -> None:
        print(json.dumps(frame.to_dict(), sort_keys=True), flush=True)

    watch_events(
        args.server or _env_server(), on_frame, since=args.since, token=_env_token()
    )
    return 0


_HANDLERS = {
    "serve": cmd_serve,
    "simulate": cmd_simulate,
    "corpus": cmd_corpus,
    "augment": cmd_augment,
    "train": cmd_train,
    "eval": cmd_eval,
    "watch": cmd_watch,
}


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except KeyboardInterrupt:
        return 130
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

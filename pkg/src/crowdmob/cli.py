"""Batch entry point: ingest datasets, mine users, run sweeps, launch the service.

Diagnostics go to stderr, data to stdout or files; exit code 0 means no error.
A JSON ``--config`` file may supply the same keys as the flags (dashes become
underscores); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import socket
import sys
from datetime import date
from pathlib import Path

from . import experiments, ingest, mining, storage
from .errors import CrowdmobError
from .grid import DEFAULT_PRECISION
from .service import DEFAULT_MIN_SUPPORT, ServiceConfig, create_app

DEFAULT_SWEEP_SUPPORTS = (0.25, 0.5, 0.75)


def _parse_date(value: str) -> date:
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected YYYY-MM-DD, got {value!r}")


def _parse_supports(value: str) -> list[float]:
    try:
        return [float(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ratios, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crowdmob", description=__doc__)
    parser.add_argument("--config", type=Path, default=None, help="JSON file with flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="parse, filter, and persist a check-in dataset")
    p_ingest.add_argument("--input", type=Path, required=True)
    p_ingest.add_argument("--format", default=ingest.FOURSQUARE_TSV)
    p_ingest.add_argument("--from", dest="window_from", type=_parse_date, default=None)
    p_ingest.add_argument("--to", dest="window_to", type=_parse_date, default=None)
    p_ingest.add_argument("--min-days", type=int, default=ingest.DEFAULT_MIN_DAYS)
    p_ingest.add_argument("--max-gap-hours", type=float, default=2.0)
    p_ingest.add_argument("--precision", type=float, default=DEFAULT_PRECISION)
    p_ingest.add_argument("--out", type=Path, required=True)

    p_mine = sub.add_parser("mine", help="mine one user's frequent patterns to stdout")
    p_mine.add_argument("--dataset", type=Path, required=True)
    p_mine.add_argument("--user", required=True)
    p_mine.add_argument("--min-support", type=float, default=DEFAULT_MIN_SUPPORT)
    p_mine.add_argument("--time-annotated", action="store_true")

    p_sweep = sub.add_parser("sweep", help="run a min-support sweep over all qualifying users")
    p_sweep.add_argument("--dataset", type=Path, required=True)
    p_sweep.add_argument("--supports", type=_parse_supports, default=list(DEFAULT_SWEEP_SUPPORTS))
    p_sweep.add_argument("--out", type=Path, required=True)
    p_sweep.add_argument("--hist-bins", type=int, default=experiments.DEFAULT_HIST_BINS)

    p_serve = sub.add_parser("serve", help="run the HTTP query service until interrupted")
    p_serve.add_argument("--dataset", type=Path, required=True)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--min-support", type=float, default=DEFAULT_MIN_SUPPORT)
    p_serve.add_argument("--precision", type=float, default=DEFAULT_PRECISION)
    p_serve.add_argument("--anonymize", action="store_true")

    return parser


def _apply_config_file(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Load --config JSON (if present) and turn it into subparser defaults."""
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config", type=Path, default=None)
    known, _ = probe.parse_known_args(argv)
    if known.config is None:
        return argv
    payload = json.loads(known.config.read_text(encoding="utf-8"))
    if not isinstance(payload, dict):
        raise CrowdmobError(f"config file {known.config} must hold a JSON object")
    for subparser in parser._subparsers._group_actions[0].choices.values():  # type: ignore[union-attr]
        defaults = {}
        for action in subparser._actions:
            if action.dest in payload:
                defaults[action.dest] = payload[action.dest]
                action.required = False  # the config file satisfies it
        subparser.set_defaults(**defaults)
    return argv


def cmd_ingest(args) -> int:
    with open(args.input, "rb") as handle:
        parsed = ingest.parse_checkins(handle, fmt=args.format)
    for lineno, reason in parsed.malformed[:10]:
        print(f"warning: line {lineno}: {reason}", file=sys.stderr)
    if parsed.malformed:
        print(f"warning: skipped {len(parsed.malformed)} malformed line(s)", file=sys.stderr)

    stats = ingest.dataset_stats(parsed.records)
    meta = storage.DatasetMeta(
        window_start=args.window_from,
        window_end=args.window_to,
        min_days=args.min_days,
        max_gap_hours=args.max_gap_hours,
        precision=args.precision,
    )
    storage.save_dataset(args.out, parsed.records, meta)
    state = storage.DatasetState(parsed.records, meta)
    qualified = state.qualified_users()

    print(f"total_records={stats.total_records}")
    print(f"user_count={stats.user_count}")
    mean = stats.records_per_user_mean
    median = stats.records_per_user_median
    print(f"records_per_user_mean={'' if mean is None else format(mean, '.4f')}")
    print(f"records_per_user_median={'' if median is None else format(median, 'g')}")
    if stats.date_range:
        print(f"date_range={stats.date_range[0].isoformat()}..{stats.date_range[1].isoformat()}")
    else:
        print("date_range=")
    print(f"qualified_users={len(qualified)}")
    return 0


def cmd_mine(args) -> int:
    checkins, meta = storage.load_dataset(args.dataset)
    state = storage.DatasetState(checkins, meta)
    if not state.is_known_user(args.user):
        raise CrowdmobError(f"unknown user {args.user!r} in dataset {args.dataset}")
    mode = mining.MiningMode.TIME_ANNOTATED if args.time_annotated else mining.MiningMode.CATEGORY_ONLY
    config = mining.MinerConfig(min_support=args.min_support, mode=mode)
    patterns = mining.mine_patterns(state.database(args.user), config)
    sys.stdout.write(mining.export_patterns(patterns))
    return 0


def cmd_sweep(args) -> int:
    checkins, meta = storage.load_dataset(args.dataset)
    state = storage.DatasetState(checkins, meta)

    supports: list[float] = []
    for sigma in args.supports:
        if sigma in supports:
            print(f"warning: duplicate threshold {sigma} ignored", file=sys.stderr)
        else:
            supports.append(sigma)

    dbs = []
    for user in state.qualified_users():
        dbs.append(state.database(user))
    if not dbs:
        raise CrowdmobError("no qualifying users in dataset; nothing to sweep")

    results = experiments.support_sweep(dbs, supports)
    experiments.export_results(results, args.out)
    for result in results:
        for metric in ("count", "avg_length"):
            hist = experiments.distribution(result, metric=metric, bins=args.hist_bins)
            path = args.out.with_name(f"{args.out.stem}_hist_{metric}_{result.min_support:g}.csv")
            experiments.export_histogram(hist, path)
        if result.skipped_users:
            print(f"warning: skipped unminable users: {', '.join(result.skipped_users)}", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    # Fail fast with a clean diagnostic when the port is taken.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
    except OSError as exc:
        raise CrowdmobError(f"cannot bind {args.host}:{args.port}: {exc}")
    finally:
        probe.close()

    config = ServiceConfig(
        data_dir=args.dataset,
        default_min_support=args.min_support,
        default_precision=args.precision,
        anonymize=args.anonymize,
    )
    app = create_app(config)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        argv = _apply_config_file(parser, argv)
        args = parser.parse_args(argv)
        handler = {
            "ingest": cmd_ingest,
            "mine": cmd_mine,
            "sweep": cmd_sweep,
            "serve": cmd_serve,
        }[args.command]
        return handler(args)
    except (CrowdmobError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""Command-line interface.

Subcommands: `run` executes one scenario and writes a report bundle, `compare`
runs the dynamic-versus-fixed comparison over a block of seeds, `quote`
evaluates the pricing chain once for debugging, and `serve` starts the HTTP
service. Exit codes: 0 success, 2 validation error, 1 runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, InvalidOperation

from .config import load_scenario_config
from .errors import ConfigValidationError, FarefabricError, InvalidInput
from .money import Money
from .pricing.inventory import InventoryState
from .pricing.quote import compose_quote
from .reporting import emit_report
from .sim.compare import compare_pricing_modes, seeds_from
from .sim.scenario import run_scenario

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_VALIDATION = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="farefabric", description="Dynamic fare pricing simulator.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one scenario and write a report bundle")
    run.add_argument("--config", required=True, help="scenario config JSON file")
    run.add_argument("--seed", type=int, default=None, help="override the config seed")
    run.add_argument("--out", required=True, help="output directory for the report bundle")
    run.add_argument("--format", default="csv,json", help="comma-separated: csv,json")

    compare = sub.add_parser("compare", help="compare dynamic vs fixed pricing over seeds")
    compare.add_argument("--config", required=True, help="scenario config JSON file")
    compare.add_argument("--seeds", type=int, required=True, help="number of seeds, starting at the config seed")
    compare.add_argument("--out", required=True, help="output directory for the report bundle")

    quote = sub.add_parser("quote", help="evaluate the pricing chain once")
    quote.add_argument("--base", required=True, help="base fare amount")
    quote.add_argument("--days", type=int, required=True, help="days to departure")
    quote.add_argument("--capacity", type=int, required=True, help="seat capacity")
    quote.add_argument("--sold", type=int, required=True, help="seats already sold")
    quote.add_argument("--event-factor", type=float, default=1.0, help="event impact multiplier")
    quote.add_argument("--competitor-delta", type=float, default=0.0, help="competitor adjustment in [-1, 1]")
    quote.add_argument("--floor", default=None, help="price floor")
    quote.add_argument("--ceiling", default=None, help="price ceiling")
    quote.add_argument("--currency", default="USD")

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = load_scenario_config(args.config)
    if args.seed is not None:
        cfg = cfg.with_seed(args.seed)
    formats = tuple(part.strip() for part in args.format.split(",") if part.strip())
    for fmt in formats:
        if fmt not in ("csv", "json"):
            raise ConfigValidationError(f"--format: unknown format {fmt!r}")
    report = run_scenario(cfg)
    bundle = emit_report(report, args.out, formats)
    print(f"wrote {len(bundle.files)} files to {bundle.out_dir}")
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    cfg = load_scenario_config(args.config)
    if args.seeds < 1:
        raise ConfigValidationError("--seeds: must be >= 1")
    report = compare_pricing_modes(cfg, seeds_from(cfg.seed, args.seeds))
    bundle = emit_report(report, args.out)
    uplift = "n/a" if report.mean_uplift_pct is None else f"{report.mean_uplift_pct:+.2f}%"
    print(f"mean uplift {uplift} over {len(report.per_seed)} seeds; wrote {len(bundle.files)} files to {bundle.out_dir}")
    return EXIT_OK


def _parse_money(text: str | None, name: str, currency: str) -> Money | None:
    if text is None:
        return None
    try:
        return Money.of(Decimal(text), currency)
    except (InvalidOperation, InvalidInput) as exc:
        raise ConfigValidationError(f"{name}: {exc}") from exc


def _cmd_quote(args: argparse.Namespace) -> int:
    base = _parse_money(args.base, "--base", args.currency)
    floor = _parse_money(args.floor, "--floor", args.currency)
    ceiling = _parse_money(args.ceiling, "--ceiling", args.currency)
    inventory = InventoryState(capacity=args.capacity, seats_sold=args.sold, days_to_departure=args.days)
    quote = compose_quote(
        base,
        args.days,
        inventory,
        args.event_factor,
        args.competitor_delta,
        floor,
        ceiling,
    )
    print(
        json.dumps(
            {
                "final_price": str(quote.final_price.amount),
                "base_fare": str(quote.base_fare.amount),
                "currency": quote.final_price.currency,
                "applied_steps": [[name, str(value)] for name, value in quote.applied_steps],
                "clamped": quote.clamped,
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "compare": _cmd_compare,
        "quote": _cmd_quote,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except (ConfigValidationError, InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (FarefabricError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())

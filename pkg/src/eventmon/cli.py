"""Command-line mirror of the HTTP API: extract, visualize, serve."""

from __future__ import annotations

import argparse
import json
import sys
from datetime import date

from .config import load_config
from .errors import EventmonError
from .service import ApiError, Pipeline, create_app


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eventmon", description=__doc__)
    parser.add_argument("--config", help="path to a JSON config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser("extract", help="extract one headline into a JSON-LD event")
    p_extract.add_argument("--text", required=True, help="headline text")
    p_extract.add_argument("--keyword", default="", help="keyword to file the event under")
    _add_source_flags(p_extract)

    p_viz = sub.add_parser("visualize", help="build the dual scatter views for a query")
    p_viz.add_argument("--keyword", required=True)
    p_viz.add_argument("--date", required=True, help="UTC day, YYYY-MM-DD")
    _add_source_flags(p_viz)

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--listen", help="host:port (overrides config)")
    _add_source_flags(p_serve)
    return parser


def _add_source_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--source", choices=["live", "fixture"], help="article source")
    p.add_argument("--fixture-path", help="fixture JSON file for --source fixture")
    p.add_argument("--max-records", type=int, help="article cap per query (<= 250)")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    overrides = {
        "source": getattr(args, "source", None),
        "fixture_path": getattr(args, "fixture_path", None),
        "max_records": getattr(args, "max_records", None),
    }
    if getattr(args, "listen", None):
        overrides["listen_addr"] = args.listen
    config = load_config(args.config, overrides)

    try:
        if args.command == "extract":
            doc = Pipeline(config).extract(args.text, args.keyword)
            print(json.dumps(doc, ensure_ascii=False, indent=2))
        elif args.command == "visualize":
            result = Pipeline(config).visualize(args.keyword, date.fromisoformat(args.date))
            print(json.dumps(result, ensure_ascii=False, indent=2))
        elif args.command == "serve":
            import uvicorn

            uvicorn.run(create_app(config), host=config.host, port=config.port)
    except (EventmonError, ApiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

import argparse
import asyncio
import sys
from collections.abc import Sequence


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irs-fading", description="Outage, error-rate and density sweeps for IRS links over Nakagami fading"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="evaluate a JSON run configuration and write a CSV")
    run.add_argument("config", help="path to the run configuration")
    run.add_argument("-o", "--output", default="results.csv", help="CSV file to write")
    run.add_argument("-w", "--workers", type=int, default=None, help="threads, defaults to WORKERS")
    run.add_argument("--plot", action="store_true", help="also write a matplotlib script next to the CSV")

    validate = commands.add_parser("validate", help="check a run configuration without evaluating it")
    validate.add_argument("config")

    commands.add_parser("schema", help="print the JSON schema of the run configuration")

    plot = commands.add_parser("plot-script", help="write a matplotlib script for an existing CSV")
    plot.add_argument("csv")
    plot.add_argument("--scenario", required=True, choices=["pdf", "op", "aser", "mgf", "diversity"])
    return parser


async def run_app(argv: Sequence[str] | None = None) -> int:
    from cli.app import Application  # noqa: PLC0415

    args = build_parser().parse_args(argv)
    return await Application().run(args)


def main() -> None:
    sys.exit(asyncio.run(run_app()))


if __name__ == "__main__":
    main()

"""Command-line front end.

Subcommands: mode, fig2, fig3a, fig3b, rabi, decay, all.  Exit status:
0 on success, 1 on runtime/solver failure, 2 on config validation
failure.  With --plot (or output.figures in the config), products that
carry figure data also render a PNG next to the CSV file.
"""

from __future__ import annotations

import argparse
import os
import sys

from .config import ConfigError, Scenario, load_scenario
from .runner import RUNNERS, Product, run_fig2, write_product

FIGURE_PRODUCTS = ("fig2", "fig3a", "fig3b", "rabi")


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


def main(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    def info(message: str) -> None:
        if not args.quiet:
            print(message, file=sys.stderr)

    def warn(message: str) -> None:
        print(f"warning: {message}", file=sys.stderr)

    try:
        scenario = load_scenario(args.config)
        if args.command == "all":
            return _run_all(scenario, args, info, warn)
        return _run_single(scenario, args, info, warn)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # solver and I/O failures
        print(f"error: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringqed",
        description="Annular-cavity QED pipeline: mode, coupling, dressed states, Rabi dynamics, decay budget.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("mode", "solve the lowest cavity mode and report it"),
        ("fig2", "geometric coupling factor f over the width-ratio grid"),
        ("fig3a", "dressed-state branches over the detuning grid"),
        ("fig3b", "resonant vacuum Rabi oscillation from |e,0>"),
        ("rabi", "time evolution with the configured initial state"),
        ("decay", "free-space decay rate and coherence budget"),
        ("all", "run every configured product into an output directory"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, help="scenario JSON file")
        cmd.add_argument(
            "--out",
            default="-",
            help="output CSV path, or '-' for stdout (for 'all': output directory)",
        )
        cmd.add_argument("--quiet", action="store_true", help="suppress informational messages")
        cmd.add_argument(
            "--plot",
            action="store_true",
            help="also render a PNG figure next to the CSV (file outputs only)",
        )
    return parser


def _run_single(scenario: Scenario, args, info, warn) -> int:
    runner = RUNNERS[args.command]
    product = runner(scenario, warn=warn) if runner is run_fig2 else runner(scenario)
    write_product(product, args.out)
    if args.out not in (None, "-"):
        info(f"wrote {args.out}")
        _maybe_render(product, args.out, scenario.figures or args.plot, info, warn)
    elif (scenario.figures or args.plot) and product.name in FIGURE_PRODUCTS:
        warn(f"{product.name}: figures need a file output path, skipping plot")
    return 0


def _run_all(scenario: Scenario, args, info, warn) -> int:
    out_dir = scenario.out_dir if args.out in (None, "-") else args.out
    os.makedirs(out_dir, exist_ok=True)
    render = scenario.figures or args.plot
    for name in scenario.products:
        runner = RUNNERS[name]
        product = runner(scenario, warn=warn) if runner is run_fig2 else runner(scenario)
        path = os.path.join(out_dir, f"{name}.csv")
        write_product(product, path)
        info(f"wrote {path}")
        _maybe_render(product, path, render, info, warn)
    return 0


def _maybe_render(product: Product, csv_path: str, render: bool, info, warn) -> None:
    if not render or product.name not in FIGURE_PRODUCTS:
        return
    from . import figures  # deferred: keep matplotlib off the CSV-only path

    png_path = os.path.splitext(csv_path)[0] + ".png"
    if figures.render_product(product, png_path):
        info(f"wrote {png_path}")

"""
Entry point for the higgs-fourier command line.

    higgs-fourier verify     transform checks on one Higgs bundle
    higgs-fourier roundtrip  reconstruction from the cokernel presentation
    higgs-fourier table      cohomology table, Chern character and HRR
"""

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

from higgs_fourier.config import Settings
from higgs_fourier.errors import CheckResult, ConfigError, HiggsFourierError
from higgs_fourier.runner import (
    configure_logging,
    roundtrip_suite,
    table_suite,
    verify_suite,
)
from higgs_fourier.specs import BUNDLE_PRESETS, CURVE_PRESETS, RunConfig, load_bundle, load_curve

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger("higgs_fourier")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higgs-fourier",
        description="Fiberwise Fourier-Mukai transform of Higgs bundles on hyperelliptic curves",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--curve", default="default",
                        help=f"curve preset ({', '.join(CURVE_PRESETS)}) or JSON file (default: default)")
    common.add_argument("--bundle", default="hitchin",
                        help=f"bundle preset ({', '.join(BUNDLE_PRESETS)}) or JSON file (default: hitchin)")
    common.add_argument("--q", type=_int_list, default=[0, 0, 1],
                        help="coefficients of q(x), lowest first (default: 0,0,1 i.e. x^2)")
    common.add_argument("--prime", type=int, default=settings.prime,
                        help=f"prime of the default curve (default: {settings.prime})")
    common.add_argument("--samples", type=int, default=settings.samples,
                        help=f"fibers sampled per family (default: {settings.samples})")
    common.add_argument("--seed", type=int, default=settings.seed,
                        help=f"sampling seed (default: {settings.seed})")
    common.add_argument("--format", choices=["json", "csv", "text"], default="text",
                        help="report format (default: text)")
    common.add_argument("--sign-convention", choices=["plus", "minus"], default=settings.sign_convention,
                        help=f"P(T) = T*I +/- u (default: {settings.sign_convention})")
    common.add_argument("--degree-bound", type=int, default=settings.degree_bound,
                        help=f"degree bound of the stability scan (default: {settings.degree_bound})")
    common.add_argument("--probe-points", type=int, default=2,
                        help="rational points used by the stability scan (default: 2)")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="IT(1), rank formula, P^g fiber, HRR and gauge invariance")
    roundtrip = sub.add_parser("roundtrip", parents=[common], help="recover the Higgs field from its presentation")
    roundtrip.add_argument("--perturb", type=int, default=0,
                           help="add this constant to one entry of the presentation before recovery")
    table = sub.add_parser("table", parents=[common], help="cohomology table and Chern character")
    table.add_argument("--genus", type=int, default=None, help="genus (default: genus of --curve)")
    table.add_argument("--rank", type=int, default=2, help="rank (default: 2)")
    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    try:
        return RunConfig(
            curve=args.curve,
            bundle=args.bundle,
            q=args.q,
            prime=args.prime,
            samples=args.samples,
            seed=args.seed,
            format=args.format,
            sign_convention=args.sign_convention,
            degree_bound=args.degree_bound,
            probe_points=args.probe_points,
            perturb=getattr(args, "perturb", 0),
            genus=getattr(args, "genus", None),
            rank=getattr(args, "rank", 2),
        )
    except ValidationError as e:
        raise ConfigError(f"Invalid arguments: {e}")


def cmd_verify(config: RunConfig) -> list[CheckResult]:
    c = load_curve(config.curve, config.prime)
    H = load_bundle(config.bundle, c, config.q)
    if c.p < 50:
        logger.warning(f"Stability scan over F_{c.p} is heuristic")
    suite = verify_suite(c, H, config.samples, config.seed, config.degree_bound, config.probe_points)
    return suite.run_all()


def cmd_roundtrip(config: RunConfig) -> list[CheckResult]:
    c = load_curve(config.curve, config.prime)
    H = load_bundle(config.bundle, c, config.q)
    suite = roundtrip_suite(c, H, config.seed, config.sign_convention, config.perturb)
    return suite.run_all()


def cmd_table(config: RunConfig) -> list[CheckResult]:
    genus = config.genus
    if genus is None:
        genus = load_curve(config.curve, config.prime).genus
    return table_suite(genus, config.rank).run_all()


COMMANDS = {
    "verify": cmd_verify,
    "roundtrip": cmd_roundtrip,
    "table": cmd_table,
}


def report_dict(command: str, config: RunConfig, results: Sequence[CheckResult]) -> dict[str, Any]:
    return {
        "command": command,
        "config": config.model_dump(),
        "checks": [r.as_dict() for r in results],
        "pass": all(r.passed for r in results),
    }


def _compact(value: Any) -> str:
    if value is None:
        return ""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), default=str)


def render(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"
    checks = report["checks"]
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["check", "status", "error", "witness"])
        for check in checks:
            writer.writerow([
                check["name"],
                "PASS" if check["passed"] else "FAIL",
                check["error"] or "",
                _compact(check["witness"]),
            ])
        return buffer.getvalue()
    width = max((len(check["name"]) for check in checks), default=0)
    lines = [f"higgs-fourier {report['command']}"]
    for check in checks:
        status = "PASS" if check["passed"] else "FAIL"
        line = f"  {check['name']:<{width}}  {status}"
        if check["error"]:
            line += f"  {check['error']}"
        lines.append(line)
        if check["witness"] is not None:
            lines.append(f"  {'':<{width}}  witness: {_compact(check['witness'])}")
    if report["command"] == "table":
        for check in checks:
            if check["name"] == "table" and check["output"]:
                output = check["output"]
                lines.append(f"  g={output['genus']} r={output['rank']}")
                for row in output["cohomology_table"]:
                    lines.append(f"    H^{row['p']}: {row['dim']}")
                lines.append(f"    ch(TFT) = {_compact(output['ch_TFT'])}")
                lines.append(f"    todd = {_compact(output['todd'])}")
                lines.append(f"    HRR integral = {output['hrr_integral']}")
    lines.append("PASS" if report["pass"] else "FAIL")
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the application."""
    try:
        settings = Settings.from_env()
    except ConfigError as e:
        print(f"higgs-fourier: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings.log_level, settings.log_dir)

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS

    try:
        config = run_config(args)
        results = COMMANDS[args.command](config)
    except ConfigError as e:
        print(f"higgs-fourier: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    except HiggsFourierError as e:
        print(f"higgs-fourier: {type(e).__name__}: {e.message}", file=sys.stderr)
        return EXIT_FAIL

    report = report_dict(args.command, config, results)
    sys.stdout.write(render(report, config.format))
    return EXIT_PASS if report["pass"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

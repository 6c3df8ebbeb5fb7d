"""Command-line interface.

Subcommands decompose the pipeline (gen / compose / sample / psym / hamming),
run it end to end (sweep), or check symmetry of an existing sample file
(check).  Exit codes: 0 success, 2 validation error, 3 when `check` finds no
symmetric solution.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import harness

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NONE_SYMMETRIC = 3


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # defined on the root parser with real defaults and on every subparser
    # with SUPPRESS defaults, so the flags work on either side of the command
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--config", type=Path, default=default(None), help="experiment config JSON")
    parser.add_argument("--seed", type=int, default=default(None), help="override the config base seed")
    parser.add_argument("--out-dir", type=Path, default=default(Path("out")), help="artifact directory")
    parser.add_argument(
        "--backend", choices=("exact", "sa", "sqa"), default=default(None), help="override the config backend"
    )
    parser.add_argument("--workers", type=int, default=default(None), help="override the config worker count")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mirrorbench", description=__doc__)
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        _add_global_flags(cmd, suppress=True)
        return cmd

    command("gen", "generate instance files for every configured size")
    command("compose", "build composite files from generated instances")
    command("sample", "sample composed problems with the configured backend")
    command("psym", "estimate symmetry success from composite/sample files")
    ham = command("hamming", "column Hamming profiles from composite/sample files")
    ham.add_argument("--include-symmetric", action="store_true", help="disable the asymmetric-only filter")
    sweep = command("sweep", "run a full pipeline sweep")
    sweep.add_argument("--mode", choices=("psym", "hamming", "schedule"), default="psym")
    check = command("check", "symmetry-check a sample file against its problem")
    check.add_argument("problem", type=Path)
    check.add_argument("samples", type=Path)
    check.add_argument("--report-dir", type=Path, help="where to write the verdicts and filtered samples")
    return parser


def _load_config(args) -> harness.ExperimentConfig:
    if args.config is None:
        raise ValueError("this command needs --config")
    config = harness.load_config(args.config)
    overrides = {}
    if args.seed is not None:
        overrides["base_seed"] = args.seed
    if args.backend is not None:
        overrides["backend"] = args.backend
    if args.workers is not None:
        overrides["workers"] = args.workers
    return dataclasses.replace(config, **overrides) if overrides else config


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            paths = harness.write_instances(_load_config(args), args.out_dir)
            print(f"wrote {len(paths)} instance files under {args.out_dir}")
        elif args.command == "compose":
            paths = harness.write_composites(_load_config(args), args.out_dir)
            print(f"wrote {len(paths)} composite files under {args.out_dir}")
        elif args.command == "sample":
            paths = harness.write_samples(_load_config(args), args.out_dir)
            print(f"wrote {len(paths)} sample files under {args.out_dir}")
        elif args.command == "psym":
            result = harness.psym_from_files(_load_config(args), args.out_dir)
            print(f"wrote {result.csv_path}")
        elif args.command == "hamming":
            result = harness.hamming_from_files(
                _load_config(args), args.out_dir, asymmetric_only=not args.include_symmetric
            )
            print(f"wrote {result.csv_path}" + (f" (skipped strengths: {result.skipped})" if result.skipped else ""))
        elif args.command == "sweep":
            config = _load_config(args)
            if args.mode == "psym":
                result = harness.run_psym_sweep(config, args.out_dir)
                for width, est in result.rows:
                    print(f"width {width}: p_hat={est.p_hat:.4f} [{est.ci_low:.4f}, {est.ci_high:.4f}]")
            elif args.mode == "hamming":
                result = harness.run_hamming_sweep(config, args.out_dir)
                print(f"wrote {result.csv_path}" + (f" (skipped strengths: {result.skipped})" if result.skipped else ""))
            else:
                result = harness.run_schedule_sweep(config, args.out_dir)
                for i, est in enumerate(result.estimates):
                    print(f"schedule {i}: p_hat={est.p_hat:.4f} [{est.ci_low:.4f}, {est.ci_high:.4f}]")
            print(f"manifest: {result.manifest_path}")
        elif args.command == "check":
            report = harness.answer_check(args.problem, args.samples, args.report_dir)
            n_sym = sum(1 for _, _, _, v in report.verdicts if v.symmetric)
            print(f"{n_sym}/{len(report.verdicts)} distinct configurations symmetric")
            if not report.some_symmetric:
                print("verdict: none symmetric", file=sys.stderr)
                return EXIT_NONE_SYMMETRIC
            print("verdict: some symmetric")
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

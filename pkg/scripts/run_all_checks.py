"""Run every verification suite and print a one-line summary per suite.

Exit status is nonzero when any gated record fails, mirroring the CLI.
The confluence and hopf suites are expected to report failures: the
reduction system is not confluent, and the per-record output names the
witnesses. Use --words/--range to trade coverage for time.
"""

import argparse
import json
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pqvirasoro.cli import main as cli_main


@dataclass
class CheckConfig:
    range_: int = 6
    dim: int = 20
    words: int = 100
    seed: int = 0


SUITES = ("fock", "homlie", "hopf", "confluence")


def run_suite(suite, cfg, out_dir):
    out = Path(out_dir) / f"{suite}.jsonl"
    argv = [
        "verify", "--suite", suite,
        "--range", str(cfg.range_),
        "--dim", str(cfg.dim),
        "--words", str(cfg.words),
        "--seed", str(cfg.seed),
        "--out", str(out),
    ]
    code = cli_main(argv)
    records = [json.loads(line) for line in out.read_text().splitlines()]
    failures = [r for r in records if r["status"] == "fail"]
    gated = [r for r in failures if r["gated"]]
    return code, records, failures, gated


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--range", type=int, default=6, dest="range_")
    parser.add_argument("--dim", type=int, default=20)
    parser.add_argument("--words", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--keep", default=None,
                        help="directory to keep the per-suite record files")
    args = parser.parse_args()
    cfg = CheckConfig(args.range_, args.dim, args.words, args.seed)

    exit_code = 0
    if args.keep:
        Path(args.keep).mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        out_dir = args.keep or tmp
        for suite in SUITES:
            code, records, failures, gated = run_suite(suite, cfg, out_dir)
            exit_code = max(exit_code, code)
            checks = sorted({r["check"] for r in failures})
            summary = f"{len(failures)} failing ({', '.join(checks)})" if failures else "all ok"
            print(f"{suite:11s} {len(records):5d} records  {summary}")
        if args.keep:
            print(f"records written to {args.keep}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())

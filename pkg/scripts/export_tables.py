"""Export structure constants, Hopf generator maps, and oscillator matrices.

Writes JSON and LaTeX tables into the output directory (default
./tables). Everything is deterministic, so the files are stable across
runs and safe to diff.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pqvirasoro.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="tables")
    parser.add_argument("--range", type=int, default=3, dest="range_")
    parser.add_argument("--dim", type=int, default=8)
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    jobs = [
        (["table", "--kind", "structure_constants", "--range", str(args.range_),
          "--format", "json"], "structure_constants.jsonl"),
        (["table", "--kind", "structure_constants", "--range", str(args.range_),
          "--format", "latex"], "structure_constants.tex"),
        (["table", "--kind", "hopf_maps", "--range", str(args.range_),
          "--format", "json"], "hopf_maps.jsonl"),
        (["table", "--kind", "hopf_maps", "--range", str(args.range_),
          "--format", "latex"], "hopf_maps.tex"),
        (["fock", "--dim", str(args.dim), "--range", str(args.range_),
          "--format", "csv"], "fock_matrices.csv"),
    ]
    for argv, name in jobs:
        path = out / name
        code = cli_main(argv + ["--out", str(path)])
        if code != 0:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Export the worked-example factorizations as JSON files.

Writes one file per pair (the small building blocks and the composite
16x16 and 32x32 pairs) into the chosen directory; each file follows the
serialization schema and can be fed back to `polymf verify`.

Usage:
    python scripts/export_examples.py [--out-dir DIR]
"""

import argparse
import json
from pathlib import Path

from polymf import fixtures


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="example_pairs")
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    pairs = {
        "intro_x2_plus_4": fixtures.simple_quadratic(),
        "pair_m": fixtures.pair_m(),
        "pair_p": fixtures.pair_p(),
        "pair_n": fixtures.pair_n(),
        "pair_y": fixtures.pair_y(),
        "part1_16x16": fixtures.part1_pair(),
        "part2_32x32": fixtures.part2_pair(),
    }
    for name, mf in pairs.items():
        path = out / f"{name}.json"
        path.write_text(json.dumps(mf.to_dict(), indent=2) + "\n")
        print(f"wrote {path} (f = {mf.f}, size {mf.size})")


if __name__ == "__main__":
    main()

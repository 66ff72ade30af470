#!/usr/bin/env python3

# execute from the repository root: python3 scripts/pool_sweep.py --count 200

import argparse
import json
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.utils.sweeps import equivalence_sweep  # noqa: E402

logger = logging.getLogger("pool_sweep")


def main():
    parser = argparse.ArgumentParser(description="Random-pool agreement and property sweep")
    parser.add_argument("--count",          type=int, default=200, help="Number of pool algebras")
    parser.add_argument("--start",          type=int, default=0,   help="First seed")
    parser.add_argument("--iyama-count",    type=int, default=50,  help="Algebras checked with the radical chain")
    parser.add_argument("--resolution-cap", type=int, default=32)
    parser.add_argument("--output",         type=str, default="results/reports/pool_sweep.json")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(asctime)s - [%(levelname)s] [%(name)s] - %(message)s")
    summary = equivalence_sweep(args.count, args.start, args.resolution_cap, args.iyama_count)

    output = Path(args.output)
    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", encoding="utf-8") as f:
        json.dump(summary, f, indent=2, ensure_ascii=False)
    logger.info(f"Summary written to {output}")

    failed = summary["disagreements"] or summary["property_failures"] or summary["iyama_failures"]
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()

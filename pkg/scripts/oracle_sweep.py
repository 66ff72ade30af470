#!/usr/bin/env python3

# execute from the repository root: python3 scripts/oracle_sweep.py --count 100

import argparse
import json
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.utils.sweeps import oracle_sweep  # noqa: E402

logger = logging.getLogger("oracle_sweep")


def main():
    parser = argparse.ArgumentParser(description="Ext^1 and Filt against exhaustive oracles over F_2")
    parser.add_argument("--count",          type=int, default=100, help="Number of pool algebras")
    parser.add_argument("--start",          type=int, default=0,   help="First seed")
    parser.add_argument("--max-module-dim", type=int, default=6)
    parser.add_argument("--resolution-cap", type=int, default=32)
    parser.add_argument("--output",         type=str, default="results/reports/oracle_sweep.json")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(asctime)s - [%(levelname)s] [%(name)s] - %(message)s")
    summary = oracle_sweep(args.count, args.start, args.max_module_dim, args.resolution_cap)

    output = Path(args.output)
    output.parent.mkdir(parents=True, exist_ok=True)
    with open(output, "w", encoding="utf-8") as f:
        json.dump(summary, f, indent=2, ensure_ascii=False)
    logger.info(f"Summary written to {output}")

    sys.exit(1 if summary["ext_mismatches"] or summary["filt_mismatches"] else 0)


if __name__ == "__main__":
    main()

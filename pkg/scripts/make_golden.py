"""Regenerate the golden remainder table by direct tail summation.

    python scripts/make_golden.py [--terms 1000000] [--out PATH]
"""
import argparse
from pathlib import Path

from compact_hilbert.catalog import GOLDEN_FILE, GOLDEN_TERMS, golden_rows, write_golden

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "compact_hilbert" / "data" / GOLDEN_FILE


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--terms", type=int, default=GOLDEN_TERMS)
    p.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = p.parse_args()
    rows = list(golden_rows(terms=args.terms))
    write_golden(args.out, rows)
    for r in rows:
        print(f"{r['name']:>9} N={r['N']:<3} R_N={r['value']:+.12f}")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()

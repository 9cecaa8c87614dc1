"""Annihilator ranks: kernel of the action against the path-counting formula."""
from __future__ import annotations

import argparse
import json

from walled_brauer.config import Sweep
from walled_brauer.tensor import annihilator
from walled_brauer.triples import count_ranks


def table(sweep: Sweep) -> list[dict]:
    rows = []
    for r, s, n in sweep.points():
        rank, _ = annihilator(r, s, n)
        walled, end, formula = count_ranks(r, s, n)
        rows.append({"r": r, "s": s, "n": n, "dim": walled, "kernel": rank, "formula": formula, "agree": rank == formula})
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-total", type=int, default=5)
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 3, 4, 5])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = table(Sweep(max_total=args.max_total, n_values=tuple(args.n)))
    if args.json:
        print(json.dumps(rows, separators=(",", ":")))
    else:
        print(f"{'r':>2} {'s':>2} {'n':>2} {'dim':>5} {'kernel':>6} {'formula':>7}  agree")
        for row in rows:
            print(f"{row['r']:>2} {row['s']:>2} {row['n']:>2} {row['dim']:>5} {row['kernel']:>6} {row['formula']:>7}  {row['agree']}")
    return 0 if all(row["agree"] for row in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())

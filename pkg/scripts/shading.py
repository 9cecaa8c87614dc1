"""ASCII picture of which ``c``-basis elements lie in the annihilator.

One block per shape; block ``(λ,μ)`` is an ``|M| x |M|`` grid whose cell
``(L, R)`` is marked when ``max(L)`` or ``max(R)`` exceeds ``n``.
"""
from __future__ import annotations

import argparse

from walled_brauer.config import ShadingConfig
from walled_brauer.triples import enumerate_shapes, enumerate_triples, max_statistic


def blocks(cfg: ShadingConfig, n: int) -> list[tuple[str, list[str]]]:
    out = []
    for sh in enumerate_shapes(cfg.r, cfg.s):
        maxima = [max_statistic(t) for t in enumerate_triples(sh, cfg.r, cfg.s)]
        grid = ["".join(cfg.killed if max(a, b) > n else cfg.kept for b in maxima) for a in maxima]
        out.append((str(sh), grid))
    return out


def render(cfg: ShadingConfig, n: int) -> str:
    bs = blocks(cfg, n)
    width = max(max(len(label), len(grid[0])) for label, grid in bs) + 2
    height = max(len(grid) for _, grid in bs)
    lines = [f"n = {n}", "".join(label.ljust(width) for label, _ in bs).rstrip()]
    for i in range(height):
        lines.append("".join((grid[i] if i < len(grid) else "").ljust(width) for _, grid in bs).rstrip())
    return "\n".join(lines)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--s", type=int, default=2)
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 3, 4])
    args = ap.parse_args()
    cfg = ShadingConfig(args.r, args.s, tuple(args.n))
    print("\n\n".join(render(cfg, n) for n in cfg.n_values))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

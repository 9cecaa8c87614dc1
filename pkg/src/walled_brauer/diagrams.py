"""Generalized walled Brauer diagrams.

A diagram of type ``(top, bottom)`` is a perfect matching on the vertices
``T1..Tp`` and ``B1..Bq`` whose edges can be oriented compatibly with the
arrows.  Arrow types are strings over ``"d"`` (down) and ``"u"`` (up).

Internally vertex ``Ti`` has index ``i-1`` and ``Bj`` has index ``p+j-1``;
``match[v]`` is the partner of ``v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

DOWN, UP = "d", "u"


def arrows(r: int, s: int) -> str:
    """The type ``(↓^r, ↑^s)``."""
    return DOWN * r + UP * s


def parse_arrows(text: str) -> str:
    out = text.replace(" ", "").replace("↓", DOWN).replace("↑", UP)
    if any(c not in (DOWN, UP) for c in out):
        raise ValueError(f"bad arrow type {text!r}")
    return out


def format_arrows(a: str) -> str:
    """Runs of equal arrows separated by spaces, e.g. ``"dd uu"``."""
    runs: list[str] = []
    for c in a:
        if runs and runs[-1][-1] == c:
            runs[-1] += c
        else:
            runs.append(c)
    return " ".join(runs)


def _is_source(top_arrows: str, bottom_arrows: str, v: int) -> bool:
    p = len(top_arrows)
    if v < p:
        return top_arrows[v] == DOWN
    return bottom_arrows[v - p] == UP


@dataclass(frozen=True)
class Diagram:
    top: str
    bottom: str
    match: tuple[int, ...]

    def __post_init__(self):
        n = len(self.top) + len(self.bottom)
        if len(self.match) != n:
            raise ValueError("matching has the wrong number of vertices")
        for v, w in enumerate(self.match):
            if w == v or self.match[w] != v:
                raise ValueError(f"not a perfect matching: {self.match}")
            if _is_source(self.top, self.bottom, v) == _is_source(self.top, self.bottom, w):
                raise ValueError(f"edge {self._name(v)}-{self._name(w)} violates the orientation")

    # -- construction ------------------------------------------------------
    @classmethod
    def from_edges(cls, top: str, bottom: str, edges: Sequence[tuple[int, int]]) -> "Diagram":
        match = [-1] * (len(top) + len(bottom))
        for a, b in edges:
            if match[a] != -1 or match[b] != -1:
                raise ValueError("vertex used twice")
            match[a], match[b] = b, a
        if -1 in match:
            raise ValueError("not every vertex is matched")
        return cls(top, bottom, tuple(match))

    @classmethod
    def identity(cls, top: str) -> "Diagram":
        p = len(top)
        return cls.from_edges(top, top, [(i, p + i) for i in range(p)])

    # -- vertex helpers ----------------------------------------------------
    @property
    def n_top(self) -> int:
        return len(self.top)

    def T(self, i: int) -> int:
        """Index of top vertex ``i`` (1-based)."""
        return i - 1

    def B(self, j: int) -> int:
        return len(self.top) + j - 1

    def _name(self, v: int) -> str:
        p = len(self.top)
        return f"T{v + 1}" if v < p else f"B{v - p + 1}"

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.match) if v < w]

    def is_walled(self) -> bool:
        if self.top != self.bottom:
            return False
        r = self.top.count(DOWN)
        if self.top != arrows(r, len(self.top) - r):
            return False
        return True

    # -- operations --------------------------------------------------------
    def star(self) -> "Diagram":
        p, q = len(self.top), len(self.bottom)
        # new top vertices are the old bottom ones
        def f(v: int) -> int:
            return v + q if v < p else v - p
        match = [0] * (p + q)
        for v, w in enumerate(self.match):
            match[f(v)] = f(w)
        return Diagram(self.bottom, self.top, tuple(match))

    # -- serialisation -----------------------------------------------------
    def to_json(self) -> dict:
        edges = sorted((self._name(v), self._name(w)) for v, w in self.edges())
        edges = sorted(edges, key=lambda e: (e[0][0] != "T", int(e[0][1:])))
        return {
            "top": format_arrows(self.top),
            "bottom": format_arrows(self.bottom),
            "edges": [list(e) for e in edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        top, bottom = parse_arrows(data["top"]), parse_arrows(data["bottom"])
        p = len(top)

        def idx(name: str) -> int:
            k = int(name[1:])
            return k - 1 if name[0] == "T" else p + k - 1

        return cls.from_edges(top, bottom, [(idx(a), idx(b)) for a, b in data["edges"]])

    def render(self) -> str:
        return render(self)


def compose(d1: Diagram, d2: Diagram) -> tuple[Diagram, int]:
    """Concatenate ``d1`` on top of ``d2``; return the diagram and the closed-cycle count."""
    if d1.bottom != d2.top:
        raise ValueError(f"type mismatch: {d1.bottom!r} vs {d2.top!r}")
    p1, m, q2 = len(d1.top), len(d1.bottom), len(d2.bottom)
    m1, m2 = d1.match, d2.match
    n_out = p1 + q2
    out = [-1] * n_out
    visited = [False] * m

    def trace(side: int, v: int) -> int:
        while True:
            if side == 1:
                w = m1[v]
                if w < p1:
                    return w
                mid = w - p1
                visited[mid] = True
                side, v = 2, mid
            else:
                w = m2[v]
                if w >= m:
                    return p1 + (w - m)
                visited[w] = True
                side, v = 1, p1 + w

    for v in range(n_out):
        if out[v] != -1:
            continue
        w = trace(1, v) if v < p1 else trace(2, m + (v - p1))
        out[v], out[w] = w, v

    cycles = 0
    for start in range(m):
        if visited[start]:
            continue
        cycles += 1
        mid = start
        while True:
            visited[mid] = True
            nxt = m2[mid]  # d2 edge from middle vertex, stays in the middle
            visited[nxt] = True
            back = m1[p1 + nxt] - p1
            if back == start:
                break
            mid = back
    return Diagram(d1.top, d2.bottom, tuple(out)), cycles


def permutation_diagram(pi: Sequence[int], top: str) -> Diagram:
    """Top vertex ``i`` joined to bottom vertex ``pi[i-1]`` (1-based one-line notation)."""
    p = len(top)
    if sorted(pi) != list(range(1, p + 1)):
        raise ValueError(f"not a permutation: {pi}")
    return Diagram.from_edges(top, top, [(i, p + pi[i] - 1) for i in range(p)])


def from_permutation(pi: Sequence[int], r: int) -> Diagram:
    """Walled diagram of a permutation preserving ``{1..r}`` and ``{r+1..r+s}``."""
    s = len(pi) - r
    if any((i < r) != (pi[i] <= r) for i in range(len(pi))):
        raise ValueError(f"permutation {tuple(pi)} mixes the blocks of the wall at {r}")
    return permutation_diagram(pi, arrows(r, s))


def sources_and_sinks(top: str, bottom: str) -> tuple[list[int], list[int]]:
    p = len(top)
    verts = range(p + len(bottom))
    src = [v for v in verts if _is_source(top, bottom, v)]
    # bottom sinks before top sinks, so the identity is the first bijection
    snk = [v for v in verts if v >= p and not _is_source(top, bottom, v)]
    snk += [v for v in verts if v < p and not _is_source(top, bottom, v)]
    return src, snk


def enumerate_diagrams(top: str, bottom: str) -> Iterator[Diagram]:
    """All diagrams of the given type: bijections from sources to sinks."""
    src, snk = sources_and_sinks(top, bottom)
    if len(src) != len(snk):
        return
    for image in permutations(snk):
        yield Diagram.from_edges(top, bottom, list(zip(src, image)))


def enumerate_walled(r: int, s: int) -> list[Diagram]:
    """All ``(r+s)!`` walled diagrams, identity first."""
    a = arrows(r, s)
    out = list(enumerate_diagrams(a, a))
    assert len(out) == factorial(r + s)
    return out


def walled_generators(r: int, s: int) -> dict[str, Diagram]:
    """Generators of ``B_{r,s}``: left and right simple transpositions and ``e``.

    ``s{i}`` swaps left strands ``i,i+1``; ``t{j}`` swaps right strands
    ``j,j+1``; ``e`` joins left vertex ``r`` and right vertex ``1`` on both rows.
    The names are stable under adding strands on the right, so a generator of
    ``B_{r,s-1}`` has the same name as its image in ``B_{r,s}``.
    """
    a = arrows(r, s)
    m = r + s
    gens: dict[str, Diagram] = {}
    for i in range(1, r):
        pi = list(range(1, m + 1))
        pi[i - 1], pi[i] = pi[i], pi[i - 1]
        gens[f"s{i}"] = permutation_diagram(pi, a)
    for j in range(1, s):
        pi = list(range(1, m + 1))
        pi[r + j - 1], pi[r + j] = pi[r + j], pi[r + j - 1]
        gens[f"t{j}"] = permutation_diagram(pi, a)
    if r >= 1 and s >= 1:
        gens["e"] = e_diagram(r, s)
    return gens


def e_diagram(r: int, s: int) -> Diagram:
    a = arrows(r, s)
    m = r + s
    edges = [(r - 1, r), (m + r - 1, m + r)]
    edges += [(i, m + i) for i in range(m) if i not in (r - 1, r)]
    return Diagram.from_edges(a, a, edges)


def render(d: Diagram) -> str:
    """Plain-text picture: arrow rows and an edge list (arcs in brackets)."""
    sym = {DOWN: "v", UP: "^"}
    p, q = len(d.top), len(d.bottom)
    lines = [
        "top    " + " ".join(f"{sym[c]:>3}" for c in d.top),
        "       " + " ".join(f"{i + 1:>3}" for i in range(p)),
        "bottom " + " ".join(f"{sym[c]:>3}" for c in d.bottom),
        "       " + " ".join(f"{j + 1:>3}" for j in range(q)),
    ]
    vertical, arcs = [], []
    for v, w in d.edges():
        a, b = d._name(v), d._name(w)
        if a[0] == b[0]:
            arcs.append(f"[{a} {b}]")
        else:
            vertical.append(f"{a}-{b}")
    lines.append("strands " + (" ".join(vertical) or "-"))
    lines.append("arcs    " + (" ".join(arcs) or "-"))
    return "\n".join(lines)

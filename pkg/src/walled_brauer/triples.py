"""Index combinatorics: shape pairs, standard triples, paths and counts.

A triple ``(t, u, v)`` for ``B_{r,s}`` consists of

* ``t``: a row-standard ``ν``-tableau with entries ``1..r``;
* ``u``: an anti-row-standard tableau on the skew diagram ``[ν] \\ [λ]``
  (stored as a :class:`Tableau` with ``inner = λ`` and ``order = "desc"``);
* ``v``: a row-standard ``μ``-tableau,

where the entries of ``u`` and ``v`` together are ``1..s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .combinatorics import (
    Partition,
    Tableau,
    as_partition,
    dominates,
    enumerate_partitions,
    is_partition,
)

ShapeKey = tuple[Partition, Partition]


@dataclass(frozen=True, order=True)
class ShapePair:
    lam: Partition
    mu: Partition
    k: int

    def __post_init__(self):
        object.__setattr__(self, "lam", as_partition(self.lam))
        object.__setattr__(self, "mu", as_partition(self.mu))
        if self.k < 0:
            raise ValueError("k must be nonnegative")

    @property
    def r(self) -> int:
        return sum(self.lam) + self.k

    @property
    def s(self) -> int:
        return sum(self.mu) + self.k

    def dominates(self, other: "ShapePair") -> bool:
        """``self ⊵ other``: larger ``k``, or equal ``k`` and both parts dominate."""
        if (self.r, self.s) != (other.r, other.s):
            raise ValueError("shapes belong to different algebras")
        if self.k != other.k:
            return self.k > other.k
        return dominates(self.lam, other.lam) and dominates(self.mu, other.mu)

    def strictly_dominates(self, other: "ShapePair") -> bool:
        return self != other and self.dominates(other)

    @property
    def lam1_plus_mu1(self) -> int:
        return (self.lam[0] if self.lam else 0) + (self.mu[0] if self.mu else 0)

    def to_json(self) -> dict:
        return {"lam": list(self.lam), "mu": list(self.mu), "k": self.k}

    @classmethod
    def from_json(cls, data: dict) -> "ShapePair":
        return cls(tuple(data["lam"]), tuple(data["mu"]), data["k"])

    @classmethod
    def parse(cls, text: str, r: int, s: int) -> "ShapePair":
        """Parse ``"lam=2,1;mu=1"`` for the algebra ``B_{r,s}``."""
        parts: dict[str, tuple[int, ...]] = {"lam": (), "mu": ()}
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            key, _, val = chunk.partition("=")
            key = key.strip()
            if key not in parts:
                raise ValueError(f"unknown shape component {key!r}")
            val = val.strip()
            parts[key] = tuple(int(v) for v in val.split(",") if v.strip()) if val not in ("", "-", "0") else ()
        lam, mu = parts["lam"], parts["mu"]
        k = r - sum(lam)
        if k < 0 or s - k != sum(mu):
            raise ValueError(f"shape {text!r} does not belong to B_{{{r},{s}}}")
        return cls(lam, mu, k)

    def __str__(self) -> str:
        def fmt(p):
            return "(" + ",".join(map(str, p)) + ")" if p else "∅"
        return f"({fmt(self.lam)},{fmt(self.mu)})"


def enumerate_shapes(r: int, s: int) -> list[ShapePair]:
    """All of ``Λ(r,s)``: ``k`` ascending, then ``μ`` and ``λ`` in descending lex order."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    out = []
    for k in range(min(r, s) + 1):
        for mu in enumerate_partitions(s - k):
            for lam in enumerate_partitions(r - k):
                out.append(ShapePair(lam, mu, k))
    return out


def shape_relation(r: int, s: int) -> dict[tuple[ShapePair, ShapePair], bool]:
    """The full relation ``a ⊵ b`` on ``Λ(r,s)``."""
    shapes = enumerate_shapes(r, s)
    return {(a, b): a.dominates(b) for a in shapes for b in shapes}


# -- triples ------------------------------------------------------------------

@dataclass(frozen=True)
class StandardTriple:
    t: Tableau
    u: Tableau
    v: Tableau

    def __post_init__(self):
        if self.t.order != "asc" or self.v.order != "asc" or self.u.order != "desc":
            raise ValueError("t and v must be ascending, u descending")
        if sorted(self.t.entries()) != list(range(1, self.t.size + 1)):
            raise ValueError("t must have entries 1..r")
        uv = sorted(self.u.entries() + self.v.entries())
        if uv != list(range(1, len(uv) + 1)):
            raise ValueError("u and v must share out the entries 1..s")
        nu = self.nu
        if len(self.u.rows) > len(nu) or any(
            self.u.inner[i] + len(self.u.rows[i]) != nu[i] for i in range(len(self.u.rows))
        ):
            raise ValueError("u does not fill [ν] \\ [λ]")
        if not (self.t.is_row_standard() and self.u.is_row_standard() and self.v.is_row_standard()):
            raise ValueError("triple is not row-standard")

    # -- derived data ------------------------------------------------------
    @property
    def r(self) -> int:
        return self.t.size

    @property
    def s(self) -> int:
        return self.u.size + self.v.size

    @property
    def k(self) -> int:
        return self.u.size

    @property
    def nu(self) -> tuple[int, ...]:
        return self.t.row_lengths

    @property
    def lam(self) -> tuple[int, ...]:
        """``λ`` as a composition (row lengths of ``[ν] \\ [ρ]``)."""
        inner = list(self.u.inner) + [0] * (len(self.nu) - len(self.u.inner))
        return tuple(inner[i] if i < len(self.u.rows) else self.nu[i] for i in range(len(self.nu)))

    @property
    def mu(self) -> tuple[int, ...]:
        return self.v.row_lengths

    @property
    def shape(self) -> ShapePair:
        return ShapePair(self.lam, as_partition(self.mu), self.k)

    def u_rows(self) -> list[tuple[int, ...]]:
        """Entries of ``u`` per row of ``ν`` (empty tuples where ``u`` has none)."""
        return [self.u.rows[i] if i < len(self.u.rows) else () for i in range(len(self.nu))]

    @property
    def o(self) -> Tableau:
        """``ν``-tableau: fillers ``s+r-k`` down to ``s+1`` in the ``λ`` cells, then ``u``."""
        filler = self.s + self.r - self.k
        rows = []
        for lam_i, urow in zip(self.lam, self.u_rows()):
            rows.append(tuple(range(filler, filler - lam_i, -1)) + urow)
            filler -= lam_i
        return Tableau(tuple(rows), (), "desc")

    @property
    def s_table(self) -> Tableau:
        """Row-standard tableau of shape ``(k, s-k)``: entries of ``u``, then of ``v``."""
        return Tableau((tuple(sorted(self.u.entries())), tuple(sorted(self.v.entries()))), (), "asc")

    def is_standard(self) -> bool:
        return (
            is_partition(self.nu)
            and is_partition(self.lam)
            and is_partition(self.mu)
            and self.t.is_standard()
            and self.u.is_standard()
            and self.v.is_standard()
        )

    # -- serialisation -------------------------------------------------------
    def to_json(self) -> dict:
        return {"t": self.t.to_json(), "u": self.u.to_json(), "v": self.v.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "StandardTriple":
        return cls(Tableau.from_json(data["t"]), Tableau.from_json(data["u"]), Tableau.from_json(data["v"]))

    def key(self) -> tuple:
        return (self.t.rows, self.u.inner, self.u.rows, self.v.rows)

    def __str__(self) -> str:
        return f"t={list(map(list, self.t.rows))} u={list(map(list, self.u_rows()))} v={list(map(list, self.v.rows))}"


def make_triple(t_rows, u_rows, v_rows, lam=None) -> StandardTriple:
    """Build a triple from row lists; ``u_rows[i]`` sits at the end of row ``i`` of ``t``."""
    t = Tableau(tuple(map(tuple, t_rows)), (), "asc")
    nu = t.row_lengths
    u_rows = [tuple(r) for r in u_rows] + [()] * (len(nu) - len(u_rows))
    inner = tuple(n - len(u) for n, u in zip(nu, u_rows))
    if lam is not None and tuple(lam) + (0,) * (len(inner) - len(lam)) != inner:
        raise ValueError("lam inconsistent with u")
    u = Tableau(tuple(u_rows), inner, "desc")
    v = Tableau(tuple(map(tuple, v_rows)), (), "asc")
    return StandardTriple(t, u, v)


# -- paths ------------------------------------------------------------------------

Path = tuple[ShapeKey, ...]


def _add_box(p: Partition, i: int) -> Partition:
    q = list(p) + [0]
    q[i] += 1
    return as_partition(q)


def _remove_box(p: Partition, i: int) -> Partition:
    q = list(p)
    q[i] -= 1
    return as_partition(q)


def _addable_rows(p: Partition) -> list[int]:
    return [i for i in range(len(p) + 1) if i == 0 or (i < len(p) and p[i] < p[i - 1]) or i == len(p)]


def _removable_rows(p: Partition) -> list[int]:
    return [i for i in range(len(p)) if i == len(p) - 1 or p[i] > p[i + 1]]


@lru_cache(maxsize=None)
def all_paths(r: int, s: int) -> tuple[Path, ...]:
    """Every path of length ``r+s``, in a fixed recursive order."""
    out: list[Path] = []

    def rec(path: list[ShapeKey]) -> None:
        step = len(path) - 1
        if step == r + s:
            out.append(tuple(path))
            return
        lam, mu = path[-1]
        if step < r:
            for i in _addable_rows(lam):
                rec(path + [(_add_box(lam, i), mu)])
        else:
            for i in _removable_rows(lam):
                rec(path + [(_remove_box(lam, i), mu)])
            for i in _addable_rows(mu):
                rec(path + [(lam, _add_box(mu, i))])

    rec([((), ())])
    return tuple(out)


def paths_to(shape: ShapePair, r: int, s: int) -> list[Path]:
    return [p for p in all_paths(r, s) if p[-1] == (shape.lam, shape.mu)]


def path_to_triple(path: Path, r: int) -> StandardTriple:
    """Record where boxes are added to ``λ`` (in ``t``), to ``μ`` (in ``v``) and removed from ``λ`` (in ``u``)."""
    s = len(path) - 1 - r
    if s < 0 or path[0] != ((), ()):
        raise ValueError("malformed path")
    t_rows: list[list[int]] = []
    for i in range(1, r + 1):
        (a, mu_a), (b, mu_b) = path[i - 1], path[i]
        row = _diff_row(a, b, +1)
        if mu_a != mu_b or row is None:
            raise ValueError(f"step {i} must add a box to λ")
        if row == len(t_rows):
            t_rows.append([])
        t_rows[row].append(i)
    nu = tuple(len(x) for x in t_rows)
    u_cells: dict[tuple[int, int], int] = {}
    v_rows: list[list[int]] = []
    for i in range(1, s + 1):
        (la, ma), (lb, mb) = path[r + i - 1], path[r + i]
        if la == lb:
            row = _diff_row(ma, mb, +1)
            if row is None:
                raise ValueError(f"step {r + i} is not a valid box move")
            if row == len(v_rows):
                v_rows.append([])
            v_rows[row].append(i)
        else:
            row = _diff_row(la, lb, -1)
            if row is None or ma != mb:
                raise ValueError(f"step {r + i} is not a valid box move")
            u_cells[(row, lb[row] if row < len(lb) else 0)] = i
    lam = path[-1][0]
    u_rows = []
    for row in range(len(nu)):
        lam_i = lam[row] if row < len(lam) else 0
        u_rows.append(tuple(u_cells[(row, c)] for c in range(lam_i, nu[row])))
    return make_triple(t_rows, u_rows, v_rows)


def _diff_row(a: Partition, b: Partition, sign: int) -> int | None:
    la, lb = list(a), list(b)
    n = max(len(la), len(lb))
    la += [0] * (n - len(la))
    lb += [0] * (n - len(lb))
    diffs = [i for i in range(n) if la[i] != lb[i]]
    if len(diffs) != 1 or lb[diffs[0]] - la[diffs[0]] != sign:
        return None
    return diffs[0]


def triple_to_path(tr: StandardTriple) -> Path:
    r, s = tr.r, tr.s
    path: list[ShapeKey] = [((), ())]
    lam_rows = [0] * len(tr.nu)
    for i in range(1, r + 1):
        lam_rows[tr.t.row_of(i)] += 1
        path.append((as_partition(lam_rows), ()))
    mu_rows = [0] * len(tr.mu)
    u_entries = set(tr.u.entries())
    for i in range(1, s + 1):
        if i in u_entries:
            lam_rows[tr.u.row_of(i)] -= 1
        else:
            mu_rows[tr.v.row_of(i)] += 1
        path.append((as_partition(lam_rows), as_partition(mu_rows)))
    return tuple(path)


def path_max(path: Path) -> int:
    return max((lam[0] if lam else 0) + (mu[0] if mu else 0) for lam, mu in path)


@lru_cache(maxsize=None)
def _triples_by_shape(r: int, s: int) -> dict[ShapeKey, tuple[StandardTriple, ...]]:
    out: dict[ShapeKey, list[StandardTriple]] = {}
    for p in all_paths(r, s):
        out.setdefault(p[-1], []).append(path_to_triple(p, r))
    return {k: tuple(v) for k, v in out.items()}


def enumerate_triples(shape: ShapePair, r: int, s: int) -> list[StandardTriple]:
    if (shape.r, shape.s) != (r, s):
        raise ValueError(f"shape {shape} is not in Λ({r},{s})")
    return list(_triples_by_shape(r, s).get((shape.lam, shape.mu), ()))


def canonical_triple(shape: ShapePair, r: int, s: int) -> StandardTriple:
    """``ν_0 = (λ, 1^k)``, ``t = t^{ν_0}``, ``u`` has ``k+1-j`` in row ``l+j``, ``v = t^μ`` on ``k+1..s``."""
    lam, mu, k = shape.lam, shape.mu, shape.k
    if (shape.r, shape.s) != (r, s):
        raise ValueError(f"shape {shape} is not in Λ({r},{s})")
    nu0 = list(lam) + [1] * k
    t_rows, pos = [], 1
    for length in nu0:
        t_rows.append(list(range(pos, pos + length)))
        pos += length
    u_rows = [()] * len(lam) + [(k + 1 - j,) for j in range(1, k + 1)]
    v_rows, pos = [], k + 1
    for length in mu:
        v_rows.append(list(range(pos, pos + length)))
        pos += length
    return make_triple(t_rows, u_rows, v_rows)


# -- max statistic, restriction, counts ----------------------------------------

def max_sequence(tr: StandardTriple) -> list[int]:
    """``m_i = λ_1 + #(first-row entries of u > i) + #(first-row entries of v <= i)``."""
    lam1 = tr.lam[0] if tr.lam else 0
    u1 = tr.u_rows()[0] if tr.nu else ()
    v1 = tr.v.rows[0] if tr.v.rows else ()
    return [lam1 + sum(1 for a in u1 if a > i) + sum(1 for b in v1 if b <= i) for i in range(tr.s + 1)]


def max_statistic(tr: StandardTriple) -> int:
    return max(max_sequence(tr))


def res_triple(tr: StandardTriple) -> StandardTriple:
    """Remove ``s`` from ``u`` or ``v``; when ``s = 0`` remove ``r`` from ``t``."""
    r, s = tr.r, tr.s
    if r + s == 0:
        raise ValueError("nothing to restrict")
    if s == 0:
        t_rows = [list(row) for row in tr.t.rows]
        row = tr.t.row_of(r)
        if t_rows[row][-1] != r:
            raise ValueError("r is not at the end of its row")
        t_rows[row].pop()
        t_rows = [x for x in t_rows if x]
        return make_triple(t_rows, [], [])
    u_rows = [list(x) for x in tr.u_rows()]
    v_rows = [list(x) for x in tr.v.rows]
    if s in tr.u.entries():
        row = tr.u.row_of(s)
        if u_rows[row][0] != s:
            raise ValueError("s is not the first entry of its u-row")
        u_rows[row].pop(0)
    else:
        row = tr.v.row_of(s)
        if v_rows[row][-1] != s:
            raise ValueError("s is not at the end of its v-row")
        v_rows[row].pop()
        v_rows = [x for x in v_rows if x]
    return make_triple([list(x) for x in tr.t.rows], u_rows, v_rows)


def res_shapes(shape: ShapePair, r: int, s: int) -> list[ShapePair]:
    """``Res(λ,μ)``: the shapes of restricted triples, most dominant first."""
    found = {res_triple(tr).shape for tr in enumerate_triples(shape, r, s)}
    ordered = sorted(found, key=lambda a: -sum(1 for b in found if a.dominates(b)))
    return ordered


def m0_triples(shape: ShapePair, r: int, s: int, n: int) -> list[StandardTriple]:
    """``M_0(λ,μ)``: triples with ``max <= n``."""
    return [tr for tr in enumerate_triples(shape, r, s) if max_statistic(tr) <= n]


def lambda0(r: int, s: int, n: int) -> list[ShapePair]:
    return [sh for sh in enumerate_shapes(r, s) if m0_triples(sh, r, s, n)]


def count_ranks(r: int, s: int, n: int) -> tuple[int, int, int]:
    """``(Σ|M|², Σ|M_0|², difference)``."""
    if n < 1:
        raise ValueError("n must be positive")
    walled = end = 0
    for sh in enumerate_shapes(r, s):
        walled += len(enumerate_triples(sh, r, s)) ** 2
        end += len(m0_triples(sh, r, s, n)) ** 2
    return walled, end, walled - end


def iter_all_triples(r: int, s: int) -> Iterator[tuple[ShapePair, StandardTriple]]:
    for sh in enumerate_shapes(r, s):
        for tr in enumerate_triples(sh, r, s):
            yield sh, tr

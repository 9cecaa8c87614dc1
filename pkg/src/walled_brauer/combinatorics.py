"""Partitions, compositions, skew shapes and tableaux.

Partitions and compositions are plain tuples of ints.  A :class:`Tableau` is
an injective filling of a (possibly skew) diagram whose entries are compared
either in the usual order (``"asc"``) or in the reversed order (``"desc"``);
with ``"desc"`` the words row-standard / standard read as anti-row-standard /
anti-standard.  :class:`TypedTableau` allows repeated entries and is used for
semistandard tableaux.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Cell = tuple[int, int]


def as_partition(parts: Iterable[int]) -> Partition:
    """Strip trailing zeros and validate a partition."""
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {tuple(parts)}")
    return tuple(p)


def is_partition(parts: Sequence[int]) -> bool:
    try:
        as_partition(parts)
    except ValueError:
        return False
    return True


def enumerate_partitions(m: int) -> list[Partition]:
    """All partitions of ``m`` in descending lexicographic order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return list(_partitions(m, m))


def _partitions(m: int, largest: int) -> Iterator[Partition]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """``a ⊵ b``: every prefix sum of ``a`` is at least that of ``b``."""
    if sum(a) != sum(b):
        raise ValueError(f"size mismatch: {tuple(a)} vs {tuple(b)}")
    length = max(len(a), len(b))
    pa = list(accumulate(list(a) + [0] * (length - len(a))))
    pb = list(accumulate(list(b) + [0] * (length - len(b))))
    return all(x >= y for x, y in zip(pa, pb))


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(max(p)))


def hook_length_count(p: Partition) -> int:
    """Number of standard tableaux of shape ``p`` by the hook length formula."""
    conj = conjugate(p)
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sum(p)) // hooks


@dataclass(frozen=True)
class SkewShape:
    """The diagram ``[outer] \\ [inner]`` (row lengths of both may be compositions)."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        inner = tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))
        if len(inner) > len(self.outer) or any(i > o for i, o in zip(inner, self.outer)):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")
        object.__setattr__(self, "inner", inner)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(o - i for o, i in zip(self.outer, self.inner))

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    def cells(self) -> list[Cell]:
        return [(i, j) for i, (o, s) in enumerate(zip(self.outer, self.inner)) for j in range(s, o)]


@dataclass(frozen=True)
class Tableau:
    """Injective filling of a skew diagram.

    ``rows[i]`` lists the entries of row ``i`` left to right; they start in
    column ``inner[i]``.  ``order`` selects the linear order on the entries.
    """

    rows: tuple[tuple[int, ...], ...]
    inner: tuple[int, ...] = ()
    order: str = "asc"

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        inner = tuple(self.inner) + (0,) * (len(rows) - len(self.inner))
        if len(inner) != len(rows):
            raise ValueError("inner offsets longer than the row list")
        if self.order not in ("asc", "desc"):
            raise ValueError(f"order must be 'asc' or 'desc', got {self.order!r}")
        entries = [x for r in rows for x in r]
        if len(set(entries)) != len(entries):
            raise ValueError(f"tableau entries are not distinct: {rows}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "inner", inner)

    # -- shape -------------------------------------------------------------
    @property
    def shape(self) -> SkewShape:
        return SkewShape(tuple(i + len(r) for i, r in zip(self.inner, self.rows)), self.inner)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    def entries(self) -> list[int]:
        """Entries in row-reading order."""
        return [x for r in self.rows for x in r]

    def cells(self) -> list[Cell]:
        return [(i, self.inner[i] + j) for i, r in enumerate(self.rows) for j in range(len(r))]

    def items(self) -> list[tuple[Cell, int]]:
        return [((i, self.inner[i] + j), x) for i, r in enumerate(self.rows) for j, x in enumerate(r)]

    def position(self, entry: int) -> Cell:
        for cell, x in self.items():
            if x == entry:
                return cell
        raise KeyError(entry)

    def row_of(self, entry: int) -> int:
        return self.position(entry)[0]

    def _lt(self, a: int, b: int) -> bool:
        return a < b if self.order == "asc" else a > b

    # -- standardness ------------------------------------------------------
    def is_row_standard(self) -> bool:
        return all(self._lt(a, b) for r in self.rows for a, b in zip(r, r[1:]))

    def is_column_standard(self) -> bool:
        where = dict(self.items())
        return all(
            self._lt(x, where[(i + 1, j)]) for (i, j), x in where.items() if (i + 1, j) in where
        )

    def is_standard(self) -> bool:
        return self.is_row_standard() and self.is_column_standard()

    def row_sorted(self) -> tuple["Tableau", int]:
        """Row-standard tableau with the same row sets, and the sign of the sorting."""
        sign = 1
        rows = []
        for r in self.rows:
            key = sorted(r, reverse=(self.order == "desc"))
            sign *= permutation_sign([r.index(x) for x in key])
            rows.append(tuple(key))
        return Tableau(tuple(rows), self.inner, self.order), sign

    # -- serialisation -----------------------------------------------------
    def to_json(self) -> dict:
        shape = self.shape
        return {
            "shape": {"outer": list(shape.outer), "inner": list(shape.inner)},
            "rows": [list(r) for r in self.rows],
            "order": self.order,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        inner = tuple(data.get("shape", {}).get("inner", ()))
        return cls(tuple(tuple(r) for r in data["rows"]), inner, data.get("order", "asc"))

    def __str__(self) -> str:
        lines = []
        for off, r in zip(self.inner, self.rows):
            lines.append("   " * off + " ".join(f"{x:>2}" for x in r))
        return "\n".join(lines) if lines else "∅"


def canonical_tableau(shape: Sequence[int], alphabet: Sequence[int] | None = None, order: str = "asc") -> Tableau:
    """Entries of ``alphabet`` written row by row in increasing order (for ``order``)."""
    size = sum(shape)
    if alphabet is None:
        alphabet = range(1, size + 1)
    letters = sorted(alphabet, reverse=(order == "desc"))
    if len(letters) != size:
        raise ValueError("alphabet size does not match shape")
    rows, pos = [], 0
    for length in shape:
        rows.append(tuple(letters[pos:pos + length]))
        pos += length
    return Tableau(tuple(rows), (), order)


def standard_tableaux(shape, alphabet: Sequence[int] | None = None, order: str = "asc") -> list[Tableau]:
    """All standard tableaux of ``shape`` (a partition or :class:`SkewShape`).

    Entries come from ``alphabet`` (default ``1..|shape|``); with
    ``order="desc"`` these are the anti-standard tableaux.
    """
    skew = shape if isinstance(shape, SkewShape) else SkewShape(tuple(shape))
    if alphabet is None:
        alphabet = range(1, skew.size + 1)
    letters = sorted(alphabet, reverse=(order == "desc"))
    if len(letters) != skew.size:
        raise ValueError(f"alphabet of size {len(letters)} for shape of size {skew.size}")
    outer, inner = skew.outer, skew.inner
    results: list[Tableau] = []
    filled = [0] * len(outer)  # cells filled per row, beyond inner
    rows: list[list[int]] = [[] for _ in outer]

    def addable(i: int) -> bool:
        col = inner[i] + filled[i]
        if col >= outer[i]:
            return False
        if i == 0:
            return True
        # the cell above must be occupied (by inner or by a smaller letter)
        return col < inner[i - 1] + filled[i - 1]

    def rec(pos: int) -> None:
        if pos == len(letters):
            results.append(Tableau(tuple(tuple(r) for r in rows), inner, order))
            return
        for i in range(len(outer)):
            if addable(i):
                filled[i] += 1
                rows[i].append(letters[pos])
                rec(pos + 1)
                rows[i].pop()
                filled[i] -= 1

    rec(0)
    results.sort(key=lambda t: [row for row in t.rows], reverse=(order == "desc"))
    return results


def row_standard_tableaux(shape: Sequence[int], alphabet: Sequence[int] | None = None, order: str = "asc") -> list[Tableau]:
    """All row-standard tableaux (entries increasing along rows for ``order``)."""
    from itertools import combinations

    size = sum(shape)
    letters = sorted(alphabet if alphabet is not None else range(1, size + 1), reverse=(order == "desc"))
    out: list[Tableau] = []

    def rec(i: int, remaining: list[int], acc: list[tuple[int, ...]]):
        if i == len(shape):
            out.append(Tableau(tuple(acc), (), order))
            return
        for chosen in combinations(remaining, shape[i]):
            rest = [x for x in remaining if x not in chosen]
            rec(i + 1, rest, acc + [tuple(chosen)])

    rec(0, letters, [])
    return out


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation over ``0..n-1`` or ``1..n``."""
    base = min(perm) if perm else 0
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - base
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def d_perm(t: Tableau) -> dict[int, int]:
    """Permutation ``d`` of the entry set with ``t.d(t)`` the canonical tableau.

    The canonical tableau carries the entries increasing row by row (for
    ``t.order == "desc"``: decreasing, i.e. this is ``d^anti``).  ``d`` maps
    the entry at row-reading position ``p`` of the canonical tableau to the
    entry of ``t`` at position ``p``.
    """
    if not t.is_row_standard():
        raise ValueError("d_perm needs a row-standard tableau")
    canon = sorted(t.entries(), reverse=(t.order == "desc"))
    return dict(zip(canon, t.entries()))


def d_anti_perm(t: Tableau) -> dict[int, int]:
    if t.order != "desc":
        t = Tableau(t.rows, t.inner, "desc")
    return d_perm(t)


def place_act(t: Tableau, w: dict[int, int]) -> Tableau:
    """Right place action ``t.w``: the entry ``a`` in ``t`` is replaced by ``w^{-1}(a)``.

    With this convention ``t.d_perm(t)`` is the canonical tableau and
    ``(t.w).w'`` equals ``t.(w∘w')``.
    """
    inv = {b: a for a, b in w.items()}
    return Tableau(tuple(tuple(inv.get(x, x) for x in r) for r in t.rows), t.inner, t.order)


def restrict(t: Tableau, i: int, direction: str = "down") -> Tableau:
    """``t↓i`` (entries ``<= i``) or ``t↑i`` (entries ``>= i``).

    For (anti-)row-standard input the kept entries form a left-justified block
    of each row, so the result is again a tableau over the same inner shape.
    """
    keep = (lambda x: x <= i) if direction == "down" else (lambda x: x >= i)
    rows = []
    for r in t.rows:
        kept = tuple(x for x in r if keep(x))
        if kept != r[:len(kept)]:
            raise ValueError("restriction of a non row-standard tableau")
        rows.append(kept)
    return Tableau(tuple(rows), t.inner, t.order)


def tableau_dominates(t: Tableau, s: Tableau) -> bool:
    """``t ⊵ s`` (``⊵^anti`` for descending tableaux) via shapes of restrictions.

    Shapes are compared as compositions of their row lengths; for ascending
    order the restrictions are ``↓i``, for descending ones ``↑i``.
    """
    letters = sorted(set(t.entries()) | set(s.entries()))
    if t.order != s.order:
        raise ValueError("cannot compare tableaux with different orders")
    direction = "down" if t.order == "asc" else "up"
    for i in letters:
        a = restrict(t, i, direction).row_lengths
        b = restrict(s, i, direction).row_lengths
        if sum(a) != sum(b):
            return False
        if not dominates(a, b):
            return False
    return True


@dataclass(frozen=True)
class TypedTableau:
    """Filling of a partition diagram by ``1..n`` with repetitions allowed."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def type(self, n: int) -> Composition:
        e = self.entries()
        return tuple(e.count(i) for i in range(1, n + 1))

    def is_semistandard(self) -> bool:
        rows_ok = all(a < b for r in self.rows for a, b in zip(r, r[1:]))
        cols_ok = all(
            self.rows[i][j] <= self.rows[i + 1][j]
            for i in range(len(self.rows) - 1) for j in range(len(self.rows[i + 1]))
        )
        return rows_ok and cols_ok

    def first_row(self) -> tuple[int, ...]:
        return self.rows[0] if self.rows else ()

    def restrict(self, i: int) -> "TypedTableau":
        return TypedTableau(tuple(tuple(x for x in r if x <= i) for r in self.rows))

    def dominates(self, other: "TypedTableau", n: int) -> bool:
        for i in range(1, n + 1):
            a, b = self.restrict(i).shape, other.restrict(i).shape
            if sum(a) != sum(b) or not dominates(a, b):
                return False
        return True


def semistandard_tableaux(shape: Sequence[int], n: int) -> list[TypedTableau]:
    """Tableaux with entries in ``1..n``, rows strictly and columns weakly increasing."""
    shape = tuple(shape)
    return list(_semistandard(shape, n))


@lru_cache(maxsize=None)
def _semistandard(shape: Partition, n: int) -> tuple[TypedTableau, ...]:
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    rows = [[0] * length for length in shape]
    out: list[TypedTableau] = []

    def rec(k: int) -> None:
        if k == len(cells):
            out.append(TypedTableau(tuple(tuple(r) for r in rows)))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1] + 1)
        if i > 0:
            lo = max(lo, rows[i - 1][j])
        for x in range(lo, n + 1):
            rows[i][j] = x
            rec(k + 1)
        rows[i][j] = 0

    rec(0)
    return tuple(out)

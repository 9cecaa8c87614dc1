"""Formal linear combinations of generalized diagrams.

An :class:`Element` is a sparse map from diagrams of one fixed type to
coefficients (ints, Fractions or :class:`~walled_brauer.coeffs.Poly` in x).
Products multiply coefficients by ``x**cycles`` for each closed loop.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

from . import linalg
from .coeffs import Poly, RatFunc, QQX, coeff_list, evaluate, from_list, normalize, to_field
from .combinatorics import Tableau, permutation_sign
from .diagrams import Diagram, compose, format_arrows, parse_arrows, permutation_diagram

_compose = lru_cache(maxsize=1 << 20)(compose)
_XPOW = [1] + [Poly.monomial(1, k) for k in range(1, 32)]


class Element:
    """Immutable linear combination of diagrams of type ``(top, bottom)``."""

    __slots__ = ("top", "bottom", "terms")

    def __init__(self, top: str, bottom: str, terms: Mapping[Diagram, object] | None = None):
        clean = {}
        for d, c in (terms or {}).items():
            if d.top != top or d.bottom != bottom:
                raise ValueError("diagram type differs from element type")
            c = normalize(c)
            if c != 0:
                clean[d] = c
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("Element is immutable")

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_diagram(cls, d: Diagram, coeff=1) -> "Element":
        return cls(d.top, d.bottom, {d: coeff})

    @classmethod
    def identity(cls, top: str) -> "Element":
        return cls.from_diagram(Diagram.identity(top))

    @classmethod
    def zero(cls, top: str, bottom: str) -> "Element":
        return cls(top, bottom, {})

    # -- vector space --------------------------------------------------------
    def _check(self, other: "Element") -> None:
        if (self.top, self.bottom) != (other.top, other.bottom):
            raise ValueError("cannot add elements of different types")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return Element(self.top, self.bottom, out)

    def __neg__(self) -> "Element":
        return Element(self.top, self.bottom, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        return Element(self.top, self.bottom, {d: v * c for d, v in self.terms.items()})

    def __rmul__(self, c) -> "Element":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (self.top, self.bottom) == (other.top, other.bottom) and self.terms == other.terms

    __hash__ = None

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: Diagram):
        return self.terms.get(d, 0)

    def star(self) -> "Element":
        return star(self)

    def max_degree(self) -> int:
        return max((len(coeff_list(c)) - 1 for c in self.terms.values()), default=-1)

    def __repr__(self) -> str:
        return f"Element({format_arrows(self.top)!r}->{format_arrows(self.bottom)!r}, {len(self.terms)} terms)"

    # -- serialisation -------------------------------------------------------
    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: kv[0].match)
        return {
            "type": {"top": format_arrows(self.top), "bottom": format_arrows(self.bottom)},
            "terms": [{"coeff": [_json_num(a) for a in coeff_list(c)], "diagram": d.to_json()} for d, c in items],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Element":
        top, bottom = parse_arrows(data["type"]["top"]), parse_arrows(data["type"]["bottom"])
        terms: dict[Diagram, object] = {}
        for t in data["terms"]:
            d = Diagram.from_json(t["diagram"])
            terms[d] = terms.get(d, 0) + from_list([_parse_num(a) for a in t["coeff"]])
        return cls(top, bottom, terms)


def _json_num(a):
    return a if isinstance(a, int) else str(a)


def _parse_num(a):
    return Fraction(a) if isinstance(a, str) else a


def multiply(a: Element, b: Element) -> Element:
    """Bilinear extension of diagram composition (``a`` on top)."""
    if a.bottom != b.top:
        raise ValueError(f"type mismatch: {a.bottom!r} vs {b.top!r}")
    out: dict[Diagram, object] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            d, cyc = _compose(d1, d2)
            c = c1 * c2
            if cyc:
                c = c * _XPOW[cyc]
            prev = out.get(d)
            out[d] = c if prev is None else prev + c
    return Element(a.top, b.bottom, out)


def multiply_all(*elements: Element) -> Element:
    out = elements[0]
    for e in elements[1:]:
        out = multiply(out, e)
    return out


def star(a: Element) -> Element:
    return Element(a.bottom, a.top, {d.star(): c for d, c in a.terms.items()})


def specialize(a: Element, n: int) -> Element:
    """Evaluate every coefficient at ``x = n``."""
    out = {}
    for d, c in a.terms.items():
        if isinstance(c, RatFunc):
            raise ValueError("rational-function coefficients must be cleared first")
        out[d] = evaluate(c, n)
    return Element(a.top, a.bottom, out)


def linear_combination(pairs: Iterable[tuple[object, Element]], top: str, bottom: str) -> Element:
    out: dict[Diagram, object] = {}
    for c, e in pairs:
        if c == 0:
            continue
        for d, v in e.terms.items():
            out[d] = out.get(d, 0) + c * v
    return Element(top, bottom, out)


# -- symmetric group elements ------------------------------------------------

def row_groups(shape: Sequence[int]) -> list[list[int]]:
    """Row blocks of the canonical tableau of a composition (1-based entries)."""
    groups, pos = [], 1
    for length in shape:
        groups.append(list(range(pos, pos + length)))
        pos += length
    return groups


def antisymmetrized(
    top: str,
    bottom: str,
    strands: Sequence[tuple[int, int]],
    groups: Sequence[Sequence[int]],
    fixed: Sequence[tuple[int, int]] = (),
) -> Element:
    """``Σ sgn(w) D_w`` over ``w`` permuting sinks within each group of strands.

    ``strands[c] = (source, sink)``; in ``D_w`` the source of strand ``c`` is
    joined to the sink of strand ``w(c)``.  ``fixed`` edges are added as is.
    """
    per_group = []
    for g in groups:
        per_group.append([(p, permutation_sign(p)) for p in permutations(range(len(g)))])
    terms: dict[Diagram, object] = {}
    for choice in product(*per_group):
        sign = 1
        edges = list(fixed)
        for g, (p, sg) in zip(groups, choice):
            sign *= sg
            for i, c in enumerate(g):
                edges.append((strands[c][0], strands[g[p[i]]][1]))
        d = Diagram.from_edges(top, bottom, edges)
        terms[d] = terms.get(d, 0) + sign
    return Element(top, bottom, terms)


def y_element(lam: Sequence[int], m: int | None = None) -> Element:
    """Alternating sum over the row stabilizer of the canonical ``lam``-tableau."""
    size = sum(lam)
    if m is None:
        m = size
    if size != m:
        raise ValueError(f"composition {tuple(lam)} has size {size}, not {m}")
    top = "d" * m
    strands = [(i, m + i) for i in range(m)]
    groups = [[i - 1 for i in g] for g in row_groups(lam)]
    return antisymmetrized(top, top, strands, groups)


def murphy_element(lam: Sequence[int], s: Tableau, t: Tableau) -> Element:
    """``m^λ_{s,t} = d(s)* y_λ d(t)`` as a combination of permutation diagrams.

    Computed cell by cell: ``Σ_w sgn(w) [s(c) -> t(w(c))]`` over the row
    stabilizer.  ``s`` and ``t`` may use ascending or descending order.
    """
    if s.row_lengths != tuple(lam) or t.row_lengths != tuple(lam):
        raise ValueError("tableau shape differs from lam")
    m = sum(lam)
    if sorted(s.entries()) != list(range(1, m + 1)) or sorted(t.entries()) != list(range(1, m + 1)):
        raise ValueError("Murphy elements need entries 1..m")
    top = "d" * m
    s_cells, t_cells = s.entries(), t.entries()
    strands = [(s_cells[c] - 1, m + t_cells[c] - 1) for c in range(m)]
    groups = [[i - 1 for i in g] for g in row_groups(lam)]
    return antisymmetrized(top, top, strands, groups)


def permutation_element(pi: Sequence[int], top: str) -> Element:
    return Element.from_diagram(permutation_diagram(pi, top))


# -- expansion in a basis ----------------------------------------------------

def expand_in_basis(a: Element, basis: Sequence[Element], check: bool = True) -> list:
    """Coordinates of ``a`` in a linearly independent family ``basis``.

    If every basis element has constant coefficients the system is solved
    over ℚ separately for each power of x, so polynomial input gives
    polynomial coordinates.  Otherwise the solve runs over ℚ(x); coordinates
    that are polynomials are returned as coefficients and the rest as
    :class:`RatFunc`.
    """
    if not basis:
        if a.is_zero():
            return []
        raise ValueError("element is not in the span of the empty family")
    index: dict[Diagram, int] = {}
    for e in basis:
        if (e.top, e.bottom) != (a.top, a.bottom):
            raise ValueError("basis element of the wrong type")
        for d in e.terms:
            index.setdefault(d, len(index))
    for d in a.terms:
        if d not in index:
            raise ValueError("element is not in the span of the basis")
    nrows, ncols = len(index), len(basis)
    constant = all(not isinstance(c, Poly) for e in basis for c in e.terms.values())
    if constant:
        A = {}
        for j, e in enumerate(basis):
            for d, c in e.terms.items():
                A.setdefault(index[d], {})[j] = c
        if linalg.rank(A, (nrows, ncols)) != ncols:
            raise ValueError("basis is linearly dependent")
        degree = a.max_degree()
        coords = [0] * ncols
        for k in range(degree + 1):
            rhs = [0] * nrows
            for d, c in a.terms.items():
                cl = coeff_list(c)
                if k < len(cl):
                    rhs[index[d]] = cl[k]
            sol = linalg.solve(A, rhs, (nrows, ncols))
            if sol is None:
                raise ValueError("element is not in the span of the basis")
            for j, v in enumerate(sol):
                if v:
                    coords[j] = coords[j] + v * _XPOW[k] if k else coords[j] + v
        coords = [normalize(c) for c in coords]
    else:
        coords = _expand_over_field(a, basis, index)
    if check:
        poly_coords = [c for c in coords if not isinstance(c, RatFunc)]
        if len(poly_coords) == len(coords):
            back = linear_combination(zip(coords, basis), a.top, a.bottom)
            if back != a:
                raise AssertionError("expansion does not recombine to the input")
    return coords


def _expand_over_field(a: Element, basis: Sequence[Element], index: dict[Diagram, int]) -> list:
    from sympy.polys.matrices import DomainMatrix

    nrows, ncols = len(index), len(basis)
    rows = [[QQX.zero] * ncols for _ in range(nrows)]
    for j, e in enumerate(basis):
        for d, c in e.terms.items():
            rows[index[d]][j] = to_field(c)
    M = DomainMatrix(rows, (nrows, ncols), QQX)
    if M.rank() != ncols:
        raise ValueError("basis is linearly dependent")
    rhs = [QQX.zero] * nrows
    for d, c in a.terms.items():
        rhs[index[d]] = to_field(c)
    sol = linalg.solve(M, rhs, domain=QQX)
    if sol is None:
        raise ValueError("element is not in the span of the basis")
    out = []
    for v in sol:
        rf = RatFunc.from_field(v)
        out.append(rf.as_coeff() if rf.is_polynomial() else rf)
    return out

"""Exact linear algebra over ℤ, ℚ and ℚ(x), backed by sympy's ``DomainMatrix``.

Matrices are passed around as ``dict[int, dict[int, value]]`` (sparse rows)
or as dense lists of lists; values are ints or Fractions.  Nothing here uses
floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form

SparseRows = Mapping[int, Mapping[int, object]]


def _q(v):
    if isinstance(v, Fraction):
        return QQ(v.numerator, v.denominator)
    return QQ(int(v))


def _from_q(v):
    f = Fraction(int(v.numerator), int(v.denominator))
    return int(f) if f.denominator == 1 else f


def to_domain_matrix(rows, shape: tuple[int, int] | None = None, domain=QQ) -> DomainMatrix:
    conv = _q if domain == QQ else (lambda v: domain(int(v)))
    if isinstance(rows, Mapping):
        if shape is None:
            raise ValueError("sparse input needs an explicit shape")
        data = {i: {j: conv(v) for j, v in row.items() if v != 0} for i, row in rows.items()}
        return DomainMatrix({i: r for i, r in data.items() if r}, shape, domain)
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else (shape[1] if shape else 0)
    data = {i: {j: conv(v) for j, v in enumerate(r) if v != 0} for i, r in enumerate(rows)}
    return DomainMatrix({i: r for i, r in data.items() if r}, (nrows, ncols), domain)


def rank(rows, shape: tuple[int, int] | None = None) -> int:
    m = to_domain_matrix(rows, shape)
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    return m.rank()


def nullspace(rows, shape: tuple[int, int] | None = None) -> list[list]:
    """Basis of ``{v : M v = 0}`` (right kernel), as lists of ints/Fractions."""
    m = to_domain_matrix(rows, shape)
    if m.shape[1] == 0:
        return []
    if m.shape[0] == 0:
        return [[1 if i == j else 0 for j in range(m.shape[1])] for i in range(m.shape[1])]
    ns = m.nullspace().to_dense().to_list()
    return [[_from_q(v) for v in row] for row in ns]


def left_nullspace(rows, shape: tuple[int, int] | None = None) -> list[list]:
    """Basis of ``{v : v M = 0}``."""
    m = to_domain_matrix(rows, shape).transpose()
    if m.shape[1] == 0:
        return []
    if m.shape[0] == 0:
        return [[1 if i == j else 0 for j in range(m.shape[1])] for i in range(m.shape[1])]
    return [[_from_q(v) for v in row] for row in m.nullspace().to_dense().to_list()]


def inverse(rows) -> list[list]:
    m = to_domain_matrix(rows)
    inv = m.inv().to_dense().to_list()
    return [[_from_q(v) for v in row] for row in inv]


def determinant(rows) -> int:
    m = to_domain_matrix(rows, domain=ZZ)
    if m.shape[0] == 0:
        return 1
    return int(m.to_dense().det())


def smith_invariants(rows) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix."""
    m = to_domain_matrix(rows, domain=ZZ).to_dense()
    snf = smith_normal_form(m).to_list()
    return [abs(int(snf[i][i])) for i in range(min(m.shape))]


def is_unimodular(rows) -> bool:
    rows = [list(r) for r in rows]
    if not rows or len(rows) != len(rows[0]):
        return False
    return abs(determinant(rows)) == 1


def solve(A, b, shape: tuple[int, int] | None = None, domain=QQ):
    """One solution ``x`` of ``A x = b`` (free variables set to zero), or ``None``.

    ``A`` may be sparse rows or dense; ``b`` is a dense column.  With
    ``domain`` a sympy fraction field the entries must already be domain
    elements.
    """
    if domain == QQ:
        M = to_domain_matrix(A, shape)
        rhs = DomainMatrix([[_q(v)] for v in b], (len(b), 1), QQ)
    else:
        M = A if isinstance(A, DomainMatrix) else DomainMatrix([list(r) for r in A], (len(A), len(A[0])), domain)
        rhs = DomainMatrix([[v] for v in b], (len(b), 1), domain)
    nrows, ncols = M.shape
    aug = M.to_dense().hstack(rhs.to_dense())
    red, pivots = aug.rref()
    if ncols in pivots:
        return None
    red = red.to_list()
    x = [domain.zero] * ncols
    for row, col in enumerate(pivots):
        x[col] = red[row][ncols]
    if domain == QQ:
        return [_from_q(v) for v in x]
    return x


def transpose(rows: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*rows)] if rows else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a]


def kron(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    out = []
    for ra in a:
        for rb in b:
            out.append([x * y for x in ra for y in rb])
    return out


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]

"""Actions on ordinary and mixed tensor space over ℤ.

Vectors are row vectors and every operator acts from the right, so the
matrix of ``a·b`` is ``M(a)·M(b)``.  Multi-indices are row-major: the
``V``-factors come before the ``V*``-factors and the leftmost factor is the
most significant digit.  Matrices are sparse ``dict[int, dict[int, int]]``
unless stated otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod

from . import linalg
from .algebra import Element, murphy_element, specialize
from .cellbasis import quotient_cell_module, walled_basis
from .coeffs import Poly
from .combinatorics import TypedTableau, conjugate, semistandard_tableaux, standard_tableaux, tableau_dominates
from .combinatorics import enumerate_partitions, row_standard_tableaux
from .diagrams import Diagram, enumerate_walled, walled_generators
from .triples import ShapePair, StandardTriple, count_ranks, lambda0, m0_triples

Sparse = dict[int, dict[int, object]]


# -- mixed space -----------------------------------------------------------------------

@dataclass(frozen=True)
class MixedSpace:
    r: int
    s: int
    n: int

    @property
    def dim(self) -> int:
        return self.n ** (self.r + self.s)

    def index(self, labels) -> int:
        """Position of ``v_{i_1}⊗…⊗v*_{j_s}`` for labels in ``1..n``."""
        out = 0
        for a in labels:
            out = out * self.n + (a - 1)
        return out

    def labels(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r + self.s):
            idx, a = divmod(idx, self.n)
            out.append(a + 1)
        return tuple(reversed(out))


def _diagram_entries(d: Diagram, n: int):
    """Yield ``(row, col)`` of the nonzero entries of the action matrix of ``d``."""
    p, q = d.n_top, len(d.bottom)
    edges = d.edges()
    for values in product(range(n), repeat=len(edges)):
        lab = [0] * (p + q)
        for (a, b), v in zip(edges, values):
            lab[a] = lab[b] = v
        i = j = 0
        for v in lab[:p]:
            i = i * n + v
        for v in lab[p:]:
            j = j * n + v
        yield i, j


def action_matrix(a: Element | Diagram, n: int) -> Sparse:
    """Matrix of the right action of ``a`` at ``x = n`` (shape ``n^#top × n^#bottom``)."""
    if isinstance(a, Diagram):
        a = Element.from_diagram(a)
    out: Sparse = {}
    for d, c in specialize(a, n).terms.items():
        if isinstance(c, Poly) or isinstance(c, Fraction):
            raise ValueError("action needs integer coefficients")
        for i, j in _diagram_entries(d, n):
            row = out.setdefault(i, {})
            row[j] = row.get(j, 0) + c
    return _clean(out)


def _clean(m: Sparse) -> Sparse:
    out = {}
    for i, row in m.items():
        row = {j: v for j, v in row.items() if v != 0}
        if row:
            out[i] = row
    return out


def sparse_matmul(a: Sparse, b: Sparse) -> Sparse:
    out: Sparse = {}
    for i, row in a.items():
        acc: dict[int, object] = {}
        for k, v in row.items():
            for j, w in b.get(k, {}).items():
                acc[j] = acc.get(j, 0) + v * w
        out[i] = acc
    return _clean(out)


def vec_matmul(v: dict[int, object], m: Sparse) -> dict[int, object]:
    acc: dict[int, object] = {}
    for k, c in v.items():
        for j, w in m.get(k, {}).items():
            acc[j] = acc.get(j, 0) + c * w
    return {j: c for j, c in acc.items() if c != 0}


def to_dense(m: Sparse, rows: int, cols: int) -> list[list]:
    out = [[0] * cols for _ in range(rows)]
    for i, row in m.items():
        for j, v in row.items():
            out[i][j] = v
    return out


def to_triplets(m: Sparse, rows: int, cols: int) -> str:
    """Text export: a header ``rows cols`` and one ``i j value`` line per nonzero."""
    lines = [f"{rows} {cols}"]
    for i in sorted(m):
        for j in sorted(m[i]):
            lines.append(f"{i} {j} {m[i][j]}")
    return "\n".join(lines) + "\n"


def from_triplets(text: str) -> tuple[Sparse, int, int]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    rows, cols = map(int, lines[0].split())
    out: Sparse = {}
    for ln in lines[1:]:
        i, j, v = ln.split()
        out.setdefault(int(i), {})[int(j)] = int(v)
    return out, rows, cols


# -- gl_n -----------------------------------------------------------------------------

def gl_generator_matrices(r: int, s: int, n: int, pairs=None) -> dict[tuple[int, int], Sparse]:
    """``e_{ab}`` acting by derivations; row ``i`` holds ``e_{ab}·v_i``."""
    if n < 1:
        raise ValueError("n must be positive")
    sp = MixedSpace(r, s, n)
    pairs = pairs or [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    out = {}
    for a, b in pairs:
        m: Sparse = {}
        for idx in range(sp.dim):
            lab = sp.labels(idx)
            row: dict[int, int] = {}
            for pos, j in enumerate(lab):
                if pos < r and j == b:
                    new = lab[:pos] + (a,) + lab[pos + 1:]
                    row[sp.index(new)] = row.get(sp.index(new), 0) + 1
                elif pos >= r and j == a:
                    new = lab[:pos] + (b,) + lab[pos + 1:]
                    row[sp.index(new)] = row.get(sp.index(new), 0) - 1
            m[idx] = row
        out[(a, b)] = _clean(m)
    return out


# -- annihilator -----------------------------------------------------------------------

def _overlay_cycles(d1: Diagram, d2: Diagram) -> int:
    """Connected components of the union of two matchings on the same vertices."""
    parent = list(range(len(d1.match)))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for d in (d1, d2):
        for a, b in d.edges():
            parent[find(a)] = find(b)
    return len({find(v) for v in range(len(parent))})


def gram_matrix(r: int, s: int, n: int) -> list[list[int]]:
    """``G[d,d'] = tr(M_d M_{d'}^T) = n^{cycles of the overlay}``, walled-diagram order."""
    ds = enumerate_walled(r, s)
    G = [[0] * len(ds) for _ in ds]
    for i, d in enumerate(ds):
        for j in range(i, len(ds)):
            G[i][j] = G[j][i] = n ** _overlay_cycles(d, ds[j])
    return G


def annihilator(r: int, s: int, n: int) -> tuple[int, list[list]]:
    """Rank and a ℚ-basis (walled-diagram coordinates) of the kernel of the action.

    ``G = A Aᵀ`` for the flattened action map ``A``, so over ℚ the kernel of
    ``A`` on the left equals that of ``G``.
    """
    kernel = linalg.left_nullspace(gram_matrix(r, s, n))
    return len(kernel), kernel


def annihilator_direct(r: int, s: int, n: int) -> tuple[int, list[list]]:
    """Same kernel computed from the flattened action matrices (small cases only)."""
    N = n ** (r + s)
    rows = {}
    for i, d in enumerate(enumerate_walled(r, s)):
        m = action_matrix(d, n)
        rows[i] = {a * N + b: v for a, row in m.items() for b, v in row.items()}
    count = len(rows)
    kernel = linalg.left_nullspace(rows, (count, N * N))
    return len(kernel), kernel


def image_rank(r: int, s: int, n: int) -> int:
    return linalg.rank(gram_matrix(r, s, n))


# -- commutant -------------------------------------------------------------------------

def _weight(lab: tuple[int, ...], r: int, n: int) -> tuple[int, ...]:
    w = [0] * n
    for pos, a in enumerate(lab):
        w[a - 1] += 1 if pos < r else -1
    return tuple(w)


def commutant_dim(r: int, s: int, n: int, method: str = "weight") -> int:
    """Dimension of ``{M : M E = E M}`` for all ``gl_n`` generators ``E``.

    ``method="weight"`` restricts ``M`` to weight blocks and uses only
    ``e_{a,a±1}``; ``method="dense"`` uses every ``e_{ab}`` and all ``N²``
    unknowns.
    """
    sp = MixedSpace(r, s, n)
    N = sp.dim
    if method == "dense":
        unknowns = {(i, j): i * N + j for i in range(N) for j in range(N)}
        gens = gl_generator_matrices(r, s, n)
    elif method == "weight":
        blocks: dict[tuple, list[int]] = {}
        for idx in range(N):
            blocks.setdefault(_weight(sp.labels(idx), r, n), []).append(idx)
        unknowns = {}
        for members in blocks.values():
            for i in members:
                for j in members:
                    unknowns[(i, j)] = len(unknowns)
        pairs = [(a, a + 1) for a in range(1, n)] + [(a + 1, a) for a in range(1, n)]
        gens = gl_generator_matrices(r, s, n, pairs) if pairs else {}
    else:
        raise ValueError(f"unknown method {method!r}")
    if not gens:
        return len(unknowns)
    cols = {}
    for i, j in unknowns:
        cols.setdefault(i, []).append(j)
    rows_by_col: dict[int, list[int]] = {}
    for i, j in unknowns:
        rows_by_col.setdefault(j, []).append(i)
    constraints: dict[tuple, dict[int, int]] = {}
    for key, E in gens.items():
        Et: dict[int, dict[int, int]] = {}
        for a, row in E.items():
            for b, v in row.items():
                Et.setdefault(b, {})[a] = v
        # (M E - E M)[i, l] = Σ_j M[i,j] E[j,l] - Σ_j E[i,j] M[j,l]
        for (i, j), u in unknowns.items():
            for l, v in E.get(j, {}).items():
                c = constraints.setdefault((key, i, l), {})
                c[u] = c.get(u, 0) + v
            for h, v in Et.get(i, {}).items():
                c = constraints.setdefault((key, h, j), {})
                c[u] = c.get(u, 0) - v
    rows = {}
    for c in constraints.values():
        c = {u: v for u, v in c.items() if v}
        if c:
            rows[len(rows)] = c
    return len(unknowns) - linalg.rank(rows, (len(rows), len(unknowns)))


# -- ordinary tensor space -------------------------------------------------------------------

@dataclass(frozen=True)
class OrdinaryLabel:
    lam: tuple[int, ...]
    T: TypedTableau
    t: object


def _row_vector(T_rows, t_rows, m: int, n: int) -> dict[int, int]:
    """``v_T y_λ d(t)``: per row, the positions in ``t`` carry the entries of ``T`` up to sign."""
    from itertools import permutations

    from .combinatorics import permutation_sign

    out: dict[int, int] = {}
    per_row = [list(permutations(range(len(row)))) for row in T_rows]
    for choice in product(*per_row):
        lab = [0] * m
        sign = 1
        for Trow, trow, p in zip(T_rows, t_rows, choice):
            sign *= permutation_sign(p)
            for c, pos in enumerate(trow):
                lab[pos - 1] = Trow[p[c]]
        idx = 0
        for a in lab:
            idx = idx * n + (a - 1)
        out[idx] = out.get(idx, 0) + sign
    return {i: v for i, v in out.items() if v}


def _column_vector(T_rows, t_rows, m: int, n: int) -> dict[int, int]:
    """``w_{Tt}``: sum of all ``v_i`` whose ``t``-column positions carry the ``T``-column entries."""
    from itertools import permutations

    cols_T = [[row[j] for row in T_rows if j < len(row)] for j in range(len(T_rows[0]) if T_rows else 0)]
    cols_t = [[row[j] for row in t_rows if j < len(row)] for j in range(len(t_rows[0]) if t_rows else 0)]
    found = set()
    per_col = [set(permutations(col)) for col in cols_T]
    for choice in product(*per_col):
        lab = [0] * m
        for entries, positions in zip(choice, cols_t):
            for a, pos in zip(entries, positions):
                lab[pos - 1] = a
        idx = 0
        for a in lab:
            idx = idx * n + (a - 1)
        found.add(idx)
    return {i: 1 for i in found}


def ordinary_labels(m: int, n: int) -> list[OrdinaryLabel]:
    out = []
    for lam in enumerate_partitions(m):
        for T in semistandard_tableaux(lam, n):
            for t in standard_tableaux(lam):
                out.append(OrdinaryLabel(lam, T, t))
    return out


def ordinary_basis_vectors(m: int, n: int) -> tuple[list[OrdinaryLabel], list[dict[int, int]], list[dict[int, int]]]:
    """Labels, the vectors ``v_{Tt}`` and the dual family ``w_{Tt}``."""
    labels = ordinary_labels(m, n)
    vs = [_row_vector(L.T.rows, L.t.rows, m, n) for L in labels]
    ws = [_column_vector(L.T.rows, L.t.rows, m, n) for L in labels]
    return labels, vs, ws


def pairing(w: dict[int, int], v: dict[int, int]) -> int:
    return sum(c * v.get(i, 0) for i, c in w.items())


def _row_standard_typed(lam, n: int) -> list[TypedTableau]:
    from itertools import combinations

    per_row = [list(combinations(range(1, n + 1), k)) for k in lam]
    return [TypedTableau(tuple(rows)) for rows in product(*per_row)]


def ordinary_check(m: int, n: int) -> dict:
    """Unimodularity of ``{v_{Tt}}`` and the triangularity of ``⟨w, v⟩``."""
    labels, vs, ws = ordinary_basis_vectors(m, n)
    N = n ** m
    dense = [[v.get(i, 0) for i in range(N)] for v in vs]
    square = len(vs) == N
    det = linalg.determinant(dense) if square else 0
    violations = []
    for L, w, v in zip(labels, ws, vs):
        if abs(pairing(w, v)) != 1:
            violations.append(f"<w,v> not a unit at {L.T.rows}/{L.t.rows}")
    # every row-standard (S, s) of every shape, not only the basis labels
    for L, w in zip(labels, ws):
        for lam2 in enumerate_partitions(m):
            for S in _row_standard_typed(lam2, n):
                for s_tab in row_standard_tableaux(lam2):
                    val = pairing(w, _row_vector(S.rows, s_tab.rows, m, n))
                    if val and not (L.T.dominates(S, n) and tableau_dominates(L.t, s_tab)):
                        violations.append(f"<w,v> nonzero off the order: {L.T.rows},{L.t.rows} vs {S.rows},{s_tab.rows}")
    return {
        "check": "ordinary",
        "m": m,
        "n": n,
        "vectors": len(vs),
        "dim": N,
        "determinant": det,
        "agree": square and abs(det) == 1 and not violations,
        "violations": violations,
    }


def sym_annihilator_check(m: int, n: int) -> dict:
    """Murphy elements ``m^λ_{s,t}`` vanish on ``V^{⊗m}`` iff ``λ_1 > n`` and span the kernel."""
    perms = enumerate_walled(m, 0)
    violations = []
    big_rows = []
    for lam in enumerate_partitions(m):
        for s_tab in standard_tableaux(lam):
            for t_tab in standard_tableaux(lam):
                e = murphy_element(lam, s_tab, t_tab)
                zero = not action_matrix(e, n)
                if zero != (lam[0] > n):
                    violations.append(f"m^{lam} acts {'as zero' if zero else 'nontrivially'}")
                if lam[0] > n:
                    big_rows.append([e.terms.get(d, 0) for d in perms])
    kernel_rank, _ = annihilator(m, 0, n)
    span_rank = linalg.rank(big_rows) if big_rows else 0
    if span_rank != len(big_rows):
        violations.append("Murphy elements with λ_1 > n are dependent")
    return {
        "check": "sym-annihilator",
        "m": m,
        "n": n,
        "rank": kernel_rank,
        "formula_rank": len(big_rows),
        "agree": kernel_rank == len(big_rows) == span_rank and not violations,
        "violations": violations,
    }


# -- rational tableaux -----------------------------------------------------------------------

@dataclass(frozen=True)
class RationalTableau:
    a: TypedTableau
    b: TypedTableau

    def first(self, i: int) -> int:
        return sum(1 for x in self.a.first_row() if x <= i) + sum(1 for x in self.b.first_row() if x <= i)

    def is_standard(self, n: int) -> bool:
        return (
            self.a.is_semistandard()
            and self.b.is_semistandard()
            and all(x <= n for x in self.a.entries() + self.b.entries())
            and all(self.first(i) <= i for i in range(1, n + 1))
        )

    def to_json(self) -> dict:
        return {"a": [list(r) for r in self.a.rows], "b": [list(r) for r in self.b.rows]}


def _check_fits(shape: ShapePair, n: int) -> None:
    if shape.lam1_plus_mu1 > n:
        raise ValueError(f"λ_1 + μ_1 > n for {shape}")


def enumerate_rational(shape: ShapePair, n: int) -> list[RationalTableau]:
    _check_fits(shape, n)
    out = []
    for a in semistandard_tableaux(shape.lam, n):
        for b in semistandard_tableaux(shape.mu, n):
            rt = RationalTableau(a, b)
            if all(rt.first(i) <= i for i in range(1, n + 1)):
                out.append(rt)
    return out


def tau_partition(shape: ShapePair, n: int, l: int | None = None) -> tuple[int, ...]:
    """``(n^{l-l_μ}, n-μ_{l_μ}, …, n-μ_1, λ_1, …)`` with zero parts dropped."""
    _check_fits(shape, n)
    lam, mu = shape.lam, shape.mu
    l = len(mu) if l is None else l
    if l < len(mu):
        raise ValueError("l must be at least the length of μ")
    parts = [n] * (l - len(mu)) + [n - m for m in reversed(mu)] + list(lam)
    return tuple(p for p in parts if p)


def tau_count(shape: ShapePair, n: int, l: int | None = None) -> int:
    return len(semistandard_tableaux(tau_partition(shape, n, l), n))


def weyl_dimension(shape: ShapePair, n: int) -> int:
    """Weyl's formula for the ``gl_n`` weight ``(λ'_1, …, 0, …, -μ'_1)``."""
    _check_fits(shape, n)
    lc, mc = conjugate(shape.lam), conjugate(shape.mu)
    w = list(lc) + [0] * (n - len(lc) - len(mc)) + [-x for x in reversed(mc)]
    num = prod(w[i] - w[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def rational_check(r: int, s: int, n: int) -> dict:
    rows = []
    violations = []
    total = 0
    for sh in lambda0(r, s, n):
        rat = len(enumerate_rational(sh, n))
        tau = tau_count(sh, n)
        m0 = len(m0_triples(sh, r, s, n))
        total += rat * m0
        row = {"shape": str(sh), "rat": rat, "tau": tau, "m0": m0}
        if n <= 3:
            row["weyl"] = weyl_dimension(sh, n)
            if row["weyl"] != rat:
                violations.append(f"Weyl dimension differs at {sh}")
        if rat != tau:
            violations.append(f"|Rat| != τ-count at {sh}")
        rows.append(row)
    if total != n ** (r + s):
        violations.append(f"Σ|Rat|·|M_0| = {total} != n^(r+s)")
    return {
        "check": "rational",
        "r": r,
        "s": s,
        "n": n,
        "shapes": rows,
        "total": total,
        "dim": n ** (r + s),
        "agree": not violations,
        "violations": violations,
    }


# -- the mixed basis ----------------------------------------------------------------------

@dataclass(frozen=True)
class MixedLabel:
    shape: ShapePair
    rational: RationalTableau
    triple: StandardTriple


def _v_ab(rt: RationalTableau, n: int) -> int:
    a = rt.a.entries()
    b = rt.b.entries()
    idx = 0
    for x in list(reversed(a)) + b:
        idx = idx * n + (x - 1)
    return idx


@lru_cache(maxsize=None)
def _triple_action(tr: StandardTriple, n: int) -> Sparse:
    return action_matrix(walled_basis(tr.r, tr.s).m_triple(tr), n)


def mixed_basis(r: int, s: int, n: int) -> tuple[list[MixedLabel], list[dict[int, int]]]:
    """Labels and vectors ``v_{a,b}·m_T``; ordered by shape, then ``(a,b)``, then ``T``."""
    labels, vectors = [], []
    for sh in lambda0(r, s, n):
        m0 = m0_triples(sh, r, s, n)
        for rt in enumerate_rational(sh, n):
            start = {_v_ab(rt, n): 1}
            for tr in m0:
                labels.append(MixedLabel(sh, rt, tr))
                vectors.append(vec_matmul(start, _triple_action(tr, n)))
    return labels, vectors


def mixed_basis_check(r: int, s: int, n: int) -> dict:
    labels, vectors = mixed_basis(r, s, n)
    N = n ** (r + s)
    dense = [[v.get(i, 0) for i in range(N)] for v in vectors]
    square = len(vectors) == N
    snf = linalg.smith_invariants(dense) if square else []
    return {
        "check": "mixed-basis",
        "r": r,
        "s": s,
        "n": n,
        "vectors": len(vectors),
        "dim": N,
        "smith_ones": square and all(x == 1 for x in snf),
        "agree": square and all(x == 1 for x in snf),
    }


@dataclass
class FiltrationReport:
    r: int
    s: int
    n: int
    layers: list[dict] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        dims = [layer["dim"] for layer in self.layers]
        return {
            "check": "filtration",
            "r": self.r,
            "s": self.s,
            "n": self.n,
            "layers": self.layers,
            "layer_dims": dims,
            "total": sum(dims),
            "dim": self.n ** (self.r + self.s),
            "agree": not self.violations and sum(dims) == self.n ** (self.r + self.s),
            "violations": self.violations,
        }


def filtration_check(r: int, s: int, n: int) -> dict:
    """Stability of ``V(⊵)``/``V(⊳)`` and the tensor factorization of each layer."""
    rep = FiltrationReport(r, s, n)
    labels, vectors = mixed_basis(r, s, n)
    N = n ** (r + s)
    if len(vectors) != N:
        rep.violations.append(f"{len(vectors)} vectors for a space of dimension {N}")
        return rep.to_json()
    P = [[v.get(i, 0) for i in range(N)] for v in vectors]
    Pinv = linalg.inverse(P)
    Pinv_sparse = {i: {j: c for j, c in enumerate(row) if c} for i, row in enumerate(Pinv)}
    shapes = lambda0(r, s, n)
    positions: dict[ShapePair, list[int]] = {sh: [] for sh in shapes}
    for p, L in enumerate(labels):
        positions[L.shape].append(p)

    def coords(X: Sparse) -> list[dict[int, object]]:
        return [vec_matmul(vec_matmul(v, X), Pinv_sparse) for v in vectors]

    b_ops = {name: action_matrix(d, n) for name, d in walled_generators(r, s).items()}
    gl_ops = {f"e{a}{b}": m for (a, b), m in gl_generator_matrices(r, s, n).items()}
    b_coords = {name: coords(X) for name, X in b_ops.items()}
    gl_coords = {name: coords(X) for name, X in gl_ops.items()}

    for family in (b_coords, gl_coords):
        for name, rows in family.items():
            for p, row in enumerate(rows):
                src = labels[p].shape
                for q in row:
                    if not labels[q].shape.dominates(src):
                        rep.violations.append(f"{name} maps {src} into {labels[q].shape}")
                        break

    for sh in shapes:
        pos = positions[sh]
        m0 = m0_triples(sh, r, s, n)
        rat = enumerate_rational(sh, n)
        k = len(m0)
        local = {p: i for i, p in enumerate(pos)}
        module = quotient_cell_module(sh, r, s, n) if b_ops else None
        ok_b = ok_gl = True
        for name, rows in b_coords.items():
            A = module.actions[name]
            for p in pos:
                ai, ti = divmod(local[p], k)
                expected = {pos[ai * k + tj]: c for tj, c in enumerate(A[ti]) if c}
                if {q: c for q, c in rows[p].items() if q in local} != expected:
                    ok_b = False
        for name, rows in gl_coords.items():
            G: dict[tuple[int, int], object] = {}
            for p in pos:
                ai, ti = divmod(local[p], k)
                block = {local[q]: c for q, c in rows[p].items() if q in local}
                for j, c in block.items():
                    aj, tj = divmod(j, k)
                    if tj != ti:
                        ok_gl = False
                for aj in range(len(rat)):
                    c = block.get(aj * k + ti, 0)
                    if G.setdefault((ai, aj), c) != c:
                        ok_gl = False
        if not ok_b:
            rep.violations.append(f"B-action on the {sh} layer is not Id ⊗ A_g")
        if not ok_gl:
            rep.violations.append(f"gl_n-action on the {sh} layer is not G ⊗ Id")
        rep.layers.append({"shape": str(sh), "rat": len(rat), "m0": k, "dim": len(pos)})
    return rep.to_json()


# -- Schur-Weyl at the level of dimensions ------------------------------------------------

def schur_weyl_check(r: int, s: int, n: int) -> dict:
    comm = commutant_dim(r, s, n)
    img = image_rank(r, s, n)
    _, end, _ = count_ranks(r, s, n)
    return {
        "check": "schur-weyl",
        "r": r,
        "s": s,
        "n": n,
        "commutant_dim": comm,
        "image_rank": img,
        "formula": end,
        "agree": comm == img == end,
    }


def annihilator_check(r: int, s: int, n: int) -> dict:
    rank, _ = annihilator(r, s, n)
    _, _, formula = count_ranks(r, s, n)
    return {"check": "annihilator", "r": r, "s": s, "n": n, "rank": rank, "formula_rank": formula, "agree": rank == formula}


__all__ = [
    "MixedSpace",
    "action_matrix",
    "gl_generator_matrices",
    "gram_matrix",
    "annihilator",
    "annihilator_direct",
    "commutant_dim",
    "ordinary_basis_vectors",
    "ordinary_check",
    "sym_annihilator_check",
    "RationalTableau",
    "enumerate_rational",
    "tau_partition",
    "tau_count",
    "weyl_dimension",
    "rational_check",
    "mixed_basis",
    "mixed_basis_check",
    "filtration_check",
    "schur_weyl_check",
    "annihilator_check",
    "to_triplets",
    "from_triplets",
]

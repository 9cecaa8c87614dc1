import random

import pytest
from hypothesis import given, settings, strategies as st

from walled_brauer.algebra import Element, antisymmetrized, multiply, multiply_all
from walled_brauer.diagrams import Diagram, arrows, e_diagram, enumerate_walled, walled_generators
from walled_brauer.tensor import (
    MixedSpace,
    action_matrix,
    annihilator,
    annihilator_direct,
    commutant_dim,
    enumerate_rational,
    filtration_check,
    from_triplets,
    gl_generator_matrices,
    image_rank,
    mixed_basis,
    mixed_basis_check,
    ordinary_basis_vectors,
    ordinary_check,
    pairing,
    rational_check,
    schur_weyl_check,
    sparse_matmul,
    sym_annihilator_check,
    tau_count,
    tau_partition,
    to_dense,
    to_triplets,
    weyl_dimension,
)
from walled_brauer.triples import ShapePair, count_ranks, lambda0

RS = [(r, s) for r in range(0, 6) for s in range(0, 6) if 1 <= r + s <= 5]


def sub(a, b):
    out = {}
    for m, sign in ((a, 1), (b, -1)):
        for i, row in m.items():
            for j, v in row.items():
                out.setdefault(i, {})
                out[i][j] = out[i].get(j, 0) + sign * v
    return {i: {j: v for j, v in row.items() if v} for i, row in out.items() if any(row.values())}


def test_mixed_space_indexing():
    sp = MixedSpace(2, 1, 3)
    assert sp.dim == 27
    for i in range(sp.dim):
        assert sp.index(sp.labels(i)) == i
    assert sp.index((1, 1, 2)) == 1 and sp.labels(9) == (2, 1, 1)


def test_identity_acts_as_identity():
    m = action_matrix(Diagram.identity(arrows(2, 1)), 3)
    assert m == {i: {i: 1} for i in range(27)}


def test_e_acts_by_contraction():
    # v_i ⊗ v*_j . e = δ_ij Σ_k v_k ⊗ v*_k
    m = action_matrix(e_diagram(1, 1), 2)
    assert to_dense(m, 4, 4) == [[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1]]


@pytest.mark.parametrize("r,s,n", [(2, 1, 2), (1, 2, 3), (2, 2, 2)])
def test_gl_commutes_with_diagrams(r, s, n):
    gl = gl_generator_matrices(r, s, n)
    for g in walled_generators(r, s).values():
        D = action_matrix(g, n)
        for E in gl.values():
            assert sparse_matmul(E, D) == sparse_matmul(D, E)


@pytest.mark.parametrize("r,s,n", [(1, 1, 2), (2, 1, 3)])
def test_gl_commutation_relations(r, s, n):
    gl = gl_generator_matrices(r, s, n)
    # row convention gives an anti-representation: [E_ab, E_cd] = -(δ_bc E_ad - δ_da E_cb)
    for (a, b), X in gl.items():
        for (c, d), Y in gl.items():
            lhs = sub(sparse_matmul(X, Y), sparse_matmul(Y, X))
            rhs = {}
            if b == c:
                rhs = sub(rhs, gl[(a, d)])
            if d == a:
                rhs = sub(rhs, {i: {j: -v for j, v in row.items()} for i, row in gl[(c, b)].items()})
            assert lhs == rhs


@pytest.mark.parametrize("r,s,n", [(2, 1, 2), (1, 2, 3), (3, 1, 2)])
def test_trace_of_gl_is_r_minus_s(r, s, n):
    gl = gl_generator_matrices(r, s, n)
    total = {}
    for a in range(1, n + 1):
        total = sub(total, {i: {j: -v for j, v in row.items()} for i, row in gl[(a, a)].items()})
    dim = n ** (r + s)
    expected = {i: {i: r - s} for i in range(dim)} if r != s else {}
    assert total == expected


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 23), st.integers(0, 23), st.integers(1, 3), st.integers(-2, 2))
def test_functoriality(i, j, n, c):
    ds = enumerate_walled(2, 2)
    a = Element.from_diagram(ds[i]) + Element.from_diagram(ds[j]).scale(c)
    b = Element.from_diagram(ds[(i * 7 + j) % 24])
    assert action_matrix(multiply(a, b), n) == sparse_matmul(action_matrix(a, n), action_matrix(b, n))


@pytest.mark.parametrize("r,s,n", [(3, 0, 2), (3, 1, 2), (2, 2, 1), (3, 2, 2), (4, 1, 3)])
def test_antisymmetrizer_beyond_n_acts_as_zero(r, s, n):
    top = arrows(r, s)
    m = r + s
    strands = [(i, m + i) for i in range(m)]
    y = antisymmetrized(top, top, strands, [list(range(n + 1))], fixed=strands[n + 1:])
    assert action_matrix(y, n) == {}
    rng = random.Random(r * 100 + s * 10 + n)
    ds = enumerate_walled(r, s)
    for _ in range(3):
        a, b = Element.from_diagram(rng.choice(ds)), Element.from_diagram(rng.choice(ds))
        assert action_matrix(multiply_all(a, y, b), n) == {}


@pytest.mark.parametrize("r,s", RS)
def test_annihilator_rank_matches_count(r, s):
    for n in range(1, 6):
        rank, kernel = annihilator(r, s, n)
        assert rank == count_ranks(r, s, n)[2] == len(kernel)


@pytest.mark.parametrize("r,s,n", [(1, 1, 1), (2, 1, 2), (2, 2, 2), (2, 2, 3)])
def test_annihilator_direct_agrees(r, s, n):
    assert annihilator_direct(r, s, n)[0] == annihilator(r, s, n)[0]


@pytest.mark.parametrize("n,rank", [(1, 23), (2, 10), (3, 1), (4, 0), (5, 0)])
def test_annihilator_22(n, rank):
    assert annihilator(2, 2, n)[0] == rank


def test_kernel_vectors_act_as_zero():
    r, s, n = 2, 2, 3
    _, kernel = annihilator(r, s, n)
    ds = enumerate_walled(r, s)
    for vec in kernel:
        den = 1
        for c in vec:
            den = den * getattr(c, "denominator", 1)
        e = Element(ds[0].top, ds[0].bottom, {d: c * den for d, c in zip(ds, vec)})
        assert action_matrix(e, n) == {}


@pytest.mark.parametrize("r,s,n", [(1, 1, 1), (1, 1, 2), (2, 1, 2), (2, 2, 2)])
def test_commutant_weight_equals_dense(r, s, n):
    assert commutant_dim(r, s, n) == commutant_dim(r, s, n, method="dense")


@pytest.mark.parametrize("args,dim", [((2, 2, 2), 14), ((1, 1, 2), 2), ((2, 2, 3), 23)])
def test_commutant_examples(args, dim):
    assert commutant_dim(*args) == dim == image_rank(*args)


def test_schur_weyl_report():
    rep = schur_weyl_check(2, 1, 2)
    assert rep["agree"] and rep["commutant_dim"] == rep["formula"] == rep["image_rank"]


def test_ordinary_example():
    labels, vs, ws = ordinary_basis_vectors(2, 2)
    got = {tuple(sorted(v.items())) for v in vs}
    alt = {((1, 1), (2, -1)), ((1, -1), (2, 1))}
    assert {((0, 1),), ((1, 1),), ((3, 1),)} <= got
    assert len(got & alt) == 1 and len(got) == 4
    assert abs(ordinary_check(2, 2)["determinant"]) == 1


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 4) for n in range(1, 4)])
def test_ordinary_pairing_diagonal(m, n):
    _, vs, ws = ordinary_basis_vectors(m, n)
    assert len(vs) == n ** m
    assert all(abs(pairing(w, v)) == 1 for w, v in zip(ws, vs))
    assert ordinary_check(m, n)["agree"]


@pytest.mark.parametrize("m,n,rank", [(3, 2, 1), (2, 2, 0), (3, 1, 5), (4, 2, 10)])
def test_sym_annihilator(m, n, rank):
    rep = sym_annihilator_check(m, n)
    assert rep["rank"] == rep["formula_rank"] == rank and rep["agree"]


def test_rational_examples():
    assert len(enumerate_rational(ShapePair((1,), (1,), 1), 2)) == 3
    assert len(enumerate_rational(ShapePair((1, 1), (1, 1), 0), 2)) == 5
    for n in range(1, 5):
        assert len(enumerate_rational(ShapePair((), (), 2), n)) == 1
    with pytest.raises(ValueError):
        enumerate_rational(ShapePair((2,), (1,), 0), 2)


def test_tau_partition():
    assert tau_partition(ShapePair((1,), (1,), 1), 3) == (2, 1)
    assert tau_partition(ShapePair((1,), (2,), 0), 3, l=2) == (3, 1, 1)
    assert tau_count(ShapePair((1,), (1,), 1), 3) == 8


@pytest.mark.parametrize("r,s", [(r, s) for r, s in RS if r + s <= 4])
def test_rational_count_matches_tau_and_weyl(r, s):
    for n in range(1, 4):
        for sh in lambda0(r, s, n):
            rat = len(enumerate_rational(sh, n))
            assert rat == tau_count(sh, n) == weyl_dimension(sh, n)
            assert tau_count(sh, n, l=len(sh.mu) + 1) == rat
        assert rational_check(r, s, n)["agree"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_mixed_basis_trivial(n):
    labels, vectors = mixed_basis(1, 0, n)
    assert vectors == [{i: 1} for i in range(n)]


@pytest.mark.parametrize("r,s,n,count", [(2, 2, 2, 16), (1, 1, 2, 4), (2, 1, 2, 8)])
def test_mixed_basis_unimodular(r, s, n, count):
    rep = mixed_basis_check(r, s, n)
    assert rep["vectors"] == count and rep["smith_ones"] and rep["agree"]


def test_filtration_222():
    rep = filtration_check(2, 2, 2)
    assert rep["agree"] and rep["violations"] == []
    assert rep["layer_dims"] == [5, 9, 2]


def test_filtration_112():
    rep = filtration_check(1, 1, 2)
    assert rep["agree"] and rep["layer_dims"] == [3, 1]


def test_filtration_layer_sum():
    for r, s, n in [(2, 1, 2), (1, 2, 3), (3, 1, 2)]:
        rep = filtration_check(r, s, n)
        assert rep["agree"] and rep["total"] == n ** (r + s)


def test_triplet_roundtrip():
    m = action_matrix(e_diagram(2, 1), 2)
    text = to_triplets(m, 8, 8)
    back, rows, cols = from_triplets(text)
    assert (back, rows, cols) == (m, 8, 8)
    assert text.splitlines()[0] == "8 8"


def test_action_rejects_polynomials():
    from walled_brauer.coeffs import Poly

    e = Element.from_diagram(e_diagram(1, 1), Poly((0, 1)))
    assert action_matrix(e, 2) == {0: {0: 2, 3: 2}, 3: {0: 2, 3: 2}}
    from fractions import Fraction

    with pytest.raises(ValueError):
        action_matrix(Element.from_diagram(e_diagram(1, 1), Fraction(1, 2)), 2)

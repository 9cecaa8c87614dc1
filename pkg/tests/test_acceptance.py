"""Acceptance criteria, one check per criterion.

Each ``criterion_N`` returns ``(ok, detail)``.  The pytest wrappers assert
``ok`` and tag the report so the terminal summary prints one line per
criterion.  Run this file directly for the same lines without pytest.
"""
from __future__ import annotations

import sys
from math import factorial

import pytest

from walled_brauer import linalg
from walled_brauer.cellbasis import (
    c_basis,
    c_to_m_matrix,
    check_e_case,
    e_case,
    is_unitriangular,
    restriction_filtration,
    verify_cellularity,
    verify_restriction,
    verify_weak_cellularity_of_quotient,
    walled_basis,
)
from walled_brauer.coeffs import Poly, evaluate
from walled_brauer.tensor import (
    action_matrix,
    annihilator,
    commutant_dim,
    filtration_check,
    image_rank,
    mixed_basis_check,
    ordinary_check,
    rational_check,
    sym_annihilator_check,
)
from walled_brauer.combinatorics import enumerate_partitions, hook_length_count
from walled_brauer.triples import ShapePair, count_ranks, enumerate_shapes, enumerate_triples, make_triple, max_statistic

X = Poly((0, 1))


def pairs(lo, hi):
    return [(r, s) for r in range(hi + 1) for s in range(hi + 1) if lo <= r + s <= hi]


def criterion_1():
    detail = {}
    for r, s in [(1, 0), (1, 1), (2, 1), (2, 2), (3, 1), (2, 3)]:
        B = walled_basis(r, s)
        # full rank after specializing x forces full rank over Q(x)
        rank = linalg.rank([[evaluate(c, 11) for c in row] for row in B.coordinate_matrix()])
        detail[(r, s)] = (len(B.indices), rank)
    ok = all(size == rank == factorial(r + s) for (r, s), (size, rank) in detail.items())
    return ok, detail


def criterion_2():
    profile = [len(enumerate_triples(sh, 2, 2)) for sh in enumerate_shapes(2, 2)]
    ok = profile == [1, 1, 1, 1, 4, 2] and sum(p * p for p in profile) == 24
    return ok, profile


def criterion_3():
    reports = {(r, s): verify_cellularity(r, s) for r, s in [(1, 1), (2, 1), (2, 2), (3, 1)]}
    ok = all(rep["status"] == "pass" and not rep["violations"] for rep in reports.values())
    return ok, {k: len(v["violations"]) for k, v in reports.items()}


def criterion_4():
    reports = {(r, s): verify_restriction(r, s) for r, s in [(2, 2), (3, 1)]}
    layers, problems = restriction_filtration(ShapePair((1,), (1,), 1), 2, 2)
    dims = [len(layer.layer) for layer in layers]
    ok = all(rep["status"] == "pass" for rep in reports.values()) and not problems and dims == [2, 1, 1]
    return ok, {"layers_11": dims, "violations": {k: v["violations"] for k, v in reports.items()}}


E_TRIPLES = [
    # (t rows, u rows, v rows, case, scalar)
    ([[1, 2, 3]], [[1]], [], 1, X - 2),
    ([[1, 3], [2]], [[1], []], [], 1, X - 1),
    ([[1], [2]], [[2], [1]], [], 1, X),
    ([[1, 2], [3]], [[1], []], [], 2, 1),
    ([[1, 3], [2]], [[], [1]], [], 2, 1),
    ([[1, 2]], [[2]], [[1]], 3, 1),
    ([[1, 2]], [[3, 2]], [[1]], 3, 1),
]


def criterion_5():
    results = []
    for t, u, v, case, scalar in E_TRIPLES:
        tr = make_triple(t, u, v)
        pred = e_case(tr)
        rep = check_e_case(tr)
        results.append((pred.case == case and pred.scalar == scalar and rep["module_equal"], str(tr)))
    return all(ok for ok, _ in results) and len(results) >= 5, results


def criterion_6():
    bad = []
    for r, s in pairs(1, 5):
        for n in range(1, 6):
            rank, _ = annihilator(r, s, n)
            if rank != count_ranks(r, s, n)[2]:
                bad.append((r, s, n, rank))
    specific = [annihilator(2, 2, n)[0] for n in range(1, 6)]
    return not bad and specific == [23, 10, 1, 0, 0], {"mismatches": bad, "ranks_22": specific}


def criterion_7():
    B = walled_basis(2, 2)
    cs = c_basis(2, 2)
    detail = {}
    ok = is_unitriangular(c_to_m_matrix(2, 2))
    for n in (1, 2, 3):
        killed = [i for i, idx in enumerate(B.indices) if max(max_statistic(idx.left), max_statistic(idx.right)) > n]
        zero = all(action_matrix(cs[i], n) == {} for i in killed)
        rows = [[evaluate(cs[i].coefficient(d), n) for d in B.diagrams] for i in killed]
        rank = linalg.rank(rows) if rows else 0
        ann = annihilator(2, 2, n)[0]
        detail[n] = {"killed": len(killed), "rank": rank, "ann_rank": ann, "act_as_zero": zero}
        ok = ok and zero and len(killed) == rank == ann
    return ok, detail


def criterion_8():
    rep = verify_weak_cellularity_of_quotient(2, 2, 2)
    return rep["status"] == "pass" and rep["quotient_dim"] == 14, rep


def criterion_9():
    bad = []
    for r, s in pairs(1, 4):
        for n in range(1, 4):
            c, i, f = commutant_dim(r, s, n), image_rank(r, s, n), count_ranks(r, s, n)[1]
            if not c == i == f:
                bad.append((r, s, n, c, i, f))
    return not bad and commutant_dim(2, 2, 2) == 14, bad


def criterion_10():
    basis = {mn: ordinary_check(*mn) for mn in [(2, 2), (3, 2), (3, 3)]}
    sym32, sym42 = sym_annihilator_check(3, 2), sym_annihilator_check(4, 2)
    expected42 = sum(hook_length_count(lam) ** 2 for lam in enumerate_partitions(4) if lam[0] > 2)
    ok = (
        all(rep["agree"] and abs(rep["determinant"]) == 1 for rep in basis.values())
        and sym32["rank"] == 1
        and sym32["agree"]
        and sym42["rank"] == expected42
        and sym42["agree"]
    )
    return ok, {"sym_32": sym32["rank"], "sym_42": sym42["rank"], "expected_42": expected42}


def criterion_11():
    bases = [mixed_basis_check(2, 2, 2), mixed_basis_check(1, 1, 2)]
    fil = filtration_check(2, 2, 2)
    ok = all(b["agree"] and b["smith_ones"] for b in bases) and fil["agree"] and fil["layer_dims"] == [5, 9, 2]
    return ok, {"layer_dims": fil["layer_dims"], "violations": fil["violations"]}


def criterion_12():
    bad = []
    for r, s in pairs(1, 5):
        for n in range(1, 5):
            rep = rational_check(r, s, n)
            if not rep["agree"]:
                bad.append((r, s, n, rep["violations"]))
    return not bad, bad


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 13)}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, record_property):
    record_property("criterion", number)
    ok, detail = CRITERIA[number]()
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for number, fn in CRITERIA.items():
        ok, _ = fn()
        failures += not ok
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}")
    sys.exit(1 if failures else 0)

"""Sparse exact solving, ranks, nullspaces, and the modular fast path."""

from fractions import Fraction

import pytest

from hopfcheck.cyclotomic import Cyc, IM, ONE, SQRT2, ZERO, ZETA
from hopfcheck.linalg import (NoSolution, NonUniqueSolution, exact_nullspace,
                              exact_rank, exact_solve_unique,
                              full_rank_certificate, solve_unique, span_rank)


def dense(*vals):
    return {j: v for j, v in enumerate(vals) if v != ZERO}


TWO = Cyc.from_rational(2)
THREE = Cyc.from_rational(3)


def test_solve_diagonal():
    rows = [dense(ZETA, ZERO), dense(ZERO, SQRT2)]
    sol = solve_unique(rows, [ONE, TWO], 2)
    assert sol[0] == ZETA.inv()
    assert sol[1] == SQRT2


def test_solve_matches_exact_path():
    rows = [dense(ONE, ZETA, ZERO),
            dense(IM, ONE, SQRT2),
            dense(ZERO, SQRT2, -ONE)]
    rhs = [ZETA, ZERO, THREE]
    assert solve_unique(rows, rhs, 3) == exact_solve_unique(rows, rhs, 3)


def test_solve_recovers_large_denominators():
    # solution coordinates with denominator 840 force real rational
    # reconstruction work in the modular path
    x = [Cyc((1, 1, -1, 1), 840), Cyc((3, 0, 5, 0), 280)]
    rows = [dense(TWO, ZETA), dense(-IM, SQRT2 + ONE)]
    rhs = [rows[i].get(0, ZERO) * x[0] + rows[i].get(1, ZERO) * x[1]
           for i in range(2)]
    assert solve_unique(rows, rhs, 2) == x


def test_solve_inconsistent():
    rows = [dense(ONE, ONE), dense(ONE, ONE)]
    with pytest.raises(NoSolution):
        solve_unique(rows, [ONE, TWO], 2)


def test_solve_underdetermined():
    rows = [dense(ONE, ONE)]
    with pytest.raises(NonUniqueSolution):
        solve_unique(rows, [ONE], 2)


def test_rank_and_nullspace():
    rows = [dense(ONE, ZETA, ZERO),
            dense(TWO, ZETA + ZETA, ZERO),
            dense(ZERO, ZERO, IM)]
    assert exact_rank(rows) == 2
    null = exact_nullspace(rows, 3)
    assert len(null) == 1
    v = null[0]
    for row in rows:
        acc = ZERO
        for j, c in row.items():
            acc = acc + c * v.get(j, ZERO)
        assert acc == ZERO


def test_nullspace_of_full_rank_is_empty():
    rows = [dense(ONE, ZETA), dense(ZETA, -ONE)]
    assert exact_nullspace(rows, 2) == []


def test_span_rank():
    vecs = [dense(ONE, ZERO, ZERO), dense(ONE, ONE, ZERO),
            dense(ZERO, ONE, ZERO)]
    assert span_rank(vecs, 3) == 2
    assert span_rank([], 3) == 0


def test_full_rank_certificate():
    assert full_rank_certificate([dense(ONE, ZETA), dense(ZETA, ONE)], 2)
    assert not full_rank_certificate([dense(ONE, ONE), dense(TWO, TWO)], 2)


def test_certificate_agrees_with_exact_rank_on_awkward_scalars():
    # rows built from eighth roots and half-integers, where a careless
    # reduction could misjudge the rank
    a = Cyc((1, 1, 1, 1), 2)
    rows = [dense(a, a * a, ONE), dense(ONE, a, a.inv()), dense(ZERO, ZERO, ZERO)]
    r = exact_rank(rows)
    assert full_rank_certificate(rows[:2], 3) is False
    assert r == span_rank(rows, 3)


def test_scalar_system_with_fraction_rhs():
    rows = [dense(Cyc.from_rational(Fraction(3, 7)))]
    assert solve_unique(rows, [ONE], 1) == [Cyc.from_rational(Fraction(7, 3))]

"""Corepresentations: verification, intertwiners, one-dimensional groups."""

import pytest
from hypothesis import given, settings, strategies as st

from hopfcheck.corep import (Corep, FusionGraph, OneDimGroup,
                             UnsupportedProfile, fusion_graph, hom_dim,
                             intertwiners, one_dim_group, tensor_corep,
                             verify_corep)
from hopfcheck.cyclotomic import Cyc, ONE, ZERO, ZETA
from hopfcheck.group_twist import Mat2, function_algebra, generate_group
from hopfcheck.models import build_fundamental, build_kp, build_smash, \
    kp_tensor_square

I2 = Mat2([[ONE, ZERO], [ZERO, ONE]])


def cyclic_function_hopf(order_matrix, cap):
    return function_algebra(generate_group([order_matrix], cap=cap)).hopf


def test_verify_corep_on_the_fundamental():
    f = build_fundamental()
    assert f.uprime_report.passed
    assert f.ukp_report.passed
    for rep in (f.uprime_report, f.ukp_report):
        assert rep.checks["comultiplicative"]
        assert rep.checks["counit"]
        assert rep.checks["unitary"]


def test_broken_corep_is_caught():
    kp = build_kp()
    u = build_fundamental().ukp
    swapped = Corep(kp.hopf, [[u.entries[0][1], u.entries[0][0]],
                              [u.entries[1][1], u.entries[1][0]]])
    assert not verify_corep(swapped).passed


def test_trivial_corep():
    kp = build_kp()
    triv = Corep(kp.hopf, [[kp.hopf.algebra.unit()]])
    rep = verify_corep(triv)
    assert rep.passed
    assert hom_dim(triv, triv) == 1


def test_tensor_with_trivial_changes_nothing():
    kp = build_kp()
    u = build_fundamental().ukp
    triv = Corep(kp.hopf, [[kp.hopf.algebra.unit()]])
    assert tensor_corep(triv, u).entries == u.entries
    assert tensor_corep(u, triv).entries == u.entries


def test_irreducibility_of_the_fundamental():
    u = build_fundamental().ukp
    assert hom_dim(u, u) == 1
    lines = [Corep(build_kp().hopf, [[g]]) for g in kp_tensor_square().printed]
    for line in lines:
        assert hom_dim(line, u) == 0
        assert hom_dim(u, line) == 0
    for i, x in enumerate(lines):
        for j, y in enumerate(lines):
            assert hom_dim(x, y) == (1 if i == j else 0)


def test_one_dim_group_of_two_point_algebra():
    h = cyclic_function_hopf(-I2, cap=4)
    found = one_dim_group(h)
    assert found.order == 2
    e = found.identity_index
    other = 1 - e
    assert found.table[other][other] == e


def test_one_dim_group_of_kp_is_klein():
    found = kp_tensor_square().group
    assert found.order == 4
    e = found.identity_index
    for a in range(4):
        assert found.table[a][a] == e
        assert found.table[e][a] == a


def test_one_dim_group_rejects_two_big_blocks():
    sm = build_smash()
    with pytest.raises(UnsupportedProfile):
        one_dim_group(sm.hopf)


def test_one_dim_group_rejects_high_order_characters():
    # the matrix [[0, z], [1, 0]] has order 16; characters of the cyclic
    # group it generates do not all land in the eighth roots of unity, and
    # the search must refuse rather than return a partial list
    m = Mat2([[ZERO, ZETA], [ONE, ZERO]])
    h = cyclic_function_hopf(m, cap=20)
    assert h.dim == 16
    with pytest.raises(UnsupportedProfile):
        one_dim_group(h)


def test_fusion_graph_serialization():
    from hopfcheck.models import kp_fusion_graph
    g = kp_fusion_graph()
    d = g.to_dict()
    assert d["labels"] == ["u1", "u2", "u3", "u4", "fund"]
    assert d["complete"] and d["irreducible"]
    dot = g.to_dot()
    assert "fund" in dot and "->" in dot


# intertwiner spaces, randomized over tensor words in the irreducibles:
# two properties at 500 examples each is 1000 cases

_WORDS = None


def word_corpus():
    global _WORDS
    if _WORDS is None:
        kp = build_kp()
        lines = [Corep(kp.hopf, [[g]]) for g in kp_tensor_square().printed]
        fund = build_fundamental().ukp
        gens = lines + [fund]
        words = list(gens)
        for x in gens:
            for y in gens:
                words.append(tensor_corep(x, y))
        _WORDS = words
    return _WORDS


@settings(max_examples=500)
@given(st.data())
def test_hom_dimension_is_symmetric(data):
    words = word_corpus()
    u = data.draw(st.sampled_from(words))
    v = data.draw(st.sampled_from(words))
    assert hom_dim(u, v) == hom_dim(v, u)


@settings(max_examples=500)
@given(st.data())
def test_intertwiners_actually_intertwine(data):
    words = word_corpus()
    u = data.draw(st.sampled_from(words))
    v = data.draw(st.sampled_from(words))
    zero = u.hopf.algebra.zero()
    for t in intertwiners(u, v):
        for i in range(v.size):
            for j in range(u.size):
                lhs = zero
                for k in range(u.size):
                    if t[i][k]:
                        lhs = lhs + u.entries[k][j].scale(t[i][k])
                rhs = zero
                for l in range(v.size):
                    if t[l][j]:
                        rhs = rhs + v.entries[i][l].scale(t[l][j])
                assert lhs == rhs

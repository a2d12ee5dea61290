"""Multimatrix algebras, their elements, and linear maps between them."""

import pytest
from hypothesis import given, settings, strategies as st

from hopfcheck.cyclotomic import Cyc, HALF, IM, INV_SQRT2, ONE, ZERO, ZETA
from hopfcheck.multimatrix import (AlgElement, LinearMap, MultiMatrixAlgebra,
                                   flip_map, mult_map, tensor_algebra,
                                   tensor_map)

A = MultiMatrixAlgebra((1, 2), labels=("s", "m"))
B = MultiMatrixAlgebra((1, 1), labels=("p", "q"))
C = MultiMatrixAlgebra((2,), labels=("n",))

scalars = st.sampled_from((ZERO, ONE, -ONE, ZETA, IM, HALF, INV_SQRT2,
                           ONE + ZETA, -IM))


def elements(alg):
    return st.builds(
        lambda vals: alg.element({j: v for j, v in enumerate(vals) if v}),
        st.tuples(*[scalars] * alg.dim))


def maps(src, tgt):
    return st.builds(
        lambda rows: LinearMap.from_matrix(src, tgt, rows),
        st.tuples(*[st.tuples(*[scalars] * src.dim)] * tgt.dim))


def test_basis_indexing():
    assert A.dim == 5
    assert A.index(0, 0, 0) == 0
    assert A.index(1, 1, 0) == 3          # block-major, row-major inside
    assert A.decompose(4) == (1, 1, 1)
    assert A.basis_name(0) == "s"
    assert A.basis_name(2) == "m[0,1]"


def test_basis_products():
    e11, e12 = A.basis_element(1, 0, 0), A.basis_element(1, 0, 1)
    e21, e22 = A.basis_element(1, 1, 0), A.basis_element(1, 1, 1)
    assert e11 * e12 == e12
    assert e12 * e21 == e11
    assert e12 * e12 == A.zero()
    assert e12.star() == e21
    assert (e11 + e22) * e12 == e12
    assert A.unit() * e21 == e21


def test_mul_basis_matches_elements():
    for p in range(A.dim):
        for q in range(A.dim):
            r = A.mul_basis(p, q)
            prod = A.basis()[p] * A.basis()[q]
            assert prod == (A.basis()[r] if r is not None else A.zero())


def test_equality_is_by_shape():
    assert A == MultiMatrixAlgebra((1, 2), labels=("x", "y"))
    assert A != B
    assert hash(A) == hash(MultiMatrixAlgebra((1, 2)))


def test_from_blocks_round_trip():
    x = A.from_blocks([[[ZETA]], [[ONE, IM], [ZERO, -ONE]]])
    assert x.blocks() == [[[ZETA]], [[ONE, IM], [ZERO, -ONE]]]


def test_tensor_algebra_shape():
    ta, tidx = tensor_algebra(A, C)
    assert ta.dim == A.dim * C.dim
    # simple tensors of basis elements are basis elements of the product
    x = A.basis_element(1, 0, 1)
    y = C.basis_element(0, 1, 0)
    assert x.tensor(y) == ta.basis()[tidx[A.index(1, 0, 1)][C.index(0, 1, 0)]]


def test_tensor_of_products():
    x1, x2 = A.basis_element(1, 0, 1), A.basis_element(1, 1, 0)
    y1, y2 = C.basis_element(0, 0, 0), C.basis_element(0, 0, 1)
    assert x1.tensor(y1) * x2.tensor(y2) == (x1 * x2).tensor(y1 * y2)


def test_linear_map_shapes():
    with pytest.raises(ValueError):
        LinearMap(A, B, [{}] * 3)
    with pytest.raises(ValueError):
        LinearMap.from_matrix(A, B, [[ONE] * 3] * B.dim)
    ident = LinearMap.identity(A)
    x = A.basis_element(1, 0, 0)
    assert ident(x) == x
    with pytest.raises(ValueError):
        LinearMap.identity(B)(x)


def test_map_matrix_round_trip():
    f = LinearMap.from_matrix(A, B, [[ONE if (i + j) % 3 == 0 else ZERO
                                      for j in range(A.dim)]
                                     for i in range(B.dim)])
    assert LinearMap.from_matrix(A, B, f.matrix()) == f


def test_mult_and_flip():
    m = mult_map(A)
    x, y = A.basis_element(1, 0, 1), A.basis_element(1, 1, 1)
    assert m(x.tensor(y)) == x * y
    fl = flip_map(A)
    assert fl(x.tensor(y)) == y.tensor(x)
    assert fl.compose(fl) == LinearMap.identity(fl.source)


def test_zero_columns_are_stripped():
    f = LinearMap(A, A, [{0: ZERO, 1: ONE}] + [{}] * 4)
    assert f.cols[0] == {1: ONE}


# star is an antilinear anti-automorphism: four properties at 250 examples
# each is 1000 randomized cases

@settings(max_examples=250)
@given(elements(A), elements(A))
def test_star_reverses_products(x, y):
    assert (x * y).star() == y.star() * x.star()


@settings(max_examples=250)
@given(elements(A))
def test_star_involutive(x):
    assert x.star().star() == x


@settings(max_examples=250)
@given(elements(A), elements(A))
def test_star_additive(x, y):
    assert (x + y).star() == x.star() + y.star()


@settings(max_examples=250)
@given(elements(A), scalars)
def test_star_antilinear(x, c):
    assert x.scale(c).star() == x.star().scale(c.conj())


# the tensor construction is functorial: 700 + 300 examples over the two
# properties is 1000 randomized cases

@settings(max_examples=700)
@given(maps(A, B), maps(A, B), elements(A), elements(A))
def test_tensor_map_on_pure_tensors(f, g, x, y):
    assert tensor_map(f, g)(x.tensor(y)) == f(x).tensor(g(y))


@settings(max_examples=300)
@given(maps(A, B), maps(B, A), maps(A, B), maps(B, A))
def test_tensor_map_composes(f1, f2, g1, g2):
    lhs = tensor_map(f2, g2).compose(tensor_map(f1, g1))
    rhs = tensor_map(f2.compose(f1), g2.compose(g1))
    assert lhs == rhs


def test_tensor_of_identities():
    ta, _ = tensor_algebra(A, B)
    assert tensor_map(LinearMap.identity(A), LinearMap.identity(B)) \
        == LinearMap.identity(ta)

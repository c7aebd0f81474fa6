import random
from fractions import Fraction

import pytest

from trilie.fields import PrimeField, QQ
from trilie.linalg import Matrix, Subspace, kernel, kernel_of_functional, rref


def q(n, d=1):
    return Fraction(n, d)


# ---------------------------------------------------------------------------
# rref
# ---------------------------------------------------------------------------

def test_rref_prunes_dependent_rows():
    m = Matrix(QQ, [[q(2), q(4)], [q(1), q(2)]])
    assert rref(m).rows == [[q(1), q(2)]]


def test_rref_identity_fixed():
    m = Matrix(QQ, [[q(1), q(0), q(0)], [q(0), q(1), q(0)], [q(0), q(0), q(1)]])
    assert rref(m) == m


def test_rref_mod3():
    # hand Gaussian elimination mod 3: [[1,1],[1,2]] -> [[1,0],[0,1]]
    F3 = PrimeField(3)
    m = Matrix(F3, [[1, 1], [1, 2]])
    assert rref(m).rows == [[1, 0], [0, 1]]


def test_rref_idempotent():
    rng = random.Random(5)
    for F in (QQ, PrimeField(5)):
        for _ in range(20):
            rows = [[F.random_element(rng) for _ in range(4)] for _ in range(3)]
            r1 = rref(Matrix(F, rows))
            assert rref(r1) == r1


def test_row_space_preserved():
    rng = random.Random(11)
    for _ in range(20):
        rows = [[QQ.random_element(rng) for _ in range(5)] for _ in range(4)]
        s = Subspace(QQ, 5, rows)
        for row in rows:
            assert s.contains(row)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

def test_membership_basics():
    s = Subspace(QQ, 3, [[q(1), q(0), q(0)], [q(0), q(1), q(0)]])
    assert s.contains([q(0), q(0), q(0)])
    assert s.contains([q(1), q(0), q(0)])
    assert not s.contains([q(0), q(0), q(1)])


def test_membership_dimension_mismatch():
    s = Subspace(QQ, 3, [[q(1), q(0), q(0)]])
    with pytest.raises(ValueError):
        s.contains([q(1), q(0)])


def test_sum_with_itself():
    s = Subspace(QQ, 3, [[q(1), q(2), q(0)]])
    assert s + s == s


def test_codimension():
    full = Subspace.full(QQ, 4)
    assert full.codim == 0
    e1 = Subspace(QQ, 3, [[q(1), q(0), q(0)]])
    e2 = Subspace(QQ, 3, [[q(0), q(1), q(0)]])
    s = e1 + e2
    assert s.dim == 2 and s.codim == 1


def test_zero_subspace_is_a_value():
    z = Subspace.zero(QQ, 4)
    assert z.dim == 0
    assert z == Subspace(QQ, 4, [])
    assert (z + z) == z


def test_canonical_equality():
    a = Subspace(QQ, 3, [[q(1), q(1), q(0)], [q(0), q(0), q(1)]])
    b = Subspace(QQ, 3, [[q(2), q(2), q(2)], [q(0), q(0), q(-1)]])
    assert a == b


def test_dim_formula_sum_intersection():
    rng = random.Random(23)
    for F in (QQ, PrimeField(3)):
        for _ in range(25):
            n = 5
            a = Subspace(F, n, [[F.random_element(rng) for _ in range(n)] for _ in range(rng.randint(0, 4))])
            b = Subspace(F, n, [[F.random_element(rng) for _ in range(n)] for _ in range(rng.randint(0, 4))])
            cap = a.intersection(b)
            assert (a + b).dim + cap.dim == a.dim + b.dim
            for row in cap.basis:
                assert a.contains(row) and b.contains(row)


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------

def test_kernel_of_matrix():
    m = Matrix(QQ, [[q(1), q(2), q(3)]])
    k = kernel(m)
    assert k.dim == 2
    for row in k.basis:
        assert sum(c * x for c, x in zip([q(1), q(2), q(3)], row)) == 0


def test_kernel_of_functional_codim_one():
    F5 = PrimeField(5)
    values = [0, 1, 2, 3, 4]
    k = kernel_of_functional(F5, values)
    assert k.codim == 1
    for row in k.basis:
        assert sum(v * x for v, x in zip(values, row)) % 5 == 0

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgskew.fields import CANDIDATE_PRIMES, QQ, PrimeField
from dgskew.linalg import Matrix, RowSpan, extend_independent

FP = PrimeField(CANDIDATE_PRIMES[0])

matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(st.lists(st.integers(-9, 9), min_size=m, max_size=m),
                           min_size=n, max_size=n)))


def test_rank_examples():
    assert Matrix.zero(QQ, 3, 3).rank() == 0
    assert Matrix.identity(QQ, 3).rank() == 3


def test_kernel_examples():
    assert Matrix.identity(QQ, 3).kernel_basis() == []
    k = Matrix.from_rows(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 0]]).kernel_basis()
    assert k == [(0, 0, 1)]
    k = Matrix.from_rows(QQ, [[1, 1, 0], [1, 1, 0], [1, 1, 0]]).kernel_basis()
    assert len(k) == 2
    # reduced form: each vector has a leading 1 in its own free coordinate
    assert k[0] == (-1, 1, 0)
    assert k[1] == (0, 0, 1)


def test_solve_identity():
    A = Matrix.identity(QQ, 3)
    assert A.solve([2, -1, 5]) == tuple(QQ.coerce(v) for v in (2, -1, 5))


def test_solve_inconsistent_is_none():
    A = Matrix.from_rows(QQ, [[1, 0], [1, 0]])
    assert A.solve([1, 2]) is None


def test_inverse():
    A = Matrix.from_rows(QQ, [[2, 1, 0], [0, 1, 0], [1, 0, 3]])
    assert A.inverse().mul(A).entries == Matrix.identity(QQ, 3).entries
    with pytest.raises(ValueError):
        Matrix.from_rows(QQ, [[1, 1], [1, 1]]).inverse()


@given(matrices)
@settings(max_examples=60)
def test_rank_nullity(rows):
    A = Matrix.from_rows(QQ, rows)
    assert A.rank() + len(A.kernel_basis()) == A.ncols
    for v in A.kernel_basis():
        assert all(QQ.is_zero(x) for x in A.apply(v))


@given(matrices, st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_solve_returns_actual_solutions(rows, rnd):
    A = Matrix.from_rows(QQ, rows)
    x = [QQ.coerce(rnd.randint(-5, 5)) for _ in range(A.ncols)]
    b = A.apply(x)
    sol = A.solve(b)
    assert sol is not None
    assert A.apply(sol) == tuple(b)


@given(matrices)
@settings(max_examples=40)
def test_rank_agrees_with_large_prime(rows):
    # over F_p and Q the rank of an integer matrix agrees for all but
    # finitely many p; entries here are far below the modulus
    assert Matrix.from_rows(QQ, rows).rank() == Matrix.from_rows(FP, rows).rank()


def test_rowspan_reduce_and_express():
    span = RowSpan(QQ, 3)
    assert span.add([1, 1, 0])
    assert span.add([0, 1, 1])
    assert not span.add([1, 2, 1])  # dependent
    assert span.contains([2, 3, 1])
    coeffs = span.express([2, 3, 1])
    assert coeffs is not None and len(coeffs) == 2
    assert span.express([0, 0, 1]) is None


def test_extend_independent_is_greedy_and_deterministic():
    span = RowSpan(QQ, 3)
    span.add([1, 0, 0])
    picked = extend_independent(span, [[2, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 3]])
    assert [list(p) for p in picked] == [[0, 1, 0], [0, 0, 3]]


def test_rowspan_pivot_from_right():
    span = RowSpan(QQ, 3, pivot_from_right=True)
    span.add([1, 0, 1])
    # the pivot sits at the last nonzero coordinate, so reducing a vector
    # leaves support on the earliest coordinates
    residue = span.reduce([0, 1, 1])
    assert [QQ.to_str(x) for x in residue] == ["-1", "1", "0"]

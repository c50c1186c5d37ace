import json
import random

import pytest

from dgskew.cohomology import DegreeOverflowError, cohomology
from dgskew.dg import DGSpec
from dgskew.fields import QQ
from dgskew.linalg import Matrix
from dgskew.sampling import random_rank_two
from dgskew.skew import GradedElement, Monomial, degree_dim, parse_element


def report_of(rows, bound=6):
    return cohomology(DGSpec(QQ, Matrix.from_rows(QQ, rows)), bound)


def test_identity_matrix_collapses():
    rep = report_of([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 8)
    assert rep.dims == [1, 0, 0, 0, 0, 0, 0, 0, 0]


def test_zero_matrix_gives_the_whole_algebra():
    rep = report_of([[0] * 3] * 3, 4)
    assert rep.dims == [1, 3, 6, 10, 15]


def test_rank_one_dims_grow_linearly():
    rep = report_of([[1, 1, 0], [1, 1, 0], [1, 1, 0]], 6)
    assert rep.dims == [1, 2, 3, 4, 5, 6, 7]


def test_rank_bookkeeping():
    rep = report_of([[1, 1, 0], [1, 1, 0], [1, 1, 0]], 6)
    for d in range(7):
        assert rep.dims[d] == rep.cocycle_ranks[d] - rep.coboundary_ranks[d]
        if d < 6:
            # dim A^d = dim Z^d + rank of the outgoing differential
            assert degree_dim(d) == rep.cocycle_ranks[d] + rep.coboundary_ranks[d + 1]
    assert rep.dims[0] == 1  # connectedness


def test_class_of_coboundary_is_zero_class():
    rep = report_of([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    cls = rep.class_of(GradedElement.monomial(QQ, Monomial(2, 0, 0)))
    assert cls is not None and cls.is_zero


def test_class_of_non_cocycle_is_none():
    rep = report_of([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rep.class_of(parse_element(QQ, "x1 x2")) is None


def test_class_of_zero_normal_form():
    rep = report_of([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    z = parse_element(QQ, "x1 x2").add(parse_element(QQ, "-x1 x2"))
    cls = rep.class_of(z)
    assert cls is not None and cls.is_zero


def test_rank_two_generator_spans_h1():
    M = [[1, 0, 0], [0, 1, 0], [0, 0, 0]]
    rep = report_of(M)
    cls = rep.class_of(parse_element(QQ, "x3"))
    assert cls is not None and not cls.is_zero
    assert rep.dims[1] == 1


def test_square_probe_both_branches():
    # pairing nonzero: the degree-1 class squares to a nonzero class
    rep = report_of([[1, 0, 0], [0, 1, 0], [0, 0, 0]], 6)
    xi = rep.class_of(parse_element(QQ, "x3"))
    assert not rep.class_product(xi, xi).is_zero
    # pairing zero: the square dies but the degree-2 kernel class survives
    rep0 = report_of([[1, 0, 0], [0, 0, 1], [0, 0, 0]], 6)
    xi0 = rep0.class_of(parse_element(QQ, "x3"))
    assert rep0.class_product(xi0, xi0).is_zero
    eta = rep0.class_of(parse_element(QQ, "x2^2"))
    assert eta is not None and not eta.is_zero


def test_unit_class_is_neutral():
    rep = report_of([[1, 1, 0], [1, 1, 0], [1, 1, 0]])
    one = rep.unit_class()
    xi = rep.class_of(parse_element(QQ, "x1 - x2"))
    prod = rep.class_product(one, xi)
    assert prod.coordinates == xi.coordinates


def test_class_product_associative_on_samples():
    rep = report_of([[1, 0, 0], [0, 1, 0], [0, 0, 0]], 6)
    xi = rep.class_of(parse_element(QQ, "x3"))
    sq = rep.class_product(xi, xi)
    left = rep.class_product(sq, xi)
    right = rep.class_product(xi, sq)
    assert left.coordinates == right.coordinates


def test_degree_overflow():
    rep = report_of([[1, 1, 0], [1, 1, 0], [1, 1, 0]], 3)
    xi = rep.class_of(parse_element(QQ, "x1 - x2"))
    sq = rep.class_product(xi, xi)
    with pytest.raises(DegreeOverflowError):
        rep.class_product(sq, sq)


def test_rank_one_h1_basis_is_two_dimensional():
    rep = report_of([[1, 1, 0], [1, 1, 0], [1, 1, 0]])
    xi = rep.class_of(parse_element(QQ, "x1 - x2"))
    eta = rep.class_of(parse_element(QQ, "x1 - x3"))
    assert not xi.is_zero and not eta.is_zero
    assert xi.coordinates != eta.coordinates


def test_kernel_square_class_powers_stay_nonzero():
    # pairing-zero branch: powers of the degree-2 class survive to the bound
    rep = report_of([[1, 0, 0], [0, 0, 1], [0, 0, 0]], 8)
    s_class = rep.class_of(parse_element(QQ, "x2^2"))
    power = s_class
    for _ in range(3):
        power = rep.class_product(power, s_class)
        assert not power.is_zero


def test_report_json_is_deterministic():
    a = json.dumps(report_of([[1, 1, 0], [1, 1, 0], [1, 1, 0]]).to_json(), sort_keys=True)
    b = json.dumps(report_of([[1, 1, 0], [1, 1, 0], [1, 1, 0]]).to_json(), sort_keys=True)
    assert a == b


def test_random_rank_two_dims_all_one():
    rng = random.Random(3)
    for _ in range(3):
        M = random_rank_two(QQ, rng)
        rep = cohomology(DGSpec(QQ, M), 5)
        assert rep.dims == [1] * 6


def test_dims_agree_between_q_and_large_prime():
    # the same integer matrix run through both scalar backends
    from dgskew.fields import CANDIDATE_PRIMES, PrimeField
    fp = PrimeField(CANDIDATE_PRIMES[1])
    rng = random.Random(4)
    for _ in range(3):
        rows = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
        dq = cohomology(DGSpec(QQ, Matrix.from_rows(QQ, rows)), 5).dims
        dp = cohomology(DGSpec(fp, Matrix.from_rows(fp, rows)), 5).dims
        assert dq == dp

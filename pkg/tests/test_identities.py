"""Alternating-sum evaluators: naive, DP, block-product, Young subgroups."""

import math
import random
from itertools import permutations

import pytest

from grassmat.errors import (
    ContextMismatchError,
    DegreeTooLargeError,
    GroupTooLargeError,
    LengthMismatchError,
)
from grassmat.gmatrix import GrMatrix
from grassmat.grassmann import GrassmannElem
from grassmat.identities import (
    YoungSpec,
    capelli_dp,
    capelli_naive,
    perm_sign,
    standard_dp,
    standard_naive,
    standard_product_eval,
    young_alternating_sum,
)
from grassmat.ring import QQ, ZZ, PrimeField


def unit(r, s, n=2, m=2, ring=ZZ):
    return GrMatrix.unit(n, m, ring, r, s)


def gen(i, m=2, ring=ZZ):
    return GrassmannElem.generator(i, m, ring)


def _random_matrix(rng, n, m, ring, terms=2):
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            e = GrassmannElem.zero(m, ring)
            for _ in range(terms):
                mask = rng.randrange(1 << m)
                e = e + GrassmannElem.basis(mask, m, ring).scale(
                    ring.embed(rng.randint(-3, 3))
                )
            row.append(e)
        rows.append(row)
    return GrMatrix(rows)


# ------------------------------------------------------------ perm sign

def test_perm_sign_small():
    assert perm_sign((0,)) == 1
    assert perm_sign((0, 1)) == 1
    assert perm_sign((1, 0)) == -1
    assert perm_sign((1, 2, 0)) == 1
    assert perm_sign((2, 1, 0)) == -1


def test_perm_sign_is_multiplicative():
    rng = random.Random(1)
    for _ in range(20):
        p = tuple(rng.sample(range(5), 5))
        q = tuple(rng.sample(range(5), 5))
        pq = tuple(p[q[i]] for i in range(5))
        assert perm_sign(pq) == perm_sign(p) * perm_sign(q)


# ------------------------------------------------------------ standard

def test_standard_k1_k2():
    rng = random.Random(2)
    A = _random_matrix(rng, 2, 2, ZZ)
    B = _random_matrix(rng, 2, 2, ZZ)
    assert standard_naive([A]) == A
    assert standard_naive([A, B]) == A * B - B * A


def test_standard_frozen_s3_units():
    # s_3(e12, e22, e21) = e11 + 2 e22 over scalar 2x2 units.
    got = standard_naive([unit(1, 2, m=0), unit(2, 2, m=0), unit(2, 1, m=0)])
    want = unit(1, 1, m=0) + unit(2, 2, m=0).scale_coeff(2)
    assert got == want
    assert standard_dp([unit(1, 2, m=0), unit(2, 2, m=0), unit(2, 1, m=0)]) == want


def test_standard_repeated_argument_vanishes():
    rng = random.Random(3)
    A = _random_matrix(rng, 2, 2, ZZ)
    B = _random_matrix(rng, 2, 2, ZZ)
    for mats in ([A, A], [A, B, A], [A, B, B]):
        assert standard_naive(mats).is_zero()
        assert standard_dp(mats).is_zero()


def test_standard_multilinear():
    rng = random.Random(4)
    A, B, C, D = (_random_matrix(rng, 2, 2, QQ) for _ in range(4))
    left = standard_naive([A + B, C, D])
    assert left == standard_naive([A, C, D]) + standard_naive([B, C, D])
    scaled = standard_naive([A.scale_coeff(3), C, D])
    assert scaled == standard_naive([A, C, D]).scale_coeff(3)


def test_standard_antisymmetric_under_swap():
    rng = random.Random(5)
    A, B, C = (_random_matrix(rng, 2, 2, ZZ) for _ in range(3))
    base = standard_naive([A, B, C])
    assert standard_naive([B, A, C]) == -base
    assert standard_naive([A, C, B]) == -base


def test_standard_dp_matches_naive_random():
    rng = random.Random(6)
    for ring in (ZZ, PrimeField(7)):
        for k in range(1, 6):
            mats = [_random_matrix(rng, 2, 2, ring) for _ in range(k)]
            assert standard_dp(mats) == standard_naive(mats)


def test_standard_guards():
    mats9 = [unit(1, 1)] * 9
    with pytest.raises(DegreeTooLargeError):
        standard_naive(mats9)
    with pytest.raises(DegreeTooLargeError):
        standard_dp([unit(1, 1)] * 25)
    with pytest.raises(LengthMismatchError):
        standard_naive([])
    with pytest.raises(ContextMismatchError):
        standard_naive([unit(1, 1, n=2), unit(1, 1, n=3)])


# ------------------------------------------------------------ capelli

def test_capelli_with_identity_ys_is_standard():
    rng = random.Random(7)
    for k in (2, 3, 4):
        xs = [_random_matrix(rng, 2, 2, ZZ) for _ in range(k)]
        ys = [GrMatrix.identity(2, 2, ZZ) for _ in range(k + 1)]
        assert capelli_naive(xs, ys) == standard_naive(xs)
        assert capelli_dp(xs, ys) == standard_dp(xs)


def test_capelli_dp_matches_naive_random():
    rng = random.Random(8)
    for ring in (ZZ, PrimeField(7)):
        for k in range(1, 5):
            xs = [_random_matrix(rng, 2, 2, ring) for _ in range(k)]
            ys = [_random_matrix(rng, 2, 2, ring, terms=1) for _ in range(k + 1)]
            assert capelli_dp(xs, ys) == capelli_naive(xs, ys)


def test_capelli_frozen_interleaved():
    # d_2(x1, x2; y0, y1, y2) = y0 x1 y1 x2 y2 - y0 x2 y1 x1 y2.
    rng = random.Random(9)
    x1, x2 = (_random_matrix(rng, 2, 2, ZZ) for _ in range(2))
    y0, y1, y2 = (_random_matrix(rng, 2, 2, ZZ) for _ in range(3))
    got = capelli_naive([x1, x2], [y0, y1, y2])
    want = y0 * x1 * y1 * x2 * y2 - y0 * x2 * y1 * x1 * y2
    assert got == want


def test_capelli_length_guard():
    xs = [unit(1, 1), unit(2, 2)]
    ys = [GrMatrix.identity(2, 2, ZZ)] * 2
    with pytest.raises(LengthMismatchError):
        capelli_naive(xs, ys)
    with pytest.raises(LengthMismatchError):
        capelli_dp(xs, ys)
    with pytest.raises(DegreeTooLargeError):
        capelli_dp([unit(1, 1)] * 21, [GrMatrix.identity(2, 2, ZZ)] * 22)


# ------------------------------------------------------------ product eval

def test_standard_product_eval_matches_manual_blocks():
    rng = random.Random(10)
    n, m = 2, 2
    blocks = m // 2 + 1
    mats = [_random_matrix(rng, n, m, ZZ) for _ in range(2 * n * blocks)]
    got = standard_product_eval(mats)
    want = standard_dp(mats[:4]) * standard_dp(mats[4:])
    assert got == want


def test_standard_product_eval_length_guard():
    rng = random.Random(11)
    mats = [_random_matrix(rng, 2, 2, ZZ) for _ in range(5)]
    with pytest.raises(LengthMismatchError):
        standard_product_eval(mats)


# ------------------------------------------------------------ young sums

def test_young_spec_validation():
    with pytest.raises(ValueError):
        YoungSpec(k=3, classes=((1, 2),))
    with pytest.raises(ValueError):
        YoungSpec(k=2, classes=((1, 1), (2,)))
    with pytest.raises(ValueError):
        YoungSpec(k=2, classes=((1, 2),), anticommuting=frozenset({3}))
    with pytest.raises(ValueError):
        YoungSpec.from_interval_sizes([2, 0])


def test_young_spec_interval_shape():
    spec = YoungSpec.from_interval_sizes([3, 2])
    assert spec.k == 5
    assert spec.classes == ((1, 2, 3), (4, 5))
    assert spec.anticommuting == frozenset({2, 3, 5})
    assert spec.central_positions() == frozenset({1, 4})
    assert spec.one_central_per_class()
    assert spec.group_order() == 12


def test_young_singletons_give_plain_product():
    spec = YoungSpec(k=3, classes=((1,), (2,), (3,)))
    a = gen(1).scale(2)
    b = GrassmannElem.scalar(3, 2, ZZ)
    c = gen(2)
    assert young_alternating_sum([a, b, c], spec) == a * b * c


def test_young_full_class_is_standard_sum():
    spec = YoungSpec(k=3, classes=((1, 2, 3),), anticommuting=frozenset({2, 3}))
    mats = [unit(1, 2, m=0), unit(2, 2, m=0), unit(2, 1, m=0)]
    got = young_alternating_sum(mats, spec)
    assert got == standard_naive(mats)


def test_young_frozen_interval_factorial():
    # One class of size 3, position 1 central: with values 5 e11,
    # v1 e11, v2 e11 the sum collapses to 2! * product = 10 (v1v2) e11.
    spec = YoungSpec.from_interval_sizes([3])
    m = 2
    e11 = GrMatrix.unit(1, m, ZZ, 1, 1)
    mats = [e11.scale_coeff(5), e11.scale(gen(1, m)), e11.scale(gen(2, m))]
    got = young_alternating_sum(mats, spec)
    want = e11.scale(gen(1, m) * gen(2, m)).scale_coeff(10)
    assert got == want


def test_young_all_anticommuting_values_collapse_to_group_order():
    # Generators at every position: each term carries sign(pi)^2 = 1,
    # so the sum is |S_3| times the product.  The one-central-per-class
    # hypothesis is violated here, so the factorial form does not apply.
    spec = YoungSpec.from_interval_sizes([3])
    m = 3
    e11 = GrMatrix.unit(1, m, ZZ, 1, 1)
    mats = [e11.scale(gen(i, m)) for i in (1, 2, 3)]
    got = young_alternating_sum(mats, spec)
    v123 = gen(1, m) * gen(2, m) * gen(3, m)
    assert got == e11.scale(v123).scale_coeff(6)


def test_young_two_anticommuting_in_one_class_vanishes():
    # Class {1,2} with both positions anticommuting values: sum is
    # v1v2 - v2v1 = 2 v1v2, NOT zero; with one central it IS zero only
    # when the anticommuting value repeats a generator.  The vanishing
    # statement needs one central per class; check the k=2 instance
    # a1 = v1, a2 = v1 (same generator): v1v1 - v1v1 = 0 trivially, and
    # the mixed instance a1 = c (central), a2 = v1: c v1 - v1 c = 0.
    spec = YoungSpec(k=2, classes=((1, 2),), anticommuting=frozenset({2}))
    c = GrassmannElem.scalar(5, 2, ZZ)
    v1 = gen(1)
    got = young_alternating_sum([c, v1], spec)
    assert got.is_zero()


def test_young_group_order_cap():
    spec = YoungSpec.from_interval_sizes([4])
    elems = [gen(1, 4)] * 4
    with pytest.raises(GroupTooLargeError):
        young_alternating_sum(elems, spec, max_order=6)


def test_young_length_and_type_guards():
    spec = YoungSpec(k=2, classes=((1,), (2,)))
    with pytest.raises(LengthMismatchError):
        young_alternating_sum([gen(1)], spec)
    with pytest.raises(TypeError):
        young_alternating_sum([gen(1), unit(1, 1)], spec)
    with pytest.raises(TypeError):
        young_alternating_sum([1, 2], spec)


def test_young_matches_brute_force_symmetric_group():
    # Single class of size k with distinct matrices: the Young sum over
    # the full symmetric group is the standard alternating sum.
    rng = random.Random(13)
    for k in (2, 3, 4):
        spec = YoungSpec(
            k=k,
            classes=(tuple(range(1, k + 1)),),
            anticommuting=frozenset(range(2, k + 1)),
        )
        mats = [_random_matrix(rng, 2, 2, ZZ) for _ in range(k)]
        assert young_alternating_sum(mats, spec) == standard_naive(mats)

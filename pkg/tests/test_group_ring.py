import random

import pytest

from fermat_homology.bsigma import bsigma_p3, bsigma_p3_from_psi, gamma_oracle_p3
from fermat_homology.errors import ArityMismatch, NotAUnit, NotSymmetric
from fermat_homology.group_ring import (
    DifferentialElement,
    GroupRingElement,
    augmentation,
    d_prime,
    d_prime_prime,
    dlog,
    invert,
    multiplication_matrix,
    swap_w,
)
from fermat_homology.scalars import GF27


def eps(n, m, k):
    exps = [0] * (m + 1)
    exps[k] = 1
    return GroupRingElement.monomial(n, m, tuple(exps))


def random_unit(rng, n, m=0):
    import itertools

    exponents = list(itertools.product(range(n), repeat=m + 1))
    while True:
        coeffs = {exps: rng.randrange(n) for exps in exponents}
        g = GroupRingElement.from_dict(n, m, coeffs)
        if augmentation(g) % n != 0:
            return g


def test_monomial_inverse_pairs():
    for n in (3, 5):
        e0 = eps(n, 0, 0)
        assert e0 * e0 ** (n - 1) == GroupRingElement.one(n, 0)


def test_b_product_matches_closed_form_both_ways():
    b_sigma = bsigma_p3(1, 0)
    b_tau = bsigma_p3(0, 1)
    by_convolution = b_sigma * b_tau
    assert by_convolution == bsigma_p3(1, 1)
    assert by_convolution == bsigma_p3_from_psi(1, 2)


def test_b_tau_has_order_three():
    b_tau = bsigma_p3(0, 1)
    assert b_tau * b_tau * b_tau == GroupRingElement.one(3, 1)


def test_invert_basics():
    one = GroupRingElement.one(3, 0)
    assert invert(one) == one
    e0 = eps(3, 0, 0)
    assert invert(e0) == e0 * e0


def test_invert_rejects_non_units():
    with pytest.raises(NotAUnit):
        invert(GroupRingElement.zero(3, 0))
    with pytest.raises(NotAUnit):
        invert(GroupRingElement.one(3, 0) - eps(3, 0, 0))


def test_gamma_inverse_closed_form():
    for c1 in range(3):
        for c2 in range(3):
            for _, gamma in gamma_oracle_p3(c1, c2):
                d1, d2 = gamma.coeff(1), gamma.coeff(2)
                diff = GF27.sub(d2, d1)
                diff_sq = GF27.mul(diff, diff)
                formula = GroupRingElement.from_dict(
                    3,
                    0,
                    {
                        (0,): GF27.add(
                            GF27.add(GF27.one, GF27.add(d1, d2)), diff_sq
                        ),
                        (1,): GF27.sub(diff_sq, d1),
                        (2,): GF27.sub(diff_sq, d2),
                    },
                    ring=GF27,
                )
                assert invert(gamma) == formula


def test_augmentation_values():
    assert augmentation(GroupRingElement.one(3, 1)) == 1
    assert augmentation(bsigma_p3(1, 0)) == 1
    one = GroupRingElement.one(3, 1)
    e0, e1 = eps(3, 1, 0), eps(3, 1, 1)
    assert augmentation((one - e0) * (one - e1)) == 0


def test_augmentation_is_multiplicative():
    rng = random.Random(5)
    for _ in range(20):
        a = GroupRingElement.from_dict(
            3, 1, {(i, j): rng.randrange(3) for i in range(3) for j in range(3)}
        )
        b = GroupRingElement.from_dict(
            3, 1, {(i, j): rng.randrange(3) for i in range(3) for j in range(3)}
        )
        assert augmentation(a * b) == (augmentation(a) * augmentation(b)) % 3


def test_swap_examples():
    e0, e1 = eps(3, 1, 0), eps(3, 1, 1)
    assert swap_w(e0) == e1
    assert swap_w(bsigma_p3(1, 0)) == bsigma_p3(1, 0)
    assert swap_w(e0 * e0 * e1) == e0 * e1 * e1
    with pytest.raises(ArityMismatch):
        swap_w(eps(3, 0, 0))


def test_d_prime_kills_the_generator():
    assert d_prime(eps(3, 0, 0)) == GroupRingElement.one(3, 1)
    assert d_prime(GroupRingElement.one(3, 0)) == GroupRingElement.one(3, 1)


def test_d_prime_of_gamma_is_b():
    for _, gamma in gamma_oracle_p3(0, 1):
        image = d_prime(gamma)
        collapsed = GroupRingElement.from_dict(
            3,
            1,
            {
                (i, j): image.coeff(i, j)[0]
                for i in range(3)
                for j in range(3)
            },
        )
        assert all(
            all(x == 0 for x in image.coeff(i, j)[1:])
            for i in range(3)
            for j in range(3)
        )
        assert collapsed == bsigma_p3(1, 0)


def test_d_second_trivial_on_one_and_b():
    one2 = GroupRingElement.one(3, 2)
    assert d_prime_prime(GroupRingElement.one(3, 1)) == one2
    assert d_prime_prime(bsigma_p3(1, 0)) == one2


def test_d_second_requires_symmetry():
    with pytest.raises(NotSymmetric):
        d_prime_prime(eps(3, 1, 0))


def test_cocycle_identity_on_random_units():
    rng = random.Random(12345)
    for n in (3, 5):
        one2 = GroupRingElement.one(n, 2)
        for _ in range(50):
            g = random_unit(rng, n)
            image = d_prime(g)
            assert swap_w(image) == image
            assert d_prime_prime(image) == one2


def test_dlog_examples():
    e0 = eps(3, 0, 0)
    result = dlog(e0)
    assert result.components[0] == GroupRingElement.one(3, 0)
    constant = GroupRingElement.from_dict(3, 0, {(0,): 2})
    assert dlog(constant).is_zero()


def test_dlog_is_a_homomorphism():
    rng = random.Random(99)
    for _ in range(10):
        u, v = random_unit(rng, 5), random_unit(rng, 5)
        assert dlog(u * v) == dlog(u) + dlog(v)


def test_dlog_kernel_is_constants_for_prime_exponent():
    # exhaustive over the 18 units of the n=3 one-variable ring
    for a in range(3):
        for b in range(3):
            for c in range(3):
                if (a + b + c) % 3 == 0:
                    continue
                u = GroupRingElement.from_dict(3, 0, {(0,): a, (1,): b, (2,): c})
                assert dlog(u).is_zero() == (b == 0 and c == 0)


def test_dlog_kernel_is_larger_for_composite_exponent():
    u = GroupRingElement.from_dict(6, 0, {(2,): 3, (3,): 2})
    assert dlog(u).is_zero()


def test_differential_component_count_enforced():
    with pytest.raises(ArityMismatch):
        DifferentialElement(3, 1, GroupRingElement.one(3, 1).ring, ())


def test_mixed_arity_rejected():
    with pytest.raises(ArityMismatch):
        eps(3, 0, 0) * eps(3, 1, 0)


def test_multiplication_matrix_row_action():
    rng = random.Random(21)
    a = bsigma_p3(2, 1)
    matrix = multiplication_matrix(a)
    for _ in range(10):
        x = GroupRingElement.from_dict(
            3, 1, {(i, j): rng.randrange(3) for i in range(3) for j in range(3)}
        )
        assert matrix.apply_row(x.coeffs) == (a * x).coeffs


def test_json_round_trip():
    b = bsigma_p3(1, 2)
    assert GroupRingElement.from_json(b.to_json()) == b

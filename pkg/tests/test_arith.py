import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suzree.arith import (
    BudgetExceeded,
    Factorization,
    divisors,
    factorize,
    is_prime,
    largest_prime_divisor,
    mobius,
    multiplicative_order,
)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in primes)


def test_is_prime_negative_and_edge():
    assert not is_prime(-7)
    assert not is_prime(0)
    assert not is_prime(1)


def test_is_prime_base2_strong_pseudoprimes():
    # 2047, 3277, 4033 pass a base-2 strong test but are composite.
    assert not is_prime(2047)
    assert not is_prime(3277)
    assert not is_prime(4033)
    assert 3277 == 29 * 113
    assert 4033 == 37 * 109


def test_is_prime_medium():
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)  # 641 * 6700417
    assert is_prime(2**61 - 1)


def test_is_prime_above_64_bits():
    # 2**89 - 1 is a Mersenne prime; its neighbours are not.
    m89 = 2**89 - 1
    assert is_prime(m89)
    assert not is_prime(m89 - 2)
    assert is_prime(m89, extra_rounds=8)


def test_factorize_examples():
    assert factorize(1).to_dict() == {}
    assert factorize(2).to_dict() == {2: 1}
    assert factorize(145).to_dict() == {5: 1, 29: 1}
    assert factorize(703).to_dict() == {19: 1, 37: 1}
    assert factorize(3277).to_dict() == {29: 1, 113: 1}
    assert factorize(4033).to_dict() == {37: 1, 109: 1}
    assert factorize(2**10 * 3**5).to_dict() == {2: 10, 3: 5}


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_perfect_power():
    p = 1000003
    assert factorize(p**3).to_dict() == {p: 3}


def test_factorization_value_roundtrip():
    for n in range(2, 10_000):
        f = factorize(n)
        assert f.value == n
        for p, e in f:
            assert is_prime(p)
            assert e >= 1


def test_factorization_requires_sorted_distinct():
    with pytest.raises(ValueError):
        Factorization(((5, 1), (3, 1)))
    with pytest.raises(ValueError):
        Factorization(((3, 1), (3, 2)))


def test_budget_exceeded_carries_partial():
    # Two 40-digit-ish primes; a tiny budget cannot split the product.
    p = 2**127 - 1
    q = 2**107 - 1
    n = 4 * p * q
    with pytest.raises(BudgetExceeded) as info:
        factorize(n, budget=100)
    err = info.value
    assert err.partial[2] == 2
    assert len(err.unfactored) == 1
    rebuilt = 1
    for prime, exp in err.partial.items():
        rebuilt *= prime**exp
    for c in err.unfactored:
        rebuilt *= c
    assert rebuilt == n


def test_largest_prime_divisor():
    assert largest_prime_divisor(2) == 2
    assert largest_prime_divisor(12) == 3
    assert largest_prime_divisor(205) == 41
    assert largest_prime_divisor(8401) == 271
    with pytest.raises(ValueError):
        largest_prime_divisor(1)


def test_multiplicative_order_examples():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(2, 13) == 12
    assert multiplicative_order(3, 37) == 18
    assert multiplicative_order(2, 3) == 2
    assert multiplicative_order(4, 7) == 3


def test_multiplicative_order_rejects_bad_inputs():
    with pytest.raises(ValueError):
        multiplicative_order(2, 15)  # composite modulus
    with pytest.raises(ValueError):
        multiplicative_order(14, 7)  # q divisible by r


@given(st.integers(min_value=2, max_value=500))
def test_multiplicative_order_divides_group_order(q):
    r = 10007
    if q % r:
        e = multiplicative_order(q, r)
        assert (r - 1) % e == 0
        assert pow(q, e, r) == 1


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
    assert divisors(97) == [1, 97]


def test_mobius():
    expected = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 10: 1, 12: 0, 30: -1}
    for n, v in expected.items():
        assert mobius(n) == v


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=3000))
def test_mobius_sum_over_divisors(n):
    # sum of mobius over divisors of n is 1 iff n == 1
    total = sum(mobius(d) for d in divisors(n))
    assert total == (1 if n == 1 else 0)


def test_against_sympy_factorint():
    sympy = pytest.importorskip("sympy")
    for n in (2**20 - 1, 2**28 - 1, 3**15 - 1, 10**12 + 39, 2**58 + 1):
        assert factorize(n).to_dict() == sympy.factorint(n)

"""Exact integer utilities shared by the rest of the package.

Primality is deterministic below 2**64 (fixed Miller-Rabin witness set) and a
Baillie-style strong probable-prime test above, so every verdict is
reproducible.  Factorization is trial division plus Brent's cycle-finding
variant of the rho method with a fixed parameter schedule and an iteration
budget, again for reproducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

# Deterministic for n < 3.3*10**24, comfortably past 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 10_000

DEFAULT_BUDGET = 10_000_000


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(_TRIAL_BOUND)


class BudgetExceeded(Exception):
    """Raised when factorization runs out of iterations on some cofactor.

    Carries what was found so far: ``partial`` maps primes to exponents,
    ``unfactored`` lists the composite cofactors that remain.
    """

    def __init__(self, n: int, partial: dict[int, int], unfactored: tuple[int, ...]):
        self.n = n
        self.partial = dict(partial)
        self.unfactored = unfactored
        super().__init__(
            f"factorization budget exhausted on {len(unfactored)} cofactor(s) of {n}"
        )


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs sorted by prime."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.pairs]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError("factor pairs must be sorted with distinct primes")

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def to_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)


def _mr_round(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _lucas_strong_prp(n: int) -> bool:
    # Selfridge parameter choice: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    D = 5
    while True:
        j = _jacobi(D % n, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -(D + 2) if D > 0 else -(D - 2)
    Q = (1 - D) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Compute U_d, V_d with P = 1 by binary ladder.
    U, V, k = 1, 1, 1
    Qk = Q % n
    bits = bin(d)[3:]
    for bit in bits:
        U = U * V % n
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        k *= 2
        if bit == "1":
            U, V = (U + V), (V + D * U)
            if U % 2:
                U += n
            if V % 2:
                V += n
            U = U // 2 % n
            V = V // 2 % n
            Qk = Qk * Q % n
            k += 1
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int, extra_rounds: int = 0) -> bool:
    """Primality test, deterministic for n < 2**64.

    Above 2**64 the verdict is a strong probable-prime result (base-2
    Miller-Rabin plus a strong Lucas test); ``extra_rounds`` adds that many
    further Miller-Rabin rounds with the next odd prime bases.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:50]:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return all(_mr_round(n, a, d, s) for a in _MR_WITNESSES)
    if not _mr_round(n, 2, d, s):
        return False
    if not _lucas_strong_prp(n):
        return False
    if extra_rounds:
        extra = [p for p in _SMALL_PRIMES if p > 37][:extra_rounds]
        if not all(_mr_round(n, a, d, s) for a in extra):
            return False
    return True


def _brent_rho(n: int, budget: int) -> tuple[int, int]:
    """One nontrivial factor of odd composite n, or raise StopIteration.

    Brent's variant with the fixed schedule x0=2, c=1,2,3,...; ``budget``
    bounds the total number of squarings spent on this n.  Returns the factor
    and the number of iterations consumed.
    """
    spent = 0
    for c in range(1, 1000):
        y, r, q = 2, 1, 1
        g, ys, x = 1, 0, 0
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                spent += min(m, r - k)
                if spent > budget:
                    raise StopIteration(spent)
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Backtrack one step at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                spent += 1
                if spent > budget:
                    raise StopIteration(spent)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g, spent
        # Cycle collapsed for this c; retry with the next increment.
    raise StopIteration(spent)


def factorize(n: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Complete prime factorization of n >= 1.

    Deterministic: trial division up to 10**4, then Brent rho with a fixed
    parameter schedule.  Raises BudgetExceeded if any single cofactor eats
    more than ``budget`` rho iterations.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    found: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    stuck: list[int] = []
    stack = [m] if m > 1 else []
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        if is_prime(c):
            found[c] = found.get(c, 0) + 1
            continue
        root = _perfect_power_root(c)
        if root is not None:
            base, k = root
            stack.extend([base] * k)
            continue
        try:
            g, _ = _brent_rho(c, budget)
        except StopIteration:
            stuck.append(c)
            continue
        stack.append(g)
        stack.append(c // g)
    if stuck:
        raise BudgetExceeded(n, found, tuple(sorted(stuck)))
    return Factorization(tuple(sorted(found.items())))


def _iroot(n: int, k: int) -> int:
    # Floor of the k-th root, exact integer arithmetic (n can exceed float range).
    if n < 2:
        return n
    x = 1 << (n.bit_length() + k - 1) // k
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power_root(n: int) -> tuple[int, int] | None:
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r < 2:
            return None
        if r**k == n:
            return r, k
    return None


def largest_prime_divisor(n: int, budget: int = DEFAULT_BUDGET) -> int:
    """The maximal prime dividing n; n >= 2."""
    if n < 2:
        raise ValueError(f"largest_prime_divisor requires n >= 2, got {n}")
    return factorize(n, budget).primes()[-1]


def multiplicative_order(q: int, r: int, budget: int = DEFAULT_BUDGET) -> int:
    """Least e >= 1 with q**e == 1 mod r, for prime r not dividing q.

    Factors r-1 and strips each prime out of the exponent while the power
    stays 1; BudgetExceeded propagates if r-1 resists the budget.
    """
    if not is_prime(r):
        raise ValueError(f"multiplicative_order requires prime modulus, got {r}")
    if q % r == 0:
        raise ValueError(f"{r} divides {q}; order undefined")
    e = r - 1
    for p, _ in factorize(r - 1, budget):
        while e % p == 0 and pow(q, e // p, r) == 1:
            e //= p
    return e


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, else (-1)**(number of primes)."""
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    result = 1
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result

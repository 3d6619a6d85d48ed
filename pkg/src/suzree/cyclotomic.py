"""Cyclotomic polynomials over Z and primitive prime divisors of q**m - 1.

The m-th primitive part of q**m - 1 is the m-th cyclotomic value with the
single possible intrinsic prime (the largest prime dividing m) removed; its
prime divisors are exactly the primitive ones.  Existence follows the
classical pattern: a primitive prime divisor exists for every m >= 2 except
m = 2 with q one less than a power of two, and m = 6 with q = 2.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from suzree.arith import (
    DEFAULT_BUDGET,
    divisors,
    factorize,
    is_prime,
    largest_prime_divisor,
    mobius,
    multiplicative_order,
)


@dataclass(frozen=True)
class IntPoly:
    """Dense univariate polynomial over Z, coefficients ascending."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def divexact(self, other: "IntPoly") -> "IntPoly":
        """Exact quotient self / other; raises if division leaves a remainder."""
        rem = list(self.coeffs)
        dcoeffs = other.coeffs
        dd = other.degree
        lead = dcoeffs[-1]
        qlen = len(rem) - dd
        if qlen <= 0:
            raise ValueError("degree of divisor exceeds degree of dividend")
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + dd]
            if c % lead:
                raise ValueError("division not exact")
            c //= lead
            quot[i] = c
            if c:
                for j, b in enumerate(dcoeffs):
                    rem[i + j] -= c * b
        if any(rem[: dd]):
            raise ValueError("division not exact")
        return IntPoly(tuple(quot))

    def __str__(self) -> str:
        if self.degree == 0:
            return str(self.coeffs[0])
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "x" if mag == 1 else f"{mag}*x"
            else:
                term = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, n >= 1."""
    if n < 1:
        raise ValueError(f"cyclotomic_poly requires n >= 1, got {n}")
    poly = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    for d in divisors(n)[:-1]:
        poly = poly.divexact(cyclotomic_poly(d))
    return poly


def eval_cyclotomic(n: int, q: int) -> int:
    """Value of the n-th cyclotomic polynomial at the integer q >= 2.

    Computed as the alternating product of q**d - 1 over divisors d of n,
    weighted by the Mobius function of n/d; no polynomial is built.
    """
    if n < 1:
        raise ValueError(f"eval_cyclotomic requires n >= 1, got {n}")
    if q < 2:
        raise ValueError(f"eval_cyclotomic requires q >= 2, got {q}")
    num = 1
    den = 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def primitive_part(m: int, q: int) -> int:
    """Cyclotomic value at q with the intrinsic prime divided out, m >= 3.

    The only prime that can divide both the m-th cyclotomic value and some
    q**j - 1 with j < m is the largest prime divisor of m, and it appears at
    most to the first power; removing it leaves the product of all primitive
    prime powers.
    """
    if m < 3:
        raise ValueError(f"primitive_part requires m >= 3, got {m}")
    if q < 2:
        raise ValueError(f"primitive_part requires q >= 2, got {q}")
    value = eval_cyclotomic(m, q)
    r = largest_prime_divisor(m)
    return value // r if value % r == 0 else value


def zsigmondy_exists(m: int, q: int) -> bool:
    """Whether q**m - 1 has a prime divisor not dividing any q**j - 1, j < m.

    m >= 2, q >= 2.  False exactly when m == 2 with q + 1 a power of two,
    and when (m, q) == (6, 2).
    """
    if m < 2:
        raise ValueError(f"zsigmondy_exists requires m >= 2, got {m}")
    if q < 2:
        raise ValueError(f"zsigmondy_exists requires q >= 2, got {q}")
    if m == 2:
        return (q + 1) & q != 0
    return (m, q) != (6, 2)


def primitive_prime_divisors(
    m: int, q: int, budget: int = DEFAULT_BUDGET
) -> frozenset[int]:
    """All primes whose multiplicative order at q is exactly m; m >= 2.

    These are the primes dividing q**m - 1 and no earlier q**j - 1.  Requires
    factoring the m-th cyclotomic value; BudgetExceeded propagates.
    """
    if m < 2:
        raise ValueError(f"primitive_prime_divisors requires m >= 2, got {m}")
    if q < 2:
        raise ValueError(f"primitive_prime_divisors requires q >= 2, got {q}")
    value = eval_cyclotomic(m, q)
    # A prime dividing the m-th cyclotomic value either has order exactly m
    # at q (then it is 1 mod m) or divides m itself (then it cannot be 1 mod
    # m, being at most m).  The residue test therefore selects precisely the
    # primitive primes without factoring any p - 1.
    return frozenset(
        p for p in factorize(value, budget).primes() if p % m == 1
    )


def is_ppd(p: int, m: int, q: int) -> bool:
    """Whether the prime p divides q**m - 1 but no q**j - 1 with 0 < j < m."""
    if m < 1:
        raise ValueError(f"is_ppd requires m >= 1, got {m}")
    if q < 2:
        raise ValueError(f"is_ppd requires q >= 2, got {q}")
    if p < 2 or not is_prime(p):
        return False
    if q % p == 0 or pow(q, m, p) != 1:
        return False
    return multiplicative_order(q, p) == m

"""Square-root factorizations of cyclotomic values attached to the twisted
groups 2B2(2^m), 2G2(3^m) and 2F4(2^m).

Each family comes with a quasi-cyclotomic polynomial Psi_n whose values at
+sqrt(v^e) and -sqrt(v^e) are coprime integers multiplying to Phi_n(v^e);
these are the orders of the two exotic maximal tori.  The gcd of such a value
with a higher cyclotomic number Phi_{nm}(v^s) is itself a product value of a
monic polynomial over Z[sqrt(v)], constructed here exactly inside the ring of
8th or 12th roots of unity.  On top of that sit a growth bound for the factor
values and the verifier showing the torus orders carry primitive prime
divisors of v^{nm} - 1 outside two small Suzuki cases.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from suzree.arith import DEFAULT_BUDGET, factorize, largest_prime_divisor, multiplicative_order
from suzree.cyclotomic import cyclotomic_poly, eval_cyclotomic, primitive_part


class Family(enum.Enum):
    """The three series of twisted simple groups handled by this package."""

    SUZUKI = "sz"
    REE_G2 = "g2"
    REE_F4 = "f4"

    @property
    def char(self) -> int:
        """Defining characteristic: the groups live over fields of this prime."""
        return 3 if self is Family.REE_G2 else 2

    @property
    def psi_index(self) -> int:
        """Index n of the split cyclotomic polynomial Psi_n."""
        return {Family.SUZUKI: 4, Family.REE_G2: 6, Family.REE_F4: 12}[self]

    @property
    def root_order(self) -> int:
        """Order of the root of unity generating the construction ring."""
        return 12 if self is Family.REE_G2 else 8

    def factor_index(self, m: int) -> int:
        """Cyclotomic index feeding the factor polynomial for parameter m."""
        return 3 * m if self is Family.REE_F4 else m

    @classmethod
    def from_name(cls, name: str) -> "Family":
        aliases = {"sz": cls.SUZUKI, "suzuki": cls.SUZUKI,
                   "ree": cls.REE_G2, "g2": cls.REE_G2, "f4": cls.REE_F4}
        try:
            return aliases[name.lower()]
        except KeyError:
            raise ValueError(f"unknown family {name!r}") from None


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def unit(self) -> int:
        return 1 if self is Sign.PLUS else -1

    @property
    def opposite(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


class RootChoice(enum.Enum):
    """Which of the two conjugate pairs of primitive roots seeds the factor.

    FIRST is the root with exponent 1; SECOND is the other pair, exponent 3
    in the ring of 8th roots and exponent 5 in the ring of 12th roots.
    Swapping the choice negates the odd-degree factor coefficients and flips
    the induced sign.
    """

    FIRST = "first"
    SECOND = "second"


def root_exponent(order: int, choice: RootChoice) -> int:
    if choice is RootChoice.FIRST:
        return 1
    return 3 if order == 8 else 5


class ProjectionError(Exception):
    """A ring element expected to lie in Z[sqrt(v)] does not."""


@dataclass(frozen=True)
class QuadInt:
    """Element a + b*sqrt(radicand) of a real quadratic ring."""

    a: int
    b: int
    radicand: int

    def _check(self, other: "QuadInt") -> None:
        if self.radicand != other.radicand:
            raise ValueError("mixed radicands")

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.a + other.a, self.b + other.b, self.radicand)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.a - other.a, self.b - other.b, self.radicand)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(
            self.a * other.a + self.radicand * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.radicand,
        )

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b, self.radicand)

    def conj(self) -> "QuadInt":
        return QuadInt(self.a, -self.b, self.radicand)

    @property
    def norm(self) -> int:
        return self.a * self.a - self.radicand * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0


@dataclass(frozen=True)
class CycInt:
    """Element of Z[zeta] for zeta a primitive 8th or 12th root of unity.

    Both rings have rank 4; coefficients are against 1, zeta, zeta^2, zeta^3
    with the reduction zeta^4 = -1 (order 8) or zeta^4 = zeta^2 - 1
    (order 12).
    """

    order: int
    coeffs: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if self.order not in (8, 12):
            raise ValueError(f"unsupported root order {self.order}")

    @classmethod
    def zero(cls, order: int) -> "CycInt":
        return cls(order, (0, 0, 0, 0))

    @classmethod
    def one(cls, order: int) -> "CycInt":
        return cls(order, (1, 0, 0, 0))

    @classmethod
    def root_power(cls, order: int, k: int) -> "CycInt":
        """zeta**k, reduced."""
        k %= order
        out = cls.one(order)
        z = cls(order, (0, 1, 0, 0))
        for _ in range(k):
            out = out * z
        return out

    @classmethod
    def sqrt_base(cls, order: int) -> "CycInt":
        """sqrt(2) = zeta8 + zeta8^-1, or sqrt(3) = zeta12 + zeta12^-1."""
        return cls.root_power(order, 1) + cls.root_power(order, order - 1)

    def _check(self, other: "CycInt") -> None:
        if self.order != other.order:
            raise ValueError("mixed root orders")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(
            self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(
            self.order, tuple(x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CycInt":
        return CycInt(self.order, tuple(-x for x in self.coeffs))

    def scale(self, k: int) -> "CycInt":
        return CycInt(self.order, tuple(k * x for x in self.coeffs))

    def __mul__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        raw = [0] * 7
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    raw[i + j] += x * y
        if self.order == 8:
            # zeta^4 = -1
            for i in range(6, 3, -1):
                raw[i - 4] -= raw[i]
        else:
            # zeta^4 = zeta^2 - 1
            for i in range(6, 3, -1):
                raw[i - 2] += raw[i]
                raw[i - 4] -= raw[i]
        return CycInt(self.order, tuple(raw[:4]))

    def conj(self) -> "CycInt":
        """Complex conjugation, zeta -> zeta^(order-1)."""
        zbar = CycInt.root_power(self.order, self.order - 1)
        out = CycInt.zero(self.order)
        power = CycInt.one(self.order)
        for c in self.coeffs:
            out = out + power.scale(c)
            power = power * zbar
        return out

    def project(self) -> QuadInt:
        """Read the element in the {1, sqrt(v)} basis, or raise.

        In the order-8 ring sqrt(2) = (0,1,0,-1); in the order-12 ring
        sqrt(3) = (0,2,0,-1).  Membership in Z[sqrt(v)] is a linear
        condition on the coefficients.
        """
        c0, c1, c2, c3 = self.coeffs
        if self.order == 8:
            if c2 == 0 and c3 == -c1:
                return QuadInt(c0, c1, 2)
        else:
            if c2 == 0 and c1 == -2 * c3:
                return QuadInt(c0, -c3, 3)
        raise ProjectionError(f"{self.coeffs} is not in Z[sqrt(v)] (order {self.order})")


@dataclass(frozen=True)
class QuadPoly:
    """Dense polynomial with QuadInt coefficients, ascending, over one radicand."""

    coeffs: tuple[QuadInt, ...]

    def __post_init__(self) -> None:
        rads = {c.radicand for c in self.coeffs}
        if len(rads) != 1:
            raise ValueError("coefficients must share one radicand")

    @property
    def radicand(self) -> int:
        return self.coeffs[0].radicand

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        lead = self.coeffs[-1]
        return lead.a == 1 and lead.b == 0

    def __mul__(self, other: "QuadPoly") -> "QuadPoly":
        if self.radicand != other.radicand:
            raise ValueError("mixed radicands")
        zero = QuadInt(0, 0, self.radicand)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return QuadPoly(tuple(out))

    def reflect(self) -> "QuadPoly":
        """The polynomial with x replaced by -x."""
        return QuadPoly(
            tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))
        )

    def eval_quad(self, x: QuadInt) -> QuadInt:
        out = QuadInt(0, 0, self.radicand)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out


def psi_poly(family: Family) -> QuadPoly:
    """The split cyclotomic polynomial Psi_n over Z[sqrt(v)]."""
    v = family.char
    one = QuadInt(1, 0, v)
    root = QuadInt(0, 1, v)
    if family is Family.REE_F4:
        return QuadPoly((one, root, one, root, one))
    return QuadPoly((one, root, one))


def _sqrt_power(v: int, e: int) -> QuadInt:
    # sqrt(v^e) for odd e, as an element of Z[sqrt(v)]
    if e < 1 or e % 2 == 0:
        raise ValueError(f"exponent must be odd and positive, got {e}")
    return QuadInt(0, v ** ((e - 1) // 2), v)


def psi_eval(family: Family, sign: Sign, e: int) -> int:
    """The integer Psi_n(sign * sqrt(v^e)) for odd e >= 1."""
    x = _sqrt_power(family.char, e)
    if sign is Sign.MINUS:
        x = -x
    value = psi_poly(family).eval_quad(x)
    assert value.is_rational(), f"psi value not rational: {value}"
    assert value.a >= 1
    return value.a


def psi_pair_check(family: Family, e: int) -> tuple[bool, bool]:
    """Whether the two Psi values multiply to Phi_n(v^e) and are coprime."""
    plus = psi_eval(family, Sign.PLUS, e)
    minus = psi_eval(family, Sign.MINUS, e)
    product_ok = plus * minus == eval_cyclotomic(family.psi_index, family.char**e)
    coprime_ok = math.gcd(plus, minus) == 1
    return product_ok, coprime_ok


def _require_coprime(family: Family, m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if math.gcd(m, family.psi_index) != 1:
        raise ValueError(
            f"m must be coprime to {family.psi_index} for {family.name}, got {m}"
        )


@lru_cache(maxsize=None)
def build_factor_poly(family: Family, m: int, root: RootChoice) -> QuadPoly:
    """The monic factor polynomial of degree 2*phi(M) over Z[sqrt(v)].

    M is the constructed index (m, or 3m for the large Ree family).  With xi
    the chosen primitive root of unity, the product
    xi^phi(M) Phi_M(x/xi) * conj is expanded in the cyclotomic ring and every
    coefficient projected onto the {1, sqrt(v)} basis; the projection failing
    would mean an arithmetic bug, reported as ProjectionError.
    """
    _require_coprime(family, m)
    order = family.root_order
    index = family.factor_index(m)
    base = cyclotomic_poly(index).coeffs
    deg = len(base) - 1
    xi = CycInt.root_power(order, root_exponent(order, root))
    xi_powers = [CycInt.one(order)]
    for _ in range(deg):
        xi_powers.append(xi_powers[-1] * xi)
    # g = xi^deg * Phi_M(x / xi): coefficient of x^i is base[i] * xi^(deg - i)
    g = [xi_powers[deg - i].scale(c) for i, c in enumerate(base)]
    gbar = [c.conj() for c in g]
    prod = [CycInt.zero(order) for _ in range(2 * deg + 1)]
    for i, x in enumerate(g):
        for j, y in enumerate(gbar):
            prod[i + j] = prod[i + j] + x * y
    return QuadPoly(tuple(c.project() for c in prod))


def eval_factor_poly(poly: QuadPoly, s: int) -> int:
    """The integer value of a factor polynomial at sqrt(v^s), s odd.

    May be negative; the gcd identity compares absolute values.
    """
    value = poly.eval_quad(_sqrt_power(poly.radicand, s))
    assert value.is_rational(), f"factor value not rational: {value}"
    return value.a


def eval_factor_direct(family: Family, m: int, root: RootChoice, s: int) -> int:
    """eval_factor_poly(build_factor_poly(...), s) without building the poly.

    Horner evaluation of xi^deg Phi_M(x/xi) at x = sqrt(v^s) inside the
    cyclotomic ring, multiplied by its conjugate.  Used by the growth-bound
    sweep where only values are needed.
    """
    _require_coprime(family, m)
    if s < 1 or s % 2 == 0:
        raise ValueError(f"s must be odd and positive, got {s}")
    order = family.root_order
    index = family.factor_index(m)
    base = cyclotomic_poly(index).coeffs
    deg = len(base) - 1
    xi = CycInt.root_power(order, root_exponent(order, root))
    w = CycInt.sqrt_base(order).scale(family.char ** ((s - 1) // 2))
    # Horner in w for sum base[i] * xi^(deg-i) * w^i, highest i first
    acc = CycInt.zero(order)
    xi_power = CycInt.one(order)  # xi^(deg - i) as i descends from deg
    for i in range(deg, -1, -1):
        acc = acc * w + xi_power.scale(base[i])
        xi_power = xi_power * xi
    value = (acc * acc.conj()).project()
    assert value.is_rational(), f"factor value not rational: {value}"
    return value.a


def induced_sign(family: Family, m: int, root: RootChoice) -> Sign:
    """The sign whose Psi factor the chosen root tracks.

    With M the constructed index, xi^M + conj(xi)^M equals -epsilon*sqrt(v)
    for exactly one sign epsilon; that epsilon is returned.  The two root
    choices always induce opposite signs.
    """
    _require_coprime(family, m)
    order = family.root_order
    index = family.factor_index(m)
    xi = CycInt.root_power(order, root_exponent(order, root) * index)
    trace = (xi + xi.conj()).project()
    assert trace.a == 0 and trace.b in (1, -1), f"unexpected trace {trace}"
    return Sign.MINUS if trace.b == 1 else Sign.PLUS


def gcd_cyclotomic_psi(family: Family, m: int, s: int, sign: Sign) -> int:
    """gcd of Phi_{nm}(v^s) with Psi_n(sign*sqrt(v^{sm})); m coprime to n, s odd."""
    _require_coprime(family, m)
    if s < 1 or s % 2 == 0:
        raise ValueError(f"s must be odd and positive, got {s}")
    big = eval_cyclotomic(family.psi_index * m, family.char**s)
    return math.gcd(big, psi_eval(family, sign, s * m))


def check_gcd_identity(family: Family, m: int, s: int) -> bool:
    """Whether gcd(Phi_{nm}(v^s), Psi_n(eps*sqrt(v^{sm}))) = |factor value|
    for both signs, each matched to the root choice that induces it.
    """
    signs = {root: induced_sign(family, m, root) for root in RootChoice}
    assert signs[RootChoice.FIRST] != signs[RootChoice.SECOND]
    for root, sign in signs.items():
        value = abs(eval_factor_poly(build_factor_poly(family, m, root), s))
        if gcd_cyclotomic_psi(family, m, s, sign) != value:
            return False
    return True


class BoundCheck(enum.Enum):
    PASS = "pass"
    NOT_APPLICABLE = "not_applicable"
    FAIL = "fail"


def _bound_threshold(family: Family) -> int:
    # |factor value| at sqrt(2) needs m > 5; at sqrt(3), m > 3
    return 5 if family.char == 2 else 3


def check_factor_bound(family: Family, m: int) -> BoundCheck:
    """Whether both factor values at sqrt(v) exceed the largest prime of m.

    Only the two small-field families qualify; m must be coprime to n and
    at least 2.  Below the per-field threshold the bound is not claimed and
    NOT_APPLICABLE is returned.  FAIL never occurs for legal inputs.
    """
    if family is Family.REE_F4:
        raise ValueError("bound applies to the degree-2 factor families only")
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    _require_coprime(family, m)
    if m <= _bound_threshold(family):
        return BoundCheck.NOT_APPLICABLE
    bound = largest_prime_divisor(m)
    values = [
        abs(eval_factor_direct(family, m, root, 1)) for root in RootChoice
    ]
    return BoundCheck.PASS if all(v > bound for v in values) else BoundCheck.FAIL


@dataclass(frozen=True)
class Verdict:
    """Outcome of the primitive-divisor check for one torus order."""

    family: Family
    m: int
    sign: Sign
    holds: bool
    gcd: int
    witness: int | None
    known_exception: bool


def is_known_exception(family: Family, m: int) -> bool:
    """The two Suzuki parameters whose minus-side torus has no primitive
    prime divisor; the check legitimately fails there and nowhere else.
    """
    return family is Family.SUZUKI and m in (3, 5)


def verify_psi_ppd(
    family: Family,
    m: int,
    sign: Sign,
    want_witness: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Verdict:
    """Does Psi_n(sign*sqrt(v^m)) contain a primitive prime divisor of
    v^{nm} - 1?  Decided without factoring: the torus order is checked for a
    common divisor with the primitive part of the cyclotomic value.

    With want_witness, the gcd is factored (budget applies) and the smallest
    prime whose multiplicative order at v is exactly nm is reported.
    """
    if m < 2 or m % 2 == 0:
        raise ValueError(f"m must be odd and > 1, got {m}")
    v = family.char
    nm = family.psi_index * m
    g = math.gcd(primitive_part(nm, v), psi_eval(family, sign, m))
    holds = g > 1
    witness = None
    if want_witness and holds:
        for p in factorize(g, budget).primes():
            if multiplicative_order(v, p, budget) == nm:
                witness = p
                break
    return Verdict(
        family=family,
        m=m,
        sign=sign,
        holds=holds,
        gcd=g,
        witness=witness,
        known_exception=is_known_exception(family, m),
    )

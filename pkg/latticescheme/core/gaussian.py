"""Exact arithmetic in the Gaussian integers Z[i].

Everything here is pure integer arithmetic: norms, nearest-quotient division,
gcd, primality and factorization. Rational-prime work (factoring the norm,
primality of the norm, square roots of -1) is delegated to sympy.
"""
import re
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from sympy import factorint, isprime
from sympy.ntheory import sqrt_mod

from ..exceptions import PreconditionError

logger = logging.getLogger(__name__)

_PURE_IMAGINARY = re.compile(r'^(?P<im>[+-]?\d*)i$')
_WITH_REAL_PART = re.compile(r'^(?P<re>[+-]?\d+)(?:(?P<im>[+-]\d*)i)?$')


def _coefficient(text: str) -> int:
    if text in ('', '+'):
        return 1
    if text == '-':
        return -1
    return int(text)


@dataclass(frozen=True)
class GaussInt:
    """A Gaussian integer re + im·i"""
    re: int
    im: int = 0

    @classmethod
    def parse(cls, text: str) -> "GaussInt":
        """Parse "3+2i", "-1-1i", "7", "2i", "1+i" (whitespace allowed)"""
        compact = re.sub(r'\s+', '', str(text))
        match = _PURE_IMAGINARY.match(compact)
        if match:
            return cls(0, _coefficient(match.group('im')))
        match = _WITH_REAL_PART.match(compact)
        if match:
            im = match.group('im')
            return cls(int(match.group('re')), _coefficient(im) if im is not None else 0)
        raise PreconditionError(f"Not a Gaussian integer: {text!r} (expected a+bi)")

    @staticmethod
    def _coerce(other) -> Optional["GaussInt"]:
        if isinstance(other, GaussInt):
            return other
        if isinstance(other, int):
            return GaussInt(other, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return NotImplemented
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        # equal to hash(int) for real values, which compare equal to ints
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = '+' if self.im > 0 else '-'
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
UNITS = (ONE, I, -ONE, -I)


@dataclass(frozen=True)
class Factorization:
    unit: GaussInt
    factors: Tuple[Tuple[GaussInt, int], ...]

    def expand(self) -> GaussInt:
        """Multiply the factorization back out"""
        value = self.unit
        for prime, multiplicity in self.factors:
            value = value * prime ** multiplicity
        return value

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.factors)

    def __str__(self):
        parts = [str(self.unit)]
        for prime, multiplicity in self.factors:
            parts.append(f"({prime})" + (f"^{multiplicity}" if multiplicity > 1 else ""))
        return " * ".join(parts)


def norm(z: GaussInt) -> int:
    return z.re * z.re + z.im * z.im


def is_unit(z: GaussInt) -> bool:
    return norm(z) == 1


def in_canonical_quadrant(z: GaussInt) -> bool:
    return z.re > 0 and z.im >= 0


def canonical_key(z: GaussInt):
    """Sort key: smaller norm first, then the canonical quadrant, then (re, im)"""
    return (norm(z), 0 if in_canonical_quadrant(z) else 1, z.re, z.im)


def _round_half_up(num: int, den: int) -> int:
    # nearest integer to num/den (den > 0), exact halves go toward +inf
    return (2 * num + den) // (2 * den)


def divmod_nearest(xi: GaussInt, pi: GaussInt) -> Tuple[GaussInt, GaussInt]:
    """Return (q, r) with xi = q·pi + r and q the coordinate-wise rounded quotient"""
    if not pi:
        raise PreconditionError("Division by zero Gaussian integer")
    n = norm(pi)
    num = xi * pi.conj()
    q = GaussInt(_round_half_up(num.re, n), _round_half_up(num.im, n))
    return q, xi - q * pi


def exact_quotient(z: GaussInt, d: GaussInt) -> Optional[GaussInt]:
    """Return z/d when d divides z, otherwise None"""
    if not d:
        raise PreconditionError("Division by zero Gaussian integer")
    n = norm(d)
    num = z * d.conj()
    if num.re % n or num.im % n:
        return None
    return GaussInt(num.re // n, num.im // n)


def divides(d: GaussInt, z: GaussInt) -> bool:
    return exact_quotient(z, d) is not None


def canonical_associate(z: GaussInt) -> GaussInt:
    """The associate of z with re > 0 and im >= 0"""
    if not z:
        raise PreconditionError("Zero has no canonical associate")
    w = z
    for _ in range(4):
        if in_canonical_quadrant(w):
            return w
        w = w * I
    raise AssertionError(f"no associate of {z} in the canonical quadrant")


def gcd(a: GaussInt, b: GaussInt) -> GaussInt:
    if not a and not b:
        raise PreconditionError("gcd(0, 0) is undefined")
    while b:
        _, r = divmod_nearest(a, b)
        a, b = b, r
    return canonical_associate(a)


def is_gaussian_prime(z: GaussInt) -> bool:
    n = norm(z)
    if n < 2:
        return False
    if n == 2:
        return True
    if n % 4 == 1 and isprime(n):
        return True
    if z.re == 0 or z.im == 0:
        p = abs(z.re + z.im)
        return p % 4 == 3 and isprime(p)
    return False


def two_square(p: int) -> GaussInt:
    """Fermat decomposition p = a² + b², returned as a+bi with a >= b >= 1"""
    if p == 2:
        return GaussInt(1, 1)
    if p < 2 or p % 4 != 1 or not isprime(p):
        raise PreconditionError(f"{p} is not 2 or a prime congruent to 1 mod 4")

    # pi = gcd(p, x + i) where x² = -1 mod p
    x = sqrt_mod(p - 1, p)
    pi = gcd(GaussInt(p), GaussInt(x, 1))
    a, b = abs(pi.re), abs(pi.im)
    if a < b:
        a, b = b, a
    return GaussInt(a, b)


def _strip(value: GaussInt, prime: GaussInt, times: Optional[int] = None):
    """Divide prime out of value, times times or as often as possible"""
    count = 0
    while times is None or count < times:
        q = exact_quotient(value, prime)
        if q is None:
            break
        value = q
        count += 1
    return value, count


def factor(z: GaussInt) -> Factorization:
    if not z:
        raise PreconditionError("Cannot factor zero")

    remaining = z
    factors = []
    for p, e in sorted(factorint(norm(z)).items()):
        if p == 2:
            remaining, _ = _strip(remaining, GaussInt(1, 1), e)
            factors.append((GaussInt(1, 1), e))
        elif p % 4 == 3:
            # inert primes contribute p² to the norm
            remaining, k = _strip(remaining, GaussInt(p), e // 2)
            factors.append((GaussInt(p), k))
        else:
            pi = two_square(p)
            pi_bar = canonical_associate(pi.conj())
            remaining, k = _strip(remaining, pi)
            remaining, k_bar = _strip(remaining, pi_bar, e - k)
            if k:
                factors.append((pi, k))
            if k_bar:
                factors.append((pi_bar, k_bar))

    if not is_unit(remaining):
        raise AssertionError(f"factorization of {z} left non-unit cofactor {remaining}")

    factors.sort(key=lambda item: (norm(item[0]), item[0].re))
    logger.debug(f"factor({z}) = {remaining} * {factors}")
    return Factorization(unit=remaining, factors=tuple(factors))


def is_representable(c: int) -> bool:
    """True iff c = r² + s² for integers r, s (norms of multipliers of Z[i])"""
    if c < 0:
        return False
    if c == 0:
        return True
    return all(e % 2 == 0 for p, e in factorint(c).items() if p % 4 == 3)

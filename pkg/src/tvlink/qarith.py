#
# qarith.py
#
# Root-of-unity contexts and quantum arithmetic: quantum integers and
# factorials, braces {n} = 2 sin(2n*pi/r), and the normalization
# constants eta / eta'.  Everything here is pure and value-semantic;
# a RootContext is immutable and hashable, so downstream coefficient
# caches can key on it.

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class Flavor(Enum):
    SU2_4R = "su2"   # A a primitive 4r-th root, any r >= 3
    SO3_2R = "so3"   # A a primitive 2r-th root, r odd


@dataclass(frozen=True)
class RootContext:
    """Level r together with a choice of root of unity A.

    The root is A = exp(i*pi*s/(2r)) for the SU(2) flavor and
    A = exp(i*pi*s/r) for the SO(3) flavor, where s is an integer
    exponent (s=1 gives the principal root used in all shipped runs).
    We keep the angle of A^2 as an exact rational multiple of pi,
    theta = pi*angle_num/r, so that quantum integers like [r] = 0
    come out exactly zero instead of sin(pi) noise.
    """

    r: int
    flavor: Flavor = Flavor.SU2_4R
    s: int = 1

    def __post_init__(self):
        if self.r < 3:
            raise ValueError("level r must be at least 3, got %d" % self.r)
        if self.flavor is Flavor.SO3_2R:
            if self.r % 2 == 0:
                raise ValueError("SO(3) flavor requires odd r, got %d" % self.r)
            if math.gcd(self.s, 2 * self.r) != 1:
                raise ValueError("exponent %d does not give a primitive 2r-th root" % self.s)
        else:
            if math.gcd(self.s, 4 * self.r) != 1:
                raise ValueError("exponent %d does not give a primitive 4r-th root" % self.s)

    @property
    def angle_num(self):
        # theta = arg(A^2) = pi * angle_num / r
        if self.flavor is Flavor.SU2_4R:
            return self.s
        return 2 * self.s

    @property
    def A(self):
        return cmath.exp(1j * math.pi * self.angle_num / (2 * self.r))

    @property
    def q(self):
        return self.A ** 2

    @property
    def t(self):
        return self.A ** 4

    @property
    def m(self):
        if self.flavor is not Flavor.SO3_2R:
            raise ValueError("m = (r-1)/2 is only defined for the SO(3) flavor")
        return (self.r - 1) // 2

    def a_pow(self, k):
        """A^k for integer k, reduced mod 4r so large exponents stay accurate."""
        return cmath.exp(1j * math.pi * (self.angle_num * k % (4 * self.r)) / (2 * self.r))

    def t_pow4(self, k4):
        """t^(k4/4) = A^k4; exponents of t in the torus/cabling formulas are
        quarter-integers, so callers pass 4 times the t-exponent."""
        return self.a_pow(k4)

    def _sin_pi_frac(self, num):
        # sin(pi * num / r) with an exact zero when r divides num
        num %= 2 * self.r
        if num % self.r == 0:
            return 0.0
        return math.sin(math.pi * num / self.r)


def quantum_int(ctx, n):
    """Quantum integer [n] = (A^2n - A^-2n)/(A^2 - A^-2) = sin(n*theta)/sin(theta).

    Real at any root on the unit circle; exactly zero when r | n*angle_num.
    """
    return ctx._sin_pi_frac(n * ctx.angle_num) / ctx._sin_pi_frac(ctx.angle_num)


@lru_cache(maxsize=None)
def quantum_factorial(ctx, n):
    """[n]! = [1][2]...[n], with [0]! = 1.  Exactly 0.0 for n >= r."""
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0, got %d" % n)
    if n == 0:
        return 1.0
    prev = quantum_factorial(ctx, n - 1)
    if prev == 0.0:
        return 0.0
    return prev * quantum_int(ctx, n)


def brace(ctx, j):
    """{j} = 2 sin(2j*pi/r) at the SO(3) principal-type root (= |A^2-A^-2| * [j])."""
    if ctx.flavor is not Flavor.SO3_2R:
        raise ValueError("braces are defined for the SO(3) flavor only")
    return 2.0 * ctx._sin_pi_frac(j * ctx.angle_num)


def eta(ctx):
    """eta_r = (A^2 - A^-2)/sqrt(-2r) = 2 sin(theta)/sqrt(2r); real and nonzero."""
    return 2.0 * ctx._sin_pi_frac(ctx.angle_num) / math.sqrt(2 * ctx.r)


def eta_prime(ctx):
    """eta'_r = (A^2 - A^-2)/sqrt(-r) = 2 sin(theta)/sqrt(r); SO(3) flavor only."""
    if ctx.flavor is not Flavor.SO3_2R:
        raise ValueError("eta' is defined for the SO(3) flavor only")
    return 2.0 * ctx._sin_pi_frac(ctx.angle_num) / math.sqrt(ctx.r)


@dataclass(frozen=True)
class LogMagnitude:
    """A signed real stored as (sign, log|x|); survives products of ~r factors
    that overflow doubles (Borromean Habiro terms grow like exp(c*r))."""

    sign: int
    log_abs: float

    ZERO = None  # set below

    @classmethod
    def from_float(cls, x):
        if x == 0.0:
            return cls.ZERO
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    def to_float(self):
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)

    def __mul__(self, other):
        if self.sign == 0 or other.sign == 0:
            return LogMagnitude.ZERO
        return LogMagnitude(self.sign * other.sign, self.log_abs + other.log_abs)

    def __truediv__(self, other):
        if other.sign == 0:
            raise ZeroDivisionError("division by an exactly-zero LogMagnitude")
        if self.sign == 0:
            return LogMagnitude.ZERO
        return LogMagnitude(self.sign * other.sign, self.log_abs - other.log_abs)

    def __pow__(self, k):
        if self.sign == 0:
            if k <= 0:
                raise ZeroDivisionError("0 to a non-positive power")
            return LogMagnitude.ZERO
        return LogMagnitude(self.sign if k % 2 else 1, self.log_abs * k)

    def __neg__(self):
        return LogMagnitude(-self.sign, self.log_abs)

    def abs(self):
        return LogMagnitude(abs(self.sign), self.log_abs)


LogMagnitude.ZERO = LogMagnitude(0, float("-inf"))


def logmag_sum(terms):
    """Signed sum of LogMagnitude terms, returned as a LogMagnitude.

    Shifts by the largest magnitude so the accumulation happens on O(1)
    numbers; exact cancellation returns LogMagnitude.ZERO.
    """
    terms = [t for t in terms if t.sign != 0]
    if not terms:
        return LogMagnitude.ZERO
    top = max(t.log_abs for t in terms)
    acc = math.fsum(t.sign * math.exp(t.log_abs - top) for t in terms)
    if acc == 0.0:
        return LogMagnitude.ZERO
    return LogMagnitude(1 if acc > 0 else -1, top + math.log(abs(acc)))


def brace_factorial_log(ctx, j):
    """{j}! = {1}{2}...{j} as a LogMagnitude (SO(3) flavor, 0 <= j < r).

    For odd r no factor vanishes in that range; j >= r would hit {r} = 0
    and is rejected.
    """
    if ctx.flavor is not Flavor.SO3_2R:
        raise ValueError("brace factorials are defined for the SO(3) flavor only")
    if not 0 <= j < ctx.r:
        raise ValueError("brace factorial needs 0 <= j < r, got j=%d" % j)
    sign = 1
    log_abs = 0.0
    for k in range(1, j + 1):
        b = brace(ctx, k)
        if b < 0:
            sign = -sign
        log_abs += math.log(abs(b))
    return LogMagnitude(sign, log_abs)

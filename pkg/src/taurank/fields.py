"""Exact coefficient fields (rationals and prime fields) and a splittable RNG.

Every computation in this library is exact: scalars are either
`fractions.Fraction` values (field Q) or machine ints reduced mod a prime
(field F_p).  A field object bundles the arithmetic so that the linear
algebra layer never has to branch on the scalar type.
"""

from __future__ import annotations

import random
from fractions import Fraction


class RationalField:
    """Arithmetic over Q with `Fraction` scalars."""

    name = "Q"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def is_zero(self, a):
        return a == 0

    def to_json(self, a):
        return int(a) if a.denominator == 1 else str(a)

    def sample(self, rng, bound):
        """Uniform integer in [-bound, bound], as a field element."""
        if bound == 0:
            return self.zero
        return Fraction(rng.randint(-bound, bound))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Arithmetic over F_p with int scalars in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, min(p, 1 + int(p**0.5) + 1))):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"F_{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes mod {self.p}")
        return (q.numerator * pow(q.denominator, -1, self.p)) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return (a * pow(b, -1, self.p)) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def to_json(self, a):
        return int(a)

    def sample(self, rng, bound):
        if bound == 0:
            return 0
        return rng.randint(0, self.p - 1)

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

DEFAULT_PRIME = 2147483647


_MASK64 = (1 << 64) - 1


def _mix(seed: int, index: int) -> int:
    # splitmix64-style finalizer; cheap, deterministic, well spread.
    x = (seed * 0x9E3779B97F4A7C15 + (index + 1) * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


class SeedStream:
    """Seedable, splittable deterministic random stream.

    `split(i)` derives the i-th child stream; children with distinct
    indices are independent and reproducible.  Randomized operations
    document which stream index they consume.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._rng = random.Random(self.seed)

    def split(self, index: int) -> "SeedStream":
        return SeedStream(_mix(self.seed, index))

    def randint(self, lo: int, hi: int) -> int:
        return self._rng.randint(lo, hi)

    def choice(self, seq):
        return seq[self._rng.randrange(len(seq))]

    def __repr__(self):
        return f"SeedStream({self.seed})"


def sample_scalar(field, rng: SeedStream, bound: int):
    """One scalar draw from `rng`: uniform in [-bound, bound] over Q,
    uniform field element over F_p.  bound 0 always yields 0."""
    return field.sample(rng, bound)

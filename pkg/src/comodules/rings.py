"""Base ring descriptors and exact element arithmetic.

Four base rings are supported: the rationals, prime fields GF(p), the
integers, and Z/n for n >= 2.  Elements are plain Python objects: Fraction
over Q, int over Z, and canonical residues 0 <= e < n over the modular rings.
Everything downstream (matrices, normal forms, presented modules) is generic
over a RingDescriptor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingDescriptor:
    """One of Q, GF(p), Z, Z/n.  kind is "Q", "GF", "Z" or "Zn"."""

    kind: str
    modulus: int | None = None

    # -- capabilities -----------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind in ("Q", "GF")

    @property
    def is_qf(self) -> bool:
        """Quasi-Frobenius: self-injective and noetherian.  Fields and Z/n."""
        return self.kind in ("Q", "GF", "Zn")

    @property
    def is_modular(self) -> bool:
        return self.kind in ("GF", "Zn")

    @property
    def is_finite(self) -> bool:
        return self.kind in ("GF", "Zn")

    # -- element arithmetic ------------------------------------------------

    def normalize(self, x):
        if self.kind == "Q":
            return x if isinstance(x, Fraction) else Fraction(x)
        if self.kind == "Z":
            return int(x)
        return int(x) % self.modulus

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def add(self, a, b):
        if self.is_modular:
            return (a + b) % self.modulus
        return a + b

    def sub(self, a, b):
        if self.is_modular:
            return (a - b) % self.modulus
        return a - b

    def mul(self, a, b):
        if self.is_modular:
            return (a * b) % self.modulus
        return a * b

    def neg(self, a):
        if self.is_modular:
            return (-a) % self.modulus
        return -a

    def is_unit(self, a) -> bool:
        if self.kind == "Q":
            return a != 0
        if self.kind == "Z":
            return a in (1, -1)
        if self.kind == "GF":
            return a % self.modulus != 0
        return gcd(a, self.modulus) == 1

    def inv(self, a):
        if self.kind == "Q":
            return Fraction(1) / a
        if self.kind == "Z":
            if a in (1, -1):
                return a
            raise ZeroDivisionError(f"{a} is not a unit in Z")
        try:
            return pow(int(a), -1, self.modulus)
        except ValueError:
            raise ZeroDivisionError(f"{a} is not a unit in {self}") from None

    def exact_div(self, a, b):
        """Some q with q*b = a, or None.  Over Z/n solvability means
        gcd(b, n) divides a."""
        if self.is_zero_el(b):
            return self.zero if self.is_zero_el(a) else None
        if self.kind == "Q":
            return a / b
        if self.kind == "Z":
            q, r = divmod(a, b)
            return q if r == 0 else None
        n = self.modulus
        g = gcd(b, n)
        if a % g != 0:
            return None
        return ((a // g) * pow(b // g, -1, n // g)) % (n // g)

    def is_zero_el(self, a) -> bool:
        return a == 0

    def __str__(self) -> str:
        if self.kind == "Q":
            return "Q"
        if self.kind == "Z":
            return "Z"
        if self.kind == "GF":
            return f"GF({self.modulus})"
        return f"Z/{self.modulus}"

    # -- parsing helpers ----------------------------------------------------

    def element_from_string(self, s: str):
        s = s.strip()
        if self.kind == "Q":
            return Fraction(s)
        if "/" in s:
            raise ValueError(f"fractional literal {s!r} in ring {self}")
        return self.normalize(int(s))

    def element_to_string(self, x) -> str:
        if self.kind == "Q":
            f = Fraction(x)
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        return str(x)


QQ = RingDescriptor("Q")
ZZ = RingDescriptor("Z")


def GF(p: int) -> RingDescriptor:
    if not _is_prime(p):
        raise ValueError(f"GF({p}): modulus must be prime")
    return RingDescriptor("GF", p)


def Zmod(n: int) -> RingDescriptor:
    if n < 2:
        raise ValueError(f"Z/{n}: modulus must be >= 2")
    return RingDescriptor("Zn", n)


def ring_from_string(s: str) -> RingDescriptor:
    """Parse a ring name: Q, Z, GF(p) / F_p, Z/n."""
    t = s.strip()
    if t in ("Q", "QQ"):
        return QQ
    if t in ("Z", "ZZ"):
        return ZZ
    if t.startswith("GF(") and t.endswith(")"):
        return GF(int(t[3:-1]))
    if t.startswith("F_"):
        return GF(int(t[2:]))
    if t.startswith("Z/"):
        return Zmod(int(t[2:]))
    raise ValueError(f"unknown ring {s!r}")

"""Exact scalar arithmetic over the rationals or a prime field.

Scalars are plain Python objects: ``fractions.Fraction`` over the
rationals, ``int`` residues in ``[0, p)`` over a prime field.  A
``Field`` instance supplies the arithmetic, parsing and formatting.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (``p is None``) or the integers mod a prime ``p``."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    # -- identity / comparison ------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def is_rational(self) -> bool:
        return self.p is None

    # -- constants -------------------------------------------------------

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def of_int(self, n: int):
        return Fraction(n) if self.p is None else n % self.p

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def reduce(self, a):
        """Normalize a raw scalar (used after unreduced int accumulation)."""
        return a if self.p is None else a % self.p

    # -- text encoding ---------------------------------------------------

    def parse(self, text: str):
        """Parse ``a`` or ``a/b`` (rationals) / a decimal integer (prime field)."""
        text = text.strip()
        if self.p is None:
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad rational scalar {text!r}: {exc}") from None
        try:
            return int(text, 10) % self.p
        except ValueError:
            raise ValueError(f"bad prime-field scalar {text!r}") from None

    def fmt(self, a) -> str:
        return str(a)


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)

"""Exact scalar fields: the rationals and prime fields F_p.

Scalars are plain objects with overloaded arithmetic so that the matrix
kernel can stay generic: ``fractions.Fraction`` for Q, :class:`FpElement`
for F_p.  Every value is normalized (lowest terms / representative in
[0, p)), so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadScalar


class Field:
    """Common interface of the two supported exact fields."""

    name: str

    def parse(self, obj):
        raise NotImplementedError

    def format(self, x):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError


class RationalField(Field):
    name = "Q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, obj):
        """Accept an int, or a string 'p/q' / 'p' with integer p, q."""
        if isinstance(obj, bool):
            raise BadScalar(f"not a rational scalar: {obj!r}")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, Fraction):
            return obj
        if isinstance(obj, str):
            parts = obj.split("/")
            try:
                if len(parts) == 1:
                    return Fraction(int(parts[0].strip()))
                if len(parts) == 2:
                    num = int(parts[0].strip())
                    den = int(parts[1].strip())
                    if den == 0:
                        raise BadScalar(f"zero denominator in {obj!r}")
                    return Fraction(num, den)
            except ValueError:
                pass
        raise BadScalar(f"not a rational scalar: {obj!r}")

    def format(self, x):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class FpElement:
    """An element of F_p, stored as its representative in [0, p)."""

    __slots__ = ("field", "val")

    def __init__(self, field, val):
        self.field = field
        self.val = val % field.p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise BadScalar("mixed prime fields")
            return other.val
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.field, v - self.val)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.field, self.val * pow(v, self.field.p - 2, self.field.p))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if self.val == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.field, v * pow(self.val, self.field.p - 2, self.field.p))

    def __neg__(self):
        return FpElement(self.field, -self.val)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.val == other.val and self.field.p == other.field.p
        if isinstance(other, int):
            return self.val == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise BadScalar(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.zero = FpElement(self, 0)
        self.one = FpElement(self, 1)

    def from_int(self, n):
        return FpElement(self, n)

    def parse(self, obj):
        if isinstance(obj, bool):
            raise BadScalar(f"not an F_{self.p} scalar: {obj!r}")
        if isinstance(obj, int):
            return FpElement(self, obj)
        if isinstance(obj, FpElement) and obj.field.p == self.p:
            return obj
        if isinstance(obj, str):
            try:
                return FpElement(self, int(obj.strip()))
            except ValueError:
                pass
        raise BadScalar(f"not an F_{self.p} scalar: {obj!r}")

    def format(self, x):
        return x.val

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(name, p=None) -> Field:
    """Field named in a document: "Q", or "Fp" with a prime p."""
    if name == "Q":
        return QQ
    if name == "Fp":
        if p is None:
            raise BadScalar('field "Fp" needs a prime "p"')
        return PrimeField(p)
    raise BadScalar(f"unknown field {name!r}")

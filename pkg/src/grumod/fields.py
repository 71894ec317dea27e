"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields GF(p).

Scalars are plain Python values (``Fraction`` over the rationals, ``int`` in
``range(p)`` over GF(p)); a field object supplies the operations, so matrices
and structure constants never carry per-entry wrappers.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of the two exact scalar fields."""

    kind = "abstract"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def parse(self, s: str):
        raise NotImplementedError

    def render(self, a) -> str:
        raise NotImplementedError

    def coerce(self, value):
        """Accept ints, strings or native scalars and return a native scalar."""
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return False

    def to_spec(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.to_spec() == other.to_spec()

    def __hash__(self):
        return hash(tuple(sorted(self.to_spec().items())))


class RationalField(Field):
    """The rationals with Fraction scalars; every result is in lowest terms."""

    kind = "rationals"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def parse(self, s: str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not a rational scalar: {s!r}") from exc

    def render(self, a) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        raise FieldError(f"cannot coerce {value!r} into the rationals")

    def to_spec(self) -> dict:
        return {"kind": "rationals"}

    def __repr__(self):
        return "RationalField()"


class PrimeField(Field):
    """GF(p) with int scalars reduced into range(p)."""

    kind = "prime"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, s: str):
        try:
            n = int(s)
        except ValueError as exc:
            raise FieldError(f"not a GF({self.p}) scalar: {s!r}") from exc
        return n % self.p

    def render(self, a) -> str:
        return str(a % self.p)

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator % self.p
        raise FieldError(f"cannot coerce {value!r} into GF({self.p})")

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self):
        return range(self.p)

    def to_spec(self) -> dict:
        return {"kind": "prime", "p": self.p}

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = RationalField()
GF2 = PrimeField(2)
GF3 = PrimeField(3)


def field_from_spec(spec: dict) -> Field:
    """Build a field from its JSON form, e.g. {"kind": "prime", "p": 2}."""
    if not isinstance(spec, dict) or "kind" not in spec:
        raise FieldError(f"bad field spec: {spec!r}")
    if spec["kind"] == "rationals":
        return RationalField()
    if spec["kind"] == "prime":
        return PrimeField(int(spec["p"]))
    raise FieldError(f"unknown field kind: {spec['kind']!r}")


def field_from_name(name: str) -> Field:
    """Map CLI spellings (q, qq, gf2, gf3, gf5, ...) to fields."""
    name = name.lower()
    if name in ("q", "qq", "rationals"):
        return RationalField()
    if name.startswith("gf"):
        return PrimeField(int(name[2:]))
    raise FieldError(f"unknown field name: {name!r}")

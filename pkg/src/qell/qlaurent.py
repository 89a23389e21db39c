"""Integer Laurent polynomials in q with rational exponents.

Values are finitely supported maps from reduced fractions to nonzero integers.
No subring bookkeeping is done: the ambient ring is effectively Z[q^Q], and
membership in Z[q^{±1/n}] is a property checked on demand.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError


class QLaurent:
    """Immutable sum of c * q^r terms, r rational, c a nonzero integer."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc: dict[Fraction, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for r, c in items:
            r = Fraction(r)
            c = int(c)
            if c:
                acc[r] = acc.get(r, 0) + c
                if not acc[r]:
                    del acc[r]
        object.__setattr__(self, "terms", tuple(sorted(acc.items())))

    def __setattr__(self, name, value):
        raise AttributeError("QLaurent is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "QLaurent") -> "QLaurent":
        return QLaurent(self.terms + other.terms)

    def __neg__(self) -> "QLaurent":
        return QLaurent(tuple((r, -c) for r, c in self.terms))

    def __sub__(self, other: "QLaurent") -> "QLaurent":
        return self + (-other)

    def __mul__(self, other) -> "QLaurent":
        if isinstance(other, int):
            return QLaurent(tuple((r, c * other) for r, c in self.terms))
        out: dict[Fraction, int] = {}
        for r1, c1 in self.terms:
            for r2, c2 in other.terms:
                r = r1 + r2
                out[r] = out.get(r, 0) + c1 * c2
        return QLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QLaurent":
        if n < 0:
            raise PreconditionError("negative power of a QLaurent")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def rescale(self, r) -> "QLaurent":
        """Substitute q -> q^r for a positive rational r (a ring map)."""
        r = Fraction(r)
        if r <= 0:
            raise PreconditionError("rescale factor must be positive")
        return QLaurent(tuple((e * r, c) for e, c in self.terms))

    def shift(self, r) -> "QLaurent":
        """Multiply by q^r."""
        r = Fraction(r)
        return QLaurent(tuple((e + r, c) for e, c in self.terms))

    def divide_int_exact(self, k: int) -> "QLaurent":
        """Divide every coefficient by k, which must divide exactly."""
        out = []
        for r, c in self.terms:
            if c % k:
                raise PreconditionError(f"coefficient {c} not divisible by {k}")
            out.append((r, c // k))
        return QLaurent(tuple(out))

    def at_one(self) -> int:
        """Evaluate at q = 1 (the augmentation)."""
        return sum(c for _, c in self.terms)

    def exponents(self) -> list[Fraction]:
        return [r for r, _ in self.terms]

    def in_fractional_ring(self, n: int) -> bool:
        """True if every exponent has denominator dividing n."""
        return all(n % r.denominator == 0 for r, _ in self.terms)

    def as_monomial(self) -> tuple[Fraction, int] | None:
        """(exponent, coefficient) if this is a single term, else None."""
        return self.terms[0] if len(self.terms) == 1 else None

    def __eq__(self, other) -> bool:
        return isinstance(other, QLaurent) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for r, c in reversed(self.terms):
            if r == 0:
                body = str(abs(c))
            else:
                e = str(r) if r.denominator == 1 else f"{{{r}}}"
                head = "q" if e == "1" else f"q^{e}"
                body = head if abs(c) == 1 else f"{abs(c)}*{head}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


ZERO = QLaurent()
ONE = QLaurent([(0, 1)])


def monomial(coef: int, exponent) -> QLaurent:
    return QLaurent([(Fraction(exponent), int(coef))])


def q_power(exponent) -> QLaurent:
    return monomial(1, exponent)


def serialize(f: QLaurent) -> list[dict]:
    return [{"exp": f"{r.numerator}/{r.denominator}", "coef": c} for r, c in f.terms]


def deserialize(data) -> QLaurent:
    return QLaurent([(Fraction(item["exp"]), int(item["coef"])) for item in data])

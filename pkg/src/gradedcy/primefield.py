"""Optional prime-field coefficients for the rewriting layer.

Exact rationals are always the default; converting a presentation with
`to_prime_field` swaps the relation coefficients for GF(p) scalars, and
the completion and normal-form machinery runs unchanged over them.  This
trades the guarantee of characteristic-zero dimensions for speed on large
completions; dimensions computed mod p can only be too large, never too
small, compared to the rational ones.
"""

from __future__ import annotations

from fractions import Fraction

from .quiver import GradedQuiverPresentation, NCPoly, Path


class GFScalar:
    """An element of GF(p) with Fraction-compatible arithmetic."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    @classmethod
    def from_fraction(cls, p, value):
        value = Fraction(value)
        num = value.numerator % p
        den = value.denominator % p
        if den == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        return cls(p, num * pow(den, -1, p))

    def _lift(self, other):
        if isinstance(other, GFScalar):
            if other.p != self.p:
                raise TypeError("mixed characteristics")
            return other
        if isinstance(other, (int, Fraction)):
            return GFScalar.from_fraction(self.p, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GFScalar(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GFScalar(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GFScalar(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GFScalar(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError
        return GFScalar(self.p, self.v * pow(o.v, -1, self.p))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError
        return GFScalar(self.p, o.v * pow(self.v, -1, self.p))

    def __neg__(self):
        return GFScalar(self.p, -self.v)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, GFScalar):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            try:
                return self == GFScalar.from_fraction(self.p, other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


def to_prime_field(pres: GradedQuiverPresentation, p):
    """The same presentation with relation coefficients reduced mod p.

    Terms whose coefficient vanishes mod p are dropped, so the relation
    ideal may be strictly larger-dimensional than the rational one; this
    mode is opt-in and never the default anywhere.
    """
    rels = []
    for r in pres.relations:
        terms = {}
        for path, c in r.terms.items():
            g = GFScalar.from_fraction(p, c)
            if g:
                terms[Path(path.source, path.arrows)] = g
        if terms:
            rels.append(NCPoly(terms))
    return GradedQuiverPresentation(
        pres.quiver, rels, twist=pres.twist, cy=pres.cy,
        name=f"{pres.name} mod {p}" if pres.name else f"mod {p}")

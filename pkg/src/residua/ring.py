"""Exact multivariate polynomials over QQ or a prime field, with global monomial orders.

Exponent vectors are plain tuples of naturals; a polynomial stores its terms
as a tuple of (exponent, coefficient) pairs, strictly descending in the ring's
active order, with no zero coefficients.
"""

from __future__ import annotations

from fractions import Fraction


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """Arbitrary-precision rationals."""

    kind = "QQ"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a / b

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


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


class PrimeField:
    """GF(p); elements are ints in [0, p)."""

    kind = "GF"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# monomial orders (global only: 1 is minimal, compatible with multiplication)


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


class GrevLex:
    """Graded reverse lexicographic."""

    kind = "grevlex"

    def key(self, exps):
        return _grevlex_key(exps)

    def __eq__(self, other):
        return isinstance(other, GrevLex)

    def __hash__(self):
        return hash("grevlex")

    def __repr__(self):
        return "grevlex"


class Lex:
    """Pure lexicographic in the ring's variable order."""

    kind = "lex"

    def key(self, exps):
        return tuple(exps)

    def __eq__(self, other):
        return isinstance(other, Lex)

    def __hash__(self):
        return hash("lex")

    def __repr__(self):
        return "lex"


class BlockElim:
    """Elimination order: the block of variable indices dominates the rest.

    Any monomial involving a block variable is greater than any monomial that
    involves none, so a Groebner basis intersected with the block-free subring
    generates the elimination ideal.  grevlex is used inside each block.
    """

    kind = "elim"

    def __init__(self, block, nvars: int):
        self.block = tuple(sorted(block))
        if not self.block:
            raise ValueError("empty elimination block")
        if self.block[0] < 0 or self.block[-1] >= nvars:
            raise ValueError("block indices out of range")
        inside = set(self.block)
        self.rest = tuple(i for i in range(nvars) if i not in inside)

    def key(self, exps):
        b = tuple(exps[i] for i in self.block)
        r = tuple(exps[i] for i in self.rest)
        return (_grevlex_key(b), _grevlex_key(r))

    def __eq__(self, other):
        return isinstance(other, BlockElim) and other.block == self.block and other.rest == self.rest

    def __hash__(self):
        return hash(("elim", self.block, self.rest))

    def __repr__(self):
        return f"elim{list(self.block)}"


def compare_monomials(a, b, order) -> int:
    """-1, 0, or 1 as a <, =, > b in the given order."""
    if len(a) != len(b):
        raise ValueError("monomials with different variable counts")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


# ---------------------------------------------------------------------------
# exponent helpers (shared with the engine)


def exp_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_div(a, b):
    """a / b or None when not divisible."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# polynomial ring and polynomials


class PolynomialRing:
    """k[x_1..x_n] with a fixed global monomial order."""

    def __init__(self, variables, field=QQ, order=None):
        variables = tuple(variables)
        if len(variables) == 0:
            raise ValueError("need at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        self.variables = variables
        self.n = len(variables)
        self.field = field
        self.order = order if order is not None else GrevLex()
        self._zero_exp = (0,) * self.n

    # -- construction -----------------------------------------------------

    def from_dict(self, coeffs: dict) -> "Polynomial":
        field = self.field
        items = []
        for exps, c in coeffs.items():
            c = field.coerce(c) if not _is_field_elt(c, field) else c
            if c != field.zero:
                items.append((tuple(exps), c))
        key = self.order.key
        items.sort(key=lambda t: key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return Polynomial(self, ((self._zero_exp, self.field.one),))

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, ((self._zero_exp, c),))

    def monomial(self, exps, coefficient=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = self.field.coerce(coefficient)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, ((exps, c),))

    def gen(self, i: int) -> "Polynomial":
        exps = tuple(1 if j == i else 0 for j in range(self.n))
        return self.monomial(exps)

    def gens(self):
        return [self.gen(i) for i in range(self.n)]

    def parse(self, text: str) -> "Polynomial":
        from .textio import parse_polynomial

        return parse_polynomial(self, text)

    def __call__(self, value):
        if isinstance(value, Polynomial):
            if value.ring == self:
                return value
            if value.ring.variables == self.variables and value.ring.field == self.field:
                return self.from_dict(dict(value.terms))
            raise ValueError("polynomial from an incompatible ring")
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    # -- variants ----------------------------------------------------------

    def with_order(self, order) -> "PolynomialRing":
        if order == self.order:
            return self
        return PolynomialRing(self.variables, self.field, order)

    def with_field(self, field) -> "PolynomialRing":
        return PolynomialRing(self.variables, field, self.order)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and other.variables == self.variables
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}]"


def _is_field_elt(c, field) -> bool:
    if isinstance(field, RationalField):
        return isinstance(c, Fraction)
    return False  # GF elements are ints but ints still need reduction mod p


class Polynomial:
    """Immutable exact polynomial; terms strictly descending in the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def lead_exponent(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        return self.terms[0][0]

    def lead_coefficient(self):
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        return self.terms[0][1]

    def constant_value(self):
        """The coefficient viewed as a field constant; None when not constant."""
        if not self.terms:
            return self.ring.field.zero
        if len(self.terms) == 1 and not any(self.terms[0][0]):
            return self.terms[0][1]
        return None

    def degree(self):
        """Total degree (max over terms); None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e, _ in self.terms)

    def weighted_degree(self, weights):
        if not self.terms:
            return None
        return max(sum(w * x for w, x in zip(weights, e)) for e, _ in self.terms)

    def is_homogeneous(self, weights=None) -> bool:
        if not self.terms:
            return True
        if weights is None:
            degs = {sum(e) for e, _ in self.terms}
        else:
            degs = {sum(w * x for w, x in zip(weights, e)) for e, _ in self.terms}
        return len(degs) == 1

    # -- arithmetic ----------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        acc = dict(self.terms)
        field = self.ring.field
        for e, c in other.terms:
            s = field.add(acc.get(e, field.zero), c)
            if s == field.zero:
                acc.pop(e, None)
            else:
                acc[e] = s
        return self.ring.from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, tuple((e, field.neg(c)) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce_other(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.constant(other) - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        field = self.ring.field
        acc = {}
        zero = field.zero
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = exp_mul(e1, e2)
                s = field.add(acc.get(e, zero), field.mul(c1, c2))
                if s == zero:
                    acc.pop(e, None)
                else:
                    acc[e] = s
        return self.ring.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        c = self.ring.field.coerce(c)
        if c == self.ring.field.zero:
            return self.ring.zero()
        field = self.ring.field
        return Polynomial(self.ring, tuple((e, field.mul(cf, c)) for e, cf in self.terms))

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coefficient()))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return isinstance(other, Polynomial) and other.ring == self.ring and other.terms == self.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    # -- ring maps ------------------------------------------------------------

    def substitute(self, target_ring: PolynomialRing, images) -> "Polynomial":
        """Apply the ring map sending variable i to images[i]."""
        images = list(images)
        if len(images) != self.ring.n:
            raise ValueError("one image per variable required")
        out = target_ring.zero()
        for e, c in self.terms:
            term = target_ring.constant(c)
            for i, exp in enumerate(e):
                if exp:
                    term = term * images[i] ** exp
            out = out + term
        return out

    def in_ring(self, other: PolynomialRing) -> "Polynomial":
        """Re-sort into a ring with the same variables and field."""
        if other.variables != self.ring.variables or other.field != self.ring.field:
            raise ValueError("rings differ by more than the order")
        return other.from_dict(dict(self.terms))

    # -- display ---------------------------------------------------------------

    def _monomial_str(self, exps) -> str:
        parts = []
        for name, e in zip(self.ring.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.terms:
            mon = self._monomial_str(e)
            if isinstance(c, Fraction):
                negative = c < 0
                mag = -c if negative else c
                coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            else:
                negative = False
                coeff = str(c)
            if mon:
                body = mon if coeff == "1" else f"{coeff}*{mon}"
            else:
                body = coeff
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"

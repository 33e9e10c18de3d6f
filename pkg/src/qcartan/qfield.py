"""Exact rational functions in the deformation variable.

Every scalar in the engine is an element of Q(v), where q = v**N for a
session-wide positive integer N (N = 1 unless weight-lattice K-exponents
require fractional powers of q).  Polynomials are tuples of ints in
ascending degree; a QRat is canonical: the polynomial gcd of numerator and
denominator is 1, the integer contents are coprime, and the denominator has
positive leading coefficient.  Canonical form makes equality structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


# ---------------------------------------------------------------------------
# integer polynomial helpers (tuples, ascending degree, no trailing zeros)

def _trim(coeffs) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def pneg(a: tuple) -> tuple:
    return tuple(-c for c in a)


def psub(a: tuple, b: tuple) -> tuple:
    return padd(a, pneg(b))


def pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def pshift(a: tuple, k: int) -> tuple:
    """Multiply by v**k (k >= 0)."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def pcontent(a: tuple) -> int:
    g = 0
    for c in a:
        g = _igcd(g, abs(c))
    return g


def pprimitive(a: tuple) -> tuple:
    """Divide out the content; force a positive leading coefficient."""
    if not a:
        return ()
    g = pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def _pseudo_rem(a: tuple, b: tuple) -> tuple:
    # lc(b)**(deg a - deg b + 1) * a  mod  b, over the integers
    da, db = len(a) - 1, len(b) - 1
    lc = b[-1]
    r = list(a)
    for i in range(da, db - 1, -1):
        coef = r[i]
        if coef:
            for j in range(len(r)):
                r[j] *= lc
            for j in range(db + 1):
                r[i - db + j] -= coef * b[j]
        # keep integers small-ish between steps
    return _trim(r)


def pgcd(a: tuple, b: tuple) -> tuple:
    a, b = pprimitive(a), pprimitive(b)
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, pprimitive(r)
    return a if a else ()


def pdivexact(a: tuple, b: tuple) -> tuple:
    """Exact polynomial division over Q, asserting zero remainder."""
    if not a:
        return ()
    da, db = len(a) - 1, len(b) - 1
    out = [Fraction(0)] * (da - db + 1)
    rem = [Fraction(c) for c in a]
    lc = Fraction(b[-1])
    for i in range(da, db - 1, -1):
        c = rem[i] / lc
        out[i - db] = c
        if c:
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    assert all(c.denominator == 1 for c in out)
    return _trim([int(c) for c in out])


def peval(a: tuple, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(a):
        out = out * x + c
    return out


def _mult_at_one(a: tuple) -> tuple[int, tuple]:
    """Multiplicity of (v - 1) in a, plus the cofactor."""
    m = 0
    while a and peval(a, Fraction(1)) == 0:
        a = pdivexact(a, (-1, 1))
        m += 1
    return m, a


# ---------------------------------------------------------------------------

class QRat:
    """Canonical rational function in v."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=(1,)):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            self._hash = None
            return
        g = pgcd(num, den)
        if len(g) > 1:
            num = pdivexact(num, g)
            den = pdivexact(den, g)
        cn, cd = pcontent(num), pcontent(den)
        c = _igcd(cn, cd)
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        self.num, self.den = num, den
        self._hash = None

    # construction -----------------------------------------------------
    @staticmethod
    def from_int(k: int) -> "QRat":
        return QRat((k,))

    @staticmethod
    def from_fraction(x) -> "QRat":
        x = Fraction(x)
        return QRat((x.numerator,), (x.denominator,))

    @staticmethod
    def v_power(k: int) -> "QRat":
        if k >= 0:
            return QRat(pshift((1,), k))
        return QRat((1,), pshift((1,), -k))

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    __bool__ = lambda self: bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if self.den == other.den:
            return QRat(padd(self.num, other.num), self.den)
        return QRat(padd(pmul(self.num, other.den), pmul(other.num, self.den)),
                    pmul(self.den, other.den))

    def __neg__(self):
        q = QRat.__new__(QRat)
        q.num, q.den, q._hash = pneg(self.num), self.den, None
        return q

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.num or not other.num:
            return ZERO
        return QRat(pmul(self.num, other.num), pmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        if not self.num:
            return ZERO
        return QRat(pmul(self.num, other.den), pmul(self.den, other.num))

    def inverse(self) -> "QRat":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return QRat(self.den, self.num)

    def __pow__(self, k: int) -> "QRat":
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # coefficient symmetries ---------------------------------------------
    def substitute_inverse(self) -> "QRat":
        """Replace v by 1/v (so q by 1/q), re-canonicalized."""
        if not self.num:
            return ZERO
        dn, dd = len(self.num) - 1, len(self.den) - 1
        num = tuple(reversed(self.num))
        den = tuple(reversed(self.den))
        if dd >= dn:
            num = pshift(num, dd - dn)
        else:
            den = pshift(den, dn - dd)
        return QRat(num, den)

    def eval_at_one(self):
        """Order of vanishing at v=1 and the limit value when defined.

        Returns (order, value): order = mult_(v-1)(num) - mult_(v-1)(den);
        value is a Fraction when order >= 0 (0 for strictly positive order)
        and None for a pole.
        """
        if not self.num:
            return (0, Fraction(0))
        mn, rn = _mult_at_one(self.num)
        md, rd = _mult_at_one(self.den)
        order = mn - md
        if order < 0:
            return (order, None)
        if order > 0:
            return (order, Fraction(0))
        return (0, peval(rn, Fraction(1)) / peval(rd, Fraction(1)))

    def eval_at(self, x) -> Fraction:
        x = Fraction(x)
        d = peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError("pole at the evaluation point")
        return peval(self.num, x) / d

    # io ------------------------------------------------------------------
    def to_json(self, npow: int = 1) -> dict:
        return {"num": list(self.num), "den": list(self.den), "var": "v",
                "N": npow}

    @staticmethod
    def from_json(obj) -> "QRat":
        return QRat(tuple(obj["num"]), tuple(obj["den"]))

    def __repr__(self):
        return "QRat(%s)" % format_qrat(self, 1)


ZERO = QRat(())
ONE = QRat((1,))


def qvar(npow: int = 1) -> QRat:
    """The deformation parameter q = v**N."""
    return QRat.v_power(npow)


def q_power(exponent, npow: int = 1) -> QRat:
    """q**e as an element of Q(v); e may be a Fraction when N allows it."""
    e = Fraction(exponent) * npow
    if e.denominator != 1:
        raise ValueError(
            "q**%s is not an integral power of v at N=%d" % (exponent, npow))
    return QRat.v_power(e.numerator)


def qq_arith(a: QRat, b: QRat, op: str) -> QRat:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % (op,))


def qq_substitute_inverse(a: QRat) -> QRat:
    return a.substitute_inverse()


def qq_eval_at_one(a: QRat):
    return a.eval_at_one()


def q_int(m: int, d: int = 1, npow: int = 1) -> QRat:
    """Quantum integer [m] in q**d: (q**(dm) - q**(-dm)) / (q**d - q**(-d))."""
    if m == 0:
        return ZERO
    qd = q_power(d, npow)
    return (qd ** m - qd ** (-m)) / (qd - qd ** (-1))


def q_factorial(m: int, d: int = 1, npow: int = 1) -> QRat:
    out = ONE
    for k in range(2, m + 1):
        out = out * q_int(k, d, npow)
    return out


def gauss_binomial(m: int, k: int, d: int = 1, npow: int = 1) -> QRat:
    """Gaussian binomial [m choose k] in q**d, a symmetric Laurent polynomial."""
    if k < 0 or k > m:
        raise ValueError("gauss_binomial requires 0 <= k <= m")
    out = ONE
    for i in range(1, k + 1):
        out = out * q_int(m - k + i, d, npow) / q_int(i, d, npow)
    return out


# ---------------------------------------------------------------------------
# rendering

def _monomial_str(coef: int, power: int, sym: str) -> str:
    if power == 0:
        return str(coef)
    if power == 1:
        head = sym
    else:
        head = "%s^%d" % (sym, power)
    if coef == 1:
        return head
    if coef == -1:
        return "-" + head
    return "%d*%s" % (coef, head)


def _poly_str(p: tuple, shift: int, sym: str) -> str:
    terms = []
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            terms.append(_monomial_str(p[i], i + shift, sym))
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def format_qrat(x: QRat, npow: int = 1) -> str:
    """Render in q when every v-degree is a multiple of N, else in v."""
    if not x.num:
        return "0"
    # pull a denominator monomial v**k into negative powers of the numerator
    num, den = x.num, x.den
    nz = next(i for i, c in enumerate(den) if c)
    low = -nz
    if nz:
        den = den[nz:]

    def degrees(p, shift):
        return [i + shift for i, c in enumerate(p) if c]

    degs = degrees(num, low) + degrees(den, 0)
    if npow > 1 and all(d % npow == 0 for d in degs):
        sym, scale = "q", npow
    elif npow == 1:
        sym, scale = "q", 1
    else:
        sym, scale = "v", 1

    def render(p, shift):
        lo = min(degrees(p, shift))
        terms = {}
        for i, c in enumerate(p):
            if c:
                terms[(i + shift - lo)] = c
        out = [0] * (max(terms) + 1)
        for d, c in terms.items():
            out[d // scale if scale > 1 else d] = c
        return _poly_str(_trim(out), lo // scale if scale > 1 else lo, sym)

    top = render(num, low)
    bot = render(den, 0)
    if bot == "1":
        return top
    topp = top if ("+" not in top and " - " not in top) else "(%s)" % top
    botp = bot if ("+" not in bot and " - " not in bot and "^" not in bot
                   and "*" not in bot) else "(%s)" % bot
    return "%s/%s" % (topp, botp)

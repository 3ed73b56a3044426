"""Dense univariate polynomials over an exact field (or exact domain).

A polynomial is a coefficient tuple, index i holding the coefficient of t^i,
with the invariant that the last entry is nonzero; the zero polynomial has an
empty tuple and degree NEG_INFINITY (a real sentinel object, not a magic
integer).  The coefficient domain is carried explicitly as a field object
(QQ, PrimeField(p), a Tower, or PolyRing for bivariate resultant work), so the
same class serves every level of the engine.

Division, gcd and friends require the domain to be a field; ring-only
operations (+ - *, evaluation, resultants via the subresultant PRS) work over
any exact integral domain with exact division.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import DivisionByZeroPoly, ZeroPolynomial
from .numbers import QQ


class _NegInfinity:
    """Degree of the zero polynomial: less than every int, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return not isinstance(other, _NegInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInfinity)

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-oo"


class _Infinity:
    """Codegree of the zero polynomial: greater than every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "oo"


NEG_INFINITY = _NegInfinity()
INFINITY = _Infinity()


class Poly:
    __slots__ = ("dom", "coeffs")

    def __init__(self, dom, coeffs, normalize=True):
        if normalize:
            coeffs = [dom.coerce(c) for c in coeffs]
            while coeffs and not coeffs[-1]:
                coeffs.pop()
        self.dom = dom
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_coeffs(cls, dom, coeffs):
        """Build from low-to-high coefficient list (ints allowed)."""
        return cls(dom, list(coeffs))

    @classmethod
    def zero(cls, dom):
        return cls(dom, [], normalize=False)

    @classmethod
    def one(cls, dom):
        return cls(dom, [dom.one()], normalize=False)

    @classmethod
    def t(cls, dom):
        return cls(dom, [dom.zero(), dom.one()], normalize=False)

    @classmethod
    def constant(cls, dom, c):
        return cls(dom, [c])

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.dom.one()

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.dom.zero()

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.dom == other.dom and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dom, self.coeffs))

    # -- ring arithmetic ----------------------------------------------------

    def _coerce_operand(self, other):
        if isinstance(other, Poly):
            if other.dom != self.dom:
                raise ValueError("polynomials over different domains")
            return other
        return Poly(self.dom, [self.dom.coerce(other)])

    def __add__(self, other):
        other = self._coerce_operand(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.dom, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.dom, [-c for c in self.coeffs], normalize=False)

    def __sub__(self, other):
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other):
        return self._coerce_operand(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.dom.coerce(other)
            return Poly(self.dom, [c * a for a in self.coeffs])
        other = self._coerce_operand(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.dom)
        zero = self.dom.zero()
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(self.dom, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.dom)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c):
        c = self.dom.coerce(c)
        return Poly(self.dom, [c * a for a in self.coeffs])

    # -- division (field coefficients) --------------------------------------

    def __divmod__(self, other):
        other = self._coerce_operand(other)
        if other.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        dom = self.dom
        r = list(self.coeffs)
        dg = len(other.coeffs) - 1
        if len(r) - 1 < dg:
            return Poly.zero(dom), self
        inv_lc = dom.one() / other.lc()
        q = [dom.zero()] * (len(r) - dg)
        for i in range(len(r) - 1, dg - 1, -1):
            if not r[i]:
                continue
            c = r[i] * inv_lc
            q[i - dg] = c
            for j, g in enumerate(other.coeffs):
                r[i - dg + j] = r[i - dg + j] - c * g
        return Poly(dom, q), Poly(dom, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        if self.is_monic():
            return self
        inv = self.dom.one() / self.lc()
        return self.scale(inv)

    # -- calculus-flavoured operations ---------------------------------------

    def derivative(self) -> "Poly":
        dom = self.dom
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(dom.from_int(i) * self.coeffs[i])
        return Poly(dom, out)

    def eval(self, a):
        """Evaluate by Horner; `a` may live in an extension of the domain."""
        if not self.coeffs:
            return a * 0
        acc = self.coeffs[-1] + (a * 0)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * a + c
        return acc

    def shift(self, c) -> "Poly":
        """Substitute t = u + c, returning f(u + c) as a polynomial in u."""
        dom = self.dom
        c = dom.coerce(c)
        out = Poly.zero(dom)
        u_plus_c = Poly(dom, [c, dom.one()])
        for coeff in reversed(self.coeffs):
            out = out * u_plus_c + Poly.constant(dom, coeff)
        return out

    def compose(self, inner: "Poly") -> "Poly":
        out = Poly.zero(self.dom)
        for coeff in reversed(self.coeffs):
            out = out * inner + Poly.constant(self.dom, coeff)
        return out

    def map_domain(self, dom, convert):
        """Apply the coefficientwise homomorphism `convert` into `dom`."""
        return Poly(dom, [convert(c) for c in self.coeffs])

    # -- presentation ---------------------------------------------------------

    def sort_key(self):
        deg = -1 if self.is_zero() else len(self.coeffs) - 1
        return (deg, tuple(self.dom.sort_key(c) for c in reversed(self.coeffs)))

    def __repr__(self):
        return f"Poly({self.dom!r}, {render(self)!r})"

    def __str__(self):
        return render(self)


def codegree(f: Poly):
    """Least i with a nonzero coefficient of t^i; INFINITY for the zero poly."""
    for i, c in enumerate(f.coeffs):
        if c:
            return i
    return INFINITY


def gcd_ext(f: Poly, g: Poly):
    """Extended gcd over a field: returns (d, a, b) with d = a*f + b*g,
    d the monic generator of <f, g> (zero iff f = g = 0)."""
    dom = f.dom
    r0, r1 = f, g
    a0, a1 = Poly.one(dom), Poly.zero(dom)
    b0, b1 = Poly.zero(dom), Poly.one(dom)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if r0.is_zero():
        return r0, a0, b0
    inv = dom.one() / r0.lc()
    return r0.scale(inv), a0.scale(inv), b0.scale(inv)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over a field (zero iff both inputs are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def has_repeated_root(f: Poly) -> bool:
    """True iff f has a repeated root in its splitting field, detected as a
    nonconstant common factor of f and its formal derivative."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    d = poly_gcd(f, f.derivative())
    return d.degree >= 1


def squarefree_part(f: Poly) -> Poly:
    """The monic product of the distinct irreducible factors of f.

    In characteristic p, f / gcd(f, f') misses factors whose multiplicity is
    divisible by p (their derivative contribution vanishes), so the cofactor
    gcd(f, f') is processed recursively, with p-th-power deflation when the
    derivative is identically zero.
    """
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    g = f.monic()
    if g.degree <= 0:
        return Poly.one(g.dom)
    d = poly_gcd(g, g.derivative())
    if d.degree == 0:
        return g
    if d.degree == g.degree:
        # g is a polynomial in t^p (derivative vanished); over a finite
        # field g = h^p where h takes the p-th root of each coefficient.
        p = g.dom.characteristic
        h = Poly(
            g.dom,
            [g.dom.pth_root(g.coeff(i)) for i in range(0, len(g.coeffs), p)],
        )
        return squarefree_part(h)
    w = g.exact_div(d).monic()  # factors of multiplicity not divisible by p
    rest = squarefree_part(d)  # factors of multiplicity >= 2 or divisible by p
    return (w * rest.exact_div(poly_gcd(rest, w))).monic()


def content_primitive(f: Poly):
    """Split a nonzero rational polynomial as f = alpha * F with F a primitive
    integer polynomial whose leading coefficient is positive.

    Returns (alpha, F) with alpha a Fraction and F a low-to-high int list.
    """
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if f.dom != QQ:
        raise TypeError("content_primitive is defined over QQ")
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = _int_gcd(g, c)
    if ints[-1] < 0:
        g = -g
    prim = [c // g for c in ints]
    return Fraction(g, den), prim


def int_coeffs(f: Poly) -> list[int]:
    """Coefficients of a QQ polynomial as ints; raises if any is fractional."""
    out = []
    for c in f.coeffs:
        if c.denominator != 1:
            raise ValueError("polynomial does not have integer coefficients")
        out.append(int(c))
    return out


def from_int_coeffs(dom, coeffs) -> Poly:
    return Poly(dom, list(coeffs))


# -- resultants ---------------------------------------------------------------


def _shift_up(f: Poly, k: int) -> Poly:
    if f.is_zero() or k == 0:
        return f
    zero = f.dom.zero()
    return Poly(f.dom, [zero] * k + list(f.coeffs), normalize=False)


def _pseudo_rem(f: Poly, g: Poly) -> Poly:
    """Pseudo-remainder: remainder of lc(g)^(deg f - deg g + 1) * f by g,
    computed without any coefficient division (valid over a ring)."""
    lead = g.lc()
    dB = g.degree
    r = f
    scalings_left = f.degree - dB + 1
    while not r.is_zero() and r.degree >= dB:
        top = r.lc()
        shift = r.degree - dB
        r = r.scale(lead) - _shift_up(g, shift).scale(top)
        scalings_left -= 1
    if scalings_left > 0:
        r = r.scale(lead**scalings_left)
    return r


def resultant(f: Poly, g: Poly):
    """Resultant of two nonzero polynomials over an exact integral domain,
    via the subresultant polynomial remainder sequence (fraction-free).

    Equals det of the Sylvester matrix; the plain determinant is kept as an
    independent oracle in `sylvester_resultant`.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of zero polynomial")
    dom = f.dom
    one = dom.one()
    sign = one
    A, B = f, g
    if A.degree < B.degree:
        if (A.degree % 2) and (B.degree % 2):
            sign = -sign
        A, B = B, A
    if B.degree == 0:
        return sign * B.lc() ** A.degree
    g_, h_ = one, one
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        if (dA % 2) and (dB % 2):
            sign = -sign
        R = _pseudo_rem(A, B)
        A = B
        denom = g_ * h_**delta
        B = Poly(A.dom, [dom.exact_div(c, denom) for c in R.coeffs])
        g_ = A.lc()
        if delta == 0:
            pass  # h unchanged: h^(1-0) g^0 with previous h
        elif delta == 1:
            h_ = g_
        else:
            h_ = dom.exact_div(g_**delta, h_ ** (delta - 1))
        if B.is_zero():
            return dom.zero() if A.degree > 0 else sign * h_
        if B.degree == 0:
            dA = A.degree
            if dA == 0:
                return sign * B.lc()
            res = dom.exact_div(B.lc() ** dA, h_ ** (dA - 1))
            return sign * res


def sylvester_matrix(f: Poly, g: Poly):
    """The (m+n) x (m+n) Sylvester matrix of f (degree n) and g (degree m)."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("Sylvester matrix of zero polynomial")
    dom = f.dom
    n, m = f.degree, g.degree
    size = n + m
    zero = dom.zero()
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([zero] * i + fc + [zero] * (size - i - len(fc)))
    for i in range(n):
        rows.append([zero] * i + gc + [zero] * (size - i - len(gc)))
    return rows


def sylvester_resultant(f: Poly, g: Poly):
    """Resultant as a division-free determinant of the Sylvester matrix.

    Expansion over column subsets is exponential but division-free, so it
    works over any commutative ring: this is the test oracle for `resultant`.
    """
    rows = sylvester_matrix(f, g)
    dom = f.dom
    n = len(rows)
    if n == 0:
        return dom.one()

    from functools import lru_cache

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return dom.one()
        total = dom.zero()
        sign = 1
        for idx, col in enumerate(cols):
            a = rows[row][col]
            if a:
                rest = cols[:idx] + cols[idx + 1 :]
                term = a * minor(row + 1, rest)
                total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return minor(0, tuple(range(n)))


def discriminant(f: Poly):
    """(-1)^(n(n-1)/2) * Res(f, f') / lc(f) for nonconstant f over a field."""
    if f.degree < 1:
        raise ZeroPolynomial("discriminant needs a nonconstant polynomial")
    n = f.degree
    r = resultant(f, f.derivative())
    r = f.dom.exact_div(r, f.lc())
    if (n * (n - 1) // 2) % 2:
        r = -r
    return r


class PolyRing:
    """The ring R[t] as a coefficient domain, for bivariate resultant work.

    Elements are Poly values over `base`; this is an integral domain with
    exact division, not a field.
    """

    def __init__(self, base):
        self.base = base
        self.characteristic = base.characteristic

    def zero(self):
        return Poly.zero(self.base)

    def one(self):
        return Poly.one(self.base)

    def from_int(self, n):
        return Poly(self.base, [self.base.from_int(n)])

    def coerce(self, x):
        if isinstance(x, Poly) and x.dom == self.base:
            return x
        return Poly(self.base, [self.base.coerce(x)])

    def is_field(self):
        return False

    def exact_div(self, a, b):
        return a.exact_div(b)

    def sort_key(self, x):
        return x.sort_key()

    def element_str(self, x):
        return f"({render(x)})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.base == self.base

    def __hash__(self):
        return hash(("PolyRing", self.base))

    def __repr__(self):
        return f"PolyRing({self.base!r})"


# -- text rendering -----------------------------------------------------------


def render(f: Poly, var: str = "t") -> str:
    """Canonical text form a_n*t^n + ... + a_0 with exact coefficients."""
    if f.is_zero():
        return "0"
    dom = f.dom
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        cs = dom.element_str(c)
        compound = " " in cs
        if compound:
            cs = f"({cs})"
        negative = cs.startswith("-")
        if negative:
            cs = cs[1:]
        if i == 0:
            term = cs
        else:
            tp = var if i == 1 else f"{var}^{i}"
            term = tp if cs == "1" else f"{cs}*{tp}"
        if not parts:
            parts.append(("-" if negative else "") + term)
        else:
            parts.append(("- " if negative else "+ ") + term)
    return " ".join(parts)

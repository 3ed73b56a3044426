"""Towers of simple extensions K(a_1)...(a_k) over Q or F_p.

A Tower is an immutable chain: its `lower` field is either a base field
object (QQ / PrimeField) or another Tower, and `minpoly` is a monic
irreducible polynomial over that lower field.  Elements (`TowerElem`) are
fixed-length coefficient tuples over the lower level, always reduced mod the
level's minimal polynomial; level-0 coefficients are base scalars.  The
flattened coordinate vector over the base realizes the power-product basis,
which is what all the linear algebra (minimal polynomials, fixed fields,
subfield membership) runs on.

A Tower is itself a field object in the sense of `galoiskit.numbers`, so
`Poly` works over it unchanged; that is how factoring and splitting climb the
tower.
"""

from __future__ import annotations

import itertools

from .errors import (
    Budget,
    NotIrreducible,
    NotMonic,
    SearchExhausted,
    TowerMismatch,
    ZeroInverse,
)
from .linalg import invert, mat_mul_vec, solve
from .numbers import QQ, PrimeField
from .poly import Poly, gcd_ext

PRIMITIVE_SEARCH_BOUND = 8
ELEMENT_ENUM_BUDGET = 1 << 20


def is_base_field(dom) -> bool:
    return isinstance(dom, (type(QQ), PrimeField)) and not isinstance(dom, Tower)


class TowerElem:
    __slots__ = ("tower", "coeffs")

    def __init__(self, tower, coeffs):
        self.tower = tower
        self.coeffs = tuple(coeffs)  # length == tower.level_degree, reduced

    def _lift(self, other):
        """Coerce an operand into this element's tower, or return None."""
        try:
            return self.tower.coerce(other)
        except (TypeError, TowerMismatch, ValueError):
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return TowerElem(
            self.tower, [a + b for a, b in zip(self.coeffs, o.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.tower, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return TowerElem(
            self.tower, [a - b for a, b in zip(self.coeffs, o.coeffs)]
        )

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = self.tower
        prod = Poly(t.lower, self.coeffs) * Poly(t.lower, o.coeffs)
        return t._from_poly(prod % t.minpoly)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "TowerElem":
        """Inverse via the extended Euclidean algorithm mod the minpoly."""
        t = self.tower
        if not self:
            raise ZeroInverse("zero tower element")
        d, a, _ = gcd_ext(Poly(t.lower, self.coeffs), t.minpoly)
        if d.degree != 0:
            raise NotIrreducible("minpoly is not irreducible: found a zero divisor")
        return t._from_poly(a % t.minpoly)

    def __eq__(self, other):
        if isinstance(other, TowerElem) and other.tower == self.tower:
            return self.coeffs == other.coeffs
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.tower, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return self.tower.element_str(self)


class Tower:
    """One simple-extension level over `lower` (a base field or a Tower)."""

    def __init__(self, lower, minpoly: Poly, label: str, certify: bool = True):
        if not minpoly.is_monic():
            raise NotMonic("defining polynomial must be monic")
        if minpoly.degree < 1:
            raise NotIrreducible("defining polynomial must be nonconstant")
        if minpoly.dom != lower:
            raise TowerMismatch("defining polynomial must live over the lower level")
        if certify:
            from .factor import is_irreducible_over

            if not is_irreducible_over(minpoly, lower):
                raise NotIrreducible(f"{minpoly} is reducible over {lower!r}")
        self.lower = lower
        self.minpoly = minpoly
        self.label = label
        self.level_degree = minpoly.degree
        self.base = lower.base if isinstance(lower, Tower) else lower
        self.characteristic = self.base.characteristic
        self._n = self.level_degree * (
            lower.absolute_degree() if isinstance(lower, Tower) else 1
        )
        self._primitive = None
        self._gamma_basis = None

    # -- field-object protocol ------------------------------------------------

    def zero(self):
        return TowerElem(self, [self.lower.zero()] * self.level_degree)

    def one(self):
        z = self.lower.zero()
        return TowerElem(self, [self.lower.one()] + [z] * (self.level_degree - 1))

    def from_int(self, n: int):
        z = self.lower.zero()
        return TowerElem(self, [self.lower.from_int(n)] + [z] * (self.level_degree - 1))

    def coerce(self, x):
        if isinstance(x, TowerElem):
            if x.tower == self:
                return x
            if self._is_ancestor(x.tower):
                return self._embed_constant(x)
            raise TowerMismatch(f"element of {x.tower!r} is not in {self!r}")
        c = self.lower.coerce(x)  # scalars climb one level at a time
        z = self.lower.zero()
        return TowerElem(self, [c] + [z] * (self.level_degree - 1))

    def is_field(self):
        return True

    def exact_div(self, a, b):
        return a / b

    def sort_key(self, x):
        return tuple(self.base.sort_key(c) for c in self.flatten(x))

    def pth_root(self, x):
        """Unique p-th root in a finite tower (inverse Frobenius)."""
        p = self.characteristic
        if p == 0:
            raise TypeError("pth_root needs positive characteristic")
        return x ** (p ** (self.absolute_degree() - 1))

    # -- structure --------------------------------------------------------------

    def _is_ancestor(self, other) -> bool:
        cur = self.lower
        while isinstance(cur, Tower):
            if cur == other:
                return True
            cur = cur.lower
        return cur == other if not isinstance(other, Tower) else False

    def _embed_constant(self, x):
        z = self.lower.zero()
        if isinstance(self.lower, Tower):
            c = self.lower.coerce(x)
        else:
            c = self.lower.coerce(x)
        return TowerElem(self, [c] + [z] * (self.level_degree - 1))

    def _from_poly(self, poly: Poly) -> TowerElem:
        coeffs = list(poly.coeffs)
        z = self.lower.zero()
        coeffs += [z] * (self.level_degree - len(coeffs))
        return TowerElem(self, coeffs)

    def generator(self) -> TowerElem:
        z = self.lower.zero()
        o = self.lower.one()
        if self.level_degree == 1:
            return self._from_poly(-(self.minpoly.coeff(0)) + Poly.zero(self.lower))
        return TowerElem(self, [z, o] + [z] * (self.level_degree - 2))

    def chain(self):
        """Tower levels bottom-up."""
        levels = []
        cur = self
        while isinstance(cur, Tower):
            levels.append(cur)
            cur = cur.lower
        return list(reversed(levels))

    def generators(self):
        """Each level's generator, embedded into this (top) tower."""
        out = []
        for level in self.chain():
            out.append(self.coerce(level.generator()))
        return out

    def absolute_degree(self) -> int:
        return self._n

    def degree_over(self, sub) -> int:
        """Degree over an ancestor level (or the base)."""
        if sub == self:
            return 1
        d = 1
        cur = self
        while isinstance(cur, Tower):
            d *= cur.level_degree
            if cur.lower == sub:
                return d
            cur = cur.lower
        if cur == sub:
            return d
        raise TowerMismatch(f"{sub!r} is not a level of {self!r}")

    def adjoin(self, minpoly: Poly, label: str, certify: bool = True) -> "Tower":
        return Tower(self, minpoly, label, certify=certify)

    # -- coordinates ------------------------------------------------------------

    def flatten(self, x) -> list:
        """Coordinates of x in the power-product basis over the base field."""
        x = self.coerce(x)
        out = []
        for c in x.coeffs:
            if isinstance(self.lower, Tower):
                out.extend(self.lower.flatten(c))
            else:
                out.append(c)
        return out

    def unflatten(self, vec) -> TowerElem:
        m = self._n // self.level_degree
        coeffs = []
        for i in range(self.level_degree):
            chunk = vec[i * m : (i + 1) * m]
            if isinstance(self.lower, Tower):
                coeffs.append(self.lower.unflatten(chunk))
            else:
                coeffs.append(self.lower.coerce(chunk[0]))
        return TowerElem(self, coeffs)

    def try_lower_to_base(self, f: Poly):
        """Rewrite a polynomial over this tower as one over the base field,
        or return None if some coefficient is not a base scalar."""
        out = []
        for c in f.coeffs:
            flat = self.flatten(c)
            if any(flat[1:]):
                return None
            out.append(flat[0])
        return Poly(self.base, out)

    # -- minimal polynomials & primitive elements -------------------------------

    def min_poly_over_base(self, x) -> Poly:
        """Monic minimal polynomial of x over the base field: the first
        linear dependency among flattened powers 1, x, x^2, ..."""
        x = self.coerce(x)
        n = self._n
        powers = [self.one()]
        rows = [self.flatten(powers[0])]
        cur = self.one()
        for k in range(1, n + 1):
            cur = cur * x
            target = self.flatten(cur)
            # solve rows^T c = target (columns are the known powers)
            cols = [[rows[j][i] for j in range(k)] for i in range(n)]
            sol = solve(self.base, cols, target)
            if sol is not None:
                coeffs = [-c for c in sol] + [self.base.one()]
                return Poly(self.base, coeffs)
            rows.append(target)
            powers.append(cur)
        raise TowerMismatch("no linear dependency found (inconsistent tower)")

    def primitive_element(self):
        """A single generator gamma with base(gamma) = the whole tower,
        certified by deg(minpoly(gamma)) = [tower : base]; cached."""
        if self._primitive is not None:
            return self._primitive
        gens = self.generators()
        if len(gens) == 1:
            mp = self.min_poly_over_base(gens[0])
            self._primitive = (gens[0], mp)
            return self._primitive
        n = self._n
        k = len(gens)
        for bound in range(1, PRIMITIVE_SEARCH_BOUND + 1):
            sweep = [0]
            for c in range(1, bound + 1):
                sweep.extend((c, -c))
            for rest in itertools.product(sweep, repeat=k - 1):
                if max((abs(c) for c in rest), default=0) != bound and bound > 1:
                    continue
                gamma = gens[0]
                for c, g in zip(rest, gens[1:]):
                    if c:
                        gamma = gamma + g * self.from_int(c)
                mp = self.min_poly_over_base(gamma)
                if mp.degree == n:
                    self._primitive = (gamma, mp)
                    return self._primitive
        raise SearchExhausted("no primitive element found within coefficient bound")

    def _gamma_matrices(self):
        if self._gamma_basis is None:
            gamma, _ = self.primitive_element()
            n = self._n
            cols = []
            cur = self.one()
            for _ in range(n):
                cols.append(self.flatten(cur))
                cur = cur * gamma
            # matrix with columns = powers of gamma
            mat = [[cols[j][i] for j in range(n)] for i in range(n)]
            inv = invert(self.base, mat)
            self._gamma_basis = (mat, inv)
        return self._gamma_basis

    def express_in_primitive(self, x) -> Poly:
        """x as a base-coefficient polynomial in the primitive element."""
        _, inv = self._gamma_matrices()
        coords = mat_mul_vec(inv, self.flatten(x), self.base.zero())
        return Poly(self.base, coords)

    def eval_primitive_poly(self, f: Poly) -> TowerElem:
        """Evaluate a base-coefficient polynomial at the primitive element."""
        gamma, _ = self.primitive_element()
        return f.map_domain(self, self.coerce).eval(gamma)

    # -- enumeration (finite towers) ---------------------------------------------

    def elements(self, budget: int = ELEMENT_ENUM_BUDGET):
        if self.characteristic == 0:
            raise TypeError("cannot enumerate an infinite tower")
        q = self.characteristic**self._n
        if q > budget:
            raise Budget(f"enumerating {q} elements exceeds budget {budget}")
        base_elems = self.base.elements()
        out = []
        for vec in itertools.product(base_elems, repeat=self._n):
            out.append(self.unflatten(list(vec)))
        return out

    # -- presentation ---------------------------------------------------------

    def element_str(self, x) -> str:
        x = self.coerce(x)
        parts = []
        for i in range(len(x.coeffs) - 1, -1, -1):
            c = x.coeffs[i]
            if not c:
                continue
            cs = self.lower.element_str(c)
            compound = " " in cs
            if compound and i > 0:
                cs = f"({cs})"
            negative = cs.startswith("-") and not compound
            if negative:
                cs = cs[1:]
            if i == 0:
                term = cs
            else:
                power = self.label if i == 1 else f"{self.label}^{i}"
                term = power if cs == "1" else f"{cs}*{power}"
            if not parts:
                parts.append(("-" if negative else "") + term)
            else:
                parts.append(("- " if negative else "+ ") + term)
        if not parts:
            return "0"
        return " ".join(parts)

    def describe(self):
        """JSON-ready description: one {label, min_poly} entry per level."""
        return [
            {"label": level.label, "min_poly": str(level.minpoly)}
            for level in self.chain()
        ]

    def __repr__(self):
        base = "QQ" if self.base == QQ else f"F_{self.base.p}"
        labels = ", ".join(level.label for level in self.chain())
        return f"{base}({labels})"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tower):
            return NotImplemented
        return (
            self.level_degree == other.level_degree
            and self.lower == other.lower
            and self.minpoly.coeffs == other.minpoly.coeffs
        )

    def __hash__(self):
        return hash(("Tower", self.level_degree, self.lower, self.minpoly.coeffs))


def adjoin_root(field, minpoly: Poly, label: str, certify: bool = True):
    """Adjoin a root of a monic irreducible polynomial to a base field or
    tower; returns (new_tower, root)."""
    if isinstance(field, Tower):
        ext = field.adjoin(minpoly, label, certify=certify)
    else:
        ext = Tower(field, minpoly, label, certify=certify)
    return ext, ext.generator()


def tower_degree(field) -> int:
    """[field : base]; 1 for a bare base field."""
    return field.absolute_degree() if isinstance(field, Tower) else 1


def min_poly(field, x) -> Poly:
    """Monic minimal polynomial of x over the base of its field."""
    if isinstance(field, Tower):
        return field.min_poly_over_base(x)
    # a base scalar has minimal polynomial t - x
    x = field.coerce(x)
    return Poly(field, [-x, field.one()])


def contains(subspace_rref, field, x) -> bool:
    """Membership of x in a base-linear subspace of the tower, given the
    subspace by an RREF basis of flattened coordinate vectors."""
    from .linalg import in_row_space

    vec = field.flatten(x)
    return in_row_space(field.base, subspace_rref, vec)

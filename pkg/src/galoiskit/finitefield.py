"""GF(p^n): construction, Frobenius, subfield lattice, multiplicative structure.

Elements are coefficient tuples of ints mod p (length n) with arithmetic done
directly on the tuples against a precomputed reduction of the defining
polynomial; this flat representation keeps exhaustive verification loops
(Frobenius additivity, x^q = x sweeps) fast.  A single-level tower view over
F_p is available for interoperating with the splitting/Galois machinery.

The defining polynomial is the least monic irreducible of degree n in the
canonical order, so construction is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import Budget, NotADivisor, NotPrime
from .numbers import PrimeField, divisors, factor_integer, is_prime
from .poly import Poly
from .factor import is_irreducible_ff
from .tower import Tower

ELEMENT_BUDGET = 1 << 20


def find_irreducible(p: int, n: int, budget: int = ELEMENT_BUDGET) -> Poly:
    """Least monic irreducible of degree n over F_p in canonical order."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p**n > budget:
        raise Budget(f"field order {p}^{n} exceeds budget {budget}")
    F = PrimeField(p)
    if n == 1:
        return Poly.t(F)
    # canonical order: ascending (a_(n-1), ..., a_0)
    for high_to_low in itertools.product(range(p), repeat=n):
        cand = Poly(F, [F.from_int(c) for c in reversed(high_to_low)] + [F.one()])
        if is_irreducible_ff(cand):
            return cand
    raise NotPrime(f"no irreducible of degree {n} over F_{p}")  # unreachable


class GF:
    """The field of order p^n; elements are length-n tuples of ints mod p."""

    def __init__(self, p: int, n: int, modulus: Poly | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.n = n
        self.order = p**n
        if modulus is None:
            modulus = find_irreducible(p, n)
        self.modulus = modulus
        self._mod_ints = [c.r for c in modulus.coeffs]  # monic, length n+1
        self._tower = None

    # -- element helpers ------------------------------------------------------

    def zero(self):
        return (0,) * self.n

    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def gen(self):
        """The residue class of t (a root of the defining polynomial)."""
        if self.n == 1:
            # modulus is t: the generator is 0
            return (0,)
        return (0, 1) + (0,) * (self.n - 2)

    def elements(self):
        """All elements in canonical (ascending coordinate) order."""
        if self.order > ELEMENT_BUDGET:
            raise Budget(f"enumerating {self.order} elements")
        return [tuple(v) for v in itertools.product(range(self.p), repeat=self.n)]

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p = self.p
        n = self.n
        out = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        mod = self._mod_ints
        for i in range(2 * n - 2, n - 1, -1):
            c = out[i] % p
            if c:
                for j in range(n + 1):
                    out[i - n + j] -= c * mod[j]
            out[i] = 0
        return tuple(c % p for c in out[:n])

    def pow(self, a, e: int):
        result = self.one()
        base = a
        if e < 0:
            base = self.inv(a)
            e = -e
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)

    def scalar(self, c: int):
        return (c % self.p,) + (0,) * (self.n - 1)

    # -- structure -------------------------------------------------------------

    def frobenius(self, a):
        return self.pow(a, self.p)

    def tower(self) -> Tower:
        if self._tower is None:
            if self.n == 1:
                raise ValueError("GF(p, 1) is the prime field; no extension level")
            self._tower = Tower(
                PrimeField(self.p), self.modulus, "a", certify=False
            )
        return self._tower

    def to_tower_elem(self, a):
        t = self.tower()
        return t.unflatten([PrimeField(self.p).from_int(c) for c in a])

    def element_str(self, a) -> str:
        if self.n == 1:
            return str(a[0])
        return self.tower().element_str(self.to_tower_elem(a))

    def to_json(self):
        gen = multiplicative_generator(self)
        return {
            "p": self.p,
            "n": self.n,
            "order": self.order,
            "modulus": str(self.modulus),
            "subfield_orders": [self.p**m for m in divisors(self.n)],
            "generator": self.element_str(gen),
            "frobenius_order": frobenius_order(self),
        }

    def __repr__(self):
        return f"GF({self.p}^{self.n})"


def gf(p: int, n: int) -> GF:
    """The field of order p^n with the canonical defining polynomial."""
    return GF(p, n)


def frobenius(F: GF, a):
    """x -> x^p, the generator of the Galois group over F_p."""
    return F.frobenius(a)


def frobenius_order(F: GF) -> int:
    """Least m >= 1 with frobenius^m = id; equals n.

    Tested on the defining generator alpha alone: an automorphism fixing
    F_p and alpha pointwise fixes F_p(alpha), which is the whole field.
    """
    alpha = F.gen()
    y = F.frobenius(alpha)
    m = 1
    while y != alpha:
        y = F.frobenius(y)
        m += 1
        if m > F.n:
            raise RuntimeError("Frobenius order exceeded the field degree")
    return m


def unique_pth_root(F: GF, a):
    """The unique y with y^p = a (inverse of Frobenius): a^(p^(n-1))."""
    return F.pow(a, F.p ** (F.n - 1))


@dataclass
class SubfieldOfGF:
    m: int
    order: int
    elements: frozenset

    def __contains__(self, x):
        return x in self.elements


def subfields(F: GF, budget: int = ELEMENT_BUDGET):
    """One subfield per divisor m of n, realized as the fixed set of the
    m-th Frobenius power {a : a^(p^m) = a} (generated multiplicatively)."""
    if F.order > budget:
        raise Budget(f"field order {F.order} exceeds budget {budget}")
    out = []
    g = None
    for m in divisors(F.n):
        sub_order = F.p**m
        if m == F.n:
            elems = frozenset(F.elements())
        else:
            if g is None:
                g = multiplicative_generator(F)
            step = (F.order - 1) // (sub_order - 1)
            h = F.pow(g, step)
            members = {F.zero(), F.one()}
            cur = h
            while cur != F.one():
                members.add(cur)
                cur = F.mul(cur, h)
            elems = frozenset(members)
        if len(elems) != sub_order:
            raise RuntimeError("subfield has the wrong size")
        out.append((m, SubfieldOfGF(m, sub_order, elems)))
    return out


def multiplicative_generator(F: GF):
    """First element (canonical order) of multiplicative order p^n - 1,
    certified by checking x^((q-1)/l) != 1 for every prime l | q-1."""
    q1 = F.order - 1
    prime_divs = sorted(set(factor_integer(q1)))
    one = F.one()
    for a in F.elements():
        if not any(a) or a == one and q1 > 1:
            continue
        if all(F.pow(a, q1 // ell) != one for ell in prime_divs):
            return a
    if q1 == 1:
        return one
    raise RuntimeError("no multiplicative generator found")


def is_primitive_root(a: int, p: int) -> bool:
    """True iff a generates the multiplicative group mod the prime p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    a %= p
    if a == 0:
        return False
    for ell in sorted(set(factor_integer(p - 1))):
        if pow(a, (p - 1) // ell, p) == 1:
            return False
    return True


class FFGaloisGroup:
    """Gal(GF(p^n) : GF(p^m)) = C_(n/m), generated by the m-th Frobenius
    power; the concrete field is built lazily (only `apply` needs it)."""

    def __init__(self, p: int, n: int, m: int):
        self.p = p
        self.n = n
        self.m = m
        self._field = None

    @property
    def field(self) -> GF:
        if self._field is None:
            self._field = gf(self.p, self.n)
        return self._field

    @property
    def order(self) -> int:
        return self.n // self.m

    @property
    def type_name(self) -> str:
        return f"C{self.order}"

    def apply(self, k: int, a):
        """The k-th power of the generating automorphism x -> x^(p^m)."""
        return self.field.pow(a, self.p ** (self.m * (k % self.order)))

    def to_json(self):
        return {
            "p": self.p,
            "n": self.n,
            "m": self.m,
            "order": self.order,
            "type": self.type_name,
            "generator": f"frobenius^{self.m}",
        }


def gal_ff(p: int, n: int, m: int) -> FFGaloisGroup:
    """The (cyclic) Galois group of GF(p^n) over its subfield of order p^m."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n % m != 0:
        raise NotADivisor(f"{m} does not divide {n}")
    return FFGaloisGroup(p, n, m)

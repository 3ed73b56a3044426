"""Classical verdicts on top of the engine: solvability by radicals,
real-root counting, ruler-and-compass impossibility results.

Real roots are counted exactly by Sturm chains over the rationals, with signs
at +-infinity read off the leading coefficient and degree parity; no floating
point anywhere.  Solvability is decided by the cheapest sound route: the
prime-degree real-root criterion (giving S_p), the degree <= 4 rule, or an
explicit Galois group within the splitting cap.  Constructibility checks are
one-directional degree criteria: a non-power-of-2 degree refutes
constructibility, a power of 2 only leaves the necessary condition standing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import NotIrreducible, ZeroPolynomial
from .numbers import QQ, factor_integer, is_fermat_prime, is_prime
from .poly import Poly, discriminant, render, squarefree_part
from .factor import factor_over_extension, is_irreducible_q
from .galois import (
    automorphisms,
    derived_series,
    from_permutations,
    is_solvable,
    isomorphism_type,
    subgroups,
    subgroup_table,
)
from .splitting import SPLITTING_DEGREE_CAP, splitting_field_q
from .tower import adjoin_root

SOLVABLE = "solvable_by_radicals"
NOT_SOLVABLE = "not_solvable_by_radicals"
NOT_CONSTRUCTIBLE = "not_constructible"
NECESSARY_HOLDS = "necessary_condition_holds"


# ---------------------------------------------------------------------------
# Sturm chains
# ---------------------------------------------------------------------------


def sturm_chain(f: Poly):
    """The signed remainder chain of a squarefree rational polynomial."""
    chain = [f, f.derivative()]
    while chain[-1].degree >= 1:
        rem = chain[-2] % chain[-1]
        if rem.is_zero():
            break
        chain.append(-rem)
    return [g for g in chain if not g.is_zero()]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_at_infinity(f: Poly, positive: bool) -> int:
    s = _sign(f.lc())
    if not positive and f.degree % 2 == 1:
        s = -s
    return s


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: Poly) -> int:
    """Exact number of distinct real roots, via Sturm's theorem on the
    squarefree part, evaluated at -infinity and +infinity."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    if f.degree == 0:
        return 0
    sq = squarefree_part(f)
    chain = sturm_chain(sq)
    neg = _variations([_sign_at_infinity(g, positive=False) for g in chain])
    pos = _variations([_sign_at_infinity(g, positive=True) for g in chain])
    return neg - pos


def count_real_roots_in(f: Poly, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    sq = squarefree_part(f)
    chain = sturm_chain(sq)
    at_lo = _variations([_sign(g.eval(lo)) for g in chain])
    at_hi = _variations([_sign(g.eval(hi)) for g in chain])
    return at_lo - at_hi


# ---------------------------------------------------------------------------
# solvability by radicals
# ---------------------------------------------------------------------------


@dataclass
class SolvabilityVerdict:
    polynomial: Poly
    verdict: str
    evidence_kind: str  # "sp_criterion" | "degree_rule" | "group_computed"
    evidence: dict

    @property
    def solvable(self) -> bool:
        return self.verdict == SOLVABLE

    def to_json(self):
        return {
            "input": render(self.polynomial),
            "verdict": self.verdict,
            "evidence_kind": self.evidence_kind,
            "evidence_data": self.evidence,
            "axioms": [],
        }


def sp_criterion(f: Poly):
    """Some(p) iff deg f = p is prime, f is irreducible over Q, and f has
    exactly p - 2 distinct real roots; then Gal(f) = S_p."""
    if f.is_zero() or f.degree < 2:
        return None
    p = f.degree
    if not is_prime(p):
        return None
    try:
        cert = is_irreducible_q(f)
    except ZeroPolynomial:
        return None
    if not cert.irreducible:
        return None
    if count_real_roots(f) != p - 2:
        return None
    return p


def solvable_by_radicals(
    f: Poly, max_degree: int = SPLITTING_DEGREE_CAP
) -> SolvabilityVerdict:
    """Solvability verdict with re-checkable evidence.

    Route 1: the S_p criterion with p >= 5 refutes solvability outright.
    Route 2: degree <= 4 is always solvable (the group embeds in S_4).
    Route 3: build the Galois group within the cap and test its derived
    series.  DegreeCap propagates when no route applies."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    p = sp_criterion(f)
    if p is not None and p >= 5:
        return SolvabilityVerdict(
            f,
            NOT_SOLVABLE,
            "sp_criterion",
            {"prime": p, "real_roots": p - 2, "group": f"S{p}"},
        )
    if f.degree <= 4:
        return SolvabilityVerdict(
            f,
            SOLVABLE,
            "degree_rule",
            {"degree": f.degree, "reason": "group embeds in the solvable S4"},
        )
    sf = splitting_field_q(f, max_degree=max_degree)
    G = automorphisms(sf)
    series = [s.order for s in derived_series(G)]
    solvable = series[-1] == 1
    return SolvabilityVerdict(
        f,
        SOLVABLE if solvable else NOT_SOLVABLE,
        "group_computed",
        {
            "group_order": G.order,
            "group_type": isomorphism_type(G),
            "derived_series_orders": series,
        },
    )


def kummer_abelian_checks(max_n: int = 12, binomials=((2, 2), (3, 2), (4, 3))):
    """Abelian-Galois-group checks for t^n - 1 (n <= max_n) and, over the
    field generated by the relevant roots of unity, for t^n - a."""
    report = {"roots_of_unity": [], "binomials": []}
    for n in range(2, max_n + 1):
        f = Poly(QQ, [-1] + [0] * (n - 1) + [1])
        G = automorphisms(splitting_field_q(f))
        report["roots_of_unity"].append(
            {"n": n, "order": G.order, "abelian": G.group.is_abelian()}
        )
    from .correspondence import gal_over, subfield_generated_by

    for n, a in binomials:
        f = Poly(QQ, [-a] + [0] * (n - 1) + [1])
        sf = splitting_field_q(f)
        G = automorphisms(sf)
        nonzero = [r for r in sf.roots if r]
        base_root = nonzero[0]
        ratios = [r / base_root for r in nonzero]
        L = subfield_generated_by(sf, ratios)
        H = gal_over(L, G)
        table = subgroup_table(G, H)
        report["binomials"].append(
            {
                "n": n,
                "a": a,
                "order_over_unity_field": H.order,
                "abelian": table.is_abelian(),
            }
        )
    return report


# ---------------------------------------------------------------------------
# ruler and compass
# ---------------------------------------------------------------------------


@dataclass
class ConstructibilityVerdict:
    target: str
    degree: int
    verdict: str

    @property
    def constructible_refuted(self) -> bool:
        return self.verdict == NOT_CONSTRUCTIBLE

    def to_json(self):
        return {"target": self.target, "degree": self.degree, "verdict": self.verdict}


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def constructible_degree_check(m: Poly, target: str = "") -> ConstructibilityVerdict:
    """Degree criterion: a constructible coordinate has degree a power of 2
    over Q, so any other degree refutes constructibility (one direction
    only: a power of 2 proves nothing)."""
    cert = is_irreducible_q(m)
    if not cert.irreducible:
        raise NotIrreducible("the minimal polynomial must be irreducible")
    verdict = NECESSARY_HOLDS if _is_power_of_two(m.degree) else NOT_CONSTRUCTIBLE
    return ConstructibilityVerdict(target or render(m), m.degree, verdict)


def ngon_constructible(n: int) -> bool:
    """Gauss-Wantzel rule: the regular n-gon is constructible iff the odd
    part of n is a product of distinct Fermat primes."""
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    m = n
    while m % 2 == 0:
        m //= 2
    primes = factor_integer(m)
    return len(set(primes)) == len(primes) and all(is_fermat_prime(q) for q in primes)


def trisection_min_poly() -> Poly:
    """Minimal polynomial of cos(pi/9): t^3 - (3/4) t - 1/8, from the triple
    angle identity with cos(pi/3) = 1/2."""
    return Poly(QQ, [Fraction(-1, 8), Fraction(-3, 4), 0, 1])


def classic_problems():
    """The three ancient impossibility verdicts."""
    duplication = constructible_degree_check(
        Poly(QQ, [-2, 0, 0, 1]), target="duplicate the cube (cbrt 2)"
    )
    trisection = constructible_degree_check(
        trisection_min_poly(), target="trisect 60 degrees (cos(pi/9))"
    )
    return {
        "duplicate_cube": duplication.to_json(),
        "trisect_angle": trisection.to_json(),
        "square_circle": {
            "target": "square the circle (sqrt pi)",
            "verdict": NOT_CONSTRUCTIBLE,
            "axioms": ["pi is transcendental over Q (recorded axiom, not computed)"],
        },
        "axioms": ["pi is transcendental over Q"],
    }


# ---------------------------------------------------------------------------
# stretch: a quintic with group A5, without building the degree-60 tower
# ---------------------------------------------------------------------------


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    return rn * rn == n and rd * rd == d


def quintic_a5_certificate(f: Poly):
    """For an irreducible quintic with square discriminant whose stem-field
    quartic cofactor stays irreducible: Gal(f) has order 60, acts
    transitively, and is A5 (hence not solvable).

    The order argument: [Q(r1, r2) : Q] = 20 divides |Gal|, |Gal| divides
    120, and a square discriminant forces Gal inside A5, whose subgroup
    orders (computed from its table) do not include 20 -- so |Gal| = 60.
    """
    if f.degree != 5:
        raise ValueError("this certificate is for quintics")
    cert = is_irreducible_q(f)
    if not cert.irreducible:
        raise NotIrreducible("quintic must be irreducible")
    disc = discriminant(f)
    if not _is_rational_square(disc):
        return None
    T1, r1 = adjoin_root(QQ, f.monic(), "a", certify=False)
    lifted = f.monic().map_domain(T1, T1.coerce)
    t = Poly.t(T1)
    quartic = lifted.exact_div(t - Poly.constant(T1, r1))
    fact = factor_over_extension(quartic, T1)
    if not fact.is_irreducible():
        return None
    # |Gal| is divisible by [Q(r1, r2):Q] = 20 and lies inside A5
    a5, _ = from_permutations([(1, 2, 0, 3, 4), (0, 1, 3, 4, 2), (1, 0, 3, 2, 4)])
    a5_orders = sorted({h.order for h in subgroups(a5)})
    assert 20 not in a5_orders
    return {
        "order": 60,
        "type": "A5",
        "transitive": True,
        "solvable": is_solvable(a5),
        "discriminant": str(disc),
        "a5_subgroup_orders": a5_orders,
    }

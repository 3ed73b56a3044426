"""Splitting fields as explicit towers with all roots attached.

The construction is the classic induction: factor the polynomial over the
tower built so far, adjoin a root of the lowest-degree nonlinear irreducible
factor, and repeat until everything splits.  Each tower generator is by
construction one of the stored roots, which is what the automorphism
enumeration in `galoiskit.galois` relies on.

Before paying for a factorization over the extension, a cheap evaluation
pre-pass hunts for roots among products, ratios and powers of roots already
found (computed around the depressed-form center, so shifted binomials like
(t - c)^n + a are caught).  Any hit is certified by evaluation, so this is
purely a shortcut; the factor-and-adjoin loop is unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeCap, ZeroPolynomial
from .numbers import QQ, PrimeField
from .poly import Poly
from .factor import factor_ff, factor_over_extension, factor_q
from .tower import Tower, adjoin_root, tower_degree

SPLITTING_DEGREE_CAP = 24
_LABELS = "abcdefghijkl"


@dataclass
class SplittingField:
    field: object  # base field or Tower
    roots: list  # distinct roots, canonical order
    multiplicities: list
    source: Poly
    unit: object

    def degree(self) -> int:
        return tower_degree(self.field)

    def root_min_polys(self):
        from .tower import min_poly

        return [min_poly(self.field, r) for r in self.roots]

    def to_json(self):
        tower_desc = self.field.describe() if isinstance(self.field, Tower) else []
        return {
            "degree": self.degree(),
            "tower": tower_desc,
            "roots": [self._root_str(r) for r in self.roots],
            "multiplicities": list(self.multiplicities),
            "polynomial": str(self.source),
        }

    def _root_str(self, r):
        if isinstance(self.field, Tower):
            return self.field.element_str(r)
        return self.field.element_str(r)


def _root_sort_key(field, root):
    if isinstance(field, Tower):
        mp = field.min_poly_over_base(root)
        return (mp.degree, tuple(field.base.sort_key(c) for c in field.flatten(root)))
    return (1, field.sort_key(root))


def _candidate_roots(field, roots, center):
    """Cheap candidate roots: negations, pairwise products/ratios and small
    power combinations of the roots found so far, formed around `center`."""
    if not isinstance(field, Tower) or not roots:
        return []
    c = field.coerce(center)
    shifted = [r - c for r in roots]
    cands = []
    for s in shifted:
        cands.append(-s)
        cands.append(s * s)
    nonzero = [s for s in shifted if s]
    for i, si in enumerate(nonzero):
        for j, sj in enumerate(nonzero):
            if i == j:
                continue
            inv_j = sj.inv()
            cands.append(si * sj)
            cands.append(si * inv_j)
            cands.append(si * si * inv_j)
    seen = set()
    out = []
    for s in cands:
        v = s + c
        key = tuple(field.base.sort_key(x) for x in field.flatten(v))
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def _split_squarefree(sq: Poly, base, cap: int, labels=_LABELS):
    """Split a squarefree polynomial; returns (field, roots in found order)."""
    current = base
    rem = sq.monic()
    roots = []
    level = 0

    # depressed-form center: pre-pass combinations are formed around it
    if base == QQ and sq.degree >= 1:
        center = -sq.coeff(sq.degree - 1) / (QQ.from_int(sq.degree) * sq.lc())
    else:
        center = base.zero()

    while rem.degree > 0:
        if rem.degree == 1:
            roots.append(-rem.coeff(0) / rem.coeff(1))
            break

        # evaluation pre-pass over the current tower
        if isinstance(current, Tower) and current.characteristic == 0:
            progress = True
            while progress and rem.degree > 0:
                progress = False
                if rem.degree == 1:
                    roots.append(-rem.coeff(0) / rem.coeff(1))
                    rem = Poly.one(current)
                    break
                for cand in _candidate_roots(current, roots, center):
                    if not rem.eval(cand):
                        t = Poly.t(current)
                        rem = rem.exact_div(t - Poly.constant(current, cand))
                        roots.append(cand)
                        progress = True
                        break
        if rem.degree == 0:
            break

        # any nonlinear adjunction at least doubles the degree, so bail out
        # before paying for a factorization that cannot be used
        if (
            rem.degree >= 2
            and current.characteristic == 0
            and 2 * tower_degree(current) > cap
        ):
            raise DegreeCap(
                f"splitting degree would exceed cap {cap}", partial=current
            )

        if current == QQ:
            fact = factor_q(rem, max_degree=max(12, rem.degree))
        elif isinstance(current, PrimeField):
            fact = factor_ff(rem)
        else:
            fact = factor_over_extension(rem, current)

        nonlinear = []
        for g, _ in fact.factors:
            if g.degree == 1:
                roots.append(-g.coeff(0))
                rem = rem.exact_div(g)
            else:
                nonlinear.append(g)
        if not nonlinear:
            continue

        g = min(nonlinear, key=lambda h: h.sort_key())
        new_degree = tower_degree(current) * g.degree
        if new_degree > cap:
            raise DegreeCap(
                f"splitting degree would reach {new_degree} > cap {cap}",
                partial=current,
            )
        label = labels[level] if level < len(labels) else f"g{level}"
        level += 1
        current, alpha = adjoin_root(current, g, label, certify=False)
        roots = [current.coerce(r) for r in roots]
        rem = rem.map_domain(current, current.coerce)
        t = Poly.t(current)
        rem = rem.exact_div(t - Poly.constant(current, alpha))
        roots.append(alpha)
        center = current.coerce(center)

    return current, roots


def _build(f: Poly, base, factmethod, cap: int) -> SplittingField:
    if f.is_zero():
        raise ZeroPolynomial("splitting field of the zero polynomial")
    unit = f.lc()
    if f.degree == 0:
        return SplittingField(base, [], [], f, unit)
    fact = factmethod(f)
    sq = Poly.one(base)
    for g, _ in fact.factors:
        sq = sq * g
    field, roots = _split_squarefree(sq, base, cap)
    # multiplicity of a root = multiplicity of its irreducible factor
    mults = []
    for r in roots:
        m = None
        for g, mult in fact.factors:
            g_up = g.map_domain(field, field.coerce) if isinstance(field, Tower) else g
            if not g_up.eval(r):
                m = mult
                break
        if m is None:
            raise ZeroPolynomial("root does not belong to any factor")
        mults.append(m)
    order = sorted(range(len(roots)), key=lambda i: _root_sort_key(field, roots[i]))
    roots = [roots[i] for i in order]
    mults = [mults[i] for i in order]
    return SplittingField(field, roots, mults, f, unit)


def splitting_field_q(f: Poly, max_degree: int = SPLITTING_DEGREE_CAP) -> SplittingField:
    """The splitting field of a nonzero rational polynomial, as a tower whose
    generators are roots, with all distinct roots listed."""
    if f.dom != QQ:
        raise TypeError("splitting_field_q expects rational coefficients")
    return _build(f, QQ, lambda g: factor_q(g, max_degree=max(12, g.degree)), max_degree)


def splitting_field_fp(f: Poly, max_degree: int = SPLITTING_DEGREE_CAP) -> SplittingField:
    """The splitting field of a nonzero polynomial over F_p; the result is
    the field of order p^d with d the lcm of the irreducible factor degrees."""
    if not isinstance(f.dom, PrimeField):
        raise TypeError("splitting_field_fp expects prime-field coefficients")
    return _build(f, f.dom, factor_ff, max_degree)


def verify_splits(sf: SplittingField) -> bool:
    """Re-multiply the linear factors exactly and check minimality (every
    tower generator is one of the roots)."""
    field = sf.field
    if isinstance(field, Tower):
        target = sf.source.map_domain(field, field.coerce)
        t = Poly.t(field)
        prod = Poly.constant(field, field.coerce(sf.unit))
    else:
        target = sf.source
        t = Poly.t(field)
        prod = Poly.constant(field, field.coerce(sf.unit))
    for r, m in zip(sf.roots, sf.multiplicities):
        prod = prod * (t - Poly.constant(field, r)) ** m
    if prod != target:
        return False
    if isinstance(field, Tower):
        root_keys = {tuple(field.base.sort_key(c) for c in field.flatten(r)) for r in sf.roots}
        for g in field.generators():
            if tuple(field.base.sort_key(c) for c in field.flatten(g)) not in root_keys:
                return False
    return True

"""Why t^5 - 6t + 3 = 0 cannot be solved by radicals.

Three exact computations close the argument: the polynomial is irreducible
(an Eisenstein certificate at 3), it has exactly three real roots (a Sturm
chain, no floating point), and a prime-degree irreducible with exactly p - 2
real roots has Galois group S_p.  S5 is not solvable, so neither is the
polynomial.  For contrast, the same machinery shows the shifted binomial
(t - 123)^5 + 456 IS solvable: its group has order 20 with an abelian
derived series.
"""

from galoiskit import (
    QQ,
    Poly,
    count_real_roots,
    eisenstein,
    render,
    solvable_by_radicals,
    sp_criterion,
    sturm_chain,
)

f = Poly(QQ, [3, -6, 0, 0, 0, 1])
print(f"polynomial: {render(f)}")

p, c = eisenstein(f, shifts=[0])
print(f"irreducible by Eisenstein at p = {p} (shift {c})")

chain = sturm_chain(f)
print(f"Sturm chain has {len(chain)} entries; distinct real roots:",
      count_real_roots(f))

print("S_p criterion fires with p =", sp_criterion(f))

verdict = solvable_by_radicals(f)
print(f"verdict: {verdict.verdict}")
print(f"evidence: {verdict.evidence_kind} -> {verdict.evidence}")

print()
g = Poly(QQ, [-123, 1]) ** 5 + Poly(QQ, [456])
print(f"for contrast, {render(g)}:")
verdict = solvable_by_radicals(g)
print(f"verdict: {verdict.verdict}")
print(
    "group order", verdict.evidence["group_order"],
    "with derived series orders", verdict.evidence["derived_series_orders"],
)

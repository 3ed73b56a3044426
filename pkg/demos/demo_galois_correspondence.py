"""Walk the full Galois correspondence for t^4 - 2 over Q.

The splitting field is Q(xi, xi*i) of degree 8, the group is the dihedral
group D4, and the ten subgroups pair off exactly with the ten intermediate
fields.  This script builds everything and prints the lattice with degrees,
orders, normality flags, and the quotient by the centre.
"""

from galoiskit import (
    QQ,
    Poly,
    automorphisms,
    fixed_field,
    gal_over,
    is_normal_subgroup,
    isomorphism_type,
    quotient_check,
    render,
    splitting_field_q,
    subgroups,
    verify_correspondence,
)
from galoiskit.galois import cycle_notation

f = Poly(QQ, [-2, 0, 0, 0, 1])
print(f"polynomial: {render(f)}")

sf = splitting_field_q(f)
print(f"splitting field degree: {sf.degree()}")
for level in sf.field.describe():
    print(f"  adjoin {level['label']}: root of {level['min_poly']}")
print("roots:", ", ".join(sf.field.element_str(r) for r in sf.roots))

G = automorphisms(sf)
print(f"\nGalois group: order {G.order}, type {isomorphism_type(G)}")
for a in G.elements:
    print(f"  {cycle_notation(a.root_perm):>12}  on the roots")

print("\nsubgroup lattice <-> intermediate fields:")
subs = subgroups(G)
for H in subs:
    L = fixed_field(H, G)
    back = gal_over(L, G)
    flag = "normal" if is_normal_subgroup(H, G) else "      "
    print(
        f"  |H| = {H.order}  {flag}  Fix(H) has degree {L.dim} over Q, "
        f"primitive minpoly {render(L.min_poly_of_primitive)}, "
        f"Gal(M:Fix(H)) == H: {back.member_indices == H.member_indices}"
    )

report = verify_correspondence(sf, G)
print(f"\nmutually inverse across all {report['pair_count']} pairs:",
      report["mutually_inverse"])

centre = next(H for H in subs if H.order == 2 and is_normal_subgroup(H, G))
L = fixed_field(centre, G)
rep = quotient_check(L, G)
print(
    f"quotient by the centre: order {rep['quotient_order']}, "
    f"type {rep['quotient_type']} "
    f"(independent restriction count: {rep['restriction_order']})"
)

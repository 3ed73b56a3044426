"""Galois groups of splitting fields, with finite-group structure theory.

Automorphisms are enumerated by the recursive extension principle: the image
of each tower generator must be a stored root annihilating the mapped minimal
polynomial of that level.  Because the action on roots is faithful, the group
is carried as a table of root permutations (canonically sorted, identity
first); generator images are kept so automorphisms can be applied to
arbitrary field elements.

The group-theory layer (subgroup lattice by cyclic-seed join closure,
derived series, quotients, isomorphism fingerprinting) works on any finite
composition table, so it also serves abstract permutation groups in tests
and the quotient checks of the correspondence module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariant, NotASubgroup, OrderCap, TowerMismatch
from .poly import Poly
from .splitting import SplittingField
from .tower import Tower, TowerElem

SUBGROUP_ORDER_CAP = 60


# ---------------------------------------------------------------------------
# abstract finite groups presented by a composition table
# ---------------------------------------------------------------------------


class FiniteGroup:
    """A finite group given by its composition table; index 0 is the identity.
    table[i][j] = index of (element i) followed-after (element j), i.e. the
    composite "apply j, then i"."""

    def __init__(self, table):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)

    def inverse(self, i: int) -> int:
        for j in range(self.order):
            if self.table[i][j] == 0:
                return j
        raise InternalInvariant("element without inverse")

    def element_order(self, i: int) -> int:
        n = 1
        acc = i
        while acc != 0:
            acc = self.table[acc][i]
            n += 1
        return n

    def element_orders(self):
        return sorted(self.element_order(i) for i in range(self.order))

    def is_abelian(self) -> bool:
        t = self.table
        return all(
            t[i][j] == t[j][i] for i in range(self.order) for j in range(i)
        )

    def check_axioms(self) -> bool:
        t = self.table
        n = self.order
        if any(t[0][j] != j or t[j][0] != j for j in range(n)):
            return False
        for i in range(n):
            if not any(t[i][j] == 0 for j in range(n)):
                return False
        # associativity spot check is done in tests; full check is O(n^3)
        return True

    def generated_subgroup(self, gens):
        """Indices of the subgroup generated by `gens` (BFS closure)."""
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[g][x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)


def from_permutations(gens):
    """Close a set of permutations (tuples) under composition; returns
    (FiniteGroup, list of permutations in canonical order)."""
    if not gens:
        raise ValueError("need at least one permutation")
    k = len(gens[0])
    identity = tuple(range(k))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(k))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    perms = sorted(seen)
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms
    ]
    return FiniteGroup(table), perms


# ---------------------------------------------------------------------------
# automorphisms of a splitting field
# ---------------------------------------------------------------------------


@dataclass
class Automorphism:
    """A field automorphism over the base, as generator images plus the
    induced permutation of the stored roots."""

    generator_images: tuple  # image of each tower level's generator, bottom-up
    root_perm: tuple  # root i maps to root root_perm[i]

    def __repr__(self):
        return f"Automorphism({cycle_notation(self.root_perm)})"


class GaloisGroup:
    def __init__(self, sf: SplittingField, elements, table):
        self.sf = sf
        self.elements = elements  # Automorphism list, canonical order, id first
        self.group = FiniteGroup(table)
        self.order = self.group.order
        self._matrices = {}

    @property
    def table(self):
        return self.group.table

    def identity_index(self) -> int:
        return 0

    def apply(self, phi: Automorphism, x):
        return apply_automorphism(self.sf.field, phi, x)

    def matrix_of(self, i: int):
        """Matrix of element i on the flattened power-product basis (cached)."""
        if i not in self._matrices:
            field = self.sf.field
            n = field.absolute_degree() if isinstance(field, Tower) else 1
            if not isinstance(field, Tower):
                self._matrices[i] = [[field.one()]]
            else:
                cols = []
                zero = field.base.zero()
                for j in range(n):
                    vec = [zero] * n
                    vec[j] = field.base.one()
                    basis_elem = field.unflatten(vec)
                    cols.append(field.flatten(self.apply(self.elements[i], basis_elem)))
                self._matrices[i] = [
                    [cols[j][r] for j in range(n)] for r in range(n)
                ]
        return self._matrices[i]

    def to_json(self):
        return {
            "order": self.order,
            "type": isomorphism_type(self),
            "generators": [
                cycle_notation(self.elements[i].root_perm)
                for i in minimal_generators(self)
            ],
            "elements": [cycle_notation(a.root_perm) for a in self.elements],
            "action": [str(r) for r in self.sf.roots],
        }


def _apply_on_chain(chain, images, M, x):
    """Map x (living at some level of the chain, or a base scalar) through
    the partial assignment generator_k -> images[k]."""
    if not isinstance(x, TowerElem):
        return M.coerce(x)
    level = None
    for k, lvl in enumerate(chain):
        if lvl == x.tower:
            level = k
            break
    if level is None:
        raise TowerMismatch("element does not belong to the tower chain")
    img = images[level]
    acc = M.zero()
    power = M.one()
    for c in x.coeffs:
        acc = acc + _apply_on_chain(chain, images, M, c) * power
        power = power * img
    return acc


def apply_automorphism(field, phi: Automorphism, x):
    """Apply an automorphism to an arbitrary element of the splitting field."""
    if not isinstance(field, Tower):
        return field.coerce(x)
    chain = field.chain()
    x = field.coerce(x)
    return _apply_on_chain(chain, list(phi.generator_images), field, x)


def automorphisms(sf: SplittingField) -> GaloisGroup:
    """Enumerate Gal(M : base) for a splitting field M; the count must equal
    the tower degree (fields here are normal and separable)."""
    field = sf.field
    if not isinstance(field, Tower):
        ident = Automorphism((), tuple(range(len(sf.roots))))
        return GaloisGroup(sf, [ident], [[0]])

    chain = field.chain()
    roots = sf.roots
    assignments = []

    def extend(images):
        k = len(images)
        if k == len(chain):
            assignments.append(tuple(images))
            return
        level = chain[k]
        m = level.minpoly  # over chain[k-1] (or the base)
        # map the coefficients through the partial assignment
        mapped = [
            _apply_on_chain(chain, images, field, c) if isinstance(c, TowerElem) else field.coerce(c)
            for c in m.coeffs
        ]
        m_phi = Poly(field, mapped)
        for r in roots:
            if not m_phi.eval(r):
                extend(images + [r])

    extend([])

    ident_images = tuple(field.coerce(level.generator()) for level in chain)
    elems = []
    root_index = {
        tuple(field.base.sort_key(c) for c in field.flatten(r)): i
        for i, r in enumerate(roots)
    }
    for images in assignments:
        perm = []
        for r in roots:
            img = _apply_on_chain(chain, list(images), field, r)
            key = tuple(field.base.sort_key(c) for c in field.flatten(img))
            if key not in root_index:
                raise InternalInvariant("automorphism does not permute the roots")
            perm.append(root_index[key])
        if len(set(perm)) != len(perm):
            raise InternalInvariant("root action is not a permutation")
        elems.append(Automorphism(tuple(images), tuple(perm)))

    elems.sort(key=lambda a: a.root_perm)
    if elems[0].root_perm != tuple(range(len(roots))):
        raise InternalInvariant("identity automorphism missing")
    expected = field.absolute_degree()
    if len(elems) != expected:
        raise InternalInvariant(
            f"|Gal| = {len(elems)} but [M:K] = {expected}"
        )
    index = {a.root_perm: i for i, a in enumerate(elems)}
    k = len(roots)
    table = []
    for a in elems:
        row = []
        for b in elems:
            comp = tuple(a.root_perm[b.root_perm[i]] for i in range(k))
            row.append(index[comp])
        table.append(row)
    return GaloisGroup(sf, elems, table)


# ---------------------------------------------------------------------------
# action on roots
# ---------------------------------------------------------------------------


def orbits(G: GaloisGroup):
    """Partition of root indices under the group action."""
    k = len(G.sf.roots)
    seen = [False] * k
    parts = []
    for start in range(k):
        if seen[start]:
            continue
        orbit = set()
        frontier = [start]
        seen[start] = True
        while frontier:
            x = frontier.pop()
            orbit.add(x)
            for a in G.elements:
                y = a.root_perm[x]
                if not seen[y]:
                    seen[y] = True
                    frontier.append(y)
        parts.append(sorted(orbit))
    return parts


def is_transitive(G: GaloisGroup) -> bool:
    return len(orbits(G)) <= 1


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    member_indices: tuple  # sorted

    @property
    def order(self):
        return len(self.member_indices)

    def members(self):
        return frozenset(self.member_indices)


def _as_group(G):
    return G.group if isinstance(G, GaloisGroup) else G


def check_subgroup(H: Subgroup, G) -> bool:
    g = _as_group(G)
    mem = set(H.member_indices)
    if 0 not in mem:
        return False
    return all(g.table[a][b] in mem for a in mem for b in mem)


def subgroups(G, cap: int = SUBGROUP_ORDER_CAP):
    """The complete subgroup lattice: cyclic seeds closed under pairwise
    join, iterated to a fixed point; sorted by (order, members)."""
    g = _as_group(G)
    if g.order > cap:
        raise OrderCap(f"subgroup enumeration capped at order {cap}")
    found = set()
    for i in range(g.order):
        found.add(g.generated_subgroup([i]))
    changed = True
    while changed:
        changed = False
        current = sorted(found, key=lambda s: (len(s), sorted(s)))
        for i in range(len(current)):
            for j in range(i + 1, len(current)):
                a, b = current[i], current[j]
                if a <= b or b <= a:
                    continue
                join = g.generated_subgroup(a | b)
                if join not in found:
                    found.add(join)
                    changed = True
    out = [Subgroup(tuple(sorted(s))) for s in found]
    out.sort(key=lambda h: (h.order, h.member_indices))
    return out


def is_normal_subgroup(H: Subgroup, G) -> bool:
    g = _as_group(G)
    if not check_subgroup(H, G):
        raise NotASubgroup("member set is not a subgroup")
    mem = set(H.member_indices)
    for a in range(g.order):
        inv = g.inverse(a)
        for h in mem:
            if g.table[g.table[a][h]][inv] not in mem:
                return False
    return True


def commutator_subgroup(G, H: Subgroup) -> Subgroup:
    g = _as_group(G)
    mem = list(H.member_indices)
    comms = set()
    for a in mem:
        ia = g.inverse(a)
        for b in mem:
            ib = g.inverse(b)
            # a b a^-1 b^-1
            comms.add(g.table[g.table[g.table[a][b]][ia]][ib])
    return Subgroup(tuple(sorted(g.generated_subgroup(comms))))


def derived_series(G):
    """G >= G' >= G'' >= ... until stable."""
    g = _as_group(G)
    series = [Subgroup(tuple(range(g.order)))]
    while True:
        nxt = commutator_subgroup(G, series[-1])
        if nxt.member_indices == series[-1].member_indices:
            break
        series.append(nxt)
        if nxt.order == 1:
            break
    return series


def is_solvable(G) -> bool:
    return derived_series(G)[-1].order == 1


def subgroup_table(G, H: Subgroup):
    """The composition table of a subgroup, as its own FiniteGroup."""
    g = _as_group(G)
    mem = list(H.member_indices)
    pos = {m: i for i, m in enumerate(mem)}
    # reorder so identity (global index 0) is local index 0
    assert mem[0] == 0
    table = [[pos[g.table[a][b]] for b in mem] for a in mem]
    return FiniteGroup(table)


def quotient_group(G, N: Subgroup):
    """Quotient by a normal subgroup: (FiniteGroup, coset list)."""
    g = _as_group(G)
    nset = set(N.member_indices)
    cosets = []
    assigned = {}
    for a in range(g.order):
        if a in assigned:
            continue
        coset = frozenset(g.table[a][h] for h in nset)
        idx = len(cosets)
        cosets.append(coset)
        for x in coset:
            assigned[x] = idx
    # put the identity coset first
    id_idx = assigned[0]
    if id_idx != 0:
        cosets[0], cosets[id_idx] = cosets[id_idx], cosets[0]
        assigned = {x: i for i, c in enumerate(cosets) for x in c}
    reps = [min(c) for c in cosets]
    table = [
        [assigned[g.table[reps[i]][reps[j]]] for j in range(len(cosets))]
        for i in range(len(cosets))
    ]
    return FiniteGroup(table), cosets


# ---------------------------------------------------------------------------
# isomorphism types
# ---------------------------------------------------------------------------

_NONABELIAN_FINGERPRINTS = {
    (6, (1, 2, 2, 2, 3, 3)): "S3",
    (8, (1, 2, 2, 2, 2, 2, 4, 4)): "D4",
    (8, (1, 2, 4, 4, 4, 4, 4, 4)): "Q8",
    (12, (1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3)): "A4",
}


def isomorphism_type(G, cap: int = 120) -> str:
    """Name the isomorphism type from the fingerprint (order, abelian flag,
    element-order multiset); honest 'unidentified' otherwise."""
    g = _as_group(G)
    n = g.order
    if n > cap:
        raise OrderCap(f"type identification capped at order {cap}")
    orders = tuple(g.element_orders())
    if g.is_abelian():
        if orders[-1] == n:
            return f"C{n}"
        if n == 4:
            return "C2 x C2"
        return f"unidentified abelian group of order {n}"
    key = (n, orders)
    if key in _NONABELIAN_FINGERPRINTS:
        return _NONABELIAN_FINGERPRINTS[key]
    if n == 24 and orders.count(2) == 9 and orders.count(3) == 8 and orders.count(4) == 6:
        return "S4"
    if n == 60 and orders.count(2) == 15 and orders.count(3) == 20 and orders.count(5) == 24:
        return "A5"
    if (
        n == 120
        and orders.count(2) == 25
        and orders.count(3) == 20
        and orders.count(4) == 30
        and orders.count(5) == 24
        and orders.count(6) == 20
    ):
        return "S5"
    return f"unidentified group of order {n}"


def minimal_generators(G):
    """A small generating set of element indices (greedy)."""
    g = _as_group(G)
    gens = []
    span = g.generated_subgroup([])
    for i in sorted(range(g.order), key=lambda j: -g.element_order(j)):
        if i in span:
            continue
        gens.append(i)
        span = g.generated_subgroup(gens)
        if len(span) == g.order:
            break
    return gens


def cycle_notation(perm) -> str:
    """(0 1 2)-style cycle notation, 1-based for presentation."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        parts.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) if parts else "()"

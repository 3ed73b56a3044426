"""Exact linear algebra over a field object (QQ, F_p, or a tower).

Matrices are lists of row lists of field elements.  Everything pivots with
exact field division, so results are exact for Fraction, FpElem and tower
scalars alike.  Used for minimal polynomials (first linear dependency among
powers), fixed-field kernels, and subspace membership.
"""

from __future__ import annotations


def rref(field, rows):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one() / rows[r][c]
        rows[r] = [inv * v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + rows[r:], pivots


def row_space_basis(field, rows):
    """Canonical (RREF, zero rows dropped) basis of the row space."""
    reduced, pivots = rref(field, rows)
    return [reduced[i] for i in range(len(pivots))]


def in_row_space(field, basis_rref, vec):
    """Membership test against an RREF basis: reduce vec and check for zero."""
    v = list(vec)
    for row in basis_rref:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is not None and v[lead]:
            factor = v[lead]
            v = [a - factor * b for a, b in zip(v, row)]
    return not any(v)


def nullspace(field, rows, ncols=None):
    """Basis of {x : A x = 0} as a list of vectors (RREF-canonical)."""
    if ncols is None:
        if not rows:
            raise ValueError("nullspace of empty matrix needs ncols")
        ncols = len(rows[0])
    reduced, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    zero, one = field.zero(), field.one()
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i][fc]
        basis.append(v)
    return basis


def solve(field, rows, rhs):
    """One solution x of A x = b, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    zero = field.zero()
    x = [zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = reduced[i][ncols]
    return x


def mat_mul_vec(rows, vec, zero):
    out = []
    for row in rows:
        acc = zero
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def identity(field, n):
    zero, one = field.zero(), field.one()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def invert(field, rows):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(r) + list(e) for r, e in zip(rows, identity(field, n))]
    reduced, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        return None
    return [reduced[i][n:] for i in range(n)]

"""Small exact dense linear algebra over a coefficient field.

Matrices are lists of row lists of field elements.  Everything here runs at
fixture sizes (tens of rows), so clarity beats asymptotics.
"""

from __future__ import annotations


def rref(rows, field):
    """Reduced row echelon form.  Returns (new_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c] != field.zero:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != field.zero:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, field) -> int:
    return len(rref(rows, field)[1])


def kernel_basis(rows, field):
    """Basis of the right null space of the matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(red[r][fc])
        basis.append(vec)
    return basis


def solve(rows, rhs, field):
    """One solution of ``rows @ x = rhs`` or None when inconsistent."""
    if not rows:
        return None if any(v != field.zero for v in rhs) else []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None  # pivot in the augmented column
    x = [field.zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def mat_vec(rows, vec, field):
    out = []
    for r in rows:
        acc = field.zero
        for a, b in zip(r, vec):
            if a != field.zero and b != field.zero:
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out

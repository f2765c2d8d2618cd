"""Coordinates and quadratic relations for the Grassmannian of planes in P^5.

The embedding uses the 20 coordinates ``X_abc`` (0 <= a < b < c <= 5) and
the quadratic exchange relations among them; the variety has projective
dimension 9 inside P^19.  Also provides the hyperbolic change of basis
``u/v`` and the sixteen ``w`` forms used by the bundle construction, plus a
ten-form linear subspace disjoint from the variety.
"""

from __future__ import annotations

import itertools

from .polynomials import PolyRing, Polynomial

TRIPLES = tuple(itertools.combinations(range(6), 3))
VAR_NAMES = tuple("X" + "".join(map(str, t)) for t in TRIPLES)
_INDEX = {t: i for i, t in enumerate(TRIPLES)}


def _sign_of_sort(seq):
    """Sign of the permutation sorting seq; 0 when entries repeat."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, ()
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                seq[i], seq[j] = seq[j], seq[i]
                sign = -sign
    return sign, tuple(seq)


def coordinate(ring: PolyRing, a: int, b: int, c: int) -> Polynomial:
    """The (signed, possibly zero) coordinate X_abc for arbitrary indices."""
    sign, sorted_t = _sign_of_sort((a, b, c))
    if sign == 0:
        return ring.zero()
    var = ring.var(_INDEX[sorted_t])
    return var if sign == 1 else -var


def make_ring(field, order=None) -> PolyRing:
    from .polynomials import GREVLEX

    return PolyRing(VAR_NAMES, field, order or GREVLEX)


def exchange_relations(ring: PolyRing) -> list[Polynomial]:
    """A maximal linearly independent set of the quadratic exchange
    relations: exactly 35 quadrics cutting out the Grassmannian."""
    seen = {}
    for j0, j1 in itertools.combinations(range(6), 2):
        for ls in itertools.combinations(range(6), 4):
            rel = ring.zero()
            for s in range(4):
                rest = ls[:s] + ls[s + 1:]
                term = coordinate(ring, j0, j1, ls[s]) * coordinate(ring, *rest)
                rel = rel + term if s % 2 == 0 else rel - term
            if rel.is_zero():
                continue
            rel = rel.monic()
            seen[rel.terms] = rel
    candidates = sorted(
        seen.values(), key=lambda p: ring.key(p.lead_monomial()), reverse=True
    )
    # drop relations lying in the span of the ones already kept
    field = ring.field
    monomials: dict = {}
    echelon: list = []  # rows over the quadric monomial basis, with pivot index
    kept = []
    for rel in candidates:
        vec: dict = {}
        for m, c in rel.terms:
            col = monomials.setdefault(m, len(monomials))
            vec[col] = c
        for pivot, row in echelon:
            if pivot in vec:
                f = vec[pivot]
                for col, c in row.items():
                    v = field.sub(vec.get(col, field.zero), field.mul(f, c))
                    if v == field.zero:
                        vec.pop(col, None)
                    else:
                        vec[col] = v
        if not vec:
            continue
        pivot = min(vec)
        inv = field.inv(vec[pivot])
        echelon.append((pivot, {col: field.mul(c, inv) for col, c in vec.items()}))
        kept.append(rel)
    return kept


def _complement(a: int, b: int):
    rest = [i for i in range(1, 6) if i not in (a, b)]
    return tuple(rest)


def u_form(ring: PolyRing, a: int, b: int) -> Polynomial:
    i1, i2, i3 = _complement(a, b)
    return coordinate(ring, 0, a, b) + coordinate(ring, i1, i2, i3)


def v_form(ring: PolyRing, a: int, b: int) -> Polynomial:
    i1, i2, i3 = _complement(a, b)
    return coordinate(ring, 0, a, b) - coordinate(ring, i1, i2, i3)


def w_forms(ring: PolyRing) -> list[Polynomial]:
    """The sixteen linear forms with empty common zero locus on the
    Grassmannian: u_23..u_45 then v_12..v_45."""
    pairs = [(a, b) for a, b in itertools.combinations(range(1, 6), 2)]
    ws = [u_form(ring, a, b) for (a, b) in pairs if (a, b) != (1, 2) and a != 1]
    # u_23, u_24, u_25, u_34, u_35, u_45 -- the six pairs not involving 1
    vs = [v_form(ring, a, b) for (a, b) in pairs]
    return ws + vs


def disjoint_subspace_forms(ring: PolyRing) -> list[Polynomial]:
    """Ten linear forms cutting a P^9 disjoint from the Grassmannian."""
    X = lambda a, b, c: coordinate(ring, a, b, c)
    return [
        X(0, 1, 2) - X(3, 4, 5),
        X(0, 1, 3) - X(2, 4, 5),
        X(0, 1, 4) - X(2, 3, 5),
        X(0, 1, 5) - X(2, 3, 4),
        X(0, 2, 3) - X(1, 4, 5),
        X(0, 2, 4) - X(1, 3, 5),
        X(0, 2, 5) - X(0, 3, 4),
        X(0, 3, 5) - X(1, 2, 3),
        X(0, 4, 5) + X(1, 3, 4) + X(1, 2, 4),
        X(0, 4, 5) + 2 * X(1, 3, 4) - 3 * X(1, 2, 4) - 5 * X(1, 2, 5)
        + 7 * X(0, 1, 2) + 11 * X(0, 1, 3),
    ]


def banded_column_matrix(forms, nrows: int):
    """(len(forms)+k-1) x k matrix with ``forms`` descending down each
    column, columns shifted one row down each -- the left-hand block shape."""
    k = nrows
    h = len(forms)
    ring = forms[0].ring
    zero = ring.zero()
    out = []
    for i in range(h + k - 1):
        row = []
        for j in range(k):
            d = i - j
            row.append(forms[h - 1 - d] if 0 <= d < h else zero)
        out.append(row)
    return out


def banded_row_matrix(forms, nrows: int):
    """nrows x (len(forms)+nrows-1) matrix with ``forms`` running along each
    row, rows shifted one column right each -- the right-hand block shape."""
    h = len(forms)
    ring = forms[0].ring
    zero = ring.zero()
    out = []
    for i in range(nrows):
        row = []
        for j in range(h + nrows - 1):
            d = j - i
            row.append(forms[d] if 0 <= d < h else zero)
        out.append(row)
    return out


def bundle_monad_matrices(ring: PolyRing, k: int):
    """The (2k+14)-middle-term monad pair on the Grassmannian: A is
    (2k+14) x k stacking -A2 over A1, B is k x (2k+14) joining B1 | B2."""
    ws = w_forms(ring)
    w_lo, w_hi = ws[:8], ws[8:]
    a1 = banded_column_matrix(w_lo, k)
    a2 = banded_column_matrix(w_hi, k)
    b1 = banded_row_matrix(w_lo, k)
    b2 = banded_row_matrix(w_hi, k)
    A = [[-e for e in row] for row in a2] + a1
    B = [row1 + row2 for row1, row2 in zip(b1, b2)]
    return A, B

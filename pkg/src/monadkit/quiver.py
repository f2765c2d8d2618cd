"""Constant-matrix quiver representations of monads and weight stability.

A monad with degree-d entries expands over a chosen basis of degree-d
forms into tuples of constant matrices (A_i, B_j), one pair per basis
form.  The complex condition becomes the symmetric relation
B_i A_j + B_j A_i = 0.  Stability of the resulting three-vertex
representation is tested against a weight triple by King's pairing
inequalities over a supplied (or enumerated) set of subrepresentation
dimension vectors.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import RefusalError, StructureError
from .fields import GF, QQ
from .linalg import solve
from .polynomials import Polynomial

SUBREP_ENUM_MAX_B = 6


class DimVector(NamedTuple):
    a: int
    b: int
    c: int


class LambdaWeight(NamedTuple):
    l1: int
    l2: int
    l3: int


@dataclass(frozen=True)
class QuiverRep:
    """Dimension vector plus the two families of arrow matrices.

    ``A_mats[i]`` is b x a, ``B_mats[i]`` is c x b, one per basis form.
    """

    dims: DimVector
    A_mats: tuple
    B_mats: tuple
    field: object

    def __post_init__(self):
        a, b, c = self.dims
        if len(self.A_mats) != len(self.B_mats):
            raise StructureError("need equally many left and right matrices")
        for m in self.A_mats:
            if a and (len(m) != b or any(len(r) != a for r in m)):
                raise StructureError("left matrices must be b x a")
        for m in self.B_mats:
            if c and (len(m) != c or any(len(r) != b for r in m)):
                raise StructureError("right matrices must be c x b")

    @property
    def arrows(self) -> int:
        return len(self.A_mats)


# ---------------------------------------------------------------------------
# extraction from a monad

def _expand_in_basis(entries, basis, field):
    """Coefficient vectors of polynomial entries over a form basis."""
    monomials: dict = {}
    for g in basis:
        for m, _ in g.terms:
            monomials.setdefault(m, len(monomials))
    for e in entries:
        for m, _ in e.terms:
            if m not in monomials:
                raise StructureError(f"entry {e} lies outside the basis span")
    rows = len(monomials)
    mat = [[field.zero] * len(basis) for _ in range(rows)]
    for j, g in enumerate(basis):
        for m, c in g.terms:
            mat[monomials[m]][j] = c
    out = []
    for e in entries:
        rhs = [field.zero] * rows
        for m, c in e.terms:
            rhs[monomials[m]] = c
        sol = solve(mat, rhs, field)
        if sol is None:
            raise StructureError(f"entry {e} lies outside the basis span")
        out.append(sol)
    return out


def monad_to_rep(M, basis: Sequence[Polynomial]) -> QuiverRep:
    """Expand a monad's matrices over a basis of degree-d forms.

    Requires the basis forms to be linearly independent and every matrix
    entry to lie in their span.
    """
    field = M.variety.ring.field
    basis = list(basis)
    if not basis:
        raise StructureError("empty basis")
    for g in basis:
        if g.homogeneous_degree() != M.d:
            raise StructureError(f"basis form {g} is not homogeneous of degree {M.d}")
    probe = _expand_in_basis(basis, basis, field)
    for j, row in enumerate(probe):
        expect = [field.one if i == j else field.zero for i in range(len(basis))]
        if row != expect:
            raise StructureError("basis forms are linearly dependent")

    k = len(basis)
    a, b, c = M.a, M.b, M.c
    A_entries = [e for row in M.A for e in row]
    B_entries = [e for row in M.B for e in row]
    A_coeffs = _expand_in_basis(A_entries, basis, field) if A_entries else []
    B_coeffs = _expand_in_basis(B_entries, basis, field) if B_entries else []

    A_mats = []
    B_mats = []
    for i in range(k):
        if a:
            mat = tuple(
                tuple(A_coeffs[r * a + s][i] for s in range(a)) for r in range(b)
            )
        else:
            mat = ()
        A_mats.append(mat)
        if c:
            mat = tuple(
                tuple(B_coeffs[r * b + s][i] for s in range(b)) for r in range(c)
            )
        else:
            mat = ()
        B_mats.append(mat)
    return QuiverRep(DimVector(a, b, c), tuple(A_mats), tuple(B_mats), field)


def assemble_matrices(R: QuiverRep, basis: Sequence[Polynomial]):
    """Rebuild the polynomial matrices sum A_i * basis_i, sum B_i * basis_i."""
    if len(basis) != R.arrows:
        raise StructureError("basis length must match the arrow count")
    ring = basis[0].ring
    a, b, c = R.dims

    def build(mats, rows, cols):
        out = []
        for r in range(rows):
            row = []
            for s in range(cols):
                acc = ring.zero()
                for i, g in enumerate(basis):
                    coeff = mats[i][r][s]
                    if coeff != ring.field.zero:
                        acc = acc + g.scale(coeff)
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    A = build(R.A_mats, b, a) if a else ()
    B = build(R.B_mats, c, b) if c else ()
    return A, B


# ---------------------------------------------------------------------------
# the symmetric relation

def _const_matmul(X, Y, field):
    if not X or not Y:
        return ()
    out = []
    for row in X:
        new = []
        for j in range(len(Y[0])):
            acc = field.zero
            for k2 in range(len(Y)):
                acc = field.add(acc, field.mul(row[k2], Y[k2][j]))
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def _mat_add(X, Y, field):
    return tuple(
        tuple(field.add(x, y) for x, y in zip(rx, ry)) for rx, ry in zip(X, Y)
    )


def relation_residuals(R: QuiverRep):
    """Map (i, j) -> B_i A_j + B_j A_i for i <= j; empty matrices omitted."""
    field = R.field
    a, b, c = R.dims
    out = {}
    if not a or not c:
        return out
    for i in range(R.arrows):
        for j in range(i, R.arrows):
            s = _mat_add(
                _const_matmul(R.B_mats[i], R.A_mats[j], field),
                _const_matmul(R.B_mats[j], R.A_mats[i], field),
                field,
            )
            out[(i, j)] = s
    return out


def check_relation(R: QuiverRep) -> bool:
    """True iff B_i A_j + B_j A_i = 0 for all i <= j."""
    zero = R.field.zero
    for s in relation_residuals(R).values():
        if any(v != zero for row in s for v in row):
            return False
    return True


def rep_mod2(R: QuiverRep) -> QuiverRep:
    """Reduce a representation to GF(2) coefficients, using balanced
    integer representatives over GF(p) (denominators must be odd over Q)."""
    field = R.field
    gf2 = GF(2)

    def red(v) -> int:
        if isinstance(field, GF):
            return field.balanced(v) % 2
        if v.denominator % 2 == 0:
            raise StructureError(f"even denominator in {v}; no mod-2 reduction")
        return v.numerator % 2

    def redmat(m):
        return tuple(tuple(red(v) for v in row) for row in m)

    return QuiverRep(
        R.dims,
        tuple(redmat(m) for m in R.A_mats),
        tuple(redmat(m) for m in R.B_mats),
        gf2,
    )


# ---------------------------------------------------------------------------
# GF(2) subrepresentation enumeration

def _gf2_rref_spaces(n: int):
    """All subspaces of GF(2)^n as (rows, pivots) in reduced echelon form;
    vectors are bitmask ints, bit 0 = first coordinate."""
    yield (), ()
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            free_cells = []
            pivot_set = set(pivots)
            for i, p in enumerate(pivots):
                for j in range(p + 1, n):
                    if j not in pivot_set:
                        free_cells.append((i, j))
            for bits in range(1 << len(free_cells)):
                rows = [1 << p for p in pivots]
                for idx, (i, j) in enumerate(free_cells):
                    if bits >> idx & 1:
                        rows[i] |= 1 << j
                yield tuple(rows), pivots


def _in_span(v: int, rows, pivots) -> bool:
    for r, p in zip(rows, pivots):
        if v >> p & 1:
            v ^= r
    return v == 0


def _row_masks(mat, ncols):
    """Matrix over GF(2) as per-row bitmasks (bit j = column j)."""
    out = []
    for row in mat:
        m = 0
        for j, v in enumerate(row):
            if v:
                m |= 1 << j
        out.append(m)
    return out


def enumerate_subreps(R: QuiverRep, max_b: int = SUBREP_ENUM_MAX_B):
    """All dimension vectors of subrepresentation triples (U1, U2, U3) with
    A_i(U1) inside U2 and B_j(U2) inside U3, over GF(2).

    Exhaustive over the middle subspace; the admissible outer dimensions
    form intervals, since any sub/superspace of a valid U1/U3 again works.
    Refuses middle dimension above ``max_b`` to keep the subspace count
    enumerable.
    """
    if R.field != GF(2):
        raise StructureError("enumeration runs over GF(2); reduce the rep first")
    a, b, c = R.dims
    if b > max_b:
        raise RefusalError(f"middle dimension {b} exceeds the enumeration cap {max_b}")

    A_rows = [_row_masks(m, a) for m in R.A_mats]  # each: b rows of a-bit masks
    B_rows = [_row_masks(m, b) for m in R.B_mats]  # each: c rows of b-bit masks

    def apply_masks(rows, v):
        out = 0
        for j, mask in enumerate(rows):
            if (mask & v).bit_count() & 1:
                out |= 1 << j
        return out

    # images of every nonzero U1 vector under every arrow, precomputed
    a_images = {
        v: [apply_masks(rows, v) for rows in A_rows] for v in range(1, 1 << a)
    }

    result = set()
    for rows, pivots in _gf2_rref_spaces(b):
        dim2 = len(rows)
        # largest valid U1: all v whose every image lies in U2
        good = 1
        for v in range(1, 1 << a):
            imgs = a_images[v]
            ok = True
            for img in imgs:
                if not _in_span(img, rows, pivots):
                    ok = False
                    break
            if ok:
                good += 1
        d1max = good.bit_length() - 1  # solution set is a subspace
        # smallest valid U3: span of all images of U2 basis vectors
        w_rows: list = []
        w_pivots: list = []
        for u in rows:
            for brows in B_rows:
                img = apply_masks(brows, u)
                for r, p2 in zip(w_rows, w_pivots):
                    if img >> p2 & 1:
                        img ^= r
                if img:
                    p2 = (img & -img).bit_length() - 1
                    w_rows.append(img)
                    w_pivots.append(p2)
        wdim = len(w_rows)
        for d1 in range(d1max + 1):
            for d3 in range(wdim, c + 1):
                result.add(DimVector(d1, dim2, d3))
    return tuple(sorted(result))


# ---------------------------------------------------------------------------
# King weight stability

@dataclass(frozen=True)
class KingVerdict:
    semistable: bool
    stable: bool
    violator: Optional[DimVector] = None

    def as_dict(self):
        return {
            "semistable": self.semistable,
            "stable": self.stable,
            "violator": None if self.violator is None else list(self.violator),
        }


def _dot(lam, d) -> int:
    return lam[0] * d[0] + lam[1] * d[1] + lam[2] * d[2]


def king_semistable(d, lam, subdims) -> KingVerdict:
    """King's inequalities: the weight must pair to zero with the full
    dimension vector and nonnegatively with every subrepresentation's;
    stability requires strict positivity away from 0 and the full vector."""
    d = DimVector(*d)
    lam = LambdaWeight(*lam)
    subs = sorted(DimVector(*s) for s in subdims)
    zero = DimVector(0, 0, 0)
    if zero not in subs or d not in subs:
        raise StructureError("subdims must contain (0,0,0) and the full vector")
    if _dot(lam, d) != 0:
        return KingVerdict(False, False, d)
    for s in subs:
        if _dot(lam, s) < 0:
            return KingVerdict(False, False, s)
    stable = all(_dot(lam, s) > 0 for s in subs if s not in (zero, d))
    return KingVerdict(True, stable, None)


def find_lambda(d, subdims, bound: int) -> Optional[LambdaWeight]:
    """Exhaustive search over weights in [-bound, bound]^3 for one making
    the dimension vector stable (hence semistable); smallest in
    lexicographic order, or None.

    The zero weight makes every vector vacuously semistable, so the
    meaningful question is strict positivity on the proper nonzero
    subrepresentation vectors; a complementary pair in ``subdims`` rules
    every weight out.
    """
    if bound < 1:
        raise StructureError("bound must be at least 1")
    for lam in itertools.product(range(-bound, bound + 1), repeat=3):
        if king_semistable(d, lam, subdims).stable:
            return LambdaWeight(*lam)
    return None


# ---------------------------------------------------------------------------
# presets

_PRESET_RE = re.compile(r"c1-k(\d+)$")


def preset_subdims(name: str):
    """Named subrepresentation dimension sets.

    ``c1-k<k>`` is the hand-derived admissible set for the (1, 2k+2, 1)
    instanton-type shape: the middle space of a proper subrepresentation
    with trivial left part has dimension 2k+1 or 2k+2 and full right part.
    """
    m = _PRESET_RE.match(name)
    if not m:
        raise StructureError(f"unknown preset {name!r}")
    k = int(m.group(1))
    if k < 1:
        raise StructureError("preset needs k >= 1")
    return (
        DimVector(0, 0, 0),
        DimVector(0, 2 * k + 1, 1),
        DimVector(0, 2 * k + 2, 1),
        DimVector(1, 2 * k + 2, 1),
    )

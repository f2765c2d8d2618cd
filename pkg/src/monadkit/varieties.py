"""Projective varieties and the geometric predicates the theorems need.

A variety is held as an ambient dimension N plus a homogeneous ideal; its
Groebner basis and projective dimension are computed once at construction
and cached.  Emptiness-style predicates go through the affine cone
dimension, which is correct over the algebraic closure: affine dimension
<= 0 means no points over any field extension, even when the ground field
(GF(p) or the rationals) is not closed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .errors import RefusalError, SearchError, StructureError
from .fields import GF
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    hilbert_value,
    krull_dimension,
    normal_form,
)
from .linalg import rank as mat_rank
from .polynomials import PolyRing, Polynomial

import math


class ProjectivePoint:
    """A point of P^N, normalized so its first nonzero coordinate is 1."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords: Sequence):
        vals = [field.coerce(c) for c in coords]
        pivot = next((i for i, v in enumerate(vals) if v != field.zero), None)
        if pivot is None:
            raise StructureError("projective point needs a nonzero coordinate")
        inv = field.inv(vals[pivot])
        self.field = field
        self.coords = tuple(field.mul(v, inv) for v in vals)

    def __eq__(self, other):
        return (
            isinstance(other, ProjectivePoint)
            and other.field == self.field
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return "(" + ":".join(str(self.field.balanced(c)) for c in self.coords) + ")"


class ProjectiveVariety:
    """X' in P^N: ambient dimension, homogeneous ideal, cached basis and
    projective dimension n, plus user-asserted embedding properties."""

    def __init__(self, N: int, ideal: Ideal, gb: GroebnerBasis, n: int,
                 name: str = "", assertions: Optional[dict] = None):
        self.N = N
        self.ideal = ideal
        self.ring = ideal.ring
        self.gb = gb
        self.n = n
        self.name = name
        self.assertions = dict(assertions or {})

    def __eq__(self, other):
        return (
            isinstance(other, ProjectiveVariety)
            and other.N == self.N
            and other.ideal == self.ideal
        )

    def __hash__(self):
        return hash((self.N, self.ideal.gens))

    def __repr__(self):
        label = self.name or "variety"
        return f"<{label}: n={self.n} in P^{self.N} over {self.ring.field}>"


def make_variety(N: int, gens: Sequence[Polynomial], name: str = "",
                 assertions: Optional[dict] = None) -> ProjectiveVariety:
    """Validate and build a variety; rejects inhomogeneous generators and
    ideals cutting out the empty set."""
    if N < 1:
        raise StructureError("ambient dimension must be at least 1")
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise StructureError("a variety needs at least one nonzero generator")
    ring = gens[0].ring
    if ring.nvars != N + 1:
        raise StructureError(f"P^{N} needs {N + 1} variables, ring has {ring.nvars}")
    for g in gens:
        if g.homogeneous_degree() is None:
            raise StructureError(f"inhomogeneous generator: {g}")
    ideal = Ideal.of(ring, gens)
    gb = buchberger(ideal)
    dim = krull_dimension(gb)
    if dim <= 0:
        raise StructureError("ideal cuts out the empty projective set")
    return ProjectiveVariety(N, ideal, gb, dim - 1, name, assertions)


def contains_point(V: ProjectiveVariety, P: ProjectivePoint) -> bool:
    """True iff every generator vanishes at the point."""
    f = V.ring.field
    return all(g.evaluate(P.coords) == f.zero for g in V.ideal.gens)


def contained_in_quadric(V: ProjectiveVariety) -> bool:
    """True iff some nonzero quadric vanishes on the variety, read off the
    degree-2 value of the Hilbert function."""
    full = math.comb(V.N + 2, 2)
    return hilbert_value(V.gb, 2) < full


def subspace_disjoint(V: ProjectiveVariety, forms: Sequence[Polynomial]) -> bool:
    """True iff the linear subspace cut by the forms misses the variety:
    the joint affine cone has dimension <= 0 (only the origin)."""
    for form in forms:
        if form.homogeneous_degree() != 1:
            raise StructureError(f"not a linear form: {form}")
    gb = buchberger(V.ideal.plus(forms))
    return krull_dimension(gb) <= 0


def find_disjoint_subspace(V: ProjectiveVariety, m: int, seed: int,
                           budget: int = 200) -> list[Polynomial]:
    """m linearly independent linear forms whose zero subspace misses the
    variety, found by seeded random search over small integer coefficients.

    A subspace of codimension m has dimension N - m, and it can only avoid
    an n-dimensional variety when (N - m) + n < N; hence m >= n + 1 is
    required, and m cannot exceed N + 1 independent forms.
    """
    ring, f = V.ring, V.ring.field
    if m <= V.n:
        raise RefusalError(
            f"impossible: a codimension-{m} subspace always meets a "
            f"{V.n}-dimensional variety in P^{V.N}"
        )
    if m > V.N + 1:
        raise RefusalError(f"cannot pick {m} independent forms in P^{V.N}")
    rng = random.Random(seed)
    nv = ring.nvars
    for _ in range(budget):
        coeffs = [[rng.randint(-5, 5) for _ in range(nv)] for _ in range(m)]
        rows = [[f.coerce(c) for c in row] for row in coeffs]
        if mat_rank(rows, f) != m:
            continue
        forms = [
            sum((ring.var(i) * c for i, c in enumerate(row) if c), ring.zero())
            for row in coeffs
        ]
        if subspace_disjoint(V, forms):
            return forms
    raise SearchError(f"no disjoint subspace found for m={m} within {budget} tries")


# ---------------------------------------------------------------------------
# exact finite-locus certification

def vanishing_forms(ring: PolyRing, points: Sequence[ProjectivePoint],
                    max_degree: int = 2) -> list[Polynomial]:
    """Basis of all forms of degree <= max_degree vanishing at every point,
    computed as an evaluation kernel degree by degree."""
    from .linalg import kernel_basis

    f = ring.field
    out = []
    for d in range(1, max_degree + 1):
        monos = []
        for combo in itertools.combinations_with_replacement(range(ring.nvars), d):
            exp = [0] * ring.nvars
            for i in combo:
                exp[i] += 1
            monos.append(tuple(exp))
        rows = []
        for pt in points:
            row = []
            for mexp in monos:
                v = f.one
                for x, e in zip(pt.coords, mexp):
                    if e:
                        v = f.mul(v, f.pow(x, e))
                row.append(v)
            rows.append(row)
        for vec in kernel_basis(rows, f):
            terms = {m: c for m, c in zip(monos, vec) if c != f.zero}
            out.append(Polynomial(ring, terms))
    return out


def cut_out_exactly(ideal: Ideal, points: Sequence[ProjectivePoint],
                    max_power: int = 16) -> bool:
    """Certify that the projective vanishing set of the ideal is EXACTLY the
    given finite point list, over the algebraic closure.

    The certificate has three parts:
      1. every listed point satisfies every generator (containment);
      2. the forms of degree <= 2 through the points cut out exactly that
         point set: their ideal's Hilbert function stabilizes at the number
         of points (so no extra closure point survives);
      3. each such form has a power lying in the ideal (membership by
         normal form), which traps the vanishing set inside the point set.
    """
    ring = ideal.ring
    f = ring.field
    pts = list(points)
    if not pts:
        raise StructureError("empty point list; use a dimension check instead")
    if len({p.coords for p in pts}) != len(pts):
        raise StructureError("listed points must be distinct")
    for p in pts:
        if any(g.evaluate(p.coords) != f.zero for g in ideal.gens):
            return False

    cutters = vanishing_forms(ring, pts, max_degree=2)
    gb_cut = buchberger(Ideal.of(ring, cutters))
    want = len(pts)
    if any(hilbert_value(gb_cut, d) != want for d in (3, 4, 5)):
        raise RefusalError(
            "point set is too degenerate for the degree-2 certificate"
        )

    gb = buchberger(ideal)
    for g in cutters:
        power = g
        for _ in range(max_power):
            if normal_form(power, gb).is_zero():
                break
            power = power * g
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# point sampling (used for witnesses and consistency spot checks)

def small_point_candidates(ring: PolyRing, radius: int = 1):
    """All projective points with coordinates in [-radius, radius],
    normalized; only sensible for few variables."""
    f = ring.field
    vals = list(range(-radius, radius + 1))
    seen = set()
    for combo in itertools.product(vals, repeat=ring.nvars):
        if all(v == 0 for v in combo):
            continue
        pt = ProjectivePoint(f, combo)
        if pt.coords not in seen:
            seen.add(pt.coords)
            yield pt


def diagonal_quadric_coefficients(V: ProjectiveVariety):
    """If the variety is a single diagonal quadric sum(a_i x_i^2), return
    the coefficient list, else None."""
    if len(V.ideal.gens) != 1:
        return None
    g = V.ideal.gens[0]
    f = V.ring.field
    coeffs = [f.zero] * V.ring.nvars
    for m, c in g.terms:
        if sum(m) != 2 or max(m) != 2:
            return None
        coeffs[m.index(2)] = c
    if any(c == f.zero for c in coeffs):
        return None
    return coeffs


def sample_quadric_point(V: ProjectiveVariety, rng: random.Random,
                         budget: int = 200) -> Optional[ProjectivePoint]:
    """Random point on a diagonal quadric over GF(p), solving the last
    coordinate by a square root; None when not applicable or unlucky."""
    f = V.ring.field
    if not isinstance(f, GF):
        return None
    coeffs = diagonal_quadric_coefficients(V)
    if coeffs is None:
        return None
    n = len(coeffs)
    for _ in range(budget):
        head = [rng.randrange(f.p) for _ in range(n - 1)]
        rest = f.zero
        for a, x in zip(coeffs, head):
            rest = f.add(rest, f.mul(a, f.mul(x, x)))
        target = f.div(f.neg(rest), coeffs[-1])
        root = f.sqrt(target)
        if root is None:
            continue
        coords = head + [root]
        if any(c != f.zero for c in coords):
            return ProjectivePoint(f, coords)
    return None

"""Groebner bases and the ideal-theoretic queries built on them.

Buchberger's algorithm with the two classical pair-elimination criteria
(coprime lead terms, and the chain criterion in Gebauer-Moeller form) and
sugar-degree pair selection.  The reduced basis is unique for a given
(ideal, order), so recomputation and generator shuffling reproduce it
exactly.

Derived queries: normal forms / ideal membership, Krull dimension of the
quotient (combinatorial rule on the lead-term ideal), pointwise Hilbert
function values (standard-monomial counts), and determinantal minor
ideals for rank-degeneracy loci.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import RefusalError, StructureError
from .polynomials import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_degree,
    mono_divides,
    mono_lcm,
)

MINORS_CAP = 3432  # refuse matrices with more t-minors than this


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal in a polynomial ring."""

    ring: PolyRing
    gens: tuple

    def __post_init__(self):
        for g in self.gens:
            if g.ring != self.ring:
                raise StructureError("ideal generator lives in a different ring")

    @staticmethod
    def of(ring: PolyRing, gens: Sequence[Polynomial]) -> "Ideal":
        return Ideal(ring, tuple(gens))

    def plus(self, extra: Sequence[Polynomial]) -> "Ideal":
        return Ideal(self.ring, self.gens + tuple(extra))


class GroebnerBasis:
    """A reduced Groebner basis: monic leads, no lead divides another,
    every tail monomial reduced.  Elements are sorted by descending lead."""

    __slots__ = ("ring", "order", "elements", "_reducers")

    def __init__(self, ring: PolyRing, elements: Sequence[Polynomial]):
        self.ring = ring
        self.order = ring.order
        self.elements = tuple(
            sorted(elements, key=lambda p: ring.key(p.lead_monomial()), reverse=True)
        )
        self._reducers = None

    def lead_monomials(self):
        return [p.lead_monomial() for p in self.elements]

    def is_unit_ideal(self) -> bool:
        return any(p.total_degree() == 0 for p in self.elements)

    def reducers(self):
        if self._reducers is None:
            self._reducers = _make_reducers(self.elements, self.ring)
        return self._reducers

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((self.ring, self.elements))


# ---------------------------------------------------------------------------
# reduction engine (dict-of-monomials representation)

def _make_reducers(polys, ring):
    """Pack polynomials for the division loop: (lead, deg, inv_lc, tail)."""
    field = ring.field
    out = []
    for p in polys:
        if p.is_zero():
            continue
        lead, lc = p.terms[0]
        out.append((lead, sum(lead), field.inv(lc), p.terms[1:]))
    return out


def _nf_dict(poly: dict, reducers, ring) -> dict:
    """Full normal form of a {monomial: coeff} dict against packed reducers."""
    from operator import add, sub

    key = ring.key
    p = ring.field.char
    work = dict(poly)
    remainder = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        dm = sum(m)
        hit = None
        for lead, dlead, inv, tail in reducers:
            if dlead > dm:
                continue
            for x, y in zip(m, lead):
                if x < y:
                    break
            else:
                hit = (lead, inv, tail)
                break
        if hit is None:
            remainder[m] = c
            continue
        lead, inv, tail = hit
        shift = tuple(map(sub, m, lead))
        get = work.get
        if p:
            factor = c * inv % p
            for mm, cc in tail:
                m2 = tuple(map(add, mm, shift))
                v = (get(m2, 0) - factor * cc) % p
                if v:
                    work[m2] = v
                else:
                    work.pop(m2, None)
        else:
            factor = c * inv
            for mm, cc in tail:
                m2 = tuple(map(add, mm, shift))
                v = get(m2, 0) - factor * cc
                if v:
                    work[m2] = v
                else:
                    work.pop(m2, None)
    return remainder


def normal_form(p: Polynomial, basis) -> Polynomial:
    """Remainder of ``p`` on division by the basis; no remaining monomial is
    divisible by any basis lead.  ``p`` is in the ideal iff the result is 0."""
    if isinstance(basis, GroebnerBasis):
        ring = basis.ring
        if p.ring != ring:
            raise StructureError("polynomial and basis live in different rings")
        reducers = basis.reducers()
    else:
        ring = p.ring
        reducers = _make_reducers([q for q in basis if not q.is_zero()], ring)
    if p.is_zero() or not reducers:
        return p
    return Polynomial(ring, _nf_dict(p.as_dict(), reducers, ring))


def _interreduce(polys, ring):
    """Mutually reduce a generating set; returns monic polynomials with
    pairwise non-dividing leads and reduced tails."""
    survivors = []
    for q in sorted(polys, key=lambda p: ring.key(p.lead_monomial())):
        r = _nf_dict(q.as_dict(), _make_reducers(survivors, ring), ring)
        if r:
            survivors.append(Polynomial(ring, r).monic())
    # backward passes until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(survivors)):
            others = survivors[:i] + survivors[i + 1:]
            r = _nf_dict(survivors[i].as_dict(), _make_reducers(others, ring), ring)
            rp = Polynomial(ring, r)
            if rp != survivors[i]:
                changed = True
                if rp.is_zero():
                    survivors = others
                else:
                    survivors = others + [rp.monic()]
                break
    return survivors


def buchberger(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal for the given (or ring) order."""
    ring = ideal.ring
    gens = [g for g in ideal.gens if not g.is_zero()]
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = [Polynomial(ring, g.as_dict()) for g in gens]
    if not gens:
        return GroebnerBasis(ring, ())

    basis = _interreduce(gens, ring)
    if any(p.total_degree() == 0 for p in basis):
        return GroebnerBasis(ring, (ring.one(),))

    field = ring.field
    key = ring.key
    leads = []
    tails = []
    sugars = []
    heap: list = []
    alive = set()

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def push_pair(i, j):
        L = mono_lcm(leads[i], leads[j])
        sug = max(
            sugars[i] + mono_degree(L) - mono_degree(leads[i]),
            sugars[j] + mono_degree(L) - mono_degree(leads[j]),
        )
        alive.add((i, j))
        heapq.heappush(heap, (sug, key(L), i, j))

    def add_element(p: Polynomial, sugar: int):
        t = len(leads)
        lt = p.lead_monomial()
        # chain criterion: drop old pairs whose lcm the new lead strictly refines
        for (i, j) in list(alive):
            L = mono_lcm(leads[i], leads[j])
            if (
                mono_divides(lt, L)
                and mono_lcm(leads[i], lt) != L
                and mono_lcm(leads[j], lt) != L
            ):
                alive.discard((i, j))
        # new pairs, grouped by lcm (Gebauer-Moeller M/F/B filters)
        lcms: dict = {}
        for i in range(t):
            lcms.setdefault(mono_lcm(leads[i], lt), []).append(i)
        keep = []
        for L in lcms:
            if any(L2 != L and mono_divides(L2, L) for L2 in lcms):
                continue
            keep.append(L)
        leads.append(lt)
        tails.append(p.terms[1:])
        sugars.append(sugar)
        for L in sorted(keep, key=key):
            cls = lcms[L]
            if any(coprime(leads[i], lt) for i in cls):
                continue
            push_pair(min(cls), t)

    for p in sorted(basis, key=lambda q: key(q.lead_monomial())):
        add_element(p, p.total_degree())

    while heap:
        sug, _, i, j = heapq.heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        from operator import add as _add, sub as _sub

        L = mono_lcm(leads[i], leads[j])
        s: dict = {}
        for (src, other) in ((i, j), (j, i)):
            shift = tuple(map(_sub, L, leads[src]))
            sgn = 1 if src == i else -1
            for mm, cc in tails[src]:
                m2 = tuple(map(_add, mm, shift))
                v = field.add(s.get(m2, field.zero), cc if sgn == 1 else field.neg(cc))
                if v == field.zero:
                    s.pop(m2, None)
                else:
                    s[m2] = v
        reducers = [(ld, sum(ld), field.one, tl) for ld, tl in zip(leads, tails)]
        r = _nf_dict(s, reducers, ring)
        if r:
            rp = Polynomial(ring, r).monic()
            if rp.total_degree() == 0:
                return GroebnerBasis(ring, (ring.one(),))
            add_element(rp, sug)

    # minimalize: drop elements whose lead another lead divides
    order_idx = sorted(range(len(leads)), key=lambda i: key(leads[i]))
    minimal: list[int] = []
    for i in order_idx:
        if not any(mono_divides(leads[j], leads[i]) for j in minimal):
            minimal.append(i)
    polys = [
        Polynomial(ring, {leads[i]: field.one, **dict(tails[i])}) for i in minimal
    ]
    # final autoreduction of tails
    reduced = _interreduce(polys, ring)
    return GroebnerBasis(ring, reduced)


# ---------------------------------------------------------------------------
# dimension / Hilbert queries on the lead-term ideal

def _minimal_supports(leads):
    sups = sorted({frozenset(i for i, e in enumerate(m) if e) for m in leads}, key=len)
    out = []
    for s in sups:
        if not any(t <= s for t in out):
            out.append(s)
    return out


def _min_hitting_set(supports) -> int:
    # greedy upper bound, then branch and bound on the smallest uncovered set
    remaining = list(supports)
    greedy = 0
    while remaining:
        counts: dict = {}
        for s in remaining:
            for v in s:
                counts[v] = counts.get(v, 0) + 1
        v = max(sorted(counts), key=lambda x: counts[x])
        remaining = [s for s in remaining if v not in s]
        greedy += 1
    best = [greedy]

    def rec(rem, size):
        if not rem:
            if size < best[0]:
                best[0] = size
            return
        if size + 1 >= best[0]:
            return
        target = min(rem, key=len)
        for v in sorted(target):
            rec([s for s in rem if v not in s], size + 1)

    rec(list(supports), 0)
    return best[0]


def krull_dimension(G: GroebnerBasis) -> int:
    """Affine dimension of the quotient by the ideal (the cone dimension for
    homogeneous ideals).  The unit ideal has dimension -1 by convention."""
    n = G.ring.nvars
    if not G.elements:
        return n
    if G.is_unit_ideal():
        return -1
    supports = _minimal_supports(G.lead_monomials())
    if not supports:
        return n
    return n - _min_hitting_set(supports)


def hilbert_value(G: GroebnerBasis, d: int) -> int:
    """Number of degree-d monomials outside the lead-term ideal."""
    if d < 0:
        raise StructureError("hilbert_value needs d >= 0")
    if G.is_unit_ideal():
        return 0
    n = G.ring.nvars
    if math.comb(n + d - 1, d) > 2_000_000:
        raise RefusalError(f"degree-{d} monomial count in {n} variables is too large")
    leads = [m for m in G.lead_monomials() if sum(m) <= d]
    count = 0
    for combo in itertools.combinations_with_replacement(range(n), d):
        exp = [0] * n
        for i in combo:
            exp[i] += 1
        exp = tuple(exp)
        if not any(mono_divides(m, exp) for m in leads):
            count += 1
    return count


# ---------------------------------------------------------------------------
# determinantal ideals

def minors_ideal(matrix, t: int) -> Ideal:
    """Ideal generated by all t x t minors of a matrix of polynomials.

    Generators are deduplicated, made monic, and sorted canonically so the
    output is reproducible.  Matrices with more than ``MINORS_CAP`` minors
    are refused.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0 or cols == 0:
        raise StructureError("minors of an empty matrix")
    ring = matrix[0][0].ring
    for row in matrix:
        if len(row) != cols:
            raise StructureError("ragged matrix")
        for e in row:
            if e.ring != ring:
                raise StructureError("matrix entries live in different rings")
    if not 1 <= t <= min(rows, cols):
        raise StructureError(f"minor size {t} out of range for {rows}x{cols}")
    total = math.comb(rows, t) * math.comb(cols, t)
    if total > MINORS_CAP:
        raise RefusalError(
            f"{total} minors of size {t} exceed the cap of {MINORS_CAP}"
        )
    if cols > rows:
        matrix = [[matrix[r][c] for r in range(rows)] for c in range(cols)]
        rows, cols = cols, rows

    # cofactor expansion along columns, sharing subdeterminants across row
    # subsets; intermediate values stay as raw term dicts
    from operator import add as _add

    field = ring.field
    p = field.char

    def dict_mul_add(target: dict, entry_terms, sub: dict, negate: bool):
        if p:
            for m1, c1 in entry_terms:
                for m2, c2 in sub.items():
                    m = tuple(map(_add, m1, m2))
                    d = c1 * c2
                    v = (target.get(m, 0) - d if negate else target.get(m, 0) + d) % p
                    if v:
                        target[m] = v
                    else:
                        target.pop(m, None)
        else:
            for m1, c1 in entry_terms:
                for m2, c2 in sub.items():
                    m = tuple(map(_add, m1, m2))
                    d = c1 * c2
                    v = target.get(m, field.zero) + (-d if negate else d)
                    if v:
                        target[m] = v
                    else:
                        target.pop(m, None)

    dets = []
    one_dict = {ring.zero_mono: field.one}
    for colset in itertools.combinations(range(cols), t):
        prev = {(): one_dict}
        for k in range(1, t + 1):
            cidx = colset[k - 1]
            cur = {}
            for rowset in itertools.combinations(range(rows), k):
                acc: dict = {}
                for pos, r in enumerate(rowset):
                    entry = matrix[r][cidx]
                    if entry.is_zero():
                        continue
                    sub = prev[rowset[:pos] + rowset[pos + 1:]]
                    if sub:
                        dict_mul_add(acc, entry.terms, sub, (k - 1 + pos) % 2 == 1)
                cur[rowset] = acc
            prev = cur
        dets.extend(d for d in prev.values() if d)

    unique = {}
    for d in dets:
        pm = Polynomial(ring, d).monic()
        unique[pm.terms] = pm
    gens = sorted(
        unique.values(), key=lambda q: ring.key(q.lead_monomial()), reverse=True
    )
    return Ideal(ring, tuple(gens))

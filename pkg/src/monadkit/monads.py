"""Monad data model, existence predicates, the explicit constructor,
verification, dualization, morphism checks, and family dimension counts.

A monad here is a three-term complex 0 -> (L^v)^a -> O^b -> L^c -> 0 on a
projective variety, presented by a b x a matrix A of degree-d forms (the
left map) and a c x b matrix B (the right map).  The complex condition is
B*A = 0 modulo the variety's ideal; the left map must be pointwise
injective away from a locus of controlled codimension and the right map
pointwise surjective everywhere.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import RefusalError, SearchError, StructureError
from .groebner import Ideal, buchberger, krull_dimension, minors_ideal, normal_form
from .linalg import rank as mat_rank
from .polynomials import Polynomial
from .varieties import (
    ProjectivePoint,
    ProjectiveVariety,
    find_disjoint_subspace,
    sample_quadric_point,
    small_point_candidates,
)

DEFAULT_SEED = 20201
PHI_RETRY_BUDGET = 20


# ---------------------------------------------------------------------------
# polynomial matrix helpers

def transpose(M):
    return tuple(tuple(row[i] for row in M) for i in range(len(M[0]))) if M else ()


def matmul(A, B):
    """Product of polynomial matrices (rows of tuples)."""
    if not A or not B:
        return ()
    inner = len(B)
    out = []
    for row in A:
        if len(row) != inner:
            raise StructureError("matrix shapes do not match")
        new_row = []
        for j in range(len(B[0])):
            acc = None
            for k in range(inner):
                if row[k].is_zero() or B[k][j].is_zero():
                    continue
                term = row[k] * B[k][j]
                acc = term if acc is None else acc + term
            new_row.append(acc if acc is not None else row[0].ring.zero())
        out.append(tuple(new_row))
    return tuple(out)


def const_matrix(ring, rows):
    """Lift a matrix of integers/field values to constant polynomials."""
    return tuple(tuple(ring.const(v) for v in row) for row in rows)


def evaluate_matrix(M, coords, field):
    return [[field.coerce(e.evaluate(coords)) for e in row] for row in M]


# ---------------------------------------------------------------------------
# data model

@dataclass(frozen=True)
class MonadSpec:
    """Matrices and ranks of a (candidate) monad on a variety.

    ``d`` is the common degree of the matrix entries: 1 when the variety
    itself is the working model, or the degree of the embedding line bundle
    when the matrices live on a small ambient space.
    """

    variety: ProjectiveVariety
    d: int
    A: tuple  # b x a
    B: tuple  # c x b
    a: int
    b: int
    c: int

    def __post_init__(self):
        ring = self.variety.ring
        if self.a and (len(self.A) != self.b or any(len(r) != self.a for r in self.A)):
            raise StructureError(f"left matrix must be {self.b}x{self.a}")
        if not self.a and self.A != ():
            raise StructureError("a = 0 needs an empty left matrix")
        if self.c and (len(self.B) != self.c or any(len(r) != self.b for r in self.B)):
            raise StructureError(f"right matrix must be {self.c}x{self.b}")
        if not self.c and self.B != ():
            raise StructureError("c = 0 needs an empty right matrix")
        for row in tuple(self.A) + tuple(self.B):
            for e in row:
                if e.ring != ring:
                    raise StructureError("matrix entry in a different ring")
                hd = e.homogeneous_degree()
                if hd not in (self.d, "any"):
                    raise StructureError(
                        f"entry {e} is not homogeneous of degree {self.d}"
                    )

    @property
    def rank(self) -> int:
        """Rank of the cohomology sheaf when it is a bundle."""
        return self.b - self.a - self.c


@dataclass(frozen=True)
class ExistenceVerdict:
    cond_i: bool
    cond_ii: bool
    exists: bool

    def as_dict(self):
        return {"cond_i": self.cond_i, "cond_ii": self.cond_ii, "exists": self.exists}


@dataclass(frozen=True)
class VerificationReport:
    complex_ok: bool
    g_surjective: bool
    f_pointwise_injective_dim: int  # projective dim of the left map's bad locus
    expected_codim: int
    is_monad: bool
    is_bundle: bool
    witness: Optional[ProjectivePoint] = None

    def as_dict(self):
        return {
            "complex_ok": self.complex_ok,
            "g_surjective": self.g_surjective,
            "f_pointwise_injective_dim": self.f_pointwise_injective_dim,
            "expected_codim": self.expected_codim,
            "is_monad": self.is_monad,
            "is_bundle": self.is_bundle,
            "witness": None if self.witness is None else repr(self.witness),
        }


@dataclass(frozen=True)
class FamilyFormulas:
    h0_K_lower: int
    fiber_dim: int
    codimZ_bound: int
    c_in_range: bool  # the irreducibility statement needs 1 <= c <= 2

    def as_dict(self):
        return {
            "h0_K_lower": self.h0_K_lower,
            "fiber_dim": self.fiber_dim,
            "codimZ_bound": self.codimZ_bound,
            "c_in_range": self.c_in_range,
        }


# ---------------------------------------------------------------------------
# existence

def existence_conditions(a: int, b: int, c: int, n: int) -> ExistenceVerdict:
    """The two sufficient-and-necessary inequality families for a monad of
    shape (a, b, c) on an n-dimensional variety."""
    if a < 0 or c < 0 or b < 1 or n < 1:
        raise StructureError("need a, c >= 0 and b, n >= 1")
    cond_i = b >= a + c and b >= 2 * c + n - 1
    cond_ii = b >= a + c + n
    return ExistenceVerdict(cond_i, cond_ii, cond_i or cond_ii)


def build_banded_pair(c: int, p: int, q: int, xforms, yforms):
    """The banded matrices whose product vanishes identically.

    B = [X_{c,c+p} | Y_{c,c+q}] is c x (2c+p+q); A0 stacks Y_{c+p,c+p+q}
    over -X_{c+q,c+q+p} and is (2c+p+q) x (c+p+q).  The two halves of B*A0
    are both the convolution band of the x- and y-sequences, so they cancel.
    """
    if abs(p - q) > 1:
        raise StructureError("the split must satisfy |p - q| <= 1")
    if len(xforms) != p + 1 or len(yforms) != q + 1:
        raise StructureError("need p+1 x-forms and q+1 y-forms")
    ring = (list(xforms) + list(yforms))[0].ring
    zero = ring.zero()

    def band(forms, rows, cols):
        h = len(forms)
        return tuple(
            tuple(forms[j - i] if 0 <= j - i < h else zero for j in range(cols))
            for i in range(rows)
        )

    X_c = band(xforms, c, c + p)
    Y_c = band(yforms, c, c + q)
    B = tuple(tuple(xr) + tuple(yr) for xr, yr in zip(X_c, Y_c)) if c else ()
    Y_top = band(yforms, c + p, c + p + q)
    X_bot = band(xforms, c + q, c + q + p)
    A0 = tuple(Y_top) + tuple(tuple(-e for e in row) for row in X_bot)
    return A0, B


# ---------------------------------------------------------------------------
# verification

def verify_complex(M: MonadSpec) -> bool:
    """True iff every entry of B*A reduces to zero modulo the variety."""
    if not M.a or not M.c:
        return True
    gb = M.variety.gb
    for row in matmul(M.B, M.A):
        for e in row:
            if not normal_form(e, gb).is_zero():
                return False
    return True


_degeneracy_cache: dict = {}


def degeneracy_dim(V: ProjectiveVariety, M, t: int) -> int:
    """Projective dimension of {x in V : rank M(x) < t}; -1 when empty.

    Cut by the t x t minors of M; computed as the cone dimension of the
    variety ideal plus the minor ideal, minus one.
    """
    if t <= 0:
        return -1
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if t > min(rows, cols):
        return V.n
    mat_key = (V.ideal.gens, tuple(tuple(row) for row in M), t)
    hit = _degeneracy_cache.get(mat_key)
    if hit is not None:
        return hit
    J = minors_ideal(M, t)
    gens_key = (V.ideal.gens, J.gens)
    hit = _degeneracy_cache.get(gens_key)
    if hit is None:
        gb = buchberger(V.ideal.plus(J.gens))
        hit = krull_dimension(gb) - 1
        _degeneracy_cache[gens_key] = hit
    _degeneracy_cache[mat_key] = hit
    return hit


def _points_on_variety(V: ProjectiveVariety, limit: int = 400):
    """Candidate points lying on V: a small coordinate grid plus random
    quadric samples when the variety is a diagonal quadric over GF(p)."""
    from .varieties import contains_point

    count = 0
    if V.ring.nvars <= 6:
        for pt in small_point_candidates(V.ring, radius=1):
            if contains_point(V, pt):
                yield pt
                count += 1
                if count >= limit:
                    return
    rng = random.Random(0xBEEF)
    for _ in range(50):
        pt = sample_quadric_point(V, rng, budget=20)
        if pt is not None:
            yield pt
            count += 1
            if count >= limit:
                return


def _find_witness(M: MonadSpec, complex_ok: bool, g_ok: bool, f_ok: bool):
    """Bounded search for a point exhibiting a failed check.  Absence of a
    witness proves nothing; the symbolic verdict always wins."""
    field = M.variety.ring.field
    for pt in _points_on_variety(M.variety):
        if not complex_ok and M.a and M.c:
            prod = matmul(M.B, M.A)
            vals = [e.evaluate(pt.coords) for row in prod for e in row]
            if any(v != field.zero for v in vals):
                return pt
        if not g_ok and M.c:
            if mat_rank(evaluate_matrix(M.B, pt.coords, field), field) < M.c:
                return pt
        if not f_ok and M.a:
            if mat_rank(evaluate_matrix(M.A, pt.coords, field), field) < M.a:
                return pt
    return None


def verify_monad(M: MonadSpec) -> VerificationReport:
    """Full verification: complex condition, pointwise surjectivity of the
    right map, and the codimension bound for the left map's bad locus."""
    V = M.variety
    complex_ok = verify_complex(M)
    g_dim = degeneracy_dim(V, M.B, M.c)
    g_surjective = g_dim == -1
    f_dim = degeneracy_dim(V, M.A, M.a)
    expected = M.b - M.a - M.c + 1
    f_ok = f_dim == -1 or (V.n - f_dim) >= expected
    is_monad = complex_ok and g_surjective and f_ok
    is_bundle = is_monad and f_dim == -1
    witness = None
    if not is_monad:
        witness = _find_witness(M, complex_ok, g_surjective, f_ok)
    return VerificationReport(
        complex_ok=complex_ok,
        g_surjective=g_surjective,
        f_pointwise_injective_dim=f_dim,
        expected_codim=expected,
        is_monad=is_monad,
        is_bundle=is_bundle,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# construction

def _split_forms(forms, total):
    p = (total + 1) // 2
    q = total - p
    return forms[: p + 1], forms[p + 1:], p, q


def construct_monad(V: ProjectiveVariety, a: int, b: int, c: int,
                    seed: int = DEFAULT_SEED,
                    budget: int = PHI_RETRY_BUDGET) -> MonadSpec:
    """Build a verified monad of shape (a, b, c) with degree-1 entries.

    Follows the banded construction: pick b - 2c + 2 linear forms without
    common zeros on the variety (a seeded random subspace search, or the
    ambient coordinates themselves, cycled, when more forms are needed than
    there are coordinates), assemble the banded pair, then cut the left
    matrix down to ``a`` columns with a random constant matrix and check
    the degeneracy codimension, retrying on unlucky draws.  When only the
    second inequality family holds, the transposed shape is built first
    and dualized.
    """
    verdict = existence_conditions(a, b, c, V.n)
    if not verdict.exists:
        raise RefusalError(
            f"no monad of shape ({a}, {b}, {c}) on a {V.n}-fold: "
            f"needs (b >= a+c and b >= 2c+n-1) or b >= a+c+n"
        )
    ring = V.ring
    N = V.N
    field = ring.field
    dual_route = not verdict.cond_i
    a_, c_ = (c, a) if dual_route else (a, c)
    s = b - a - c

    rng = random.Random(seed)

    def random_form():
        while True:
            coeffs = [rng.randint(-5, 5) for _ in range(N + 1)]
            if any(coeffs):
                return sum(
                    (ring.var(i) * v for i, v in enumerate(coeffs) if v), ring.zero()
                )

    def draw_forms(m):
        # coordinates first (their common zero locus is empty everywhere),
        # fresh random combinations for any extra slots
        if m <= N:
            return find_disjoint_subspace(V, m, rng.randrange(1 << 30))
        return ring.gens() + [random_form() for _ in range(m - N - 1)]

    m = b - 2 * c_ + 2
    spec = None
    for _ in range(budget):
        forms = draw_forms(m)
        x, y, p, q = _split_forms(forms, b - 2 * c_)
        A0, B = build_banded_pair(c_, p, q, x, y)
        if a_ == 0:
            spec = MonadSpec(V, 1, (), B, a_, b, c_)
            break
        phi_int = [[rng.randint(-5, 5) for _ in range(a_)] for _ in range(b - c_)]
        phi_rows = [[field.coerce(v) for v in row] for row in phi_int]
        if mat_rank(phi_rows, field) < a_:
            continue
        phi = const_matrix(ring, phi_int)
        A = matmul(A0, phi)
        f_dim = degeneracy_dim(V, A, a_)
        if f_dim == -1 or (V.n - f_dim) >= s + 1:
            spec = MonadSpec(V, 1, A, B, a_, b, c_)
            break
    if spec is None:
        raise SearchError(
            f"no generic reduction achieved codimension {s + 1} in {budget} tries"
        )
    return dualize(spec) if dual_route else spec


def dualize(M: MonadSpec) -> MonadSpec:
    """Transpose both matrices and swap the outer ranks."""
    return MonadSpec(
        variety=M.variety,
        d=M.d,
        A=transpose(M.B),
        B=transpose(M.A),
        a=M.c,
        b=M.b,
        c=M.a,
    )


# ---------------------------------------------------------------------------
# morphisms

def morphism_residuals(M: MonadSpec, P_A, P_B, P_C):
    """The two commutation residuals (P_B*A - A*P_A, B*P_B - P_C*B), reduced
    modulo the variety; both vanish exactly for a monad endomorphism."""
    ring = M.variety.ring
    gb = M.variety.gb

    def lift(P, rows, cols, name):
        P = tuple(tuple(row) for row in P)
        if len(P) != rows or any(len(r) != cols for r in P):
            raise StructureError(f"{name} must be {rows}x{cols}")
        return const_matrix(ring, P)

    PA = lift(P_A, M.a, M.a, "P_A") if M.a else ()
    PB = lift(P_B, M.b, M.b, "P_B")
    PC = lift(P_C, M.c, M.c, "P_C") if M.c else ()

    def reduced_diff(X, Y, rows, cols):
        out = []
        for i in range(rows):
            row = []
            for j in range(cols):
                row.append(normal_form(X[i][j] - Y[i][j], gb))
            out.append(tuple(row))
        return tuple(out)

    left = (
        reduced_diff(matmul(PB, M.A), matmul(M.A, PA), M.b, M.a) if M.a else ()
    )
    right = (
        reduced_diff(matmul(M.B, PB), matmul(PC, M.B), M.c, M.b) if M.c else ()
    )
    return left, right


def check_monad_morphism(M: MonadSpec, P_A, P_B, P_C) -> bool:
    """True iff the constant matrix triple commutes with both maps modulo
    the variety ideal, i.e. defines a morphism of the monad to itself."""
    left, right = morphism_residuals(M, P_A, P_B, P_C)
    return all(e.is_zero() for row in left for e in row) and all(
        e.is_zero() for row in right for e in row
    )


# ---------------------------------------------------------------------------
# family dimension formulas

def family_formulas(a: int, b: int, c: int, n: int, N: int) -> FamilyFormulas:
    """Dimension counts for the family of monads over an n-fold in P^N:
    a lower bound for the sections of the twisted kernel of the right map,
    the resulting fiber dimension, and the bound on the codimension of the
    locus of right maps admitting a left map."""
    if n < 1 or N < 1:
        raise StructureError("need n, N >= 1")
    h0_lower = b * (n + 1) - c * math.comb(n + 2, 2)
    fiber = a * h0_lower
    codim_bound = a * (c * math.comb(N + 2, 2) - b * (N + 1) + a)
    return FamilyFormulas(
        h0_K_lower=h0_lower,
        fiber_dim=fiber,
        codimZ_bound=codim_bound,
        c_in_range=1 <= c <= 2,
    )

#!/usr/bin/env python3
"""Regenerate the JSON fixtures bundled under src/monadkit/data/.

Everything deterministic; the Grassmannian matrices and the reduced
ten-form monad are rebuilt from the coordinate machinery and re-verified
before being written out.
"""

from __future__ import annotations

import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from monadkit import plucker
from monadkit.fields import GF
from monadkit.groebner import Ideal, buchberger, hilbert_value, krull_dimension
from monadkit.jsonio import dumps, monad_to_doc, variety_to_doc
from monadkit.linalg import rank as mat_rank
from monadkit.monads import MonadSpec, build_banded_pair, const_matrix, matmul, verify_monad
from monadkit.polynomials import PolyRing, format_polynomial
from monadkit.varieties import make_variety, subspace_disjoint

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "monadkit" / "data"
FIELD = GF(32003)


def write(name: str, doc: dict):
    OUT.joinpath(name + ".json").write_text(dumps(doc))
    print("wrote", name)


def variety_doc(name, N, names, gens_exprs, assertions):
    ring = PolyRing(names, FIELD)
    gens = [ring.parse(e) for e in gens_exprs]
    V = make_variety(N, gens, name=name, assertions=assertions)
    return V, variety_to_doc(V)


def main():
    OUT.mkdir(exist_ok=True)

    p3 = [f"x{i}" for i in range(4)]
    p4 = [f"x{i}" for i in range(5)]
    p6 = [f"x{i}" for i in range(7)]

    qs, doc = variety_doc(
        "quadric_surface", 3, p3, ["x0^2+x1^2+x2^2+x3^2"],
        {"acm": True, "linearly_normal": True, "not_in_quadric": "compute"},
    )
    write("quadric_surface", doc)

    segre, doc = variety_doc(
        "segre_quadric", 3, p3, ["x0*x3-x1*x2"],
        {"acm": True, "linearly_normal": True, "not_in_quadric": "compute"},
    )
    write("segre_quadric", doc)

    q3, doc = variety_doc(
        "q3", 4, p4, ["x0^2+x1^2+x2^2+x3^2+x4^2"],
        {"acm": True, "linearly_normal": True, "not_in_quadric": "compute"},
    )
    write("q3", doc)

    q5, doc = variety_doc(
        "q5", 6, p6, ["x0^2+x1^2+x2^2+x3^2+x4^2+x5^2+x6^2"],
        {"acm": True, "linearly_normal": True, "not_in_quadric": "compute"},
    )
    write("q5", doc)

    tc, doc = variety_doc(
        "twisted_cubic", 3, p3,
        ["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"],
        {"acm": True, "linearly_normal": True, "not_in_quadric": "compute"},
    )
    assert tc.n == 1
    write("twisted_cubic", doc)

    # pentagonal pencil member: five quadrics cutting an elliptic quintic
    quintic_gens = []
    for i in range(5):
        a, b, c, d = (i + 2) % 5, (i + 3) % 5, (i + 1) % 5, (i + 4) % 5
        quintic_gens.append(f"x{a}*x{b} - 2*x{c}*x{d}")
    eq, doc = variety_doc(
        "elliptic_quintic", 4, p4, quintic_gens,
        {"acm": True, "linearly_normal": True, "not_in_quadric": False},
    )
    assert eq.n == 1, eq.n
    assert hilbert_value(eq.gb, 2) == 10, hilbert_value(eq.gb, 2)
    write("elliptic_quintic", doc)

    ct, doc = variety_doc(
        "cubic_threefold", 4, p4, ["x0^3+x1^3+x2^3+x3^3+x4^3"],
        {"acm": True, "linearly_normal": True, "not_in_quadric": True},
    )
    assert hilbert_value(ct.gb, 2) == 15
    write("cubic_threefold", doc)

    ring20 = plucker.make_ring(FIELD)
    rels = plucker.exchange_relations(ring20)
    assert len(rels) == 35
    g25 = make_variety(
        19, rels, name="g25",
        assertions={"acm": True, "linearly_normal": True, "not_in_quadric": False},
    )
    assert g25.n == 9
    write("g25", variety_to_doc(g25))

    # quadric-surface monad with a doubled entry (not simple downstream)
    def monad_doc(name, variety, vname, d, A_rows, B_rows, a, b, c, check=True):
        ring = variety.ring
        A = tuple(tuple(ring.parse(e) for e in row) for row in A_rows)
        B = tuple(tuple(ring.parse(e) for e in row) for row in B_rows)
        M = MonadSpec(variety=variety, d=d, A=A, B=B, a=a, b=b, c=c)
        if check:
            rep = verify_monad(M)
            assert rep.is_monad, (name, rep)
        write(name, monad_to_doc(M, variety_ref=vname))
        return M

    monad_doc(
        "quadric_surface_b5", qs, "quadric_surface", 2,
        [["-x3^2"], ["-x2^2"], ["x1^2"], ["x0^2"], ["0"]],
        [["x0^2", "x1^2", "x2^2", "x3^2", "x3^2"]],
        1, 5, 1,
    )

    monad_doc(
        "q3_b6", q3, "q3", 2,
        [["-x2^2", "-x3^2"], ["0", "-x2^2"], ["-x3^2", "0"],
         ["x0^2", "x1^2"], ["0", "x0^2"], ["x1^2", "0"]],
        [["x0^2", "x1^2", "0", "x2^2", "x3^2", "0"],
         ["0", "x0^2", "x1^2", "0", "x2^2", "x3^2"]],
        2, 6, 2,
    )

    monad_doc(
        "q3_b7", q3, "q3", 2,
        [["-x2^2-x3^2", "-x4^2"], ["-x2^2", "-x3^2"], ["0", "-x2^2-x4^2"],
         ["x0^2+x1^2", "0"], ["x0^2", "x1^2"], ["0", "x0^2"], ["0", "x1^2"]],
        [["x0^2", "x1^2", "0", "x2^2", "x3^2", "x4^2", "0"],
         ["0", "x0^2", "x1^2", "0", "x2^2", "x3^2", "x4^2"]],
        2, 7, 2,
    )

    monad_doc(
        "q3_b6_mixed", q3, "q3", 2,
        [["-x2^2", "-x3^2"], ["0", "-x2^2"], ["-x3*x4", "0"],
         ["x0^2", "x1^2"], ["0", "x0^2"], ["x1^2", "0"]],
        [["x0^2", "x1^2", "0", "x2^2", "x3^2", "0"],
         ["0", "x0^2", "x1^2", "0", "x2^2", "x3*x4"]],
        2, 6, 2,
    )

    monad_doc(
        "q3_b6_mixed2", q3, "q3", 2,
        [["-x2^2", "-x3^2"], ["0", "-x2^2"], ["-x3*x4", "0"],
         ["x0^2", "x1^2"], ["0", "x0^2"], ["x1^2+x1*x4", "0"]],
        [["x0^2", "x1^2", "0", "x2^2", "x3^2", "0"],
         ["0", "x0^2", "x1^2+x1*x4", "0", "x2^2", "x3*x4"]],
        2, 6, 2,
    )

    # Grassmannian bundle monad, middle term 16
    A, B = plucker.bundle_monad_matrices(ring20, 1)
    m16 = MonadSpec(variety=g25, d=1,
                    A=tuple(tuple(r) for r in A), B=tuple(tuple(r) for r in B),
                    a=1, b=16, c=1)
    ba = matmul(m16.B, m16.A)
    assert all(e.is_zero() for row in ba for e in row)
    write("g25_k1", monad_to_doc(m16, variety_ref="g25"))

    # reduced variant: ten disjoint-subspace forms, middle term 10
    lam_forms = plucker.disjoint_subspace_forms(ring20)
    assert subspace_disjoint(g25, lam_forms)
    A0, B10 = build_banded_pair(1, 4, 4, lam_forms[:5], lam_forms[5:])
    from monadkit.linalg import solve

    monos = {}
    for g in lam_forms:
        for m, _ in g.terms:
            monos.setdefault(m, len(monos))
    span_mat = [[FIELD.zero] * 10 for _ in range(len(monos))]
    for j, g in enumerate(lam_forms):
        for m, cc in g.terms:
            span_mat[monos[m]][j] = cc

    rng = random.Random(42)
    while True:
        phi_int = [[rng.randint(-5, 5)] for _ in range(9)]
        ten = matmul(A0, const_matrix(ring20, phi_int))
        coeff_rows = []
        for row in ten:
            rhs = [FIELD.zero] * len(monos)
            for m, cc in row[0].terms:
                rhs[monos[m]] = cc
            sol = solve(span_mat, rhs, FIELD)
            assert sol is not None
            coeff_rows.append(sol)
        # entries spanning all ten forms cut exactly the disjoint subspace
        if mat_rank(coeff_rows, FIELD) == 10:
            break
    m10 = MonadSpec(variety=g25, d=1, A=tuple(tuple(r) for r in ten),
                    B=tuple(tuple(r) for r in B10), a=1, b=10, c=1)
    ba = matmul(m10.B, m10.A)
    assert all(e.is_zero() for row in ba for e in row)
    write("g25_k1_reduced", monad_to_doc(m10, variety_ref="g25"))

    # negative controls
    monad_doc(
        "broken_complex", qs, "quadric_surface", 2,
        [["-x3^2"], ["-x2^2"], ["x1^2"], ["x0^2"], ["0"]],
        [["x0^2", "x1^2", "x2^2", "0", "0"]],
        1, 5, 1, check=False,
    )
    monad_doc(
        "broken_surjectivity", segre, "segre_quadric", 1,
        [["x3"], ["-x2"], ["0"], ["x0"]],
        [["x0", "x1", "x2", "0"]],
        1, 4, 1, check=False,
    )

    print("done:", len(list(OUT.glob("*.json"))), "fixtures")


if __name__ == "__main__":
    main()

"""Acceptance suite: one test per criterion, each printing a pass line.

Run with  pytest tests/test_acceptance.py -v -s  to see the lines; every
tolerance is exact (integer and rational equality throughout).
"""

import itertools
import random
from fractions import Fraction

import pytest

from gradedcy.arshadow import verify_root
from gradedcy.dimer import (consistency_check, cy3_complex, dual_qp,
                            grading_from_matchings, jacobian_presentation,
                            load_dimer, perfect_matchings)
from gradedcy.duality import (builtin_resolution, check_twisted_cy,
                              identity_twist, sign_twist)
from gradedcy.findim import (arrow_multiplicities, gabriel_quiver,
                             injective_dimension, is_iwanaga_gorenstein,
                             radical)
from gradedcy.preprojective import (block_arrow_images,
                                    block_trivial_extension,
                                    layered_presentation)
from gradedcy.quiver import Arrow, GradedQuiverPresentation, NCPoly, Quiver
from gradedcy.rewriting import RewriteContext, length_table
from gradedcy.slice_algebras import (build_AUB, build_tilde,
                                     cluster_hom_shadow,
                                     relations_from_structure, reduce_mod)

from helpers import (DATA, brute_force_graded_dimension, load,
                     matchings_by_subsets)


def report(n, text):
    print(f"PASS criterion {n}: {text}")


def test_criterion_1_kronecker_pipeline():
    pres = load("k_xy.pres")
    A, U, B = build_AUB(pres, 2)
    assert A.dim == 4
    assert arrow_multiplicities(gabriel_quiver(A)) == {("v0", "v1"): 2}
    assert B.dim == 12
    labels = {l: i for i, l in enumerate(B.labels)}
    guess = Quiver(["0", "1"], [Arrow("x", "0", "1", -1),
                                Arrow("y", "0", "1", -1),
                                Arrow("u", "1", "0", 0)])
    images = {"x": {labels["a:(0->1)x"]: Fraction(1)},
              "y": {labels["a:(0->1)y"]: Fraction(1)},
              "u": {labels["u:(1=>0)e_P"]: Fraction(1)}}
    found = relations_from_structure(B, guess, images, cap=6)
    ctx = GradedQuiverPresentation(guess, []).ctx

    def word(names, sign=1):
        return NCPoly({ctx.path_from_names(list(names)): Fraction(sign)})

    stated = [word(["x", "u", "y"]) + word(["y", "u", "x"], -1),
              word(["u", "x", "u"]), word(["u", "y", "u"])]
    assert all(not r for r in reduce_mod(found, stated, guess, 6))
    assert all(not r for r in reduce_mod(stated, found, guess, 6))
    report(1, "two-variable pipeline: dim A = 4 with the two-arrow quiver, "
              "dim B = 12, trivial-extension ideal recovered (mutual "
              "reduction at cap 6)")


def test_criterion_2_layered_vs_blocks():
    KRON = Quiver(["0", "1"], [Arrow("x", "0", "1", 0),
                               Arrow("y", "0", "1", 0)])
    THREE = Quiver(["1", "2", "3"], [Arrow("a", "1", "2", 0),
                                     Arrow("b", "1", "2", 0),
                                     Arrow("c", "2", "3", 0)])
    for Q, qname in ((KRON, "two-arrow"), (THREE, "three-vertex")):
        for n in (1, 2):
            pres = layered_presentation(Q, n)
            table = {p: sum(c) for p, c in length_table(pres, 6).items()}
            B = block_trivial_extension(Q, n)
            lq, images, videm = block_arrow_images(Q, n, B)
            bidem = {v: B.basis_vec(B.idempotents[k])
                     for v, k in videm.items()}
            btable = {}
            for v1 in lq.vertices:
                for v2 in lq.vertices:
                    cnt = 0
                    for i in range(B.dim):
                        w = B.product(bidem[v1],
                                      B.product(B.basis_vec(i), bidem[v2]))
                        if w == {i: Fraction(1)}:
                            cnt += 1
                    if cnt:
                        btable[(v1, v2)] = cnt
            assert table == btable, (qname, n)
            found = relations_from_structure(B, lq, images, cap=6,
                                             vertex_idempotents=videm)
            assert all(not r for r in
                       reduce_mod(found, pres.relations, lq, 6))
            assert all(not r for r in
                       reduce_mod(pres.relations, found, lq, 6))
    report(2, "layered presentations and block trivial extensions have "
              "identical vertex-pair dimension tables up to length 6 and "
              "mutually reducing relation ideals, for both quivers and "
              "n in {1, 2}")


def test_criterion_3_twisted_duality():
    window = (0, -6)
    kx = load("k_x.pres")
    v = check_twisted_cy(kx, builtin_resolution(kx), identity_twist(2),
                         window=window)
    assert v.passed, v.summary()
    kxy = load("k_xy.pres")
    v = check_twisted_cy(kxy, builtin_resolution(kxy), sign_twist(kxy, 4),
                         window=window)
    assert v.passed, v.summary()
    v = check_twisted_cy(kxy, builtin_resolution(kxy), identity_twist(4),
                         window=window)
    assert not v.passed
    for m in (2, 3):
        skew = load(f"skew_{m}.pres")
        v = check_twisted_cy(skew, builtin_resolution(skew),
                             identity_twist(4), window=window)
        assert v.passed, v.summary()
    report(3, "duality check passes with the identity at shift [2] for one "
              "variable, with the sign twist at [4] for two commuting "
              "variables (and fails untwisted), and with the identity at "
              "[4] for the sum-of-squares algebras m = 2, 3; window 0..-6")


def test_criterion_4_iwanaga_gorenstein():
    _, _, B1 = build_AUB(load("k_x.pres"), 1)
    assert is_iwanaga_gorenstein(B1, 1, 3).holds
    A2, _, B2 = build_AUB(load("k_xy.pres"), 2)
    assert is_iwanaga_gorenstein(B2, 1, 3).holds
    _, _, B3 = build_AUB(load("k_xyz.pres"), 3)
    assert is_iwanaga_gorenstein(B3, 2, 4).holds
    A1, U1, _ = build_AUB(load("k_x.pres"), 1)
    for n in (1, 2, 3):
        _, _, Bt = build_tilde(A1, U1, n)
        assert injective_dimension(Bt, "left", 3) == 0
        assert injective_dimension(Bt, "right", 3) == 0
        assert is_iwanaga_gorenstein(Bt, 1, 3).holds
    assert not is_iwanaga_gorenstein(A2, 0, 3).holds
    report(4, "Gorenstein bounds hold: d = 1 for one and two variables, "
              "d = 2 for three variables, self-injective block algebras "
              "for n in {1, 2, 3}; the hereditary two-arrow algebra fails "
              "at d = 0")


def test_criterion_5_dimer_suite():
    hexd = load_dimer(DATA / "hexagonal.dimer")
    di = load_dimer(DATA / "four_face.dimer")
    _, rep = di.validate()
    assert rep["chi"] == 0

    qp = dual_qp(di)
    mult = {}
    for a in qp.quiver.arrows:
        mult[(a.source, a.target)] = mult.get((a.source, a.target), 0) + 1
    expected = {("2", "1"): 3, ("1", "3"): 1, ("3", "2"): 2,
                ("1", "4"): 2, ("4", "3"): 1, ("4", "2"): 1}
    ok = False
    for perm in itertools.permutations(["1", "2", "3", "4"]):
        relabel = dict(zip(qp.quiver.vertices, perm))
        if {(relabel[s], relabel[t]): m
                for (s, t), m in mult.items()} == expected:
            ok = True
            break
    assert ok, mult

    cons = consistency_check(di)
    assert cons.feasible
    for v, rot in di.rotation.items():
        assert sum(cons.rcharge[e] for e in rot) == 2
    for face in di.faces():
        assert sum(1 - cons.rcharge[e] for (e, _, _) in face) == 2

    ms, truncated = perfect_matchings(di)
    assert not truncated and ms == matchings_by_subsets(di)

    g1 = grading_from_matchings(di, [("d1", "d2", "om")], [-1])
    g2 = grading_from_matchings(di, [("d1", "d2", "om"),
                                     ("d1", "d2", "h2")], [-1, -1])
    assert (g1.a_invariant, g2.a_invariant) == (1, 2)
    for g in (g1, g2):
        pres = jacobian_presentation(qp, g)
        assert all(r.is_homogeneous(pres.ctx) for r in pres.relations)

    hqp = dual_qp(hexd)
    hms, _ = perfect_matchings(hexd)
    hdeg = grading_from_matchings(hexd, hms, [-1] * 3)
    hpres = jacobian_presentation(hqp, hdeg)
    rc = RewriteContext(hpres, 8)
    assert [rc.basis(-w).dim() for w in range(4)] == [1, 3, 6, 10]
    report(5, "four-face dimer validates (chi = 0) with the displayed dual "
              "quiver, an exactly verified positive charge, matchings "
              "equal to the subset oracle, and gradings of a-invariant 1 "
              "and 2 with homogeneous relations; the one-face dimer gives "
              "the three-variable polynomial dimensions 1, 3, 6, 10")


def test_criterion_6_cy3_complexes():
    for name in ("hexagonal.dimer", "four_face.dimer"):
        dimer = load_dimer(DATA / name)
        qp = dual_qp(dimer)
        ms, _ = perfect_matchings(dimer)
        if name.startswith("hex"):
            gradings = [grading_from_matchings(dimer, ms, [-1] * len(ms))]
        else:
            gradings = [
                grading_from_matchings(dimer, [("d1", "d2", "om")], [-1]),
                grading_from_matchings(
                    dimer, [("d1", "d2", "om"), ("d1", "d2", "h2")],
                    [-1, -1]),
            ]
        for deg in gradings:
            assert cy3_complex(qp, deg).check_complex(6)
    report(6, "the four-term free bimodule complexes of both dimers "
              "compose to zero after reduction at cap 6")


def test_criterion_7_root_of_translation():
    r1 = verify_root(load("k_xy.pres"), 2, 20, cap=30)
    assert r1.passed and r1.label_ok
    r2 = verify_root(load("k_xy_23.pres"), 5, 20, cap=32)
    assert r2.passed and r2.label_ok
    report(7, "the degree-shift step iterates to the translation over 20 "
              "steps for a = 2 and a = 5, with dimension vectors cross- "
              "checked against graded piece dimensions")


def test_criterion_8_cluster_hom_shadow():
    for m in (2, 3, 4):
        pres = load(f"skew_{m}.pres")
        assert cluster_hom_shadow(pres, 0) == 1
        assert cluster_hom_shadow(pres, -1) == m
    report(8, "shifted endomorphism dimensions: 1 at index 0 and m at "
              "index -1 for the sum-of-squares algebras, m in {2, 3, 4}")


def test_criterion_9_property_suites():
    from gradedcy.arshadow import knit_component, mesh_additive
    from gradedcy.quiver import Path

    rng = random.Random(987654321)
    corpus = ["k_x.pres", "k_xy.pres", "k_xy_23.pres", "k_xyz.pres",
              "skew_2.pres", "skew_3.pres", "skew_4.pres"]

    # normal form idempotence under random paths
    for name in corpus:
        pres = load(name)
        from gradedcy.rewriting import truncated_rewriting
        rs = truncated_rewriting(pres, 8)
        quiver = pres.quiver
        for _ in range(40):
            v = rng.choice(quiver.vertices)
            arrows, cur = [], v
            for _ in range(rng.randrange(0, 8)):
                outs = quiver.arrows_by_source[cur]
                if not outs:
                    break
                i = rng.choice(outs)
                arrows.append(i)
                cur = quiver.arrows[i].target
            once = rs.reduce(NCPoly.monomial(Path(v, tuple(arrows))))
            assert rs.reduce(once).terms == once.terms

    # graded dimensions against the path-space quotient oracle
    for name in corpus:
        pres = load(name)
        rc = RewriteContext(pres, 6)
        for w in range(0, -7, -1):
            got = sum(len(rc.rs.normal_paths(v, 6, degree=w))
                      for v in pres.quiver.vertices)
            assert got == brute_force_graded_dimension(pres, w, 6), (name, w)

    # radical decomposition of every built trivial extension
    for name, a in (("k_x.pres", 1), ("k_xy.pres", 2), ("k_xyz.pres", 3),
                    ("skew_2.pres", 2), ("skew_3.pres", 2)):
        A, U, B = build_AUB(load(name), a)
        rad_b = radical(B)
        rad_a = radical(A)
        assert len(rad_b.basis) == len(rad_a.basis) + U.dim
        n = A.dim
        for i in range(U.dim):
            for j in range(U.dim):
                assert B.product({n + i: Fraction(1)},
                                 {n + j: Fraction(1)}) == {}

    # mesh additivity on knitted fragments
    KRON = Quiver(["0", "1"], [Arrow("x", "0", "1", 0),
                               Arrow("y", "0", "1", 0)])
    A2 = Quiver(["0", "1"], [Arrow("a", "0", "1", 0)])
    A5 = Quiver(["0", "1", "2", "3", "4"],
                [Arrow("x0", "0", "2", 0), Arrow("x1", "1", "3", 0),
                 Arrow("x2", "2", "4", 0), Arrow("y0", "0", "3", 0),
                 Arrow("y1", "1", "4", 0)])
    for Q in (KRON, A2, A5):
        assert mesh_additive(knit_component(Q, 8))

    # matching enumeration against the subset oracle (<= 14 edges)
    for name in ("hexagonal.dimer", "four_face.dimer", "pendant.dimer"):
        dimer = load_dimer(DATA / name)
        assert len(dimer.edges) <= 14
        ms, _ = perfect_matchings(dimer)
        assert ms == matchings_by_subsets(dimer)

    report(9, "property suites green: reduction idempotence (randomized), "
              "graded dimensions vs the path-space oracle to degree -6, "
              "radical decomposition and square-zero layer on every built "
              "extension, mesh additivity on knitted fragments, matching "
              "enumeration vs the subset oracle")

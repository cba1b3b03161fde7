import random
from math import comb

import pytest

from gradedcy.errors import CapTooSmall
from gradedcy.quiver import NCPoly, Path, parse_presentation
from gradedcy.rewriting import (RewriteContext, graded_dimension,
                                truncated_rewriting)

from helpers import brute_force_graded_dimension, load


def rule_names(pres, rs):
    quiver = pres.quiver
    return sorted(tuple(quiver.arrows[i].name for i in lhs)
                  for lhs, _, _ in rs.rules)


def test_commutative_koszul_single_rule():
    pres = load("k_xy.pres")
    rs = truncated_rewriting(pres, 6)
    assert rule_names(pres, rs) == [("y", "x")]


def test_skew_two_variable_completion():
    pres = load("skew_2.pres")
    rs = truncated_rewriting(pres, 6)
    names = rule_names(pres, rs)
    assert ("x2", "x2") in names
    # the resolved overlap adds the cube rule
    assert ("x2", "x1", "x1") in names


def test_cap_too_small():
    pres = load("skew_2.pres")
    with pytest.raises(CapTooSmall):
        truncated_rewriting(pres, 1)


def test_polynomial_dimensions_binomial():
    for n, name in ((1, "k_x.pres"), (2, "k_xy.pres"), (3, "k_xyz.pres")):
        pres = load(name)
        for w in range(0, 7):
            d, _ = graded_dimension(pres, -w, "P", "P", cap=9)
            assert d == comb(w + n - 1, n - 1), (name, w)


def test_positive_degrees_vanish():
    pres = load("k_xy.pres")
    rc = RewriteContext(pres, 6)
    for w in (1, 2, 3):
        assert rc.basis(w).dim() == 0


def test_skew_three_variables_piece():
    pres = load("skew_3.pres")
    d, basis = graded_dimension(pres, -2, "P", "P", cap=6)
    assert d == 8
    assert basis.dim() == 8


def test_preprojective_kronecker_layer_against_bruteforce():
    from gradedcy.quiver import Arrow, Quiver
    from gradedcy.preprojective import preprojective_presentation

    Q = Quiver(["0", "1"], [Arrow("x", "0", "1", 0), Arrow("y", "0", "1", 0)])
    pres = preprojective_presentation(Q)
    rc = RewriteContext(pres, 8)
    got = rc.basis(-1).dim()
    oracle = brute_force_graded_dimension(pres, -1, 8)
    assert got == oracle == 12


CORPUS = ["k_x.pres", "k_xy.pres", "k_xy_23.pres", "k_xyz.pres",
          "skew_2.pres", "skew_3.pres", "skew_4.pres"]


@pytest.mark.parametrize("name", CORPUS)
def test_graded_dimension_matches_bruteforce(name):
    pres = load(name)
    cap = 6
    rc = RewriteContext(pres, cap)
    for w in range(0, -7, -1):
        got = sum(len(rc.rs.normal_paths(v, cap, degree=w))
                  for v in pres.quiver.vertices)
        oracle = brute_force_graded_dimension(pres, w, cap)
        assert got == oracle, (name, w)


@pytest.mark.parametrize("name", CORPUS)
def test_normal_form_idempotent(name):
    pres = load(name)
    rs = truncated_rewriting(pres, 8)
    ctx = pres.ctx
    rng = random.Random(20250810)
    quiver = pres.quiver
    for _ in range(60):
        v = rng.choice(quiver.vertices)
        arrows = []
        cur = v
        for _ in range(rng.randrange(0, 8)):
            outs = quiver.arrows_by_source[cur]
            if not outs:
                break
            i = rng.choice(outs)
            arrows.append(i)
            cur = quiver.arrows[i].target
        p = Path(v, tuple(arrows))
        once = rs.reduce(NCPoly.monomial(p))
        twice = rs.reduce(once)
        assert once.terms == twice.terms


def test_length_table_counts_lazy_paths():
    from gradedcy.rewriting import length_table
    pres = load("k_xy.pres")
    lt = length_table(pres, 3)
    assert lt[("P", "P")][0] == 1
    assert lt[("P", "P")][1] == 2
    assert lt[("P", "P")][2] == 3


def _random_presentation(rng):
    from fractions import Fraction

    from gradedcy.quiver import (Arrow, GradedQuiverPresentation, NCPoly,
                                 Quiver)

    from helpers import all_paths

    nv = rng.randrange(1, 4)
    verts = [str(i) for i in range(nv)]
    arrows = []
    for i in range(rng.randrange(2, 5)):
        arrows.append(Arrow(f"a{i}", rng.choice(verts), rng.choice(verts),
                            -rng.randrange(1, 3)))
    Q = Quiver(verts, arrows)
    probe = GradedQuiverPresentation(Q, [])
    ctx = probe.ctx
    buckets = {}
    for p in all_paths(probe, 4):
        if 1 <= len(p) <= 3:
            key = (p.source, ctx.target(p), ctx.degree(p))
            buckets.setdefault(key, []).append(p)
    cand = [b for b in buckets.values() if len(b) >= 2]
    rng.shuffle(cand)
    rels = []
    for bucket in cand[:rng.randrange(1, 3)]:
        k = rng.randrange(2, min(len(bucket), 3) + 1)
        chosen = rng.sample(bucket, k)
        rels.append(NCPoly({p: rng.choice([-2, -1, 1, 2])
                            for p in chosen}))
    return GradedQuiverPresentation(Q, rels)


def test_fuzz_rewriting_against_oracle():
    """Random homogeneous presentations: normal-form counts agree with the
    path-space quotient, and reduction is multiplicative."""
    from gradedcy.quiver import Path

    rng = random.Random(424242)
    for trial in range(60):
        pres = _random_presentation(rng)
        rs = truncated_rewriting(pres, 6)
        ctx = pres.ctx
        for w in range(0, -5, -1):
            got = sum(len(rs.normal_paths(v, 6, degree=w))
                      for v in pres.quiver.vertices)
            assert got == brute_force_graded_dimension(pres, w, 6), \
                (trial, w)
        # nf(p q) == nf(nf(p) nf(q)) for short random paths
        for _ in range(6):
            parts = []
            for _ in range(2):
                v = rng.choice(pres.quiver.vertices)
                arrows, cur = [], v
                for _ in range(rng.randrange(0, 3)):
                    outs = pres.quiver.arrows_by_source[cur]
                    if not outs:
                        break
                    i = rng.choice(outs)
                    arrows.append(i)
                    cur = pres.quiver.arrows[i].target
                parts.append(Path(v, tuple(arrows)))
            p, q = parts
            pq = ctx.compose(p, q)
            if pq is None:
                continue
            direct = rs.reduce(NCPoly.monomial(pq))
            recombined = NCPoly()
            for mp, cp in rs.reduce(NCPoly.monomial(p)).terms.items():
                for mq, cq in rs.reduce(NCPoly.monomial(q)).terms.items():
                    comp = ctx.compose(mp, mq)
                    if comp is not None:
                        recombined = recombined + \
                            rs.reduce(NCPoly.monomial(comp)).scale(cp * cq)
            assert direct.terms == recombined.terms, trial

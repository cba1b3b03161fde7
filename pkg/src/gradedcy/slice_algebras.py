"""Finite dimensional algebras cut out of the graded pieces of a quotient
path algebra.

Given a negatively graded presentation of R and a positive integer a,
`build_A` assembles the lower triangular a x a slice algebra whose (s, t)
entry is the degree s - t piece of R, `build_U` the companion bimodule
shifted one step further down, and `build_B` their trivial extension.
Basis elements are triples (slot s, slot t, normal-form path); products
are computed by reducing path concatenations.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonStabilizing, NotSurjective, PositiveDegree, \
    WindowViolation
from .fdalgebra import FDAlgebra, FDBimodule, trivial_extension
from .linalg import SparseEliminator, vec_add
from .quiver import NCPoly, Quiver
from .rewriting import RewriteContext, truncated_rewriting


def default_cap(a):
    return 2 * (a + 2)


class SliceBasis:
    """Bookkeeping shared by build_A / build_U: normal-form bases of the
    graded pieces of R needed for slot degrees 0..-depth."""

    def __init__(self, pres, depth, cap=None):
        if not pres.is_negatively_graded():
            bad = [a.name for a in pres.quiver.arrows if a.degree > 0]
            raise PositiveDegree(f"arrows of positive degree: {bad}")
        self.pres = pres
        self.cap = cap if cap is not None else default_cap(depth)
        self.rc = RewriteContext(pres, self.cap)
        self.pieces = {}
        for w in range(0, depth + 1):
            self.pieces[-w] = self.rc.basis(-w)

    def paths(self, degree, source=None, target=None):
        basis = self.pieces[degree]
        out = []
        for (s, t), plist in sorted(basis.by_pair.items(),
                                    key=lambda kv: str(kv[0])):
            if source is not None and s != source:
                continue
            if target is not None and t != target:
                continue
            out.extend(plist)
        return out


def _slice_elements(sb: SliceBasis, a, offset):
    """Basis triples (s, t, path) with deg(path) = s - t - offset."""
    out = []
    for s in range(a):
        for t in range(a):
            w = s - t - offset
            if w > 0 or w not in sb.pieces:
                continue
            for p in sb.paths(w):
                out.append((s, t, p))
    return out


def _product_into_basis(sb, index_of, s, u, p, q):
    """Expand (path p)(path q) in normal form and map to basis indices of
    the (s, u, *) block."""
    ctx = sb.pres.ctx
    comp = ctx.compose(p, q)
    if comp is None:
        return {}
    nf = sb.rc.normal_form(NCPoly.monomial(comp))
    out = {}
    for mono, c in nf.terms.items():
        key = (s, u, mono)
        idx = index_of.get(key)
        if idx is None:
            raise NonStabilizing(
                "product left the computed graded basis; raise the cap")
        out = vec_add(out, {idx: Fraction(c)})
    return out


def build_A(pres, a, cap=None) -> FDAlgebra:
    """Lower triangular a x a slice algebra of the presentation."""
    if a < 1:
        raise ValueError("a must be >= 1")
    sb = SliceBasis(pres, a - 1, cap)
    ctx = pres.ctx
    elements = _slice_elements(sb, a, 0)
    labels = [f"({s}->{t}){ctx.format_path(p)}" for s, t, p in elements]
    index_of = {e: i for i, e in enumerate(elements)}
    mult = {}
    for i, (s, t, p) in enumerate(elements):
        for j, (s2, u, q) in enumerate(elements):
            if t != s2:
                continue
            v = _product_into_basis(sb, index_of, s, u, p, q)
            if v:
                mult[(i, j)] = v
    idems = [index_of[(s, s, p)] for s in range(a)
             for p in sb.paths(0) if p.is_lazy and (s, s, p) in index_of]
    grading = [s - t for s, t, _ in elements]
    alg = FDAlgebra(labels, mult, idems, grading=grading,
                    name=f"A({pres.name or 'R'},a={a})")
    alg._slice_data = (sb, elements, index_of, a)
    return alg


def build_U(pres, a, cap=None, A: FDAlgebra = None) -> FDBimodule:
    """(A, A)-bimodule whose (s, t) entry is the degree s - t - 1 piece."""
    if A is None:
        A = build_A(pres, a, cap)
    sb, a_elements, a_index, a_check = A._slice_data
    assert a_check == a
    ctx = pres.ctx
    if min(sb.pieces) > -a:
        sb = SliceBasis(pres, a, cap)
    u_elements = _slice_elements(sb, a, 1)
    labels = [f"({s}=>{t}){ctx.format_path(p)}" for s, t, p in u_elements]
    u_index = {e: i for i, e in enumerate(u_elements)}
    left, right = {}, {}
    for i, (s, t, p) in enumerate(a_elements):
        for j, (s2, u, q) in enumerate(u_elements):
            if t != s2:
                continue
            v = _product_into_basis(sb, u_index, s, u, p, q)
            if v:
                left[(i, j)] = v
    for j, (s, t, q) in enumerate(u_elements):
        for i, (s2, u, p) in enumerate(a_elements):
            if t != s2:
                continue
            v = _product_into_basis(sb, u_index, s, u, q, p)
            if v:
                right[(j, i)] = v
    bim = FDBimodule(A, labels, left, right,
                     name=f"U({pres.name or 'R'},a={a})")
    bim._slice_data = (sb, u_elements, u_index, a)
    return bim


def build_B(A: FDAlgebra, U: FDBimodule) -> FDAlgebra:
    """Trivial extension A + U; the U part squares to zero."""
    name_a = A.name or "A"
    return trivial_extension(A, U, name=f"B[{name_a}]")


def build_AUB(pres, a, cap=None):
    A = build_A(pres, a, cap)
    U = build_U(pres, a, cap, A=A)
    return A, U, build_B(A, U)


def multiply_grading(pres, n):
    """All arrow degrees (and the declared a-invariant) scaled by n."""
    return pres.scale_degrees(n)


def build_tilde(A: FDAlgebra, U: FDBimodule, n):
    """n-fold block construction: A~ = n copies of A on the diagonal, U~
    the cyclic bimodule with A blocks above the diagonal and U in the
    lower-left corner, B~ their trivial extension.  n = 1 returns
    (A, U, B) itself (same bases)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return A, U, build_B(A, U)
    labels_a = [f"[{k}]{l}" for k in range(n) for l in A.labels]

    def ai(k, i):
        return k * A.dim + i

    mult = {}
    for k in range(n):
        for (i, j), v in A.mult.items():
            mult[(ai(k, i), ai(k, j))] = {ai(k, t): c for t, c in v.items()}
    idems = [ai(k, e) for k in range(n) for e in A.idempotents]
    At = FDAlgebra(labels_a, mult, idems,
                   name=f"tilde_A({A.name or 'A'},n={n})")

    # U~ basis: blocks (k+1 -> k) carrying A's basis for k < n-1, and a
    # block (0 -> n-1) carrying U's basis (matching the construction for
    # the grading multiplied by n).
    u_labels = []
    block_elems = []  # ('A', k, i) or ('U', u)
    for k in range(n - 1):
        for i, l in enumerate(A.labels):
            u_labels.append(f"[{k+1}>{k}]{l}")
            block_elems.append(("A", k, i))
    for u, l in enumerate(U.labels):
        u_labels.append(f"[0>{n-1}]{l}")
        block_elems.append(("U", u))
    u_index = {e: i for i, e in enumerate(block_elems)}

    left, right = {}, {}
    for k in range(n):
        for i in range(A.dim):
            for j, elem in enumerate(block_elems):
                if elem[0] == "A":
                    _, kb, ib = elem
                    if kb + 1 == k:
                        v = A.mult.get((i, ib))
                        if v:
                            left[(ai(k, i), j)] = {
                                u_index[("A", kb, t)]: c
                                for t, c in v.items()}
                    if kb == k:
                        v = A.mult.get((ib, i))
                        if v:
                            right[(j, ai(k, i))] = {
                                u_index[("A", kb, t)]: c
                                for t, c in v.items()}
                else:
                    _, ub = elem
                    if k == 0:
                        v = U.left.get((i, ub))
                        if v:
                            left[(ai(k, i), j)] = {
                                u_index[("U", t)]: c for t, c in v.items()}
                    if k == n - 1:
                        v = U.right.get((ub, i))
                        if v:
                            right[(j, ai(k, i))] = {
                                u_index[("U", t)]: c for t, c in v.items()}
    Ut = FDBimodule(At, u_labels, left, right,
                    name=f"tilde_U({U.name or 'U'},n={n})")
    Bt = trivial_extension(At, Ut, name=f"tilde_B(n={n})")
    return At, Ut, Bt


def cluster_hom_shadow(pres, m, cap=None):
    """dim of the degree-m piece of R, valid for -(d+a)+1 <= m <= 0.

    Outside that window the graded piece no longer computes the shifted
    endomorphism dimensions, so the query is refused.
    """
    if pres.cy is None:
        raise ValueError("presentation lacks declared CY data")
    if not pres.is_negatively_graded():
        raise PositiveDegree("negatively graded presentation required")
    d = pres.cy.dimension - 1
    a = pres.cy.a_invariant
    lo = -(d + a) + 1
    if not (lo <= m <= 0):
        raise WindowViolation(
            f"index {m} outside the valid window [{lo}, 0]")
    if cap is None:
        cap = default_cap(-m + 1)
    rc = RewriteContext(pres, cap)
    return rc.basis(m).dim()


# ---------------------------------------------------------------------------
# Gabriel quiver of a trivial extension (engine lives in findim)
# ---------------------------------------------------------------------------

def gabriel_quiver_of_B(B: FDAlgebra, basicify=False) -> Quiver:
    from .findim import gabriel_quiver
    return gabriel_quiver(B, basicify=basicify)


# ---------------------------------------------------------------------------
# reconstructing relations from structure constants
# ---------------------------------------------------------------------------

def relations_from_structure(alg: FDAlgebra, guess: Quiver, arrow_images,
                             cap, vertex_idempotents=None):
    """Minimal homogeneous generators of the kernel of kQ -> alg up to
    path length `cap`.

    arrow_images: arrow name -> element (sparse vec) of alg; the images
    must generate the radical over the idempotents.  vertex_idempotents
    maps quiver vertices to positions in alg.idempotents (defaults to
    declaration order).
    """
    from .quiver import GradedQuiverPresentation, Path

    ctx = GradedQuiverPresentation(guess, []).ctx
    if vertex_idempotents is None:
        if len(guess.vertices) != len(alg.idempotents):
            raise ValueError("vertex count differs from idempotent count; "
                             "pass vertex_idempotents")
        vertex_idempotents = {v: k for k, v in enumerate(guess.vertices)}
    idem_vec = {v: alg.basis_vec(alg.idempotents[k])
                for v, k in vertex_idempotents.items()}

    # sanity: image of arrow a sits between its endpoint idempotents
    for name, vec in arrow_images.items():
        a = guess.arrow(name)
        between = alg.product(idem_vec[a.source],
                              alg.product(vec, idem_vec[a.target]))
        if between != {k: Fraction(c) for k, c in vec.items()}:
            raise ValueError(
                f"image of {name} is not concentrated between e_{a.source} "
                f"and e_{a.target}")

    found = []           # NCPoly relations
    lead_words = []      # their leading words, used to prune enumeration

    def reducible(arrows):
        for lhs in lead_words:
            L = len(lhs)
            for pos in range(len(arrows) - L + 1):
                if arrows[pos:pos + L] == lhs:
                    return True
        return False

    elim = SparseEliminator()
    basis_paths = []     # paths whose images are independent so far
    img_cache = {}

    def image(path: Path):
        got = img_cache.get(path)
        if got is not None:
            return got
        if path.is_lazy:
            vec = idem_vec[path.source]
        else:
            prefix = Path(path.source, path.arrows[:-1])
            last = guess.arrows[path.arrows[-1]].name
            vec = alg.product(image(prefix), arrow_images[last])
        img_cache[path] = vec
        return vec

    frontier = [Path(v, ()) for v in guess.vertices]
    for p in frontier:
        elim.add(image(p))
        basis_paths.append(p)

    for length in range(1, cap + 1):
        new_frontier = []
        for p in frontier:
            tgt = ctx.target(p)
            for i in guess.arrows_by_source[tgt]:
                q = Path(p.source, p.arrows + (i,))
                if reducible(q.arrows):
                    continue
                vec = image(q)
                red = elim.reduce(vec)
                if red:
                    # independent: q is a new normal word
                    elim.add(vec)
                    basis_paths.append(q)
                    new_frontier.append(q)
                else:
                    # dependent: solve for the combination over basis words
                    rel = _dependence_relation(alg, ctx, q, vec, basis_paths,
                                               image)
                    found.append(rel)
                    lead_words.append(q.arrows)
        frontier = new_frontier
        if not frontier:
            break

    span = SparseEliminator()
    for p in basis_paths:
        span.add(image(p))
    if span.rank != alg.dim:
        raise NotSurjective(
            f"arrow images span {span.rank} of {alg.dim} dimensions "
            f"within length {cap}")
    return found


def _dependence_relation(alg, ctx, q, vec, basis_paths, image):
    from .linalg import mat_from_columns, solve

    cols = [image(p) for p in basis_paths]
    m = mat_from_columns(cols, alg.dim)
    rhs = [Fraction(0)] * alg.dim
    for i, c in vec.items():
        rhs[i] = Fraction(c)
    x = solve(m, rhs)
    assert x is not None
    terms = {q: Fraction(1)}
    for j, c in enumerate(x):
        if c:
            terms[basis_paths[j]] = terms.get(basis_paths[j], 0) - c
    return NCPoly(terms)


def reduce_mod(relations, other_pres_relations, guess, cap):
    """Reduce each NCPoly in `relations` modulo the ideal generated by
    `other_pres_relations` over the quiver `guess`; returns the reductions."""
    from .quiver import GradedQuiverPresentation

    pres = GradedQuiverPresentation(guess, list(other_pres_relations))
    rs = truncated_rewriting(pres, cap)
    return [rs.reduce(r) for r in relations]

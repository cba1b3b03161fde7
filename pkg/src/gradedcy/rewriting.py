"""Degree-truncated rewriting for path algebra quotients.

`truncated_rewriting` runs a Buchberger-style completion on the relation
set, resolving every overlap whose ambiguity word has length <= cap.
Rewriting under a length-lex order never increases path length, so the
returned system computes unique normal forms for all paths of length
<= cap.  Nothing is claimed beyond the cap; `graded_dimension` therefore
double-checks itself by recomputing with cap+2 and raises NonStabilizing
on mismatch (the signature of a degree-0 cycle surviving in the quotient).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CapTooSmall, NonStabilizing
from .quiver import NCPoly, Path, PathAlgebraContext


class RewritingSystem:
    """Confluent-up-to-cap rewrite rules: leading path -> smaller NCPoly."""

    def __init__(self, ctx: PathAlgebraContext, cap: int):
        self.ctx = ctx
        self.cap = cap
        self.rules = []            # list of (lhs_arrows_tuple, source, rhs)
        self._by_first = {}        # first arrow index -> [rule indices]
        self._nf_cache = {}

    # -- rule bookkeeping ---------------------------------------------------

    def _add_rule(self, poly: NCPoly):
        ctx = self.ctx
        lead = poly.leading(ctx)
        c = poly.terms[lead]
        rest = NCPoly({p: -Fraction(x) / c for p, x in poly.terms.items()
                       if p != lead})
        self.rules.append((lead.arrows, lead.source, rest))
        self._by_first.setdefault(lead.arrows[0], []).append(
            len(self.rules) - 1)
        self._nf_cache.clear()

    def _find_redex(self, arrows):
        """Leftmost, then longest-overlap-first occurrence of a rule LHS."""
        for pos in range(len(arrows)):
            for ri in self._by_first.get(arrows[pos], ()):
                lhs = self.rules[ri][0]
                if arrows[pos:pos + len(lhs)] == lhs:
                    return pos, ri
        return None

    # -- reduction ----------------------------------------------------------

    def reduce_path(self, path: Path) -> NCPoly:
        cached = self._nf_cache.get(path)
        if cached is not None:
            return cached
        ctx = self.ctx
        hit = self._find_redex(path.arrows)
        if hit is None:
            out = NCPoly.monomial(path)
        else:
            pos, ri = hit
            lhs, _, rhs = self.rules[ri]
            post_arrows = path.arrows[pos + len(lhs):]
            out = NCPoly()
            for q, c in rhs.terms.items():
                mono = Path(path.source,
                            path.arrows[:pos] + q.arrows + post_arrows)
                out = out + self.reduce_path(mono).scale(c)
        self._nf_cache[path] = out
        return out

    def reduce(self, poly: NCPoly) -> NCPoly:
        out = NCPoly()
        for p, c in poly.terms.items():
            out = out + self.reduce_path(p).scale(c)
        return out

    def is_normal(self, arrows) -> bool:
        return self._find_redex(arrows) is None

    def normal_suffix_ok(self, arrows) -> bool:
        """For DFS extension: assuming arrows[:-1] normal, check no rule LHS
        ends at the last position."""
        n = len(arrows)
        for lhs, _, _ in self.rules:
            L = len(lhs)
            if L <= n and arrows[n - L:] == lhs:
                return False
        return True

    # -- normal form enumeration --------------------------------------------

    def normal_paths(self, source, max_len, degree=None, target=None,
                     prune_degree=True):
        """All normal-form paths from `source` of length <= max_len.

        With `degree` set, only paths of that internal degree are returned
        (the DFS still explores everything reachable within max_len).  When
        every arrow degree is <= 0 and prune_degree is on, branches whose
        degree has dropped below `degree` are cut.
        """
        ctx = self.ctx
        quiver = ctx.quiver
        negatively = all(a.degree <= 0 for a in quiver.arrows)
        out = []

        def visit(path, cur_deg, cur_tgt):
            if ((degree is None or cur_deg == degree)
                    and (target is None or cur_tgt == target)):
                out.append(path)
            if len(path.arrows) == max_len:
                return
            for i in quiver.arrows_by_source[cur_tgt]:
                a = quiver.arrows[i]
                nd = cur_deg + a.degree
                if (prune_degree and negatively and degree is not None
                        and nd < degree):
                    continue
                new = Path(path.source, path.arrows + (i,))
                if self.normal_suffix_ok(new.arrows):
                    visit(new, nd, a.target)

        visit(Path(source, ()), 0, source)
        return out


def truncated_rewriting(pres, cap) -> RewritingSystem:
    """Complete the relation set of `pres` up to ambiguity length `cap`."""
    if cap < pres.max_relation_length:
        raise CapTooSmall(
            f"cap {cap} below maximal relation path length "
            f"{pres.max_relation_length}")
    ctx = pres.ctx
    rs = RewritingSystem(ctx, cap)
    pending = sorted(pres.relations,
                     key=lambda r: ctx.key(r.leading(ctx)))
    for r in pending:
        red = rs.reduce(r)
        if red:
            rs._add_rule(red)

    # Resolve overlap ambiguities in order of ambiguity-word length.
    from heapq import heappush, heappop

    queue = []
    counter = 0

    def push_one(a, b):
        nonlocal counter
        la = rs.rules[a][0]
        lb = rs.rules[b][0]
        # suffix of la equals prefix of lb (proper overlap)
        for k in range(1, min(len(la), len(lb))):
            if la[len(la) - k:] == lb[:k]:
                word_len = len(la) + len(lb) - k
                if word_len <= cap:
                    heappush(queue, (word_len, counter, a, b, k))
                    counter += 1
        # lb properly contained in la
        if a != b and len(lb) < len(la):
            for pos in range(len(la) - len(lb) + 1):
                if la[pos:pos + len(lb)] == lb:
                    heappush(queue, (len(la), counter, a, b, -(pos + 1)))
                    counter += 1

    def push_pairs(ri):
        for rj in range(ri + 1):
            push_one(ri, rj)
            if rj != ri:
                push_one(rj, ri)

    done = 0
    while True:
        while done < len(rs.rules):
            push_pairs(done)
            done += 1
        if not queue:
            break
        _, _, a, b, k = heappop(queue)
        la, src_a, ra = rs.rules[a]
        lb, src_b, rb = rs.rules[b]
        if k > 0:
            # word = la + lb[k:]; spoly = ra*tail - head*rb
            tail = lb[k:]
            head = la[:len(la) - k]
            s1 = NCPoly()
            for q, c in ra.terms.items():
                s1 = s1 + NCPoly.monomial(Path(q.source, q.arrows + tail), c)
            s2 = NCPoly()
            hsrc = src_a
            for q, c in rb.terms.items():
                s2 = s2 + NCPoly.monomial(Path(hsrc, head + q.arrows), c)
            spoly = s1 - s2
        else:
            pos = -k - 1
            pre = la[:pos]
            post = la[pos + len(lb):]
            s2 = NCPoly()
            for q, c in rb.terms.items():
                s2 = s2 + NCPoly.monomial(Path(src_a, pre + q.arrows + post),
                                          c)
            spoly = ra - s2
        red = rs.reduce(spoly)
        if red:
            rs._add_rule(red)
    return rs


# ---------------------------------------------------------------------------
# graded dimensions
# ---------------------------------------------------------------------------

class GradedPieceBasis:
    """Normal-form basis of one graded piece, split by vertex pair."""

    def __init__(self, degree, by_pair):
        self.degree = degree
        self.by_pair = by_pair  # (source, target) -> list of Path

    def dim(self, source=None, target=None):
        total = 0
        for (s, t), paths in self.by_pair.items():
            if source is not None and s != source:
                continue
            if target is not None and t != target:
                continue
            total += len(paths)
        return total


class RewriteContext:
    """Caches the rewriting system and graded bases for one presentation."""

    def __init__(self, pres, cap):
        self.pres = pres
        self.cap = max(cap, pres.max_relation_length)
        self.rs = truncated_rewriting(pres, self.cap)
        self._basis_cache = {}
        self._checked_degrees = set()
        self._probe = None

    def basis(self, degree, check_stability=True):
        got = self._basis_cache.get(degree)
        if got is None:
            got = self._collect(self.rs, degree, self.cap)
            self._basis_cache[degree] = got
        if check_stability and degree not in self._checked_degrees:
            probe_cap = self.cap + 2
            if self._probe is None:
                self._probe = truncated_rewriting(self.pres, probe_cap)
            probe = self._probe
            again = self._collect(probe, degree, probe_cap)
            if {k: len(v) for k, v in got.by_pair.items()} != \
                    {k: len(v) for k, v in again.by_pair.items()}:
                raise NonStabilizing(
                    f"graded piece at degree {degree} changed between cap "
                    f"{self.cap} and {probe_cap}")
            self._checked_degrees.add(degree)
        return got

    def _collect(self, rs, degree, cap):
        ctx = self.pres.ctx
        by_pair = {}
        for v in self.pres.quiver.vertices:
            for p in rs.normal_paths(v, cap, degree=degree):
                key = (v, ctx.target(p))
                by_pair.setdefault(key, []).append(p)
        for paths in by_pair.values():
            paths.sort(key=ctx.key)
        return GradedPieceBasis(degree, by_pair)

    def normal_form(self, poly):
        return self.rs.reduce(poly)


def graded_dimension(pres, degree, source, target, cap,
                     check_stability=True):
    """Dimension of the (source -> target) graded piece, plus its basis."""
    rc = RewriteContext(pres, cap)
    basis = rc.basis(degree, check_stability=check_stability)
    return basis.dim(source, target), basis


def dimension_table(pres, degrees, cap, check_stability=True):
    """degree -> {(source, target) -> dim} for the listed degrees."""
    rc = RewriteContext(pres, cap)
    table = {}
    for w in degrees:
        basis = rc.basis(w, check_stability=check_stability)
        table[w] = {pair: len(paths)
                    for pair, paths in sorted(basis.by_pair.items(),
                                              key=lambda kv: str(kv[0]))}
    return table


def length_table(pres, max_len):
    """(source, target) -> [count of normal forms of each length 0..max_len].

    Length-indexed (not degree-indexed); used to compare two presentations
    of the same finite dimensional algebra.
    """
    rs = truncated_rewriting(pres, max_len)
    ctx = pres.ctx
    table = {}
    for v in pres.quiver.vertices:
        for p in rs.normal_paths(v, max_len):
            key = (v, ctx.target(p))
            counts = table.setdefault(key, [0] * (max_len + 1))
            counts[len(p.arrows)] += 1
    return table

"""Finite dimensional algebras and bimodules by structure constants.

An FDAlgebra is an ordered basis with labels, sparse structure constants
over Q, and a declared complete set of orthogonal idempotents (given as
indices of basis elements).  Elements are sparse dicts index -> Fraction.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import NotSplitBasic
from .linalg import vec_add


class FDAlgebra:
    def __init__(self, labels, mult, idempotent_indices, grading=None,
                 name=""):
        """mult: dict (i, j) -> sparse vec for basis_i * basis_j."""
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mult = {k: {i: Fraction(c) for i, c in v.items() if c}
                     for k, v in mult.items() if v}
        self.idempotents = list(idempotent_indices)
        self.grading = grading
        self.name = name
        self._validate_idempotents()

    # -- basics ---------------------------------------------------------

    def unit(self):
        u = {}
        for i in self.idempotents:
            u = vec_add(u, {i: Fraction(1)})
        return u

    def basis_vec(self, i):
        return {i: Fraction(1)}

    def product(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                w = self.mult.get((i, j))
                if w:
                    out = vec_add(out, w, a * b)
        return out

    def _validate_idempotents(self):
        for i in self.idempotents:
            sq = self.mult.get((i, i), {})
            if sq != {i: Fraction(1)}:
                raise ValueError(f"declared idempotent {self.labels[i]} "
                                 "is not idempotent")
        for i in self.idempotents:
            for j in self.idempotents:
                if i != j and self.mult.get((i, j)):
                    raise ValueError("declared idempotents not orthogonal")

    def check_associative(self):
        """Exhaustive associativity check on basis triples; returns True or
        raises ValueError naming the first bad triple."""
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult.get((i, j), {})
                for k in range(self.dim):
                    left = {}
                    for t, c in ij.items():
                        tk = self.mult.get((t, k))
                        if tk:
                            left = vec_add(left, tk, c)
                    jk = self.mult.get((j, k), {})
                    right = {}
                    for t, c in jk.items():
                        it = self.mult.get((i, t))
                        if it:
                            right = vec_add(right, it, c)
                    if left != right:
                        raise ValueError(
                            f"associativity fails on "
                            f"({self.labels[i]},{self.labels[j]},"
                            f"{self.labels[k]})")
        return True

    def check_unit(self):
        one = self.unit()
        for i in range(self.dim):
            b = self.basis_vec(i)
            if self.product(one, b) != b or self.product(b, one) != b:
                raise ValueError(f"unit fails on {self.labels[i]}")
        return True

    # -- idempotent slots -------------------------------------------------

    def slot_of(self, i, side):
        """Index of the idempotent with e*b = b (side='left') or
        b*e = b (side='right'); None if b is not in a single slot."""
        b = self.basis_vec(i)
        for k, e in enumerate(self.idempotents):
            ev = self.basis_vec(e)
            p = self.product(ev, b) if side == "left" else self.product(b, ev)
            if p == b:
                return k
        return None

    def opposite(self):
        mult = {}
        for (i, j), v in self.mult.items():
            mult[(j, i)] = v
        return FDAlgebra(self.labels, mult, self.idempotents,
                         grading=self.grading,
                         name=self.name + "^op" if self.name else "")

    # -- emitters ---------------------------------------------------------

    def structure_json(self):
        data = {
            "dim": self.dim,
            "labels": self.labels,
            "idempotents": [self.labels[i] for i in self.idempotents],
            "products": {
                f"{self.labels[i]}|{self.labels[j]}": {
                    self.labels[k]: str(c) for k, c in sorted(v.items())
                }
                for (i, j), v in sorted(self.mult.items())
            },
        }
        return json.dumps(data, indent=2, sort_keys=True)

    def __repr__(self):
        return f"FDAlgebra({self.name or 'unnamed'}, dim={self.dim})"


class FDBimodule:
    """(A, A)-bimodule with basis and sparse action constants."""

    def __init__(self, algebra: FDAlgebra, labels, left, right, name=""):
        """left: dict (a_idx, u_idx) -> sparse vec; right: (u_idx, a_idx)."""
        self.algebra = algebra
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.left = {k: {i: Fraction(c) for i, c in v.items() if c}
                     for k, v in left.items() if v}
        self.right = {k: {i: Fraction(c) for i, c in v.items() if c}
                      for k, v in right.items() if v}
        self.name = name

    def act_left(self, avec, uvec):
        out = {}
        for a, ca in avec.items():
            for u, cu in uvec.items():
                w = self.left.get((a, u))
                if w:
                    out = vec_add(out, w, ca * cu)
        return out

    def act_right(self, uvec, avec):
        out = {}
        for u, cu in uvec.items():
            for a, ca in avec.items():
                w = self.right.get((u, a))
                if w:
                    out = vec_add(out, w, cu * ca)
        return out

    def check_bimodule(self):
        """Actions commute: (a.u).b == a.(u.b) on all basis triples."""
        A = self.algebra
        for a in range(A.dim):
            av = A.basis_vec(a)
            for u in range(self.dim):
                uv = {u: Fraction(1)}
                au = self.act_left(av, uv)
                for b in range(A.dim):
                    bv = A.basis_vec(b)
                    lhs = self.act_right(au, bv)
                    rhs = self.act_left(av, self.act_right(uv, bv))
                    if lhs != rhs:
                        raise ValueError(
                            f"bimodule axiom fails on ({A.labels[a]},"
                            f"{self.labels[u]},{A.labels[b]})")
        return True


def trivial_extension(A: FDAlgebra, U: FDBimodule, name="") -> FDAlgebra:
    """A + U with U squaring to zero; basis = A-basis then U-basis."""
    n = A.dim
    labels = [f"a:{l}" for l in A.labels] + [f"u:{l}" for l in U.labels]
    mult = {}
    for (i, j), v in A.mult.items():
        mult[(i, j)] = dict(v)
    for a in range(A.dim):
        for u in range(U.dim):
            w = U.left.get((a, u))
            if w:
                mult[(a, n + u)] = {n + k: c for k, c in w.items()}
            w = U.right.get((u, a))
            if w:
                mult[(n + u, a)] = {n + k: c for k, c in w.items()}
    grading = None
    if A.grading is not None:
        grading = list(A.grading) + [None] * U.dim
    return FDAlgebra(labels, mult, list(A.idempotents), grading=grading,
                     name=name or (f"triv_ext({A.name})" if A.name else ""))


def direct_sum_decomposition_by_idempotents(alg: FDAlgebra):
    """(slot_left, slot_right) per basis element; raises NotSplitBasic when
    some basis element is not concentrated in a single slot pair."""
    out = []
    for i in range(alg.dim):
        sl = alg.slot_of(i, "left")
        sr = alg.slot_of(i, "right")
        if sl is None or sr is None:
            raise NotSplitBasic(
                f"basis element {alg.labels[i]} not concentrated between a "
                "single pair of declared idempotents")
        out.append((sl, sr))
    return out

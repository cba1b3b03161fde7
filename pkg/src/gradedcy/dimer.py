"""Dimer models on the two-torus.

A dimer model is a finite bipartite graph with a rotation system (cyclic
order of incident edges at every vertex).  Faces are traced from the
rotation system; the model is valid when the graph is bipartite and the
Euler characteristic V - E + F vanishes.

Orientation conventions (fixed once, verified against the worked corpus):
face tracing follows next(u -> v via e) = (v -> w via succ_v(e)); the dual
arrow of an edge runs from the face containing its black-to-white dart to
the face containing its white-to-black dart; white cycles of the potential
traverse the rotation order backwards, black cycles forwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import BimoduleComplex, FreeSummand
from .errors import Inhomogeneous, NotBipartite, NotTorus, ParseError
from .quiver import Arrow, CYData, GradedQuiverPresentation, NCPoly, Path, \
    Quiver
from .simplex import solve_lp


@dataclass
class DimerEdge:
    name: str
    black: str
    white: str


class DimerModel:
    def __init__(self, colors, edges, rotation):
        """colors: vertex -> 'black'|'white'; edges: list of DimerEdge;
        rotation: vertex -> cyclic list of edge names incident to it."""
        self.colors = dict(colors)
        self.edges = list(edges)
        self.edge_index = {e.name: i for i, e in enumerate(self.edges)}
        if len(self.edge_index) != len(self.edges):
            raise ValueError("duplicate edge names")
        for e in self.edges:
            if self.colors.get(e.black) != "black" or \
                    self.colors.get(e.white) != "white":
                raise NotBipartite(
                    f"edge {e.name} must join a black vertex to a white one")
        self.rotation = {v: list(r) for v, r in rotation.items()}
        for v in self.colors:
            incident = sorted(e.name for e in self.edges
                              if v in (e.black, e.white))
            listed = sorted(self.rotation.get(v, []))
            if incident != listed:
                raise ValueError(
                    f"rotation at {v} lists {listed}, incident {incident}")

    def ends(self, edge_name):
        e = self.edges[self.edge_index[edge_name]]
        return e.black, e.white

    def other(self, edge_name, v):
        b, w = self.ends(edge_name)
        return w if v == b else b

    # -- face tracing -----------------------------------------------------

    def faces(self):
        """Orbits of darts under next(u->v, e) = (v->w, succ_v(e)).

        Returns a list of faces, each a list of darts (edge, frm, to).
        """
        darts = []
        for e in self.edges:
            darts.append((e.name, e.black, e.white))
            darts.append((e.name, e.white, e.black))
        succ = {}
        for v, rot in self.rotation.items():
            n = len(rot)
            for i, e in enumerate(rot):
                succ[(v, e)] = rot[(i + 1) % n]
        unused = set(darts)
        faces = []
        while unused:
            start = min(unused)
            face = []
            d = start
            while True:
                face.append(d)
                unused.discard(d)
                e, frm, to = d
                e2 = succ[(to, e)]
                d = (e2, to, self.other(e2, to))
                if d == start:
                    break
            faces.append(face)
        return faces

    def validate(self):
        """Face list plus the Euler characteristic report; NotTorus if
        V - E + F is nonzero."""
        faces = self.faces()
        V, E, F = len(self.colors), len(self.edges), len(faces)
        chi = V - E + F
        report = {"V": V, "E": E, "F": F, "chi": chi,
                  "face_sizes": sorted(len(f) for f in faces)}
        if chi != 0:
            raise NotTorus(f"Euler characteristic {chi} != 0: {report}")
        return faces, report


@dataclass
class QuiverWithPotential:
    quiver: Quiver
    potential: list    # list of (sign, tuple of arrow names, dimer vertex)

    def cycles_through(self, arrow_name):
        out = []
        for sign, cyc, v in self.potential:
            if arrow_name in cyc:
                out.append((sign, cyc, v))
        return out


def dual_qp(dimer: DimerModel) -> QuiverWithPotential:
    """Dual quiver with potential; one arrow per edge, one cycle per dimer
    vertex, white cycles minus black cycles."""
    faces, _ = dimer.validate()
    face_of_dart = {}
    for fi, face in enumerate(faces):
        for d in face:
            face_of_dart[d] = fi
    vertices = [f"f{i+1}" for i in range(len(faces))]
    arrows = []
    for e in dimer.edges:
        src = face_of_dart[(e.name, e.black, e.white)]
        tgt = face_of_dart[(e.name, e.white, e.black)]
        arrows.append(Arrow(e.name, f"f{src+1}", f"f{tgt+1}", 0))
    quiver = Quiver(vertices, arrows)

    potential = []
    for v, rot in dimer.rotation.items():
        order = list(reversed(rot)) if dimer.colors[v] == "white" else \
            list(rot)
        # rotate so the cycle is a composable arrow word
        cyc = tuple(order)
        sign = 1 if dimer.colors[v] == "white" else -1
        potential.append((sign, cyc, v))
    qp = QuiverWithPotential(quiver, potential)
    _check_potential(qp)
    return qp


def _check_potential(qp: QuiverWithPotential):
    """Cycles must compose and each arrow must lie in exactly one white and
    one black cycle."""
    quiver = qp.quiver
    seen = {a.name: {1: 0, -1: 0} for a in quiver.arrows}
    for sign, cyc, v in qp.potential:
        for i, name in enumerate(cyc):
            nxt = cyc[(i + 1) % len(cyc)]
            if quiver.arrow(name).target != quiver.arrow(nxt).source:
                raise ValueError(
                    f"potential cycle at {v} does not compose: "
                    f"{name} then {nxt}")
            seen[name][sign] += 1
    for name, counts in seen.items():
        if counts[1] != 1 or counts[-1] != 1:
            raise ValueError(
                f"arrow {name} lies in {counts[1]} white and {counts[-1]} "
                "black cycles")


# ---------------------------------------------------------------------------
# consistency via exact LP
# ---------------------------------------------------------------------------

@dataclass
class Consistency:
    feasible: bool
    rcharge: dict | None      # edge -> Fraction, all > 0
    margin: Fraction | None   # maximized minimum of the charges
    certificate: list | None  # Farkas vector or optimal dual bound


def consistency_check(dimer: DimerModel) -> Consistency:
    """Maximize t subject to R(e) >= t, vertex sums 2, and face sums of
    (1 - R) equal to 2, exactly over the rationals.

    Substituting R(e) = t + s(e) with s >= 0 and t free (t = tp - tm)
    puts the problem in standard form.  Feasible means optimum t > 0; the
    returned charge satisfies both constraint families exactly.
    """
    faces, _ = dimer.validate()
    edges = [e.name for e in dimer.edges]
    eidx = {e: i for i, e in enumerate(edges)}
    nE = len(edges)
    # variables: s_e (nE), tp, tm
    rows, rhs = [], []
    for v, rot in dimer.rotation.items():
        row = [Fraction(0)] * (nE + 2)
        for e in rot:
            row[eidx[e]] += 1
        row[nE] = Fraction(len(rot))
        row[nE + 1] = Fraction(-len(rot))
        rows.append(row)
        rhs.append(Fraction(2))
    for face in faces:
        row = [Fraction(0)] * (nE + 2)
        sides = len(face)
        for (e, _, _) in face:
            row[eidx[e]] += 1
        row[nE] = Fraction(sides)
        row[nE + 1] = Fraction(-sides)
        rows.append(row)
        rhs.append(Fraction(sides - 2))
    c = [Fraction(0)] * nE + [Fraction(1), Fraction(-1)]
    res = solve_lp(rows, rhs, c)
    if res.status == "infeasible":
        return Consistency(False, None, None, res.farkas)
    assert res.status == "optimal", res.status
    t = res.x[nE] - res.x[nE + 1]
    charge = {e: t + res.x[eidx[e]] for e in edges}
    if t <= 0:
        return Consistency(False, None, t, res.dual)
    _verify_charge(dimer, faces, charge)
    return Consistency(True, charge, t, None)


def _verify_charge(dimer, faces, charge):
    for v, rot in dimer.rotation.items():
        assert sum(charge[e] for e in rot) == 2, f"vertex sum fails at {v}"
    for face in faces:
        total = sum(1 - charge[e] for (e, _, _) in face)
        assert total == 2, "face sum fails"


# ---------------------------------------------------------------------------
# perfect matchings
# ---------------------------------------------------------------------------

def perfect_matchings(dimer: DimerModel, limit=10 ** 6):
    """All perfect matchings by backtracking over white vertices.

    Returns (matchings, truncated); each matching is a sorted tuple of
    edge names.  `truncated` flags hitting the enumeration limit.
    """
    whites = sorted(v for v, c in dimer.colors.items() if c == "white")
    blacks = sorted(v for v, c in dimer.colors.items() if c == "black")
    if len(whites) != len(blacks):
        return [], False
    out = []
    used_black = set()
    chosen = []
    truncated = False

    def backtrack(i):
        nonlocal truncated
        if truncated:
            return
        if i == len(whites):
            out.append(tuple(sorted(chosen)))
            if len(out) >= limit:
                truncated = True
            return
        w = whites[i]
        for e in dimer.rotation[w]:
            b = dimer.other(e, w)
            if b not in used_black:
                used_black.add(b)
                chosen.append(e)
                backtrack(i + 1)
                chosen.pop()
                used_black.discard(b)

    backtrack(0)
    return sorted(out), truncated


@dataclass
class DegreeFunction:
    degrees: dict      # edge name -> int
    level: int         # the constant vertex sum l

    @property
    def a_invariant(self):
        return -self.level


def grading_from_matchings(dimer: DimerModel, matchings, coefficients) \
        -> DegreeFunction:
    """d(e) = sum_k c_k [e in P_k]; the vertex sums all equal sum(c_k)."""
    if len(matchings) != len(coefficients):
        raise ValueError("one coefficient per matching")
    deg = {e.name: 0 for e in dimer.edges}
    for P, c in zip(matchings, coefficients):
        for e in P:
            deg[e] += c
    level = sum(coefficients)
    for v, rot in dimer.rotation.items():
        s = sum(deg[e] for e in rot)
        if s != level:
            raise Inhomogeneous(
                f"vertex sum at {v} is {s}, expected {level}; "
                "inputs are not matchings of this dimer")
    return DegreeFunction(deg, level)


# ---------------------------------------------------------------------------
# graded Jacobian presentation and its free bimodule resolution
# ---------------------------------------------------------------------------

def _cycle_derivative(cyc, pos):
    """Arrow word after position pos, cyclically, excluding the arrow."""
    n = len(cyc)
    return tuple(cyc[(pos + 1 + k) % n] for k in range(n - 1))


def jacobian_presentation(qp: QuiverWithPotential, deg: DegreeFunction) \
        -> GradedQuiverPresentation:
    """Quotient of the dual quiver by the cyclic derivatives of the
    potential, graded by the degree function."""
    base = qp.quiver
    graded = Quiver(base.vertices,
                    [Arrow(a.name, a.source, a.target,
                           deg.degrees[a.name]) for a in base.arrows])
    probe = GradedQuiverPresentation(graded, [])
    ctx = probe.ctx
    rels = []
    for a in base.arrows:
        poly = NCPoly()
        for sign, cyc, v in qp.cycles_through(a.name):
            for pos, nm in enumerate(cyc):
                if nm == a.name:
                    word = _cycle_derivative(cyc, pos)
                    path = ctx.path_from_names(list(word)) if word else \
                        ctx.lazy(graded.arrow(a.name).target)
                    poly = poly + NCPoly.monomial(path, sign)
        if poly:
            rels.append(poly)
    pres = GradedQuiverPresentation(
        graded, rels, cy=CYData(3, deg.a_invariant), name="jacobian")
    for r in pres.relations:
        if not r.is_homogeneous(ctx):
            raise Inhomogeneous("cyclic derivative not homogeneous")
    return pres


def cy3_complex(qp: QuiverWithPotential, deg: DegreeFunction,
                pres: GradedQuiverPresentation = None) -> BimoduleComplex:
    """Four-term free bimodule complex of the graded Jacobian algebra.

    Summand generator degrees: 0 (position 0), d(a) (position 1),
    l - d(a) (position 2), l (position 3); differentials split paths at
    occurrences of arrows, with white cycles entering positively.
    """
    if pres is None:
        pres = jacobian_presentation(qp, deg)
    ctx = pres.ctx
    quiver = pres.quiver
    l = deg.level

    def lazy(v):
        return Path(v, ())

    terms = []
    # position 0: one summand per quiver vertex, generator degree 0
    terms.append([FreeSummand(v, v, 0, f"P0[{v}]") for v in quiver.vertices])
    # position 1: per arrow a, generator from s(a) to t(a), degree d(a)
    terms.append([FreeSummand(a.source, a.target, deg.degrees[a.name],
                              f"P1[{a.name}]") for a in quiver.arrows])
    # position 2: per arrow a, generator from t(a) to s(a), degree l - d(a)
    terms.append([FreeSummand(a.target, a.source, l - deg.degrees[a.name],
                              f"P2[{a.name}]") for a in quiver.arrows])
    # position 3: per vertex, degree l
    terms.append([FreeSummand(v, v, l, f"P3[{v}]") for v in quiver.vertices])

    vidx = {v: i for i, v in enumerate(quiver.vertices)}
    aidx = {a.name: i for i, a in enumerate(quiver.arrows)}

    # d1: P1 -> P0: g_a -> a g_{t(a)}  -  g_{s(a)} a
    d1 = {}
    for j, a in enumerate(quiver.arrows):
        ap = ctx.arrow_path(a.name)
        d1.setdefault((vidx[a.target], j), []).append(
            (Fraction(1), ap, lazy(a.target)))
        d1.setdefault((vidx[a.source], j), []).append(
            (Fraction(-1), lazy(a.source), ap))

    # d2: P2 -> P1: g'_a -> sum over cycles through a of the splittings
    d2 = {}
    for j, a in enumerate(quiver.arrows):
        for sign, cyc, v in qp.cycles_through(a.name):
            for pos, nm in enumerate(cyc):
                if nm != a.name:
                    continue
                word = _cycle_derivative(cyc, pos)
                for k, mid in enumerate(word):
                    left = word[:k]
                    right = word[k + 1:]
                    lpath = ctx.path_from_names(list(left)) if left else \
                        lazy(a.target)
                    rpath = ctx.path_from_names(list(right)) if right else \
                        lazy(quiver.arrow(a.name).source)
                    d2.setdefault((aidx[mid], j), []).append(
                        (Fraction(sign), lpath, rpath))

    # d3: P3 -> P2: g''_i -> sum_{s(a)=i} a g'_a  -  sum_{t(a)=i} g'_a a
    d3 = {}
    for i, v in enumerate(quiver.vertices):
        for j, a in enumerate(quiver.arrows):
            ap = ctx.arrow_path(a.name)
            if a.source == v:
                d3.setdefault((j, i), []).append(
                    (Fraction(1), ap, lazy(a.source)))
            if a.target == v:
                d3.setdefault((j, i), []).append(
                    (Fraction(-1), lazy(a.target), ap))

    return BimoduleComplex(pres, terms, [d1, d2, d3], name="cy3")


# ---------------------------------------------------------------------------
# dimer file format and emitters
# ---------------------------------------------------------------------------

def parse_dimer(text, filename="<string>") -> DimerModel:
    """Sections: [vertices] (id color), [edges] (id black-end white-end),
    [rotation] (vertex: cyclic edge list).  '#' starts a comment."""
    colors, edges, rotation = {}, [], {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("vertices", "edges", "rotation"):
                raise ParseError(f"unknown section [{section}]", filename,
                                 lineno)
            continue
        if section == "vertices":
            bits = line.split()
            if len(bits) != 2 or bits[1] not in ("black", "white"):
                raise ParseError("vertex line must be: id black|white",
                                 filename, lineno)
            if bits[0] in colors:
                raise ParseError(f"duplicate vertex {bits[0]}", filename,
                                 lineno)
            colors[bits[0]] = bits[1]
        elif section == "edges":
            bits = line.split()
            if len(bits) != 3:
                raise ParseError("edge line must be: id black-end white-end",
                                 filename, lineno)
            for v in bits[1:]:
                if v not in colors:
                    raise ParseError(f"unknown vertex {v}", filename, lineno)
            if colors[bits[1]] != "black" or colors[bits[2]] != "white":
                raise ParseError(
                    f"edge {bits[0]} must run black to white", filename,
                    lineno)
            edges.append(DimerEdge(*bits))
        elif section == "rotation":
            if ":" not in line:
                raise ParseError("rotation line must be: vertex: edges...",
                                 filename, lineno)
            v, rest = line.split(":", 1)
            v = v.strip()
            if v not in colors:
                raise ParseError(f"unknown vertex {v}", filename, lineno)
            rotation[v] = rest.split()
        else:
            raise ParseError("content before any section header", filename,
                             lineno)
    try:
        return DimerModel(colors, edges, rotation)
    except (ValueError, NotBipartite) as e:
        raise ParseError(str(e), filename, None)


def load_dimer(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dimer(fh.read(), filename=str(path))


def matchings_json(matchings, truncated=False):
    import json
    return json.dumps({"count": len(matchings),
                       "truncated": truncated,
                       "matchings": [list(m) for m in matchings]},
                      indent=2, sort_keys=True)


def rcharge_json(consistency: Consistency):
    import json
    data = {"feasible": consistency.feasible}
    if consistency.rcharge is not None:
        data["rcharge"] = {e: str(c) for e, c in
                           sorted(consistency.rcharge.items())}
        data["margin"] = str(consistency.margin)
    if consistency.certificate is not None:
        data["certificate"] = [str(c) for c in consistency.certificate]
        if consistency.margin is not None:
            data["margin"] = str(consistency.margin)
    return json.dumps(data, indent=2, sort_keys=True)


def degree_function_json(deg: DegreeFunction):
    import json
    return json.dumps({"degrees": dict(sorted(deg.degrees.items())),
                       "level": deg.level,
                       "a_invariant": deg.a_invariant},
                      indent=2, sort_keys=True)

"""GKM fixed-point data: graph model, document parser/validator, and the
profile of a chosen circle subgroup (weights, Morse indices, level sets).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exact import format_rational, parse_rational


class GkmValidationError(ValueError):
    """Input document violates a structural invariant."""


@dataclass(frozen=True)
class Vertex:
    id: str
    position: tuple  # Fractions, length = torus rank


@dataclass(frozen=True)
class Edge:
    v: str
    w: str
    weight: tuple  # primitive integer vector, tangent weight at v toward w


@dataclass(frozen=True)
class GkmGraph:
    rank: int
    dimension: int  # = 2n
    vertices: tuple  # of Vertex
    edges: tuple  # of Edge

    @property
    def n(self):
        return self.dimension // 2

    def vertex(self, vid):
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def position(self, vid):
        return self.vertex(vid).position

    def outward_weights(self, vid):
        """Tangent weights at `vid`, one per incident edge, oriented outward."""
        out = []
        for e in self.edges:
            if e.v == vid:
                out.append((e.w, e.weight))
            elif e.w == vid:
                out.append((e.v, tuple(-a for a in e.weight)))
        return out


def _is_primitive(vec):
    g = 0
    for a in vec:
        g = gcd(g, abs(a))
    return g == 1


def _parallel(a, b):
    """True if primitive integer vectors a, b span the same line."""
    return a == b or a == tuple(-x for x in b)


def run_checks(doc):
    """Run every structural check on a decoded document.

    Returns a list of (check, ok, detail) triples; parse_gkm fails if any
    check fails, cmd_validate reports all of them.
    """
    checks = []

    def add(name, ok, detail=""):
        checks.append((name, bool(ok), detail))

    try:
        rank = int(doc["rank"])
        dim = int(doc["dimension"])
        raw_vertices = doc["vertices"]
        raw_edges = doc["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        add("document-structure", False, "missing or malformed field: %s" % exc)
        return checks
    add("document-structure", True)
    add("rank-positive", rank >= 1, "rank = %d" % rank)
    add("dimension-even", dim % 2 == 0 and dim >= 2, "dimension = %d" % dim)
    n = dim // 2

    ids = []
    positions = {}
    ok_vertices = True
    for rv in raw_vertices:
        vid = str(rv["id"])
        ids.append(vid)
        try:
            pos = tuple(parse_rational(x) for x in rv["position"])
        except ValueError as exc:
            add("vertex-positions", False, "vertex %s: %s" % (vid, exc))
            ok_vertices = False
            continue
        if len(pos) != rank:
            add("vertex-positions", False,
                "vertex %s: position length %d != rank %d" % (vid, len(pos), rank))
            ok_vertices = False
        positions[vid] = pos
    if ok_vertices:
        add("vertex-positions", True)
    add("vertex-ids-unique", len(set(ids)) == len(ids))

    degree = {vid: 0 for vid in ids}
    adjacency = {vid: [] for vid in ids}
    outward = {vid: [] for vid in ids}
    for i, re_ in enumerate(raw_edges):
        label = "edge %d (%s-%s)" % (i, re_.get("v"), re_.get("w"))
        v, w = str(re_["v"]), str(re_["w"])
        weight = tuple(int(a) for a in re_["weight"])
        if v not in positions or w not in positions:
            add("edge-endpoints", False, label + ": unknown endpoint")
            continue
        if len(weight) != rank:
            add("edge-weight-rank", False, label)
            continue
        if all(a == 0 for a in weight):
            add("edge-weight-nonzero", False, label)
            continue
        add("edge-weight-primitive", _is_primitive(weight), label)
        diff = tuple(pw - pv for pv, pw in zip(positions[v], positions[w]))
        pivot = next((k for k, a in enumerate(weight) if a != 0))
        lam = diff[pivot] / weight[pivot]
        parallel_ok = (lam > 0 and
                       all(d == lam * a for d, a in zip(diff, weight)))
        add("edge-parallel-to-positions", parallel_ok,
            label + ": position difference must be a positive multiple of the weight")
        degree[v] += 1
        degree[w] += 1
        adjacency[v].append(w)
        adjacency[w].append(v)
        outward[v].append((label, weight))
        outward[w].append((label, tuple(-a for a in weight)))

    for vid in ids:
        add("vertex-degree", degree[vid] == n,
            "vertex %s has %d incident edges, expected n = %d" % (vid, degree[vid], n))

    for vid in ids:
        ok = True
        detail = ""
        for (l1, w1), (l2, w2) in _pairs(outward[vid]):
            if _parallel(w1, w2):
                ok = False
                detail = "vertex %s: dependent weights on %s and %s" % (vid, l1, l2)
                break
        add("gkm-independence", ok, detail)

    if ids:
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            for nb in adjacency[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        add("graph-connected", len(seen) == len(ids))
    return checks


def _pairs(items):
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]


def parse_gkm(text):
    """Parse and validate a GKM document (JSON text) into a GkmGraph."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GkmValidationError("malformed JSON: %s" % exc)
    checks = run_checks(doc)
    failures = [(name, detail) for name, ok, detail in checks if not ok]
    if failures:
        msg = "; ".join("%s: %s" % (n, d) if d else n for n, d in failures)
        raise GkmValidationError(msg)
    vertices = tuple(
        Vertex(str(rv["id"]), tuple(parse_rational(x) for x in rv["position"]))
        for rv in doc["vertices"])
    edges = tuple(
        Edge(str(re_["v"]), str(re_["w"]), tuple(int(a) for a in re_["weight"]))
        for re_ in doc["edges"])
    return GkmGraph(int(doc["rank"]), int(doc["dimension"]), vertices, edges)


def emit_gkm(graph):
    """Canonical serialization; emit -> parse -> emit is byte-identical."""
    doc = {
        "rank": graph.rank,
        "dimension": graph.dimension,
        "vertices": [
            {"id": v.id, "position": [format_rational(x) for x in v.position]}
            for v in graph.vertices
        ],
        "edges": [
            {"v": e.v, "w": e.w, "weight": list(e.weight)}
            for e in graph.edges
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class CircleProfile:
    """Data of the circle subgroup selected by an integer vector xi."""
    graph: GkmGraph
    xi: tuple
    weights: dict  # vertex id -> sorted tuple of nonzero integer circle weights
    index: dict  # vertex id -> Morse index (twice the negative-weight count)
    mu: dict  # vertex id -> Fraction, <position, xi>
    warnings: tuple = field(default=())

    @property
    def n(self):
        return self.graph.n

    def level(self, k):
        """Vertex ids of Morse index 2k, sorted by id."""
        return tuple(sorted(v for v, ix in self.index.items() if ix == 2 * k))

    def levels(self):
        return [self.level(k) for k in range(self.n + 1)]

    def level_values(self, k):
        """Sorted distinct moment values on the index-2k level."""
        return tuple(sorted({self.mu[v] for v in self.level(k)}))

    @property
    def constant_on_levels(self):
        return all(len(self.level_values(k)) <= 1 for k in range(self.n + 1))

    def level_constant(self, k):
        """c_2k when the level is nonempty and mu is constant on it."""
        vals = self.level_values(k)
        if len(vals) != 1:
            return None
        return vals[0]

    def level_constants(self):
        return [self.level_constant(k) for k in range(self.n + 1)]

    @property
    def min_vertex(self):
        (v,) = self.level(0)
        return v

    @property
    def max_vertex(self):
        (v,) = self.level(self.n)
        return v

    def min_value(self):
        return min(self.mu.values())

    def negative_weight_product(self, vid):
        """Product of the negative circle weights at a vertex (1 at the minimum)."""
        out = Fraction(1)
        for w in self.weights[vid]:
            if w < 0:
                out *= w
        return out

    def full_weight_product(self, vid):
        out = Fraction(1)
        for w in self.weights[vid]:
            out *= w
        return out


def restrict_to_circle(graph, xi):
    """Derive the circle profile for a generic integer vector xi."""
    xi = tuple(int(a) for a in xi)
    if len(xi) != graph.rank:
        raise GkmValidationError("xi length %d != rank %d" % (len(xi), graph.rank))
    for e in graph.edges:
        if sum(a * b for a, b in zip(e.weight, xi)) == 0:
            raise GkmValidationError(
                "xi %r is not generic: edge %s-%s with weight %r pairs to zero"
                % (xi, e.v, e.w, e.weight))
    weights = {}
    index = {}
    mu = {}
    for v in graph.vertices:
        ws = sorted(sum(a * b for a, b in zip(w, xi))
                    for _, w in graph.outward_weights(v.id))
        weights[v.id] = tuple(ws)
        index[v.id] = 2 * sum(1 for w in ws if w < 0)
        mu[v.id] = sum((p * a for p, a in zip(v.position, xi)), Fraction(0))

    n = graph.n
    counts = [sum(1 for ix in index.values() if ix == 2 * k) for k in range(n + 1)]
    if counts[0] != 1 or counts[n] != 1:
        raise GkmValidationError(
            "expected a unique minimum and maximum, got %d of index 0 and %d of index 2n"
            % (counts[0], counts[n]))
    warnings = []
    for k in range(n + 1):
        if counts[k] != counts[n - k]:
            warnings.append(
                "Poincare symmetry violated: b_%d = %d but b_%d = %d "
                "(inconsistent input data)" % (2 * k, counts[k], 2 * (n - k), counts[n - k]))
            break
    return CircleProfile(graph, xi, weights, index, mu, tuple(warnings))


def betti(profile):
    """Betti numbers b_0 .. b_2n; odd entries vanish."""
    out = [0] * (2 * profile.n + 1)
    for k in range(profile.n + 1):
        out[2 * k] = len(profile.level(k))
    return out


def check_hypothesis(profile):
    """Constancy of the moment map on each index level, and distinctness of
    the level constants when they are all defined."""
    constant = profile.constant_on_levels
    c = profile.level_constants()
    defined = [x for x in c if x is not None]
    all_distinct = constant and len(set(defined)) == len(defined)
    return {"constant_on_levels": constant, "c": c, "all_distinct": all_distinct}


def self_indexing_normalizer(profile):
    """Affine map a*mu + b (a > 0) sending each level constant to its index.

    Returns (a, b) or None; raises if the constancy hypothesis fails.
    """
    if not profile.constant_on_levels:
        raise GkmValidationError("moment map is not constant on index levels")
    pairs = [(profile.level_constant(k), Fraction(2 * k))
             for k in range(profile.n + 1) if profile.level_constant(k) is not None]
    distinct = []
    for cval, target in pairs:
        if not any(cval == c0 for c0, _ in distinct):
            distinct.append((cval, target))
    if len(distinct) < 2:
        # single level value: any a > 0 with a*c + b = index works; pick a = 1
        cval, target = pairs[0]
        return (Fraction(1), target - cval)
    (c0, t0), (c1, t1) = distinct[0], distinct[1]
    a = (t1 - t0) / (c1 - c0)
    b = t0 - a * c0
    if a <= 0:
        return None
    for cval, target in pairs:
        if a * cval + b != target:
            return None
    return (a, b)

"""Equivariant cohomology in the fixed-point model.

Classes are tuples of polynomial restrictions indexed by fixed points; the
image of the restriction map is cut out by the GKM edge congruences.  Circle
classes are specializations of torus classes along the chosen circle, which
is also how membership is defined.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (TorusPoly, UPoly, mat_vec, matrix_rank, monomial_exponents,
                    solve_affine)


class ClassConstructionError(ValueError):
    """The requested class does not exist or is not unique."""


class NonPolynomialError(ValueError):
    """A localization sum failed to cancel its Laurent tail."""


class ExpansionError(ValueError):
    """A class could not be expanded in the canonical basis."""


@dataclass(frozen=True)
class TorusClass:
    graph: object
    degree: int  # cohomological (twice the polynomial degree)
    polys: dict  # vertex id -> TorusPoly

    def specialize(self, xi):
        return CircleClass(self.graph, self.degree,
                           {v: p.specialize(xi) for v, p in self.polys.items()},
                           torus=self)


@dataclass(frozen=True)
class CircleClass:
    graph: object
    degree: int  # cohomological; restrictions of a degree-2d class are c*u^d
    restrictions: dict  # vertex id -> UPoly
    torus: TorusClass = None

    def at(self, vid):
        return self.restrictions.get(vid, UPoly.zero)

    @property
    def is_zero(self):
        return all(p.is_zero for p in self.restrictions.values())

    def __eq__(self, other):
        return (isinstance(other, CircleClass) and self.degree == other.degree
                and all(self.at(v.id) == other.at(v.id) for v in self.graph.vertices))

    def __hash__(self):
        return hash((self.degree,
                     tuple(sorted((v, p) for v, p in self.restrictions.items()))))


def constant_class(graph, c=1):
    rank = graph.rank
    tc = TorusClass(graph, 0,
                    {v.id: TorusPoly.constant(rank, c) for v in graph.vertices})
    return CircleClass(graph, 0, {v.id: UPoly.monomial(c, 0) for v in graph.vertices},
                       torus=tc)


def is_member(graph, polys):
    """GKM membership: every edge congruence f_v - f_w = 0 mod weight."""
    for e in graph.edges:
        diff = polys[e.v] - polys[e.w]
        if not diff.divisible_by(e.weight):
            return False
    return True


def cup(a, b):
    """Vertex-wise product of circle classes on the same graph."""
    torus = None
    if a.torus is not None and b.torus is not None:
        torus = TorusClass(a.graph, a.degree + b.degree,
                           {v: a.torus.polys[v] * b.torus.polys[v]
                            for v in a.torus.polys})
    return CircleClass(a.graph, a.degree + b.degree,
                       {v.id: a.at(v.id) * b.at(v.id) for v in a.graph.vertices},
                       torus=torus)


def cup_power(a, m):
    out = constant_class(a.graph)
    for _ in range(m):
        out = cup(out, a)
    return out


@dataclass(frozen=True)
class EulerData:
    """Full and negative equivariant Euler classes at every fixed point."""
    profile: object

    def full(self, vid):
        n = self.profile.n
        return UPoly.monomial(self.profile.full_weight_product(vid), n)

    def negative(self, vid):
        k = self.profile.index[vid] // 2
        return UPoly.monomial(self.profile.negative_weight_product(vid), k)


def abbv_integrate(cls, euler):
    """Localization sum over fixed points of restriction / full Euler class.

    The sum of Laurent polynomials must collapse to an honest polynomial in
    u; a surviving negative power means the tuple was not a genuine class.
    """
    profile = euler.profile
    n = profile.n
    acc = {}
    for v in cls.graph.vertices:
        denom = profile.full_weight_product(v.id)
        for k, c in enumerate(cls.at(v.id).coeffs):
            if c == 0:
                continue
            p = k - n
            acc[p] = acc.get(p, Fraction(0)) + c / denom
    bad = {p: c for p, c in acc.items() if p < 0 and c != 0}
    if bad:
        raise NonPolynomialError(
            "localization sum has surviving negative powers %s; "
            "input tuple is not a genuine class" % sorted(bad))
    if not acc:
        return UPoly.zero
    top = max(acc)
    if top < 0:
        return UPoly.zero
    return UPoly([acc.get(p, Fraction(0)) for p in range(top + 1)])


# ---------------------------------------------------------------------------
# GKM congruence spaces

@lru_cache(maxsize=None)
def congruence_space(graph, d):
    """Basis of homogeneous degree-d (polynomial degree) solutions of all
    edge congruences, as TorusClass tuples.
    """
    rank = graph.rank
    monos = monomial_exponents(rank, d)
    vids = [v.id for v in graph.vertices]
    col_of = {(vid, m): i for i, (vid, m) in
              enumerate((vid, m) for vid in vids for m in monos)}
    ncols = len(col_of)

    rows = []
    for e in graph.edges:
        # coefficient rows of (f_v - f_w) after eliminating along the weight
        per_col = {}
        for m in monos:
            mono = TorusPoly(rank, {m: 1})
            sub = mono.eliminate(e.weight)
            per_col[m] = sub.terms
        residual_monos = sorted({exp for terms in per_col.values() for exp in terms})
        for exp in residual_monos:
            row = [Fraction(0)] * ncols
            for m in monos:
                c = per_col[m].get(exp, Fraction(0))
                if c:
                    row[col_of[(e.v, m)]] += c
                    row[col_of[(e.w, m)]] -= c
            rows.append(row)

    from .exact import nullspace
    basis = []
    for vec in nullspace(rows, ncols):
        polys = {}
        for vid in vids:
            terms = {m: vec[col_of[(vid, m)]] for m in monos}
            polys[vid] = TorusPoly(rank, terms)
        basis.append(TorusClass(graph, 2 * d, polys))
    return tuple(basis)


def specialization_matrix(graph, d, xi):
    """Rows = vertices (graph order), columns = congruence-space basis classes;
    entry = the u^d coefficient of the specialized restriction."""
    basis = congruence_space(graph, d)
    mat = []
    for v in graph.vertices:
        row = []
        for b in basis:
            up = b.polys[v.id].specialize(xi)
            if not up.is_monomial_of(d):
                raise AssertionError("homogeneous class specialized inhomogeneously")
            row.append(up.coeff(d))
        mat.append(row)
    return basis, mat


# ---------------------------------------------------------------------------
# Canonical classes

@dataclass(frozen=True)
class CanonicalBasis:
    profile: object
    order: tuple  # vertex ids ascending by (moment value, index, id)
    alpha: dict  # vertex id -> CircleClass of degree = Morse index
    beta: dict  # vertex id -> alpha / (product of negative weights)

    @property
    def graph(self):
        return self.profile.graph


def basis_order(profile):
    return tuple(sorted((v.id for v in profile.graph.vertices),
                        key=lambda vid: (profile.mu[vid], profile.index[vid], vid)))


def _canonical_constraints(profile, fid, mat, vids):
    """Constraint rows/rhs on congruence-space coefficients for alpha_F."""
    rows, rhs = [], []
    muF = profile.mu[fid]
    kF = profile.index[fid]
    for i, vid in enumerate(vids):
        if vid == fid:
            rows.append(mat[i])
            rhs.append(profile.negative_weight_product(fid))
        elif profile.mu[vid] < muF or profile.index[vid] <= kF:
            rows.append(mat[i])
            rhs.append(Fraction(0))
    return rows, rhs


def _class_from_solution(profile, fid, basis, mat, vids, x):
    d = profile.index[fid] // 2
    values = mat_vec(mat, x)
    restrictions = {vid: UPoly.monomial(c, d) for vid, c in zip(vids, values)}
    polys = {vid: TorusPoly.zero_poly(profile.graph.rank) for vid in vids}
    for coeff, b in zip(x, basis):
        if coeff == 0:
            continue
        for vid in vids:
            polys[vid] = polys[vid] + coeff * b.polys[vid]
    torus = TorusClass(profile.graph, 2 * d, polys)
    return CircleClass(profile.graph, 2 * d, restrictions, torus=torus)


def _check_specialized_unique(mat, null_basis, fid):
    for nu in null_basis:
        if any(c != 0 for c in mat_vec(mat, nu)):
            ambiguous = sum(1 for nu in null_basis
                            if any(c != 0 for c in mat_vec(mat, nu)))
            raise ClassConstructionError(
                "canonical class at %s is not unique after specialization "
                "(ambiguity dimension %d)" % (fid, ambiguous))


def canonical_classes(graph, profile):
    """Canonical class basis, one class per fixed point, built in ascending
    moment order by solving the per-point linear conditions inside the
    degree-matched congruence space."""
    vids = [v.id for v in graph.vertices]
    alpha = {}
    beta = {}
    for fid in basis_order(profile):
        d = profile.index[fid] // 2
        basis, mat = specialization_matrix(graph, d, profile.xi)
        rows, rhs = _canonical_constraints(profile, fid, mat, vids)
        sol = solve_affine(rows, rhs)
        if sol is None:
            raise ClassConstructionError(
                "no canonical class at %s: the fixed-point data is not realizable" % fid)
        x, null_basis = sol
        _check_specialized_unique(mat, null_basis, fid)
        cls = _class_from_solution(profile, fid, basis, mat, vids, x)
        alpha[fid] = cls
        wprod = profile.negative_weight_product(fid)
        beta[fid] = CircleClass(graph, cls.degree,
                                {v: p * (1 / wprod) for v, p in cls.restrictions.items()},
                                torus=TorusClass(graph, cls.degree,
                                                {v: p * (1 / wprod)
                                                 for v, p in cls.torus.polys.items()}))
    return CanonicalBasis(profile, basis_order(profile), alpha, beta)


def canonical_classes_global(graph, profile):
    """Oracle construction: one global linear system imposing every defining
    condition of every canonical class simultaneously."""
    vids = [v.id for v in graph.vertices]
    fids = basis_order(profile)
    per_f = {}
    offsets = {}
    ncols = 0
    for fid in fids:
        d = profile.index[fid] // 2
        basis, mat = specialization_matrix(graph, d, profile.xi)
        per_f[fid] = (basis, mat)
        offsets[fid] = ncols
        ncols += len(basis)

    rows, rhs = [], []
    for fid in fids:
        basis, mat = per_f[fid]
        local_rows, local_rhs = _canonical_constraints(profile, fid, mat, vids)
        for lrow, lb in zip(local_rows, local_rhs):
            row = [Fraction(0)] * ncols
            row[offsets[fid]:offsets[fid] + len(lrow)] = lrow
            rows.append(row)
            rhs.append(lb)
    sol = solve_affine(rows, rhs)
    if sol is None:
        raise ClassConstructionError("global canonical-class system is inconsistent")
    x, null_basis = sol

    alpha = {}
    beta = {}
    for fid in fids:
        basis, mat = per_f[fid]
        off = offsets[fid]
        local_null = [nu[off:off + len(basis)] for nu in null_basis]
        _check_specialized_unique(mat, local_null, fid)
        xl = x[off:off + len(basis)]
        cls = _class_from_solution(profile, fid, basis, mat, vids, xl)
        alpha[fid] = cls
        wprod = profile.negative_weight_product(fid)
        beta[fid] = CircleClass(graph, cls.degree,
                                {v: p * (1 / wprod) for v, p in cls.restrictions.items()})
    return CanonicalBasis(profile, fids, alpha, beta)


def equivariant_symplectic_class(profile, shift=0):
    """Degree-2 class restricting to (-mu(F) + shift) * u at each fixed point.

    Built from the position-pairing torus class, so the GKM congruences hold
    by the edge invariant; the shift enters through a fixed linear form that
    pairs to 1 with xi.
    """
    graph = profile.graph
    shift = Fraction(shift)
    xi = profile.xi
    pivot = next(i for i, a in enumerate(xi) if a != 0)
    lam_vec = [Fraction(0)] * graph.rank
    lam_vec[pivot] = Fraction(1, xi[pivot])
    lam = TorusPoly.linear_form(lam_vec)
    polys = {}
    restrictions = {}
    for v in graph.vertices:
        f = -TorusPoly.linear_form(v.position) + shift * lam
        polys[v.id] = f
        restrictions[v.id] = UPoly.monomial(-profile.mu[v.id] + shift, 1)
    return CircleClass(graph, 2, restrictions,
                       torus=TorusClass(graph, 2, polys))


def expand_in_basis(cls, basis):
    """Exact expansion c = sum coeff_F * beta_F by triangular substitution in
    ascending moment order; coefficients are u-monomials for homogeneous c."""
    profile = basis.profile
    if cls.degree % 2 != 0:
        raise ExpansionError("odd-degree class")
    m = cls.degree // 2
    for v in cls.graph.vertices:
        if not cls.at(v.id).is_monomial_of(m):
            raise ExpansionError("restrictions are not homogeneous of the stated degree")
    residual = {v.id: cls.at(v.id).coeff(m) for v in cls.graph.vertices}
    coeffs = {}
    for fid in basis.order:
        d = profile.index[fid] // 2
        r = residual[fid]
        if r == 0:
            coeffs[fid] = UPoly.zero
            continue
        if m < d:
            raise ExpansionError(
                "class of degree %d has a nonzero restriction at %s of index %d; "
                "not in the span" % (cls.degree, fid, 2 * d))
        coeffs[fid] = UPoly.monomial(r, m - d)
        b = basis.beta[fid]
        for vid in residual:
            residual[vid] -= r * b.at(vid).coeff(d)
    if any(c != 0 for c in residual.values()):
        raise ExpansionError("nonzero residual after triangular expansion")
    return coeffs


# ---------------------------------------------------------------------------
# Kirwan reduction to the ordinary ring

@dataclass(frozen=True)
class OrdinaryRing:
    """H*(M) on the reduced canonical basis, as structure constants.

    Elements are dicts label -> Fraction over the images of the normalized
    canonical classes; products truncate above the top degree.
    """
    labels: tuple  # vertex ids in basis order
    degree: dict  # label -> cohomological degree (the Morse index)
    table: dict  # (label, label) -> dict label -> Fraction
    omega: dict  # expansion of the symplectic class, degree-2 labels only
    dimension: int  # = 2n

    @property
    def n(self):
        return self.dimension // 2

    def basis_in_degree(self, k):
        return [l for l in self.labels if self.degree[l] == k]

    def multiply(self, x, y):
        out = {}
        for lx, cx in x.items():
            if cx == 0:
                continue
            for ly, cy in y.items():
                if cy == 0:
                    continue
                key = (lx, ly) if (lx, ly) in self.table else (ly, lx)
                for lz, cz in self.table[key].items():
                    out[lz] = out.get(lz, Fraction(0)) + cx * cy * cz
        return {l: c for l, c in out.items() if c != 0}

    def omega_power(self, m):
        out = {self.labels[0]: Fraction(1)}  # unit = class of the minimum
        for _ in range(m):
            out = self.multiply(out, self.omega)
        return out


def kirwan_reduce(basis):
    """Ordinary cohomology ring: structure constants of the reduced basis
    obtained by cupping, expanding, and evaluating coefficients at u = 0."""
    profile = basis.profile
    labels = basis.order
    degree = {l: profile.index[l] for l in labels}
    table = {}
    for i, f in enumerate(labels):
        for g in labels[i:]:
            if degree[f] + degree[g] > 2 * profile.n:
                table[(f, g)] = {}
                continue
            prod = cup(basis.beta[f], basis.beta[g])
            coeffs = expand_in_basis(prod, basis)
            table[(f, g)] = {h: c.at0() for h, c in coeffs.items() if c.at0() != 0}
    omega_t = equivariant_symplectic_class(profile, shift=profile.min_value())
    omega = {h: c.at0() for h, c in expand_in_basis(omega_t, basis).items()
             if c.at0() != 0}
    return OrdinaryRing(labels, degree, table, omega, 2 * profile.n)


def localization_pairing_matrix(basis, k):
    """Localization pairing between degree-k and degree-(2n-k) reduced basis
    classes; invertibility is Poincare duality at the fixed-point level."""
    profile = basis.profile
    euler = EulerData(profile)
    low = [l for l in basis.order if profile.index[l] == k]
    high = [l for l in basis.order if profile.index[l] == 2 * profile.n - k]
    mat = []
    for f in low:
        row = []
        for g in high:
            val = abbv_integrate(cup(basis.beta[f], basis.beta[g]), euler)
            row.append(val.at0())
        mat.append(row)
    return low, high, mat


def localization_pairing_invertible(basis, k):
    low, high, mat = localization_pairing_matrix(basis, k)
    if len(low) != len(high):
        return False
    if not low:
        return True
    return matrix_rank(mat) == len(low)

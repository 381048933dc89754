"""Finite simplicial sets, multiplicative torsors, and their classification.

Simplicial sets are stored by their non-degenerate simplices with total face
maps (degeneracies exist formally and all cochains are normalized, i.e.
vanish on degenerate simplices).  A degree-m multiplicative torsor assigns a
trivialized G-torsor to every m-simplex and a torsor morphism to every
(m+1)-simplex; since every torsor morphism between trivialized torsors is a
translation and the tensor symmetry moves nothing, executing the pasting rule
reduces to bookkeeping the factor multisets plus adding the translation
values.  The membership condition (even composition = odd composition on
every (m+2)-simplex) is then literally the cocycle condition for the standard
alternating coboundary, which the pasting executor re-derives rather than
assumes.

Cohomology with cyclic coefficients is computed from the integer coboundary
matrices by Smith normal form; classification of torsors and the decision
procedure for isomorphism reduce to solving linear congruences.
"""

from __future__ import annotations

from .abgroup import GroupElem
from .exactlin import (int_inverse_unimodular, smith_normal_form,
                       snf_with_transforms, solve_mod)

MAX_DIM_CAP = 5


class ComplexError(Exception):
    pass


class SimplicialSet:
    """Finite dimension-capped simplicial set (non-degenerate part).

    simplices: dict dim -> tuple of ids
    faces: dict (id, face_index) -> id
    """

    def __init__(self, simplices, faces, dim_cap=None):
        self.simplices = {d: tuple(ids) for d, ids in simplices.items() if ids}
        self.faces = dict(faces)
        self.dim_of = {}
        for d, ids in self.simplices.items():
            for s in ids:
                if s in self.dim_of:
                    raise ComplexError("duplicate simplex id %r" % (s,))
                self.dim_of[s] = d
        self.top_dim = max(self.simplices) if self.simplices else -1
        # default cap: the complex is declared complete up to MAX_DIM_CAP;
        # pass dim_cap = top_dim to mark a truncation
        self.dim_cap = MAX_DIM_CAP if dim_cap is None else dim_cap
        if self.dim_cap > MAX_DIM_CAP:
            raise ComplexError("dimension cap above %d" % MAX_DIM_CAP)
        if self.top_dim > self.dim_cap:
            raise ComplexError("simplices above the dimension cap")

    def ids(self, dim):
        return self.simplices.get(dim, ())

    def face(self, sid, i):
        return self.faces[(sid, i)]

    def face_tuple(self, sid):
        d = self.dim_of[sid]
        return tuple(self.faces[(sid, i)] for i in range(d + 1))

    def n_simplices(self, dim):
        return len(self.simplices.get(dim, ()))


def validate_simplicial_set(raw, dim_cap=None):
    """Build and validate a SimplicialSet from (id, dim, faces) triples.

    Raises ComplexError naming the first violated simplicial identity
    (simplex, i, j) or the first dangling face id.
    """
    simplices = {}
    faces = {}
    dims = {}
    for sid, d, fs in raw:
        simplices.setdefault(d, []).append(sid)
        dims[sid] = d
        if d == 0:
            if fs:
                raise ComplexError("vertex %r with faces" % (sid,))
            continue
        if len(fs) != d + 1:
            raise ComplexError("simplex %r needs %d faces" % (sid, d + 1))
        for i, f in enumerate(fs):
            faces[(sid, i)] = f
    for (sid, i), f in faces.items():
        if f not in dims:
            raise ComplexError("dangling face id %r of %r" % (f, sid))
        if dims[f] != dims[sid] - 1:
            raise ComplexError("face %r of %r has wrong dimension" % (f, sid))
    # simplicial identities d_i d_j = d_(j-1) d_i for i < j
    for sid, d in dims.items():
        if d < 2:
            continue
        for j in range(d + 1):
            for i in range(j):
                left = faces[(faces[(sid, j)], i)]
                right = faces[(faces[(sid, i)], j - 1)]
                if left != right:
                    raise ComplexError(
                        "identity failure at %r: (i, j) = (%d, %d)"
                        % (sid, i, j))
    return SimplicialSet(simplices, faces, dim_cap=dim_cap)


def _first_order(complex_, sid):
    d = complex_.dim_of[sid]
    plus = tuple(complex_.face(sid, i) for i in range(0, d + 1, 2))
    minus = tuple(complex_.face(sid, i) for i in range(1, d + 1, 2))
    return plus, minus


def _composition_ends(complex_, faces_in_order):
    """(inputs, outputs) of the pasting of the morphisms attached to the
    listed faces, with internally matched factors consumed."""
    needed = []
    produced = []
    for rho in faces_in_order:
        plus, minus = _first_order(complex_, rho)
        for x in plus:
            if x in produced:
                produced.remove(x)
            else:
                needed.append(x)
        produced.extend(minus)
    return tuple(sorted(needed)), tuple(sorted(produced))


def street_boundaries(complex_, sid):
    """The Street decomposition of a simplex boundary.

    Returns a dict with keys '+', '-', '++', '+-', '-+', '--'.  The first
    order entries are the even/odd face multisets.  The second-order entries
    are the ends of the even and odd pasting compositions: '++' / '-+' are
    the inputs / outputs of the even composition and '--' / '+-' those of the
    odd one, after the factors produced by one face and consumed by a later
    face have cancelled.  In this matched form the equalities '++' == '--'
    and '+-' == '-+' are exactly the statement that the two compositions are
    parallel; the raw face-of-face multisets satisfy only the weaker identity
    that even-even plus odd-odd equals even-odd plus odd-even.
    """
    d = complex_.dim_of[sid]
    if d < 1:
        raise ValueError("simplex of positive dimension required")
    plus, minus = _first_order(complex_, sid)
    out = {"+": tuple(sorted(plus)), "-": tuple(sorted(minus))}
    if d >= 2:
        even_in, even_out = _composition_ends(complex_, plus)
        odd_in, odd_out = _composition_ends(complex_, tuple(reversed(minus)))
        out["++"] = even_in
        out["-+"] = even_out
        out["--"] = odd_in
        out["+-"] = odd_out
    return out


# ---------------------------------------------------------------------------
# cochains

class Cochain:
    """Normalized G-valued cochain: total map on the n-simplices."""

    def __init__(self, complex_, degree, group, values=None):
        self.complex = complex_
        self.degree = degree
        self.group = group
        vals = {}
        if values:
            for sid, g in values.items():
                if complex_.dim_of.get(sid) != degree:
                    raise ValueError("value on %r of wrong dimension"
                                     % (sid,))
                vals[sid] = g if isinstance(g, GroupElem) else group.elem(g)
        self.values = vals

    @classmethod
    def zero(cls, complex_, degree, group):
        return cls(complex_, degree, group)

    def value(self, sid):
        return self.values.get(sid, self.group.zero())

    def set_value(self, sid, g):
        out = dict(self.values)
        out[sid] = g if isinstance(g, GroupElem) else self.group.elem(g)
        return Cochain(self.complex, self.degree, self.group, out)

    def add(self, other):
        self._check(other)
        out = dict(self.values)
        for sid, g in other.values.items():
            out[sid] = out.get(sid, self.group.zero()) + g
        return Cochain(self.complex, self.degree, self.group, out)

    def sub(self, other):
        return self.add(other.neg())

    def neg(self):
        return Cochain(self.complex, self.degree, self.group,
                       {sid: -g for sid, g in self.values.items()})

    def is_zero(self):
        return all(g.is_zero() for g in self.values.values())

    def coboundary(self):
        vals = {}
        for tau in self.complex.ids(self.degree + 1):
            acc = self.group.zero()
            for i in range(self.degree + 2):
                v = self.value(self.complex.face(tau, i))
                acc = acc + (v if i % 2 == 0 else -v)
            vals[tau] = acc
        return Cochain(self.complex, self.degree + 1, self.group, vals)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if (self.complex is not other.complex or self.degree != other.degree
                or self.group != other.group):
            return False
        return self.sub(other).is_zero()

    def __hash__(self):
        canon = tuple(sorted((sid, g.coords)
                             for sid, g in self.values.items()
                             if not g.is_zero()))
        return hash((self.degree, self.group, canon))

    def _check(self, other):
        if self.complex is not other.complex or self.degree != other.degree \
                or self.group != other.group:
            raise ValueError("cochains are not compatible")

    def int_vector(self, factor_index):
        """Integer coordinates of one cyclic component, simplex-ordered."""
        return [self.value(sid).coords[factor_index]
                for sid in self.complex.ids(self.degree)]


def coboundary_matrix(complex_, degree):
    """Integer matrix of delta: C^degree -> C^(degree+1), rows indexed by
    (degree+1)-simplices in id order, columns by degree-simplices."""
    src = complex_.ids(degree)
    col = {sid: k for k, sid in enumerate(src)}
    rows = []
    for tau in complex_.ids(degree + 1):
        r = [0] * len(src)
        for i in range(degree + 2):
            f = complex_.face(tau, i)
            r[col[f]] += 1 if i % 2 == 0 else -1
        rows.append(r)
    return rows


# ---------------------------------------------------------------------------
# multiplicative torsors in trivialized form

class MultTorsorRep:
    """Degree-m multiplicative G-torsor, trivialized.

    anchors: degree-m cochain of base points (T_rho = G with that anchor);
    alpha: degree-(m+1) cochain of morphism values relative to the anchors.
    Changing anchors by a cochain c changes alpha by its coboundary, so the
    cohomology class of alpha is anchor-free.
    """

    def __init__(self, complex_, degree, group, alpha, anchors=None):
        if alpha.degree != degree + 1 or alpha.group != group:
            raise ValueError("alpha must be a (degree+1)-cochain over G")
        if anchors is None:
            anchors = Cochain.zero(complex_, degree, group)
        if anchors.degree != degree or anchors.group != group:
            raise ValueError("anchors must be a degree-cochain over G")
        self.complex = complex_
        self.degree = degree
        self.group = group
        self.alpha = alpha
        self.anchors = anchors

    def absolute_alpha(self):
        """Translation values of the alphas as maps of bare G-sets: the
        relative values minus the anchor coboundary."""
        return self.alpha.sub(self.anchors.coboundary())

    def re_anchor(self, shift):
        """Same torsor presented over shifted anchors."""
        return MultTorsorRep(self.complex, self.degree, self.group,
                             self.alpha.add(shift.coboundary()),
                             self.anchors.add(shift))


class PastingState:
    """Execution state of an iterated pasting of torsor morphisms."""

    def __init__(self, group):
        self.needed = []     # unmatched input factors (ids)
        self.produced = []   # available output factors (ids)
        self.value = group.zero()

    def paste(self, dom, cod, value):
        for x in dom:
            if x in self.produced:
                self.produced.remove(x)
            else:
                self.needed.append(x)
        self.produced.extend(cod)
        self.value = self.value + value


def _paste_faces(torsor, face_ids):
    cx = torsor.complex
    absolute = torsor.absolute_alpha()
    state = PastingState(torsor.group)
    for sigma in face_ids:
        plus, minus = _first_order(cx, sigma)
        state.paste(plus, minus, absolute.value(sigma))
    return state


def evaluate_even_odd(torsor, tau):
    """Execute the even and odd pasting compositions on a (degree+2)-simplex.

    The even composition pastes the even faces in ascending index order, the
    odd one the odd faces in descending order (rightmost factor first, as the
    compositions are written).  Returns (E, O) as group elements, the
    translation values of the two composites; raises if the domains or
    codomains fail to match, which the Street identities forbid.
    """
    cx = torsor.complex
    d = cx.dim_of[tau]
    if d != torsor.degree + 2:
        raise ValueError("pasting needs a simplex of dimension %d"
                         % (torsor.degree + 2))
    evens = [cx.face(tau, i) for i in range(0, d + 1, 2)]
    odds = [cx.face(tau, i) for i in range(d if d % 2 else d - 1, 0, -2)]
    east = _paste_faces(torsor, evens)
    west = _paste_faces(torsor, odds)
    if sorted(east.needed) != sorted(west.needed) or \
            sorted(east.produced) != sorted(west.produced):
        raise AssertionError("even/odd compositions have different ends")
    return east.value, west.value


class TorsorReport:
    def __init__(self, violations, total):
        self.violations = violations
        self.total = total

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        return "TorsorReport(%d checked, %d violations)" % (
            self.total, len(self.violations))


def check_mult_torsor(torsor):
    """E = O on every (degree+2)-simplex; violations carry E - O."""
    cx = torsor.complex
    viol = []
    taus = cx.ids(torsor.degree + 2)
    for tau in taus:
        e, o = evaluate_even_odd(torsor, tau)
        if e != o:
            viol.append((tau, e - o))
    return TorsorReport(viol, len(taus))


# ---------------------------------------------------------------------------
# cohomology via Smith normal form

class DegreeRangeError(Exception):
    pass


class CyclicCohomology:
    """H^n(complex, Z/d) (d = 0 meaning Z) with explicit coordinates."""

    def __init__(self, complex_, degree, order):
        self.complex = complex_
        self.degree = degree
        self.order = order
        N = complex_.n_simplices(degree)
        self.N = N
        D = coboundary_matrix(complex_, degree)
        A = coboundary_matrix(complex_, degree - 1) if degree > 0 else []
        self._build(D, A)

    def _build(self, D, A):
        d = self.order
        N = self.N
        if N == 0:
            self.factors = ()
            self._lbasis = []
            self._ur = []
            self._snf_r = []
            return
        if not D:
            # no higher simplices: every cochain is a cocycle
            self._lbasis = [[1 if i == j else 0 for j in range(N)]
                            for i in range(N)]
        else:
            s, _, v = snf_with_transforms(D)
            cols = []
            for i in range(N):
                si = s[i][i] if i < len(s) and i < N else 0
                if d == 0:
                    if si == 0:
                        cols.append([v[r][i] for r in range(N)])
                else:
                    g = _gcd(si, d)
                    t = d // g if g else 1
                    cols.append([t * v[r][i] for r in range(N)])
            self._lbasis = _transpose(cols)
        # relation generators: columns of A plus d * identity (d > 0)
        rel_cols = []
        if A:
            m = len(A[0])
            for j in range(m):
                rel_cols.append([A[r][j] for r in range(len(A))])
        if d != 0:
            for i in range(N):
                rel_cols.append([d if r == i else 0 for r in range(N)])
        z = self.rank_kernel()
        if z == 0:
            self.factors = ()
            self._ur = []
            self._snf_r = []
            return
        rel_in_l = []
        for col in rel_cols:
            rel_in_l.append(self._coords_in_kernel(col))
        if rel_in_l:
            rmat = _transpose(rel_in_l)  # z x m
        else:
            rmat = [[0] * 1 for _ in range(z)]
        s_r, u_r, _ = snf_with_transforms(rmat)
        self._ur = u_r
        self._snf_r = s_r
        factors = []
        for i in range(z):
            si = s_r[i][i] if i < len(s_r) and i < len(s_r[0]) else 0
            if si != 1:
                factors.append(si)
        self.factors = tuple(factors)

    def rank_kernel(self):
        return len(self._lbasis[0]) if self._lbasis else 0

    def _coords_in_kernel(self, vec):
        """Coordinates of an integer cocycle vector in the kernel lattice."""
        z = self.rank_kernel()
        lb = self._lbasis  # N x z
        # solve lb . y = vec; lb has full column rank; extend to square by
        # solving the least-squares-free way: use snf on lb
        s, u, v = snf_with_transforms(lb)
        uv = [sum(u[i][k] * vec[k] for k in range(self.N))
              for i in range(len(u))]
        y = [0] * z
        for i in range(z):
            si = s[i][i]
            if si == 0:
                raise ValueError("kernel basis is degenerate")
            if uv[i] % si:
                raise ValueError("vector is not in the cocycle lattice")
            y[i] = uv[i] // si
        for i in range(z, len(uv)):
            if uv[i] != 0:
                raise ValueError("vector is not in the cocycle lattice")
        return [sum(v[i][k] * y[k] for k in range(z)) for i in range(z)]

    def is_cocycle(self, vec):
        D = coboundary_matrix(self.complex, self.degree)
        for row in D:
            acc = sum(a * b for a, b in zip(row, vec))
            if self.order == 0:
                if acc != 0:
                    return False
            elif acc % self.order != 0:
                return False
        return True

    def classify(self, vec):
        """Class coordinates of an integer cocycle vector, one coordinate per
        invariant factor of the cohomology group."""
        if self.N == 0 or not self.factors:
            if not self.is_cocycle(vec):
                raise ValueError("not a cocycle")
            return ()
        if not self.is_cocycle(vec):
            raise ValueError("not a cocycle")
        zc = self._coords_in_kernel(list(vec))
        z = len(zc)
        w = [sum(self._ur[i][k] * zc[k] for k in range(z)) for i in range(z)]
        out = []
        for i in range(z):
            si = self._snf_r[i][i] if i < len(self._snf_r) and \
                i < len(self._snf_r[0]) else 0
            if si == 1:
                continue
            out.append(w[i] % si if si else w[i])
        return tuple(out)

    def representative(self, k):
        """An integer cocycle representing the k-th group generator."""
        z = self.rank_kernel()
        keep = [i for i in range(z)
                if (self._snf_r[i][i] if i < len(self._snf_r) and
                    i < len(self._snf_r[0]) else 0) != 1]
        idx = keep[k]
        uinv = int_inverse_unimodular(self._ur)
        zc = [uinv[r][idx] for r in range(z)]
        lb = self._lbasis
        return [sum(lb[r][i] * zc[i] for i in range(z))
                for r in range(self.N)]


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _transpose(rows):
    if not rows:
        return []
    return [[rows[r][c] for r in range(len(rows))]
            for c in range(len(rows[0]))]


def _check_degree_reliable(complex_, degree):
    if degree < 0:
        raise DegreeRangeError("negative degree")
    if degree > complex_.dim_cap - 1:
        raise DegreeRangeError(
            "degree %d not reliable under dimension cap %d"
            % (degree, complex_.dim_cap))


class CohomologyResult:
    """H^n(complex, G) for G a direct sum of cyclics, with representatives."""

    def __init__(self, complex_, degree, group):
        _check_degree_reliable(complex_, degree)
        self.complex = complex_
        self.degree = degree
        self.group = group
        self.components = [CyclicCohomology(complex_, degree, d)
                           for d in group.factors]
        summands = [f for comp in self.components for f in comp.factors]
        self.group_presentation = canonical_factors(summands)

    def classify(self, cochain):
        if cochain.degree != self.degree or cochain.group != self.group:
            raise ValueError("cochain does not match")
        out = []
        for q, comp in enumerate(self.components):
            vec = cochain.int_vector(q)
            out.append(comp.classify(vec))
        return tuple(out)

    def representatives(self):
        """One cochain per generator of each cyclic component."""
        out = []
        for q, comp in enumerate(self.components):
            for k in range(len(comp.factors)):
                vec = comp.representative(k)
                vals = {}
                for sid, x in zip(self.complex.ids(self.degree), vec):
                    coords = [0] * self.group.ngens
                    coords[q] = x
                    vals[sid] = self.group.elem(coords)
                out.append(Cochain(self.complex, self.degree, self.group,
                                   vals))
        return out


def canonical_factors(summands):
    """Invariant factors of a direct sum of cyclic groups."""
    free = sum(1 for d in summands if d == 0)
    torsion = [d for d in summands if d != 0]
    if torsion:
        diag = [[torsion[i] if i == j else 0 for j in range(len(torsion))]
                for i in range(len(torsion))]
        factors, _ = smith_normal_form(diag)
        torsion = [f for f in factors if f != 1]
    return tuple(torsion) + (0,) * free


def cohomology(complex_, degree, group):
    """H^degree(complex, G) with representative cocycles."""
    return CohomologyResult(complex_, degree, group)


# ---------------------------------------------------------------------------
# classification of torsors

class CohomClass:
    def __init__(self, degree, group, coords):
        self.degree = degree
        self.group = group
        self.coords = coords

    def __eq__(self, other):
        return (isinstance(other, CohomClass) and self.degree == other.degree
                and self.group == other.group and self.coords == other.coords)

    def __hash__(self):
        return hash((self.degree, self.group, self.coords))

    def __repr__(self):
        return "CohomClass(H^%d, %s)" % (self.degree, (self.coords,))

    def is_zero(self):
        return all(all(x == 0 for x in c) for c in self.coords)


def classify_torsor(torsor):
    """The class of the torsor's alpha in H^(degree+1)(complex, G)."""
    res = cohomology(torsor.complex, torsor.degree + 1, torsor.group)
    return CohomClass(torsor.degree + 1, torsor.group,
                      res.classify(torsor.alpha))


def iso_decide(t1, t2):
    """A transporter cochain x with delta x = alpha_1 - alpha_2 (absolute
    values), or None when the torsors are not isomorphic."""
    if t1.complex is not t2.complex or t1.degree != t2.degree \
            or t1.group != t2.group:
        raise ValueError("torsors are not comparable")
    diff = t1.absolute_alpha().sub(t2.absolute_alpha())
    cx = t1.complex
    group = t1.group
    A = coboundary_matrix(cx, t1.degree)
    n_src = cx.n_simplices(t1.degree)
    vals = {}
    sols = []
    for q, d in enumerate(group.factors):
        if not A:
            sols.append([0] * n_src)
            continue
        b = diff.int_vector(q)
        x = solve_mod(A, b, d)
        if x is None:
            return None
        sols.append(x)
    for k, sid in enumerate(cx.ids(t1.degree)):
        coords = [sols[q][k] for q in range(group.ngens)]
        vals[sid] = group.elem(coords)
    return Cochain(cx, t1.degree, group, vals)


# ---------------------------------------------------------------------------
# gerbes

class GerbeError(Exception):
    pass


class GerbeRep:
    """Multiplicative G-gerbe in trivialized (skeletal) form.

    Each edge carries a trivialized gerbe, each 2-simplex the torsor
    Hom(alpha(x0 (x) x2), x1) with a chosen anchor, and beta is the
    3-cochain of coherence automorphisms.  Validity is the degree-4 pasting
    condition, i.e. beta is a cocycle.
    """

    def __init__(self, complex_, group, beta, anchors=None):
        if beta.degree != 3 or beta.group != group:
            raise GerbeError("beta must be a 3-cochain over G")
        if anchors is None:
            anchors = Cochain.zero(complex_, 2, group)
        self.complex = complex_
        self.group = group
        self.beta = beta
        self.anchors = anchors
        bad = []
        for ups in complex_.ids(4):
            v = beta.coboundary().value(ups)
            if not v.is_zero():
                bad.append(ups)
        if bad:
            raise GerbeError("degree-4 condition fails at %r" % (bad[0],))


def gerbe_to_torsor(gerbe):
    """The induced degree-2 multiplicative torsor of a multiplicative gerbe;
    its pasting condition holds by the gerbe's degree-4 condition."""
    return MultTorsorRep(gerbe.complex, 2, gerbe.group, gerbe.beta,
                         anchors=gerbe.anchors)

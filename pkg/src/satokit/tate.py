"""Lattices in formal-Laurent-series spaces and their calculus.

A lattice L in k((t))^n is an open, linearly compact subspace; here it is
stored as a subspace of the finite quotient t^lo O^n / t^hi O^n sandwiched by
t^hi O^n <= L <= t^lo O^n, with lo maximal and hi minimal.  Window
coordinates are the monomials t^e u_i, e ascending then unit index ascending,
so every lattice has one canonical representation and lattice equality is
data equality.

Morphisms are Laurent-polynomial matrices, admissible exactly when they have
full row rank (monos) or full column rank (epis) over the rational function
field; short exact sequences of spaces then restrict and project lattices,
with sandwich bounds derived from one-sided inverses over k(t).

The classical non-admissible monomorphism k[t] -> k[[t]] is not representable
here: k[t] is not a finite-rank Laurent-series space, so it is not an object
of this model at all.  Every mono the model can express is admissible.
"""

from __future__ import annotations

from .exactlin import (Matrix, Subspace, det_rows, rref_rows, solve_in_rows)
from .laurent import (LaurentMatrix, LaurentPoly, left_inverse,
                      ratfunc_min_valuation, right_inverse)


class TateSpace:
    """The space k((t))^n."""

    __slots__ = ("field", "rank")

    def __init__(self, field, rank):
        if rank < 0:
            raise ValueError("negative rank")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return (isinstance(other, TateSpace) and self.field == other.field
                and self.rank == other.rank)

    def __hash__(self):
        return hash((self.field, self.rank))

    def __repr__(self):
        return "TateSpace(%s((t))^%d)" % (self.field, self.rank)


class Lattice:
    """Element of the Sato Grassmannian of a TateSpace, canonical form."""

    __slots__ = ("space", "lo", "hi", "rows")

    def __init__(self, space, lo, hi, rows, _normalized=False):
        if not _normalized:
            raise ValueError("use lattice_normalize to build lattices")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return (isinstance(other, Lattice) and self.space == other.space
                and self.lo == other.lo and self.hi == other.hi
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.space, self.lo, self.hi, self.rows))

    def __repr__(self):
        return "Lattice(%r, lo=%d, hi=%d, extra_dim=%d)" % (
            self.space, self.lo, self.hi, len(self.rows))

    @property
    def field(self):
        return self.space.field

    def window_dim(self):
        return (self.hi - self.lo) * self.space.rank


def standard_lattice(space, shift=0):
    """t^shift O^n."""
    return Lattice(space, shift, shift, (), _normalized=True)


def lattice_normalize(space, lo, hi, raw_basis):
    """Canonical Lattice from window bounds and basis rows over the window
    quotient t^lo O^n / t^hi O^n (monomial coordinates, e then unit)."""
    n = space.rank
    field = space.field
    if lo > hi:
        raise ValueError("lo must be <= hi")
    width = (hi - lo) * n
    rows = [list(r) for r in raw_basis]
    if any(len(r) != width for r in rows):
        raise ValueError("basis rows must have length %d" % width)
    rows, pivots = rref_rows(field, rows)
    if n == 0:
        return Lattice(space, 0, 0, (), _normalized=True)

    # deep strip: drop full monomial levels at the hi end
    while hi > lo:
        level = set(range((hi - 1 - lo) * n, (hi - lo) * n))
        if not level.issubset(set(pivots)):
            break
        keep = []
        for r, p in zip(rows, pivots):
            if p not in level:
                keep.append(r[: (hi - 1 - lo) * n])
        hi -= 1
        rows, pivots = rref_rows(field, [list(r) for r in keep]) \
            if keep else ([], [])
    # shallow strip: drop all-zero levels at the lo end
    while lo < hi:
        if any(p < n for p in pivots):
            break
        if any(any(x != 0 for x in r[:n]) for r in rows):
            break
        rows = [tuple(r[n:]) for r in rows]
        pivots = [p - n for p in pivots]
        lo += 1
    if lo == hi:
        rows = []
    return Lattice(space, lo, hi, rows, _normalized=True)


def window_rows(lat, LO, HI):
    """Basis rows of lat / t^HI O^n inside the window [LO, HI)."""
    n = lat.space.rank
    if LO > lat.lo or HI < lat.hi:
        raise ValueError("window does not contain the lattice window")
    width = (HI - LO) * n
    field = lat.field
    z = field.zero()
    out = []
    off = (lat.lo - LO) * n
    for r in lat.rows:
        row = [z] * width
        for k, x in enumerate(r):
            row[off + k] = x
        out.append(row)
    one = field.one()
    for e in range(lat.hi, HI):
        for i in range(n):
            row = [z] * width
            row[(e - LO) * n + i] = one
            out.append(row)
    rows, _ = rref_rows(field, out)
    return rows


def window_subspace(lat, LO, HI):
    return Subspace(lat.field, (HI - LO) * lat.space.rank,
                    window_rows(lat, LO, HI))


def common_window(*lats):
    LO = min(l.lo for l in lats)
    HI = max(l.hi for l in lats)
    return LO, HI


def _check_same_space(a, b):
    if a.space != b.space:
        raise ValueError("lattices live in different spaces")


def lattice_contains(a, b):
    """True iff b <= a as subspaces of k((t))^n."""
    _check_same_space(a, b)
    LO, HI = common_window(a, b)
    arows = window_rows(a, LO, HI)
    piv = [next(j for j, x in enumerate(r) if x != 0) for r in arows]
    field = a.field
    from .exactlin import reduce_row
    for r in window_rows(b, LO, HI):
        if any(x != 0 for x in reduce_row(field, r, arows, piv)):
            return False
    return True


def lattice_meet(a, b):
    _check_same_space(a, b)
    LO, HI = common_window(a, b)
    sa = window_subspace(a, LO, HI)
    sb = window_subspace(b, LO, HI)
    return lattice_normalize(a.space, LO, HI, sa.meet(sb).rows)


def lattice_join(a, b):
    _check_same_space(a, b)
    LO, HI = common_window(a, b)
    rows = window_rows(a, LO, HI) + window_rows(b, LO, HI)
    return lattice_normalize(a.space, LO, HI, rows)


def relative_index(a, b):
    """dim(a / a n b) - dim(b / a n b)."""
    _check_same_space(a, b)
    LO, HI = common_window(a, b)
    return len(window_rows(a, LO, HI)) - len(window_rows(b, LO, HI))


def laurent_vector_from_window(field, n, LO, row):
    """Window coordinates -> tuple of LaurentPoly of length n."""
    terms = [[] for _ in range(n)]
    for k, x in enumerate(row):
        if x != 0:
            e, i = divmod(k, n)
            terms[i].append((LO + e, x))
    return tuple(LaurentPoly(field, t) for t in terms)


def window_coords_of_laurent(field, n, LO, HI, vec):
    """Laurent vector -> window coordinates, truncating exponents >= HI.

    Exponents below LO are an error: the vector escapes the window.
    """
    width = (HI - LO) * n
    z = field.zero()
    row = [z] * width
    for i, p in enumerate(vec):
        for e, c in p.terms:
            if e >= HI:
                continue
            if e < LO:
                raise ValueError("vector escapes the window at t^%d" % e)
            row[(e - LO) * n + i] = c
    return row


# ---------------------------------------------------------------------------
# admissible short exact sequences of Tate spaces

class TateSESInvalid(Exception):
    def __init__(self, code):
        self.code = code
        super().__init__(code)


class TateSES:
    """Validated  X' >--i--> X --j->> X''  with Laurent-polynomial matrices.

    Admissibility is full rank over k(t); exactness in the middle is the rank
    count a + c = b together with i . j = 0.
    """

    __slots__ = ("i", "j", "_cache")

    def __init__(self, i, j, _checked=False):
        if not _checked:
            code = diagnose_tate_ses(i, j)
            if code is not None:
                raise TateSESInvalid(code)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    @property
    def field(self):
        return self.i.field

    @property
    def sub_space(self):
        return TateSpace(self.field, self.i.nrows)

    @property
    def total_space(self):
        return TateSpace(self.field, self.i.ncols)

    @property
    def quot_space(self):
        return TateSpace(self.field, self.j.ncols)

    def right_inverse_of_i(self):
        """B with i . B = identity, cached; verified exactly on first use."""
        if "ri" not in self._cache:
            b = right_inverse(self.i)
            if b is None or not _verify_one_sided(self.i, b, left=False):
                raise TateSESInvalid("not-mono")
            self._cache["ri"] = b
        return self._cache["ri"]

    def left_inverse_of_j(self):
        if "lj" not in self._cache:
            c = left_inverse(self.j)
            if c is None or not _verify_one_sided(self.j, c, left=True):
                raise TateSESInvalid("not-epi")
            self._cache["lj"] = c
        return self._cache["lj"]

    def seed_inverses(self, ri=None, lj=None):
        """Install known one-sided inverses (Laurent matrices), bypassing the
        k(t) solver; both are verified exactly before being accepted."""
        if ri is not None:
            rows = [list(r) for r in ri.entries]
            if not _verify_one_sided(self.i, rows, left=False):
                raise ValueError("seeded right inverse fails i . B = 1")
            self._cache["ri"] = rows
        if lj is not None:
            rows = [list(r) for r in lj.entries]
            if not _verify_one_sided(self.j, rows, left=True):
                raise ValueError("seeded left inverse fails C . j = 1")
            self._cache["lj"] = rows
        return self


def _verify_one_sided(m, inv_rows, left):
    """Exact check of C . m = I (left) or m . B = I (right) over k(t)."""
    from .laurent import RatFunc

    def lift_rows(rows):
        return [[x if isinstance(x, RatFunc) else RatFunc.from_poly(x)
                 for x in row] for row in rows]

    field = m.field
    zero = RatFunc.from_poly(LaurentPoly.zero(field))
    one = RatFunc.from_poly(LaurentPoly.one(field))
    if left:
        a, b = lift_rows(inv_rows), lift_rows(m.entries)
    else:
        a, b = lift_rows(m.entries), lift_rows(inv_rows)
    n = len(a)
    inner = len(b)
    for r in range(n):
        for c in range(n):
            acc = zero
            for k in range(inner):
                acc = acc.add(a[r][k].mul(b[k][c]))
            if acc != (one if r == c else zero):
                return False
    return True


def diagnose_tate_ses(i, j):
    if i.ncols != j.nrows:
        raise ValueError("middle ranks disagree")
    if i.field != j.field:
        raise ValueError("field mismatch")
    a, b, c = i.nrows, i.ncols, j.ncols
    if i.rank() != a:
        return "not-mono"
    if j.rank() != c:
        return "not-epi"
    if not i.mul(j).is_zero():
        return "composite-nonzero"
    if a + c != b:
        return "inexact-at-middle"
    return None


def check_tate_ses(i, j):
    code = diagnose_tate_ses(i, j)
    if code is not None:
        raise TateSESInvalid(code)
    return TateSES(i, j, _checked=True)


def split_tate_ses(field, a, c):
    """The coordinate split k((t))^a >--> k((t))^(a+c) -->> k((t))^c."""
    one = LaurentPoly.one(field)
    z = LaurentPoly.zero(field)
    b = a + c
    i = LaurentMatrix(field, [[one if q == r else z for q in range(b)]
                              for r in range(a)], b)
    j = LaurentMatrix(field, [[one if q == r - a else z for q in range(c)]
                              for r in range(b)], c)
    return check_tate_ses(i, j)


def twist_tate_ses(ses, aut, aut_inv):
    """Conjugate the middle of a TateSES by an automorphism of the middle
    space: i' = i . A, j' = A^-1 . j."""
    prod = aut.mul(aut_inv)
    if prod != LaurentMatrix.identity(ses.field, aut.nrows):
        raise ValueError("aut_inv is not the inverse of aut")
    return check_tate_ses(ses.i.mul(aut), aut_inv.mul(ses.j))


def _polynomial_rows(ratfunc_rows):
    rows = []
    for r in ratfunc_rows:
        row = []
        for x in r:
            if x.den.terms != ((0, x.den.field.one()),):
                raise ValueError("inverse has a nontrivial denominator")
            row.append(x.num)
        rows.append(row)
    return rows


def retraction_of_mono(ses):
    """LaurentMatrix r with i . r = identity; requires a polynomial right
    inverse (twisted coordinate splits always have one)."""
    rows = _polynomial_rows(ses.right_inverse_of_i())
    return LaurentMatrix(ses.field, rows, ses.i.nrows)


def section_of_epi(ses):
    """LaurentMatrix s with s . j = identity, polynomial entries."""
    rows = _polynomial_rows(ses.left_inverse_of_j())
    return LaurentMatrix(ses.field, rows, ses.j.nrows)


def compose_filtration(ses_outer, ses_inner):
    """Given X2 >--> X3 (outer) and X1 >--> X2 (inner), the sequence
    X1 >--> X3 -->> X3/X1 with X3/X1 = (X2/X1) (+) (X3/X2) coordinates."""
    i13 = ses_inner.i.mul(ses_outer.i)
    field = i13.field
    r23 = retraction_of_mono(ses_outer)
    part1 = r23.mul(ses_inner.j)          # X3 -> X2 -> X2/X1
    rows = [list(pr) + list(jr) for pr, jr in
            zip(part1.entries, ses_outer.j.entries)]
    j13 = LaurentMatrix(field, rows, part1.ncols + ses_outer.j.ncols)
    return check_tate_ses(i13, j13)


def quotient_ses(ses_outer, ses_inner, ses_composed=None):
    """X2/X1 >--> X3/X1 -->> X3/X2 induced by the filtration."""
    if ses_composed is None:
        ses_composed = compose_filtration(ses_outer, ses_inner)
    s12 = section_of_epi(ses_inner)
    mono = s12.mul(ses_outer.i).mul(ses_composed.j)
    s13 = section_of_epi(ses_composed)
    epi = s13.mul(ses_outer.j)
    return check_tate_ses(mono, epi)


def lift_lattice(ses, u):
    """The lattice i^(-1)(u) in X', a.k.a. u n X'.

    Sandwich bounds come from the entry valuations of i and of a right
    inverse of i over k(t); the kernel computation inside the windows is
    exact, so the bounds only need to be safe, and the right-inverse identity
    is verified exactly once per sequence.
    """
    if u.space != ses.total_space:
        raise ValueError("lattice does not live in the middle space")
    a, b = ses.i.nrows, ses.i.ncols
    field = ses.field
    src = TateSpace(field, a)
    if a == 0:
        return standard_lattice(src)
    vmin_i = ses.i.min_valuation()
    binv = ses.right_inverse_of_i()
    vmin_b = ratfunc_min_valuation(binv)
    HI = u.hi - vmin_i
    LO = u.lo + vmin_b
    # images of window monomials are classes mod t^(u.hi) O^b, which is
    # inside u, so the membership test happens in u's own window
    LO_t = min(u.lo, LO + vmin_i)
    u_w = window_subspace(u, LO_t, u.hi)
    irows = ses.i.entries
    gen = []
    for e in range(LO, HI):
        for k in range(a):
            vec = tuple(p.shift(e) for p in irows[k])
            wrow = window_coords_of_laurent(field, b, LO_t, u.hi, vec)
            gen.append(u_w.proj_coords(wrow))
    ker, _ = _left_kernel(field, gen)
    return lattice_normalize(src, LO, HI, ker)


def _left_kernel(field, rows):
    from .exactlin import left_kernel_rows
    return left_kernel_rows(field, rows)


def project_lattice(ses, u):
    """The image lattice j(u) = u / (u n X') in X''."""
    if u.space != ses.total_space:
        raise ValueError("lattice does not live in the middle space")
    b, c = ses.j.nrows, ses.j.ncols
    field = ses.field
    dst = TateSpace(field, c)
    if c == 0:
        return standard_lattice(dst)
    vmin_j = ses.j.min_valuation()
    cinv = ses.left_inverse_of_j()
    vmin_c = ratfunc_min_valuation(cinv)
    HI = u.hi - vmin_c
    LO = u.lo + vmin_j
    tail_top = HI - vmin_j
    gen = []
    for r in u.rows:
        vec = laurent_vector_from_window(field, b, u.lo, r)
        img = ses.j.apply_row(vec)
        gen.append(window_coords_of_laurent(field, c, LO, HI, img))
    jrows = ses.j.entries
    for e in range(u.hi, tail_top):
        for k in range(b):
            vec = tuple(p.shift(e) for p in jrows[k])
            gen.append(window_coords_of_laurent(field, c, LO, HI, vec))
    return lattice_normalize(dst, LO, HI, gen)


# ---------------------------------------------------------------------------
# canonical quotient bases and determinant scalars for nested lattices

class LatticeQuotient:
    """The finite-dimensional quotient big/small of nested lattices,
    materialized in the canonical window [lo(big), hi(small))."""

    __slots__ = ("field", "n", "LO", "HI", "small_w", "basis", "pivots")

    def __init__(self, small, big, LO=None, HI=None):
        if not lattice_contains(big, small):
            raise ValueError("quotient requires small <= big")
        if LO is None:
            LO = big.lo
        if HI is None:
            HI = small.hi
        LO = min(LO, big.lo)
        HI = max(HI, small.hi)
        field = small.field
        n = small.space.rank
        small_w = window_subspace(small, LO, HI)
        big_w = window_subspace(big, LO, HI)
        rows = [small_w.proj_coords(r) for r in big_w.rows]
        basis, pivots = rref_rows(field, rows)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "LO", LO)
        object.__setattr__(self, "HI", HI)
        object.__setattr__(self, "small_w", small_w)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    @property
    def dim(self):
        return len(self.basis)

    def coords_of_window_row(self, wrow):
        c = solve_in_rows(self.field, self.basis, self.pivots,
                          self.small_w.proj_coords(wrow))
        if c is None:
            raise ValueError("vector does not lie in the quotient")
        return c

    def coords_of_laurent(self, vec):
        wrow = window_coords_of_laurent(self.field, self.n, self.LO, self.HI,
                                        vec)
        return self.coords_of_window_row(wrow)

    def laurent_of_basis_index(self, k):
        wrow = self.small_w.lift_coords(self.basis[k])
        return laurent_vector_from_window(self.field, self.n, self.LO, wrow)


def lambda_scalar_chain(a, b, c):
    """Scalar of det(b/a) (x) det(c/b) -> det(c/a) in canonical bases.

    a <= b <= c lattices; the scalar is the determinant of the matrix that
    expresses (basis of b/a, canonically lifted basis of c/b) in the
    canonical basis of c/a.
    """
    _check_same_space(a, b)
    _check_same_space(b, c)
    LO, HI = common_window(a, b, c)
    field = a.field
    a_w = window_subspace(a, LO, HI)
    b_w = window_subspace(b, LO, HI)
    c_w = window_subspace(c, LO, HI)
    beta_ba, _ = rref_rows(field, [a_w.proj_coords(r) for r in b_w.rows])
    beta_ca, piv_ca = rref_rows(field, [a_w.proj_coords(r) for r in c_w.rows])
    beta_cb, _ = rref_rows(field, [b_w.proj_coords(r) for r in c_w.rows])
    stacked = list(beta_ba)
    for r in beta_cb:
        wrow = b_w.lift_coords(r)
        stacked.append(a_w.proj_coords(wrow))
    rows = []
    for r in stacked:
        cc = solve_in_rows(field, beta_ca, piv_ca, r)
        if cc is None:
            raise ValueError("chain is not nested")
        rows.append(cc)
    return det_rows(field, rows)


def delta_scalar_canonical(u, v):
    """Connecting scalar for nested lattices used by anchored determinantal
    theories: lambda against a reference lattice t^(2M) O^n at even depth.

    Any even reference depth at or below -max(hi) gives the same scalar, so
    the assignment is coherent: for u <= v <= w the cocycle
    delta(v,w) delta(u,v) = delta(u,w) lambda(u,v,w) holds on the nose.
    """
    _check_same_space(u, v)
    m = max(u.hi, v.hi)
    depth = m + (m & 1)
    ref = standard_lattice(u.space, depth)
    return lambda_scalar_chain(ref, u, v)


# ---------------------------------------------------------------------------
# the nine-lattice grid of a nested pair through a short exact sequence

class LatticeGridError(Exception):
    def __init__(self, code):
        self.code = code
        super().__init__(code)


class LatticeGrid:
    """Rows: (lift u', u', proj u'), (lift u, u, proj u), quotient dims."""

    def __init__(self, ses, u_sub, u):
        if u.space != ses.total_space or u_sub.space != ses.total_space:
            raise LatticeGridError("wrong-space")
        if not lattice_contains(u, u_sub):
            raise LatticeGridError("not-nested")
        self.ses = ses
        self.mid = (u_sub, u)
        self.left = (lift_lattice(ses, u_sub), lift_lattice(ses, u))
        self.right = (project_lattice(ses, u_sub), project_lattice(ses, u))
        if not lattice_contains(self.left[1], self.left[0]):
            raise LatticeGridError("lift-not-nested")
        if not lattice_contains(self.right[1], self.right[0]):
            raise LatticeGridError("projection-not-nested")
        self.bottom_dims = (
            relative_index(self.left[1], self.left[0]),
            relative_index(u, u_sub),
            relative_index(self.right[1], self.right[0]),
        )
        if self.bottom_dims[1] != self.bottom_dims[0] + self.bottom_dims[2]:
            raise LatticeGridError("bottom-row-not-exact")

    def entries(self):
        return {
            "tl": self.left[0], "tm": self.mid[0], "tr": self.right[0],
            "ml": self.left[1], "mm": self.mid[1], "mr": self.right[1],
            "bl": self.bottom_dims[0], "bm": self.bottom_dims[1],
            "br": self.bottom_dims[2],
        }


def lattice_grid(ses, u_sub, u):
    """Complete a nested pair of middle lattices to the nine-entry grid with
    additive quotient dimensions; raises LatticeGridError with a diagnosis
    when the precondition fails."""
    return LatticeGrid(ses, u_sub, u)


def fd_ses_of_pair(ses, u_sub, u):
    """The induced short exact sequence of finite quotients

        lift(u)/lift(u') >--> u/u' -->> proj(u)/proj(u')

    returned as validated exactcat data in canonical quotient bases."""
    from .exactcat import FdSpace, LinMap, check_ses
    grid = LatticeGrid(ses, u_sub, u)
    field = ses.field
    q_left = LatticeQuotient(grid.left[0], grid.left[1])
    q_mid = LatticeQuotient(u_sub, u)
    q_right = LatticeQuotient(grid.right[0], grid.right[1])
    mono_rows = []
    for k in range(q_left.dim):
        vec = q_left.laurent_of_basis_index(k)
        mono_rows.append(q_mid.coords_of_laurent(ses.i.apply_row(vec)))
    epi_rows = []
    for k in range(q_mid.dim):
        vec = q_mid.laurent_of_basis_index(k)
        epi_rows.append(q_right.coords_of_laurent(ses.j.apply_row(vec)))
    src = FdSpace(field, q_left.dim)
    mid = FdSpace(field, q_mid.dim)
    dst = FdSpace(field, q_right.dim)
    i_map = LinMap(src, mid, Matrix(field, mono_rows, mid.dim))
    j_map = LinMap(mid, dst, Matrix(field, epi_rows, dst.dim))
    return check_ses(i_map, j_map), (q_left, q_mid, q_right)

"""The exact category of finite dimensional vector spaces.

Objects are dimensions over a fixed field; morphisms act on row vectors, so a
map f: a -> b is an (dim a x dim b) matrix and composition is matrix product
in diagram order.  Admissibility here coincides with plain injectivity /
surjectivity, but every check is routed through the short-exact-sequence
validator so the same code paths serve the lattice model.
"""

from __future__ import annotations

from functools import lru_cache

from .exactlin import Matrix, Subspace, mat_mul_rows, rref_rows, solve_in_rows


class FdSpace:
    __slots__ = ("field", "dim")

    def __init__(self, field, dim):
        if dim < 0:
            raise ValueError("negative dimension")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)

    def __setattr__(self, *a):
        raise AttributeError("FdSpace is immutable")

    def __eq__(self, other):
        return (isinstance(other, FdSpace) and self.field == other.field
                and self.dim == other.dim)

    def __hash__(self):
        return hash((self.field, self.dim))

    def __repr__(self):
        return "FdSpace(%s^%d)" % (self.field, self.dim)


class LinMap:
    """Linear map between FdSpaces; matrix rows act on the source basis."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(source.field, matrix, ncols=target.dim)
        if source.field != target.field or matrix.field != source.field:
            raise ValueError("field mismatch")
        if matrix.nrows != source.dim or matrix.ncols != target.dim:
            raise ValueError("matrix shape %dx%d does not match %d -> %d"
                             % (matrix.nrows, matrix.ncols,
                                source.dim, target.dim))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, *a):
        raise AttributeError("LinMap is immutable")

    @classmethod
    def identity(cls, space):
        return cls(space, space, Matrix.identity(space.field, space.dim))

    @classmethod
    def zero(cls, source, target):
        return cls(source, target,
                   Matrix.zero(source.field, source.dim, target.dim))

    def __eq__(self, other):
        return (isinstance(other, LinMap) and self.source == other.source
                and self.target == other.target and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return "LinMap(%d -> %d over %s)" % (self.source.dim,
                                             self.target.dim,
                                             self.source.field)

    def then(self, other):
        """Diagram-order composition: first self, then other."""
        if self.target != other.source:
            raise ValueError("maps are not composable")
        return LinMap(self.source, other.target, self.matrix.mul(other.matrix))

    def apply(self, v):
        return tuple(mat_mul_rows(self.source.field, [list(v)],
                                  list(self.matrix.entries))[0])

    def is_mono(self):
        return self.matrix.rank() == self.source.dim

    def is_epi(self):
        return self.matrix.rank() == self.target.dim

    def is_iso(self):
        return self.source.dim == self.target.dim and self.is_mono()

    def is_zero(self):
        return self.matrix.is_zero()

    def image_subspace(self):
        return self.matrix.row_space()

    def kernel_subspace(self):
        """Kernel as a subspace of the source (row-vector convention)."""
        return self.matrix.left_kernel()

    def inverse(self):
        if not self.is_iso():
            raise ValueError("not an isomorphism")
        f = self.source.field
        n = self.source.dim
        aug = [list(self.matrix.entries[i])
               + [f.one() if j == i else f.zero() for j in range(n)]
               for i in range(n)]
        red, _ = rref_rows(f, aug)
        inv_rows = [r[n:] for r in red]
        return LinMap(self.target, self.source, Matrix(f, inv_rows, n))


@lru_cache(maxsize=2048)
def canonical_section(j):
    """Canonical linear section s of an epi j (s then j = identity)."""
    if not j.is_epi():
        raise ValueError("section of a non-epi")
    f = j.source.field
    rref, piv, transform = _rref_with_transform(f, j.matrix.entries)
    sec = []
    for t in range(j.target.dim):
        e = [f.zero()] * j.target.dim
        e[t] = f.one()
        c = solve_in_rows(f, rref, piv, e)
        sec.append(mat_mul_rows(f, [list(c)], transform)[0])
    return LinMap(j.target, j.source, Matrix(f, sec, j.source.dim))


# ---------------------------------------------------------------------------

class SESInvalid(Exception):
    """A proposed short exact sequence failed; .code names the condition."""

    def __init__(self, code, detail=""):
        self.code = code
        super().__init__(code if not detail else "%s: %s" % (code, detail))


class SES:
    """Validated admissible short exact sequence  a' >--i--> a --j->> a''."""

    __slots__ = ("i", "j")

    def __init__(self, i, j, _checked=False):
        if not _checked:
            diag = diagnose_ses(i, j)
            if diag is not None:
                raise SESInvalid(diag)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    def __setattr__(self, *a):
        raise AttributeError("SES is immutable")

    @property
    def sub(self):
        return self.i.source

    @property
    def total(self):
        return self.i.target

    @property
    def quot(self):
        return self.j.target

    def __repr__(self):
        return "SES(%d >-> %d ->> %d)" % (self.sub.dim, self.total.dim,
                                          self.quot.dim)


def diagnose_ses(i, j):
    """None when (i, j) is a valid SES, else the first failing condition."""
    if i.target != j.source:
        raise ValueError("middle objects disagree")
    if not i.is_mono():
        return "not-mono"
    if not j.is_epi():
        return "not-epi"
    if not i.then(j).is_zero():
        return "composite-nonzero"
    if j.kernel_subspace().dim != i.source.dim:
        return "inexact-at-middle"
    return None


def check_ses(i, j):
    """Validated SES or raise SESInvalid naming the failed condition."""
    diag = diagnose_ses(i, j)
    if diag is not None:
        raise SESInvalid(diag)
    return SES(i, j, _checked=True)


def split_ses(field, a, b):
    """The coordinate split  k^a >--> k^(a+b) -->> k^b."""
    one, z = field.one(), field.zero()
    src, mid, quo = FdSpace(field, a), FdSpace(field, a + b), FdSpace(field, b)
    i = LinMap(src, mid, [[one if j == k else z for j in range(a + b)]
                          for k in range(a)])
    j = LinMap(mid, quo, [[one if c == r - a else z for c in range(b)]
                          for r in range(a + b)])
    return check_ses(i, j)


def inclusion_map(sub):
    """The subspace inclusion span(sub) -> k^ambient."""
    src = FdSpace(sub.field, sub.dim)
    tgt = FdSpace(sub.field, sub.ambient)
    return LinMap(src, tgt, Matrix(sub.field, sub.rows, sub.ambient))


def quotient_map(sub):
    """The canonical projection k^ambient -> k^ambient / span(sub)."""
    src = FdSpace(sub.field, sub.ambient)
    tgt = FdSpace(sub.field, sub.ambient - sub.dim)
    return LinMap(src, tgt, Matrix(sub.field, sub.quotient_rows(), tgt.dim))


def sub_quotient_ses(sub):
    """The SES  span(sub) >--> k^ambient -->> k^ambient/span(sub)."""
    return check_ses(inclusion_map(sub), quotient_map(sub))


# ---------------------------------------------------------------------------
# pullbacks of monos, pushouts of epis, factorization

def pullback_admissible_monos(m1, m2):
    """Pullback of two admissible monos with common target.

    Returns (p, into1, into2) with into1 then m1 == into2 then m2, both legs
    admissible monos onto the intersection of the images.
    """
    if m1.target != m2.target:
        raise ValueError("monos must share their target")
    if not m1.is_mono() or not m2.is_mono():
        raise ValueError("input is not a monomorphism")
    f = m1.source.field
    w = m1.image_subspace().meet(m2.image_subspace())
    p = FdSpace(f, w.dim)
    into1 = _corestrict(m1, w, p)
    into2 = _corestrict(m2, w, p)
    return p, into1, into2


def _corestrict(mono, w, p):
    # express each basis vector of w through the mono
    f = mono.source.field
    t_rows, t_piv, transform = _rref_with_transform(f, mono.matrix.entries)
    out = []
    for v in w.rows:
        c = solve_in_rows(f, t_rows, t_piv, v)
        if c is None:
            raise ValueError("subspace does not factor through the mono")
        out.append(mat_mul_rows(f, [list(c)], transform)[0])
    return LinMap(p, mono.source, Matrix(f, out, mono.source.dim))


def _rref_with_transform(field, rows):
    """(rref, pivots, T) with T . rows == rref."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    aug = [list(rows[i]) + [field.one() if j == i else field.zero()
                            for j in range(n)] for i in range(n)]
    red, _ = rref_rows(field, aug)
    kept = [r for r in red if any(x != 0 for x in r[:m])]
    rref = [r[:m] for r in kept]
    transform = [list(r[m:]) for r in kept]
    pivots = []
    for r in rref:
        for jj, x in enumerate(r):
            if x != 0:
                pivots.append(jj)
                break
    return rref, pivots, transform


def pullback_mediator(into1, into2, cone1, cone2):
    """The unique mediator u with u then into1 == cone1 and u then into2 ==
    cone2, or None when the cone does not factor.  This is the on-demand
    universal property check for a pullback square."""
    if cone1.source != cone2.source:
        raise ValueError("cone legs must share their source")
    f = into1.source.field
    stacked_rows = [list(a) + list(b) for a, b in
                    zip(into1.matrix.entries, into2.matrix.entries)]
    target_rows = [list(a) + list(b) for a, b in
                   zip(cone1.matrix.entries, cone2.matrix.entries)]
    rref, piv, transform = _rref_with_transform(f, stacked_rows)
    u_rows = []
    for row in target_rows:
        c = solve_in_rows(f, rref, piv, row)
        if c is None:
            return None
        u_rows.append(mat_mul_rows(f, [list(c)], transform)[0])
    u = LinMap(cone1.source, into1.source,
               Matrix(f, u_rows, into1.source.dim))
    if u.then(into1) != cone1 or u.then(into2) != cone2:
        return None
    return u


def pushout_admissible_epis(e1, e2):
    """Pushout of two admissible epis with common source.

    Returns (q, from1, from2) with e1 then from1 == e2 then from2, both legs
    admissible epis; q is the quotient by ker e1 + ker e2.
    """
    if e1.source != e2.source:
        raise ValueError("epis must share their source")
    if not e1.is_epi() or not e2.is_epi():
        raise ValueError("input is not an epimorphism")
    ksum = e1.kernel_subspace().join(e2.kernel_subspace())
    proj = quotient_map(ksum)
    q = proj.target
    from1 = _descend(e1, proj)
    from2 = _descend(e2, proj)
    return q, from1, from2


def _descend(epi, proj):
    # the unique map g with epi then g == proj
    sec = canonical_section(epi)
    g = sec.then(proj)
    return LinMap(epi.target, proj.target, g.matrix)


def epi_mono_factorize(f, witness_mono, witness_epi):
    """Canonical epi-mono factorization of a mono-then-epi composite.

    The witnesses present f as witness_mono then witness_epi; the result
    (e, m) satisfies f == e then m with the middle object the echelon image
    subspace, so the factorization is canonical on the nose.
    """
    if not witness_mono.is_mono():
        raise ValueError("witness mono is not injective")
    if not witness_epi.is_epi():
        raise ValueError("witness epi is not surjective")
    if witness_mono.then(witness_epi) != f:
        raise ValueError("witnesses do not compose to f")
    return image_factorization(f)


def image_factorization(f):
    """f == e then m with m the echelon inclusion of the image."""
    fld = f.source.field
    img = f.image_subspace()
    mid = FdSpace(fld, img.dim)
    m = LinMap(mid, f.target, Matrix(fld, img.rows, f.target.dim))
    e_rows = [solve_in_rows(fld, img.rows, img.pivots, r)
              for r in f.matrix.entries]
    e = LinMap(f.source, mid, Matrix(fld, e_rows, mid.dim))
    return e, m


def factorization_connector(fac1, fac2):
    """The unique iso u between middle objects of two factorizations of the
    same map, or None when the factorizations are not conjugate.

    fac = (e, m); u satisfies e1 then u == e2 and u then m2 == m1.
    Uniqueness is forced because e1 is epi.
    """
    e1, m1 = fac1
    e2, m2 = fac2
    if e1.source != e2.source or m1.target != m2.target:
        return None
    if e1.target.dim != e2.target.dim or not e1.is_epi():
        return None
    # e1 epi forces u to be section(e1) then e2; verify it connects
    u = canonical_section(e1).then(e2)
    if not u.is_iso():
        return None
    if e1.then(u) != e2 or u.then(m2) != m1:
        return None
    return u


# ---------------------------------------------------------------------------
# admissible squares and 3x3 grids

def is_cartesian_square(top, left, bottom, right):
    """Cartesianity of a commuting square

        A --top--> B
        |          |
      left       right
        v          v
        C -bottom-> D

    tested by comparing A against the kernel-pullback inside B (+) C.
    """
    if top.then(right) != left.then(bottom):
        return False
    f = top.source.field
    nb, nc = top.target.dim, left.target.dim
    # pullback P = {(b, c) : b.right == c.bottom} inside B (+) C, computed
    # as the kernel of (b, c) |-> b.right - c.bottom
    rows = [list(r) for r in right.matrix.entries] + \
           [[f.neg(x) for x in r] for r in bottom.matrix.entries]
    bigmat = Matrix(f, rows, right.target.dim)
    pspace = bigmat.left_kernel()
    # the induced map A -> B (+) C
    ind = [list(tr) + list(lr) for tr, lr in
           zip(top.matrix.entries, left.matrix.entries)]
    ind_sub = Subspace.from_rows(f, nb + nc, ind)
    return (ind_sub == pspace
            and Matrix(f, ind, nb + nc).rank() == top.source.dim)


def is_cocartesian_square(top, left, bottom, right):
    """Cocartesianity: D is the quotient of B (+) C by the antidiagonal
    image of A."""
    if top.then(right) != left.then(bottom):
        return False
    f = top.source.field
    nb, nc = top.target.dim, left.target.dim
    anti = [list(tr) + [f.neg(x) for x in lr]
            for tr, lr in zip(top.matrix.entries, left.matrix.entries)]
    anti_sub = Subspace.from_rows(f, nb + nc, anti)
    if right.target.dim != nb + nc - anti_sub.dim:
        return False
    # the induced map (B (+) C)/A -> D must be an isomorphism; equivalently
    # (right; bottom stacked) kills exactly the antidiagonal
    rows = [list(r) for r in right.matrix.entries] + \
           [list(r) for r in bottom.matrix.entries]
    big = Matrix(f, rows, right.target.dim)
    return big.left_kernel() == anti_sub and big.rank() == right.target.dim


class GridError(Exception):
    pass


class Grid3x3:
    """Nine spaces with rows and columns forming admissible SES:

        tl >--> tm -->> tr
         v       v       v     (monos down from the first row)
        ml >--> mm -->> mr
         v       v       v     (epis down to the last row)
        bl >--> bm -->> br
    """

    ROW_KEYS = (("tl", "tm", "tr"), ("ml", "mm", "mr"), ("bl", "bm", "br"))

    def __init__(self, spaces, row_maps, col_maps):
        self.spaces = dict(spaces)      # key -> FdSpace
        self.row_maps = dict(row_maps)  # r -> (mono, epi)
        self.col_maps = dict(col_maps)  # c -> (mono, epi)

    def row_ses(self, r):
        i, j = self.row_maps[r]
        return check_ses(i, j)

    def col_ses(self, c):
        i, j = self.col_maps[c]
        return check_ses(i, j)

    def validate(self):
        """Check all six SES and the four corner squares; raise GridError."""
        for r in range(3):
            diag = diagnose_ses(*self.row_maps[r])
            if diag is not None:
                raise GridError("row %d: %s" % (r, diag))
        for c in range(3):
            diag = diagnose_ses(*self.col_maps[c])
            if diag is not None:
                raise GridError("column %d: %s" % (c, diag))
        for r in range(2):
            for c in range(2):
                h0 = self.row_maps[r][c]      # horizontal map in row r
                h1 = self.row_maps[r + 1][c]  # horizontal map in row r+1
                v0 = self.col_maps[c][r]      # vertical map in column c
                v1 = self.col_maps[c + 1][r]  # vertical map in column c+1
                if h0.then(v1) != v0.then(h1):
                    raise GridError("square (%d,%d) does not commute" % (r, c))
        return True

    def transpose(self):
        spaces = {}
        for r, keys in enumerate(self.ROW_KEYS):
            for c, k in enumerate(keys):
                spaces[self.ROW_KEYS[c][r]] = self.spaces[k]
        return Grid3x3(spaces,
                       {k: v for k, v in self.col_maps.items()},
                       {k: v for k, v in self.row_maps.items()})


def _pivots_of(rows):
    piv = []
    for r in rows:
        for j, x in enumerate(r):
            if x != 0:
                piv.append(j)
                break
    return piv


def subquotient_basis(small, big):
    """Canonical rref basis of span(big)/span(small), in small's quotient
    coordinates."""
    return small.basis_of_quotient(big)


def _induced_quotient_map(field, src_small, src_big, dst_small, dst_big,
                          carrier):
    """Map  span(src_big)/span(src_small) -> span(dst_big)/span(dst_small)
    induced by the ambient carrier rows, in canonical subquotient bases."""
    src_basis = subquotient_basis(src_small, src_big)
    dst_basis = subquotient_basis(dst_small, dst_big)
    dst_piv = _pivots_of(dst_basis)
    rows_out = []
    for c in src_basis:
        v = src_small.lift_coords(c)
        w = mat_mul_rows(field, [list(v)], carrier)[0]
        coords = solve_in_rows(field, dst_basis, dst_piv,
                               dst_small.proj_coords(w))
        if coords is None:
            raise GridError("image escapes the target subquotient")
        rows_out.append(coords)
    src = FdSpace(field, len(src_basis))
    tgt = FdSpace(field, len(dst_basis))
    return LinMap(src, tgt, Matrix(field, rows_out, tgt.dim))


def complete_grid_3x3(top_mono, left_mono, p_top=None, p_left=None):
    """Complete a cartesian square of admissible monos to a full 3x3 grid.

    top_mono and left_mono are admissible monos with the common target x;
    when p_top/p_left present the given square is validated (diagnosis
    'not-cartesian' if it fails) instead of recomputed.
    """
    if top_mono.target != left_mono.target:
        raise ValueError("monos must share their target")
    if not top_mono.is_mono() or not left_mono.is_mono():
        raise GridError("not-mono")
    f = top_mono.source.field
    amb = top_mono.target
    u_top = top_mono.image_subspace()
    u_left = left_mono.image_subspace()
    w = u_top.meet(u_left)
    if p_top is not None or p_left is not None:
        if p_top is None or p_left is None or \
                p_top.source != p_left.source or \
                p_top.then(top_mono) != p_left.then(left_mono):
            raise GridError("not-cartesian")
        if p_top.image_subspace().dim != p_top.source.dim:
            raise GridError("not-cartesian")
        given = p_top.then(top_mono).image_subspace()
        if given != w:
            raise GridError("not-cartesian")

    full = Subspace.full(f, amb.dim)
    usum = u_top.join(u_left)
    zero_of = Subspace.zero(f, amb.dim)
    ident = [list(r) for r in Matrix.identity(f, amb.dim).entries]

    def space(small, big):
        return FdSpace(f, big.dim - small.dim)

    # entries: tl = w, tm = u_top, tr = u_top/w
    #          ml = u_left, mm = x, mr = x/u_left
    #          bl = u_left/w, bm = x/u_top, br = x/(u_top + u_left)
    spaces = {
        "tl": space(zero_of, w), "tm": space(zero_of, u_top),
        "tr": space(w, u_top),
        "ml": space(zero_of, u_left), "mm": amb,
        "mr": space(u_left, full),
        "bl": space(w, u_left), "bm": space(u_top, full),
        "br": space(usum, full),
    }

    def imap(src_small, src_big, dst_small, dst_big):
        return _induced_quotient_map(f, src_small, src_big, dst_small,
                                     dst_big, ident)

    row_maps = {
        0: (imap(zero_of, w, zero_of, u_top),
            imap(zero_of, u_top, w, u_top)),
        1: (imap(zero_of, u_left, zero_of, full),
            imap(zero_of, full, u_left, full)),
        2: (imap(w, u_left, u_top, full),
            imap(u_top, full, usum, full)),
    }
    col_maps = {
        0: (imap(zero_of, w, zero_of, u_left),
            imap(zero_of, u_left, w, u_left)),
        1: (imap(zero_of, u_top, zero_of, full),
            imap(zero_of, full, u_top, full)),
        2: (imap(w, u_top, u_left, full),
            imap(u_left, full, usum, full)),
    }
    grid = Grid3x3(spaces, row_maps, col_maps)
    grid.validate()
    return grid

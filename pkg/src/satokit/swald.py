"""Truncated Waldhausen S-construction over small finite fields.

A level-n object is a rigidified filtration: a weakly increasing chain of n
explicit subspaces of a fixed ambient space, together with the triangular
array of quotients a_ij and the canonical maps between them.  Enumeration is
on the nose (explicit subspaces, not isomorphism classes), so the face and
degeneracy functors are strict functions of the data: inner faces drop a
subspace, the zeroth face passes to the quotient filtration re-embedded along
its canonical coordinates, and degeneracies repeat a subspace.
"""

from __future__ import annotations

from .exactcat import FdSpace, LinMap, check_ses, _induced_quotient_map
from .exactlin import Matrix, Subspace, all_subspaces


class SObjectError(Exception):
    pass


class SObject:
    """Rigidified admissible filtration of length n in a fixed ambient."""

    def __init__(self, field, ambient, chain, choices=None):
        chain = tuple(chain)
        for sub in chain:
            if sub.ambient != ambient or sub.field != field:
                raise SObjectError("chain members must share the ambient")
        for a, b in zip(chain, chain[1:]):
            if not b.contains(a):
                raise SObjectError("chain is not weakly increasing")
        self.field = field
        self.ambient = ambient
        self.chain = chain
        self.choices = dict(choices or {})
        for (i, j), c in self.choices.items():
            d = self.entry_dim(i, j)
            if c.nrows != d or c.ncols != d or c.rank() != d:
                raise SObjectError("choice at (%d, %d) must be an "
                                   "invertible %dx%d matrix" % (i, j, d, d))

    @property
    def level(self):
        return len(self.chain)

    def key(self):
        return tuple(sub.rows for sub in self.chain)

    def __eq__(self, other):
        return (isinstance(other, SObject) and self.field == other.field
                and self.ambient == other.ambient
                and self.chain == other.chain
                and self._choice_key() == other._choice_key())

    def __hash__(self):
        return hash((self.field, self.ambient, self.key(),
                     self._choice_key()))

    def _choice_key(self):
        return tuple(sorted((ij, c.entries)
                            for ij, c in self.choices.items()))

    def __repr__(self):
        return "SObject(level %d, dims %s)" % (
            self.level, [s.dim for s in self.chain])

    def sub_at(self, i):
        """V_i with V_0 = 0."""
        if i == 0:
            return Subspace.zero(self.field, self.ambient)
        return self.chain[i - 1]

    def entry_dim(self, i, j):
        return self.sub_at(j).dim - self.sub_at(i).dim

    def entry_space(self, i, j):
        return FdSpace(self.field, self.entry_dim(i, j))

    def array_map(self, ij, kl):
        """The map a_ij -> a_kl for (i, j) <= (k, l) componentwise."""
        (i, j), (k, l) = ij, kl
        if not (i <= k and j <= l):
            raise SObjectError("map requires (i,j) <= (k,l)")
        ident = [list(r)
                 for r in Matrix.identity(self.field, self.ambient).entries]
        lm = _induced_quotient_map(self.field, self.sub_at(i), self.sub_at(j),
                                   self.sub_at(k), self.sub_at(l), ident)
        ci = self.choices.get((i, j))
        ck = self.choices.get((k, l))
        if ci is None and ck is None:
            return lm
        m = lm.matrix
        if ci is not None:
            m = ci.mul(m)
        if ck is not None:
            m = m.mul(LinMap(FdSpace(self.field, ck.nrows),
                             FdSpace(self.field, ck.nrows), ck)
                      .inverse().matrix)
        return LinMap(lm.source, lm.target, m)

    def row_ses(self, i, j, k):
        """a_ij >--> a_ik -->> a_jk for i <= j <= k."""
        return check_ses(self.array_map((i, j), (i, k)),
                         self.array_map((i, k), (j, k)))

    def validate(self):
        """All SES conditions and composition coherence; raises SObjectError
        with the offending indices."""
        n = self.level
        for i in range(n + 1):
            for j in range(i, n + 1):
                for k in range(j, n + 1):
                    try:
                        self.row_ses(i, j, k)
                    except Exception as exc:
                        raise SObjectError(
                            "sequence condition fails at (%d, %d, %d): %s"
                            % (i, j, k, exc))
        pairs = [(i, j) for i in range(n + 1) for j in range(i, n + 1)]
        for (i, j) in pairs:
            for (k, l) in pairs:
                if not (i <= k and j <= l):
                    continue
                for (m, q) in pairs:
                    if not (k <= m and l <= q):
                        continue
                    direct = self.array_map((i, j), (m, q))
                    through = self.array_map((i, j), (k, l)).then(
                        self.array_map((k, l), (m, q)))
                    if direct != through:
                        raise SObjectError(
                            "coherence fails from (%d,%d) via (%d,%d) to "
                            "(%d,%d)" % (i, j, k, l, m, q))
        return True


def build_s_object(field, ambient, chain, quotient_choices=None,
                   validate=True):
    """Validated SObject from a chain of subspaces (monos by inclusion) and
    optional basis choices for the quotient entries."""
    subs = []
    for item in chain:
        if isinstance(item, Subspace):
            subs.append(item)
        else:
            subs.append(Subspace.from_rows(field, ambient, item))
    obj = SObject(field, ambient, subs, quotient_choices)
    if validate:
        obj.validate()
    return obj


def _reindex_choices(choices, sigma, new_n):
    out = {}
    for (i, j), c in choices.items():
        out[(i, j)] = c
    reindexed = {}
    for i in range(new_n + 1):
        for j in range(i, new_n + 1):
            c = out.get((sigma(i), sigma(j)))
            if c is not None:
                reindexed[(i, j)] = c
    return reindexed


def s_face(obj, i):
    """The i-th face: erase the row and column of the i-th object.

    For i = 0 the result is the quotient filtration by V_1, re-embedded in
    the ambient along the canonical quotient coordinates so the data stays on
    the nose; its array equals the reindexed array of the input.
    """
    n = obj.level
    if not 0 <= i <= n:
        raise SObjectError("face index out of range")
    if i == 0:
        v1 = obj.sub_at(1)
        new_chain = []
        for sub in obj.chain[1:]:
            rows = [_pad(v1.proj_coords(r), obj.ambient) for r in sub.rows]
            new_chain.append(Subspace.from_rows(obj.field, obj.ambient, rows))
        sigma = lambda k: k + 1
        return SObject(obj.field, obj.ambient, new_chain,
                       _reindex_choices(obj.choices, sigma, n - 1))
    new_chain = obj.chain[:i - 1] + obj.chain[i:]
    sigma = lambda k: k if k < i else k + 1
    return SObject(obj.field, obj.ambient, new_chain,
                   _reindex_choices(obj.choices, sigma, n - 1))


def _pad(coords, ambient):
    return tuple(coords) + (0,) * (ambient - len(coords))


def s_degeneracy(obj, i):
    """The i-th degeneracy: double the i-th object of the filtration."""
    n = obj.level
    if not 0 <= i <= n:
        raise SObjectError("degeneracy index out of range")
    new_chain = obj.chain[:i] + (obj.sub_at(i),) + obj.chain[i:]
    sigma = lambda k: k if k <= i else k - 1
    return SObject(obj.field, obj.ambient, new_chain,
                   _reindex_choices(obj.choices, sigma, n + 1))


class BudgetExceeded(Exception):
    pass


class SSkeleton:
    """Levels 0..N of the S-construction with face/degeneracy incidence."""

    def __init__(self, field, ambient, levels, faces, degeneracies):
        self.field = field
        self.ambient = ambient
        self.levels = levels            # list of lists of SObject
        self.faces = faces              # (level, idx, i) -> idx in level-1
        self.degeneracies = degeneracies

    def object(self, level, idx):
        return self.levels[level][idx]

    def counts(self):
        return [len(l) for l in self.levels]

    def face_index(self, level, idx, i):
        return self.faces[(level, idx, i)]

    def degeneracy_index(self, level, idx, i):
        return self.degeneracies[(level, idx, i)]

    def check_simplicial_identities(self):
        """All face/face, face/degeneracy identities on the incidence data."""
        for p in range(2, len(self.levels)):
            for idx in range(len(self.levels[p])):
                for j in range(p + 1):
                    for i in range(j):
                        a = self.faces[(p - 1, self.faces[(p, idx, j)], i)]
                        b = self.faces[(p - 1, self.faces[(p, idx, i)],
                                        j - 1)]
                        if a != b:
                            return (p, idx, i, j)
        for p in range(len(self.levels) - 1):
            for idx in range(len(self.levels[p])):
                for j in range(p + 1):
                    sidx = self.degeneracies[(p, idx, j)]
                    for i in range(p + 2):
                        fidx = self.faces[(p + 1, sidx, i)]
                        if i == j or i == j + 1:
                            want = idx
                            if fidx != want:
                                return (p, idx, i, j)
                        elif i < j:
                            want = self.degeneracies[
                                (p - 1, self.faces[(p, idx, i)], j - 1)]
                            if fidx != want:
                                return (p, idx, i, j)
                        else:
                            want = self.degeneracies[
                                (p - 1, self.faces[(p, idx, i - 1)], j)]
                            if fidx != want:
                                return (p, idx, i, j)
        return None


def enumerate_s_skeleton(field, dim_cap, level_cap, budget=20000):
    """Complete lists of on-the-nose filtration objects up to the caps.

    The member count is estimated up front; a BudgetExceeded error protects
    against Gaussian-binomial blowup.
    """
    subs = all_subspaces(field, dim_cap)
    order = {s.rows: k for k, s in enumerate(subs)}
    contains = [[b.contains(a) for b in subs] for a in subs]
    # count weak chains by dynamic programming before materializing
    counts = [1] * len(subs)
    total = 1 + len(subs)
    per_level = [1, len(subs)]
    for _ in range(2, level_cap + 1):
        new = [0] * len(subs)
        for a in range(len(subs)):
            for b in range(len(subs)):
                if contains[a][b]:
                    new[a] += counts[b]
        counts = new
        per_level.append(sum(counts))
        total += per_level[-1]
    if total > budget:
        raise BudgetExceeded("skeleton would hold %d objects (budget %d)"
                             % (total, budget))

    levels = [[SObject(field, dim_cap, ())]]
    index = [{(): 0}]
    for p in range(1, level_cap + 1):
        here = []
        idx = {}
        for prev in levels[p - 1]:
            last = prev.chain[-1] if prev.chain else None
            for s in subs:
                if last is not None and not s.contains(last):
                    continue
                obj = SObject(field, dim_cap, prev.chain + (s,))
                key = obj.key()
                if key not in idx:
                    idx[key] = len(here)
                    here.append(obj)
        levels.append(here)
        index.append(idx)
    faces = {}
    degeneracies = {}
    for p in range(1, level_cap + 1):
        for k, obj in enumerate(levels[p]):
            for i in range(p + 1):
                f = s_face(obj, i)
                faces[(p, k, i)] = index[p - 1][f.key()]
    for p in range(level_cap):
        for k, obj in enumerate(levels[p]):
            for i in range(p + 1):
                s = s_degeneracy(obj, i)
                degeneracies[(p, k, i)] = index[p + 1][s.key()]
    return SSkeleton(field, dim_cap, levels, faces, degeneracies)


class TheoryReport:
    def __init__(self, checked, violations):
        self.checked = checked
        self.violations = violations

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        return "TheoryReport(%d checked, %d violations)" % (
            self.checked, len(self.violations))


def verify_dim_theory(skeleton, chi):
    """chi additivity on every level-2 object (the 0-multiplicative torsor
    condition for dimension theories)."""
    if len(skeleton.levels) < 3:
        raise ValueError("skeleton must reach level 2")
    checked = 0
    violations = []
    for obj in skeleton.levels[2]:
        left = chi.of_dim(obj.entry_dim(0, 1)) + chi.of_dim(
            obj.entry_dim(1, 2))
        right = chi.of_dim(obj.entry_dim(0, 2))
        checked += 1
        if left != right:
            violations.append(obj)
    return TheoryReport(checked, violations)


def verify_det_theory(skeleton, theory):
    """Two-path lambda equality (and degree bookkeeping) on every level-3
    object: the 1-multiplicative torsor condition for determinantal
    theories."""
    if len(skeleton.levels) < 4:
        raise ValueError("skeleton must reach level 3")
    f = skeleton.field
    checked = 0
    violations = []
    for obj in skeleton.levels[3]:
        try:
            lam_12 = theory.lambda_scalar(obj.row_ses(0, 1, 2))
            lam_123 = theory.lambda_scalar(obj.row_ses(0, 2, 3))
            lam_23 = theory.lambda_scalar(obj.row_ses(1, 2, 3))
            lam_13 = theory.lambda_scalar(obj.row_ses(0, 1, 3))
            # degree bookkeeping of each lambda source/target
            for (i, j, k) in [(0, 1, 2), (0, 2, 3), (1, 2, 3), (0, 1, 3)]:
                da = theory.h(obj.entry_space(i, j)).degree
                db = theory.h(obj.entry_space(j, k)).degree
                dt = theory.h(obj.entry_space(i, k)).degree
                if da + db != dt:
                    raise AssertionError("degree bookkeeping fails")
            if f.mul(lam_12, lam_123) != f.mul(lam_23, lam_13):
                raise AssertionError("two-path scalar mismatch")
        except AssertionError as exc:
            violations.append((obj, str(exc)))
        checked += 1
    return TheoryReport(checked, violations)


def verify_theory_as_torsor(skeleton, theory):
    """Dispatch on the theory kind: dimension theories are checked as
    0-multiplicative torsors, determinantal theories as 1-multiplicative."""
    if hasattr(theory, "of_dim"):
        return verify_dim_theory(skeleton, theory)
    return verify_det_theory(skeleton, theory)

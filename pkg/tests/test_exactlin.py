import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from satokit.exactlin import (
    F2, F3, F5, QQ, Field, IntMatrix, Matrix, Subspace, all_subspaces,
    all_vectors, det_rows, kernel, rref_basis, smith_normal_form,
    snf_with_transforms, solve_in_rows, solve_mod, subspace_meet_join,
)


def test_field_construction():
    assert Field.parse("F7").p == 7
    assert Field.parse("Q").is_rational
    with pytest.raises(ValueError):
        Field(6)
    assert F5.inv(2) == 3
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


# --- rref oracle: hand row-reduction -----------------------------------

def test_rref_identity_f2():
    m = Matrix.identity(F2, 3)
    s = rref_basis(m)
    assert s.dim == 3 and s == Subspace.full(F2, 3)


def test_rref_zero():
    m = Matrix.zero(F5, 2, 3)
    assert rref_basis(m).dim == 0


def test_rref_hand_reduction_f2():
    # (1,1,0),(0,1,1): subtract second from first -> (1,0,1); frozen result
    m = Matrix(F2, [(1, 1, 0), (0, 1, 1)])
    s = rref_basis(m)
    assert s.rows == ((1, 0, 1), (0, 1, 1))


def test_rref_idempotent_and_representation_free():
    rng = random.Random(11)
    for _ in range(50):
        rows = [[rng.randrange(5) for _ in range(4)] for _ in range(3)]
        s1 = Subspace.from_rows(F5, 4, rows)
        # same space, scrambled generating set
        mixed = [
            [F5.add(a, b) for a, b in zip(rows[0], rows[1])],
            rows[2],
            [F5.mul(3, a) for a in rows[0]],
            rows[1],
        ]
        s2 = Subspace.from_rows(F5, 4, mixed)
        assert s1 == s2
        assert Subspace.from_rows(F5, 4, s1.rows) == s1


# --- kernel oracle: enumerate all vectors ------------------------------

def test_kernel_identity_and_zero():
    assert kernel(Matrix.identity(F3, 2)).dim == 0
    z = Matrix.zero(F3, 1, 2)  # zero map F_3^2 -> F_3 (columns = domain)
    assert kernel(z).dim == 2


def test_kernel_enumeration_oracle_f2():
    m = Matrix(F2, [(1, 1)])  # one row, two columns
    expected = [v for v in all_vectors(F2, 2)
                if all(sum(r[j] * v[j] for j in range(2)) % 2 == 0
                       for r in m.entries)]
    got = kernel(m)
    assert got.rows == ((1, 1),)
    assert sorted(expected) == sorted(
        v for v in all_vectors(F2, 2) if got.contains_vector(v))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.integers(1, 4), st.data())
def test_rank_nullity(rows, cols, data):
    entries = [[data.draw(st.integers(0, 4)) for _ in range(cols)]
               for _ in range(rows)]
    m = Matrix(F5, entries)
    assert m.rank() + kernel(m).dim == cols


# --- meet/join oracle: exhaustive vector check -------------------------

def test_meet_join_coordinate_planes_f2():
    a = Subspace.from_rows(F2, 3, [(1, 0, 0), (0, 1, 0)])
    b = Subspace.from_rows(F2, 3, [(0, 1, 0), (0, 0, 1)])
    meet, join = subspace_meet_join(a, b)
    assert meet == Subspace.from_rows(F2, 3, [(0, 1, 0)])
    assert join == Subspace.full(F2, 3)


def test_meet_join_trivial_cases():
    a = Subspace.from_rows(F5, 2, [(1, 2)])
    meet, join = subspace_meet_join(a, a)
    assert meet == a and join == a
    z = Subspace.zero(F5, 2)
    meet, join = subspace_meet_join(z, a)
    assert meet == z and join == a


def test_meet_join_exhaustive_f2_dim_le_4():
    # modular identity on dimensions plus the membership oracle, every pair
    for ambient in range(5):
        subs = all_subspaces(F2, ambient)
        vectors = list(all_vectors(F2, ambient))
        for a in subs:
            for b in subs:
                meet, join = subspace_meet_join(a, b)
                assert meet.dim + join.dim == a.dim + b.dim
                for v in vectors:
                    in_meet = a.contains_vector(v) and b.contains_vector(v)
                    assert meet.contains_vector(v) == in_meet
                    if a.contains_vector(v) or b.contains_vector(v):
                        assert join.contains_vector(v)


def test_subspace_count_f2():
    # Gaussian binomials: 1,3,1 for dim 2; 1,7,7,1 for dim 3
    assert len(all_subspaces(F2, 2)) == 5
    assert len(all_subspaces(F2, 3)) == 16


def test_solve_in_rows():
    s = Subspace.from_rows(F5, 3, [(1, 0, 2), (0, 1, 3)])
    c = solve_in_rows(F5, s.rows, s.pivots, (2, 1, 2))
    assert c == (2, 1)
    assert solve_in_rows(F5, s.rows, s.pivots, (0, 0, 1)) is None


def test_det_rows():
    assert det_rows(F5, [(2, 0), (0, 3)]) == 1  # 6 mod 5
    assert det_rows(QQ, [(Fraction(1, 2), 0), (0, 4)]) == 2
    assert det_rows(F2, [(1, 1), (1, 1)]) == 0


# --- SNF; independent oracle: gcd of k x k minors -----------------------

def _minor_gcd_oracle(rows):
    from itertools import combinations
    n, m = len(rows), len(rows[0])
    factors = []
    prev = 1
    for k in range(1, min(n, m) + 1):
        g = 0
        for ri in combinations(range(n), k):
            for ci in combinations(range(m), k):
                sub = [[Fraction(rows[i][j]) for j in ci] for i in ri]
                d = det_rows(QQ, sub)
                g = gcd(g, int(d))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def test_snf_trivial_cases():
    assert smith_normal_form(IntMatrix.identity(3)) == ([1, 1, 1], 3)
    assert smith_normal_form([[2, 0], [0, 4]]) == ([2, 4], 2)


def test_snf_hand_elimination():
    # ((2,4),(6,8)): content 2, determinant -8 -> factors (2, 4)
    assert smith_normal_form([[2, 4], [6, 8]]) == ([2, 4], 2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3),
                min_size=2, max_size=3))
def test_snf_matches_minor_gcd_oracle(rows):
    factors, rank = smith_normal_form(rows)
    assert factors == _minor_gcd_oracle(rows)
    assert all(factors[i + 1] % factors[i] == 0
               for i in range(len(factors) - 1))
    assert rank == len(factors)


def test_snf_transforms_multiply_out():
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    s, u, v = snf_with_transforms(rows)
    m = IntMatrix(rows)
    prod = IntMatrix(u).mul(m).mul(IntMatrix(v))
    assert [list(r) for r in prod.entries] == [list(r) for r in s]
    assert abs(det_rows(QQ, [[Fraction(x) for x in r] for r in u])) == 1
    assert abs(det_rows(QQ, [[Fraction(x) for x in r] for r in v])) == 1


def test_snf_unimodular_invariance():
    rng = random.Random(3)
    base = [[2, 4], [6, 8]]
    want = smith_normal_form(base)
    for _ in range(25):
        rows = [list(r) for r in base]
        for _ in range(6):
            i, j = rng.sample(range(2), 2)
            q = rng.randrange(-3, 4)
            if rng.random() < 0.5:
                for k in range(2):
                    rows[i][k] += q * rows[j][k]
            else:
                for r in rows:
                    r[i] += q * r[j]
        assert smith_normal_form(rows) == want


def test_solve_mod():
    a = [[2, 0], [0, 3]]
    x = solve_mod(a, [4, 3], 6)
    assert x is not None
    assert [(2 * x[0]) % 6, (3 * x[1]) % 6] == [4, 3]
    assert solve_mod(a, [1, 0], 6) is None  # 2x = 1 has no solution mod 6
    x = solve_mod([[3]], [6], 0)
    assert x == [2]
    assert solve_mod([[3]], [7], 0) is None

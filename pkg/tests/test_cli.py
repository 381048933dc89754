import json

import pytest

from satokit.cli import main
from satokit.complexes import projective_plane, sphere_3, torus
from satokit.fileio import (ParseError, format_cochain, format_lattice,
                            format_laurent_matrix, format_simplicial_set,
                            parse_cochain, parse_lattice,
                            parse_laurent_matrix, parse_simplicial_set)
from satokit.abgroup import AbelianGroup, ZZ
from satokit.exactlin import F2, F5
from satokit.laurent import LaurentMatrix, LaurentPoly
from satokit.simptors import Cochain, cohomology
from satokit.tate import TateSpace, lattice_normalize, standard_lattice


def test_lattice_roundtrip():
    space = TateSpace(F5, 2)
    lat = lattice_normalize(space, -1, 1, [[1, 2, 0, 0], [0, 0, 3, 1]])
    text = format_lattice(lat)
    assert parse_lattice(text) == lat


def test_lattice_roundtrip_rationals():
    space = TateSpace(F5, 1)
    text = "tate rank=1 field=Q\nbounds lo=-1 hi=1\n1/2,3\n"
    lat = parse_lattice(text)
    assert lat.field.is_rational
    assert parse_lattice(format_lattice(lat)) == lat


def test_lattice_parse_error_location():
    text = "tate rank=1 field=F5\nbounds lo=0 hi=1\n1,zz\n"
    with pytest.raises(ParseError) as exc:
        parse_lattice(text)
    assert exc.value.line == 3


def test_lmx_roundtrip():
    t = LaurentPoly(F5, [(-2, 3), (1, 1)])
    m = LaurentMatrix(F5, [[t, LaurentPoly.zero(F5)],
                           [LaurentPoly.one(F5), t.mul(t)]])
    text = format_laurent_matrix(m)
    assert parse_laurent_matrix(text) == m


def test_lmx_malformed_exponent():
    text = "lmx rows=1 cols=1 field=F5\n3*t^x\n"
    with pytest.raises(ParseError) as exc:
        parse_laurent_matrix(text)
    assert exc.value.line == 2


def test_sset_roundtrip():
    for cx in (torus(), projective_plane(), sphere_3()):
        text = format_simplicial_set(cx)
        back = parse_simplicial_set(text)
        assert back.simplices == cx.simplices
        assert back.faces == cx.faces


def test_cochain_roundtrip():
    cx = torus()
    c = Cochain(cx, 2, ZZ, {"U": ZZ.elem((3,)), "L": ZZ.elem((-1,))})
    text = format_cochain(c)
    back = parse_cochain(text, cx)
    assert back == c


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


@pytest.fixture
def lat_files(tmp_path):
    space = TateSpace(F5, 1)
    a = standard_lattice(space, -2)
    b = standard_lattice(space)
    return (_write(tmp_path, "a.lat", format_lattice(a)),
            _write(tmp_path, "b.lat", format_lattice(b)))


def test_cli_index(lat_files, capsys):
    rc = main(["index", lat_files[0], lat_files[1]])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cli_index_json_deterministic(lat_files, capsys):
    rc = main(["--json", "index", lat_files[0], lat_files[1]])
    assert rc == 0
    out1 = capsys.readouterr().out
    main(["--json", "index", lat_files[0], lat_files[1]])
    out2 = capsys.readouterr().out
    assert out1 == out2
    data = json.loads(out1)
    assert data["status"] == "pass" and data["index"] == 2


def test_cli_meet_join_roundtrip(tmp_path, capsys):
    space = TateSpace(F5, 2)
    a = lattice_normalize(space, -1, 0, [[1, 0]])
    b = lattice_normalize(space, -1, 0, [[0, 1]])
    fa = _write(tmp_path, "a.lat", format_lattice(a))
    fb = _write(tmp_path, "b.lat", format_lattice(b))
    rc = main(["meet", fa, fb])
    assert rc == 0
    out = capsys.readouterr().out
    assert parse_lattice(out) == standard_lattice(space)
    rc = main(["join", fa, fb])
    out = capsys.readouterr().out
    assert parse_lattice(out) == standard_lattice(space, -1)


def test_cli_lift_project(tmp_path, capsys):
    from satokit.tate import split_tate_ses
    ses = split_tate_ses(F5, 1, 1)
    fi = _write(tmp_path, "i.lmx", format_laurent_matrix(ses.i))
    fj = _write(tmp_path, "j.lmx", format_laurent_matrix(ses.j))
    space = TateSpace(F5, 2)
    u = lattice_normalize(space, -1, 1, [
        [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])  # t^-1 O (+) O
    fu = _write(tmp_path, "u.lat", format_lattice(u))
    rc = main(["lift", fi, fj, fu])
    assert rc == 0
    out = parse_lattice(capsys.readouterr().out)
    assert out == standard_lattice(TateSpace(F5, 1), -1)
    rc = main(["project", fi, fj, fu])
    out = parse_lattice(capsys.readouterr().out)
    assert out == standard_lattice(TateSpace(F5, 1))


def test_cli_ses_check(tmp_path, capsys):
    one = LaurentPoly.one(F5)
    z = LaurentPoly.zero(F5)
    i = LaurentMatrix(F5, [[one, z]])
    j_bad = LaurentMatrix(F5, [[one], [z]])
    fi = _write(tmp_path, "i.lmx", format_laurent_matrix(i))
    fj = _write(tmp_path, "j.lmx", format_laurent_matrix(j_bad))
    rc = main(["ses-check", fi, fj])
    assert rc == 1
    assert "composite-nonzero" in capsys.readouterr().out


def test_cli_mu_eval(tmp_path, capsys):
    from satokit.tate import split_tate_ses
    ses = split_tate_ses(F5, 1, 1)
    fi = _write(tmp_path, "i.lmx", format_laurent_matrix(ses.i))
    fj = _write(tmp_path, "j.lmx", format_laurent_matrix(ses.j))
    u = standard_lattice(TateSpace(F5, 2))
    fu = _write(tmp_path, "u.lat", format_lattice(u))
    rc = main(["mu-eval", fi, fj, fu, "--group", "Z",
               "--d1", "5", "--d2", "-3"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cli_cohomology(tmp_path, capsys):
    fx = _write(tmp_path, "torus.sset", format_simplicial_set(torus()))
    rc = main(["cohomology", fx, "--degree", "2", "--group", "Z"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "Z"
    fx2 = _write(tmp_path, "rp2.sset",
                 format_simplicial_set(projective_plane()))
    rc = main(["cohomology", fx2, "--degree", "2", "--group", "Z/2"])
    assert capsys.readouterr().out.strip() == "Z/2"


def test_cli_classify_and_transport(tmp_path, capsys):
    cx = projective_plane()
    z2 = AbelianGroup((2,))
    fx = _write(tmp_path, "rp2.sset", format_simplicial_set(cx))
    rep = cohomology(cx, 2, z2).representatives()[0]
    fa = _write(tmp_path, "alpha.coch", format_cochain(rep))
    rc = main(["classify", fx, fa])
    assert rc == 0
    out = capsys.readouterr().out
    assert "class in H^2" in out
    zero = Cochain.zero(cx, 2, z2)
    fz = _write(tmp_path, "zero.coch", format_cochain(zero))
    rc = main(["classify", fx, fa, "--other", fz])
    assert rc == 1
    assert "not isomorphic" in capsys.readouterr().out
    rc = main(["classify", fx, fz, "--other", fz])
    assert rc == 0
    assert "isomorphic" in capsys.readouterr().out


def test_cli_gerbe_torsor(tmp_path, capsys):
    cx = sphere_3()
    z4 = AbelianGroup((4,))
    rep = cohomology(cx, 3, z4).representatives()[0]
    fx = _write(tmp_path, "s3.sset", format_simplicial_set(cx))
    fb = _write(tmp_path, "beta.coch", format_cochain(rep))
    rc = main(["gerbe-torsor", fx, fb])
    assert rc == 0
    out = capsys.readouterr().out
    assert "torsor check: pass" in out


def test_cli_s_enumerate(capsys):
    rc = main(["s-enumerate", "--field", "F2", "--dim-cap", "2",
               "--level-cap", "3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "1 5 12 22" in out


def test_cli_s_enumerate_budget(capsys):
    rc = main(["s-enumerate", "--budget", "3"])
    assert rc == 2


def test_cli_verify(capsys):
    rc = main(["verify", "cohomology"])
    assert rc == 0
    assert "pass" in capsys.readouterr().out
    rc = main(["verify", "nope"])
    assert rc == 2


def test_cli_det_symmetry(capsys):
    rc = main(["det-symmetry", "--field", "F5", "--trials", "10"])
    assert rc == 0
    rc = main(["det-symmetry", "--field", "F5", "--trials", "10",
               "--ungraded"])
    assert rc == 1  # the classical determinant is not symmetric
    out = capsys.readouterr()


def test_cli_usage_error_missing_file(capsys):
    rc = main(["index", "/nonexistent/a.lat", "/nonexistent/b.lat"])
    assert rc == 2


from hypothesis import given, settings, strategies as st


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(-2, 0), st.integers(0, 2), st.data())
def test_lattice_format_roundtrip_random(rank, lo, hi, data):
    space = TateSpace(F5, rank)
    width = (hi - lo) * rank
    rows = [[data.draw(st.integers(0, 4)) for _ in range(width)]
            for _ in range(data.draw(st.integers(0, max(width, 1))))]
    lat = lattice_normalize(space, lo, hi, rows)
    assert parse_lattice(format_lattice(lat)) == lat


@settings(max_examples=40, deadline=None)
@given(st.text(alphabet="tate rnk=fildF5bounds+-0123,\n^*", max_size=120))
def test_lattice_parser_never_crashes(text):
    try:
        parse_lattice(text)
    except (ParseError, ValueError):
        pass


@settings(max_examples=40, deadline=None)
@given(st.text(alphabet="lmx rowscl=fidF5\n0123*t^+-", max_size=120))
def test_lmx_parser_never_crashes(text):
    try:
        parse_laurent_matrix(text)
    except (ParseError, ValueError):
        pass


def test_cli_verify_json_deterministic(capsys):
    rc = main(["--json", "verify", "pasting", "--seed", "3"])
    assert rc == 0
    out1 = capsys.readouterr().out
    main(["--json", "verify", "pasting", "--seed", "3"])
    out2 = capsys.readouterr().out
    assert out1 == out2
    data = json.loads(out1)
    assert data["status"] == "pass"


def test_cli_sset_diagnosis_passthrough(tmp_path, capsys):
    bad = "simplex 0 v\nsimplex 1 e faces v zzz\n"
    f = _write(tmp_path, "bad.sset", bad)
    rc = main(["cohomology", f, "--degree", "0", "--group", "Z"])
    assert rc == 2
    assert "dangling" in capsys.readouterr().err

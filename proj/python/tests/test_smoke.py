import pytest

import scopefoil

ENGINES = ["named", "debruijn", "direct", "free", "nbe"]


def test_parse_round_trip():
    assert scopefoil.parse("lam x.  x   (y , U)") == "lam x . x (y, U)"


def test_capture_avoidance_in_every_engine():
    for engine in ENGINES:
        nf = scopefoil.normalize("(lam x . lam y . x) y", engine=engine)
        assert scopefoil.alpha_equal(nf, "lam z . y"), engine


def test_church_arithmetic():
    expected = scopefoil.church(9)
    for engine in ENGINES:
        assert scopefoil.alpha_equal(scopefoil.normalize(scopefoil.church_mult(3, 3), engine), expected)
    assert scopefoil.canonical_hash(scopefoil.normalize(scopefoil.church_fact(4))) == scopefoil.canonical_hash(
        scopefoil.church(24)
    )


def test_random_terms_are_deterministic_and_closed():
    term = scopefoil.gen_random(42, 15)
    assert term == scopefoil.gen_random(42, 15)
    assert scopefoil.free_variables(term) == []


def test_run_program():
    out = scopefoil.run("check lam x . x : U ; compute (lam x . x) U : U ;")
    assert out == ["scope-ok", "U"]


def test_errors():
    with pytest.raises(scopefoil.ParseError):
        scopefoil.parse("lam . x")
    with pytest.raises(scopefoil.FuelExhausted):
        scopefoil.normalize("(lam x . x x) (lam x . x x)", fuel=1000)
    with pytest.raises(scopefoil.Error):
        scopefoil.run("compute y : U ;")
    with pytest.raises(ValueError):
        scopefoil.normalize("U", engine="warp")


def test_bench_rows_agree():
    rows = scopefoil.bench(["random15"], seed=1, terms=2, warmup=1, measured=1)
    assert len(rows) == 10
    assert set(rows[0]) == {"group", "impl", "term", "median_ns", "hash"}
    for term in (0, 1):
        assert len({r["hash"] for r in rows if r["term"] == term}) == 1

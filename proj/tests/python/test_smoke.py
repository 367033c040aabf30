import pytest

import reversive as rv


def test_catalog_has_six_entries():
    entries = rv.catalog()
    assert len(entries) == 6
    names = [str(e["symbol"]).split(":")[0] for e in entries]
    assert names == ["trianglefree", "oddtiles", "eventiles", "schroeder", "catalan", "motzkin"]
    assert entries[-1]["rule"] is None


def test_lagrange_and_direct_reversion_agree():
    schroeder = rv.catalog_symbol("schroeder")
    terms = rv.lagrange_coefficients(schroeder, 30)
    assert terms[:6] == [1, 1, 3, 11, 45, 197]
    assert terms == rv.reversion_coefficients(schroeder, 30)
    assert terms == rv.lagrange_coefficients(schroeder, 30, strategy="per_term")
    assert rv.verify_inverse(schroeder, terms)


def test_big_integers_cross_the_boundary():
    catalan = rv.catalog_symbol("catalan")
    terms = rv.lagrange_coefficients(catalan, 120)
    assert terms[120] == rv.catalan_term(120)
    assert terms[120] > 2**64
    assert rv.binomial(400, 200) > 2**300
    assert rv.binomial(-1, 3) == -1


def test_closed_forms_and_boundaries():
    assert rv.schroeder_term(5) == 197
    assert rv.motzkin_term(4) == 9
    assert rv.even_term(0) == 1
    assert rv.even_term(7) == 0
    with pytest.raises(rv.DomainError):
        rv.odd_term(0)
    with pytest.raises(rv.DivisibilityViolation):
        rv.exact_div(7, 2)


def test_oracles():
    assert rv.enumerate_count(4, "notriangles") == 4
    assert rv.count_by_series(6, "odd") == [1, 1, 2, 6, 20, 71, 264]
    assert rv.count_chord_diagrams(5) == 21
    with pytest.raises(rv.CapExceeded):
        rv.enumerate_count(13, "any")


def test_symbols_from_tiles_and_text():
    sym = rv.symbol_from_tile_rule("4+")
    assert sym.numerator == [0, 1, -1, -1]
    assert sym.denominator == [1, -1]
    assert sym.equivalent(rv.catalog_symbol("trianglefree"))
    parsed = rv.parse_symbol("catalan: (0,1,-1)/(1)")
    assert parsed == rv.catalog_symbol("catalan")
    assert rv.format_symbol(parsed) == "catalan: (0,1,-1)/(1)"
    assert rv.expand(rv.catalog_symbol("eventiles"), 5) == ["0", "1", "0", "-1", "0", "-1"]
    assert rv.verify_tautological("any", [1, 1, 3, 11, 45])
    with pytest.raises(rv.ParseError):
        rv.parse_symbol("(0,1")
    with pytest.raises(rv.InvalidSymbol):
        rv.ReversiveSymbol("bad", [1, 1], [1])

import pytest
from hypothesis import given, settings, strategies as st

from moonshine import forms
from moonshine.errors import (
    BeyondTruncation,
    IdentitySyntaxError,
    NonAffineIndex,
    OddSubscript,
)
from moonshine.extremal import build_family
from moonshine.identities import (
    Affine,
    Identity,
    Term,
    builtin_table1,
    evaluate,
    needed_orders,
    parse,
    parse_lines,
    run_suite,
)


# --- parser ----------------------------------------------------------------


def test_parse_k2_row():
    ast = parse("k=2: g[4*i+2] = 2*j[2*(4*i+2)]")
    assert ast == Identity(
        k=2,
        lhs_index=Affine(4, 2),
        terms=(Term(2, "j", Affine(8, 4)),),
    )


def test_parse_two_term_row():
    ast = parse("k=3: g[6*i+6] = 3*j[3*(6*i+6)] + j[2*i+2]")
    assert ast.k == 3
    assert ast.lhs_index == Affine(6, 6)
    assert ast.terms == (Term(3, "j", Affine(18, 18)), Term(1, "j", Affine(2, 2)))


def test_parse_implicit_multiplication():
    ast = parse("k=5: g[10i+10] = 5*j[5*(10i+10)] + j[2i+2]")
    assert ast.lhs_index == Affine(10, 10)
    assert ast.terms[0].index == Affine(50, 50)
    assert ast.terms[1] == Term(1, "j", Affine(2, 2))


def test_parse_g_terms_on_rhs():
    ast = parse("k=2: g[4*i+2] = 2*g[2*i+2] + 3*j[4]")
    assert ast.terms[0] == Term(2, "g", Affine(2, 2))
    assert ast.terms[1] == Term(3, "j", Affine(0, 4))


def test_parse_error_position():
    with pytest.raises(IdentitySyntaxError) as err:
        parse("k=2: g[4i+")
    assert err.value.position == 11


def test_parse_error_cases():
    with pytest.raises(IdentitySyntaxError):
        parse("g[2] = j[2]")  # missing k=
    with pytest.raises(IdentitySyntaxError):
        parse("k=2: g[2] = q[2]")  # unknown symbol
    with pytest.raises(IdentitySyntaxError):
        parse("k=2: g[2] = j[2] j[4]")  # missing +
    with pytest.raises(IdentitySyntaxError):
        parse("k=2: g[2] = j[2] ?")
    with pytest.raises(NonAffineIndex):
        parse("k=2: g[i*i] = j[2]")
    with pytest.raises(NonAffineIndex):
        parse("k=2: g[(2*i+2)*(i+1)] = j[2]")


def test_parse_normalizes_nested_products():
    ast = parse("k=4: g[8i+4] = 4*j[4*(8i+4)] + 2*j[2*(2i+4)]")
    assert ast.terms[0].index == Affine(32, 16)
    assert ast.terms[1].index == Affine(4, 8)


def test_render_roundtrip_builtin():
    for ast in builtin_table1():
        assert parse(ast.render()) == ast


@settings(max_examples=120)
@given(
    st.integers(1, 6),
    st.integers(0, 9),
    st.integers(0, 99),
    st.lists(
        st.tuples(
            st.integers(1, 9),
            st.sampled_from(["g", "j"]),
            st.integers(0, 9),
            st.integers(0, 99),
        ),
        min_size=1,
        max_size=4,
    ),
)
def test_render_roundtrip_random(k, la, lb, raw_terms):
    ast = Identity(
        k=k,
        lhs_index=Affine(la, lb),
        terms=tuple(Term(c, s, Affine(a, b)) for c, s, a, b in raw_terms),
    )
    assert parse(ast.render()) == ast


def test_parse_lines_skips_comments():
    text = "# header\nk=2: g[4*i+2] = 2*j[8*i+4]\n\nk=2: g[4*i+4] = j[2]  # tail\n"
    asts = parse_lines(text)
    assert len(asts) == 2
    assert asts[1].terms == (Term(1, "j", Affine(0, 2)),)


# --- builtin table -----------------------------------------------------------


def test_builtin_has_14_rows():
    asts = builtin_table1()
    assert len(asts) == 14
    by_k = {}
    for ast in asts:
        by_k[ast.k] = by_k.get(ast.k, 0) + 1
    assert by_k == {2: 2, 3: 3, 4: 4, 5: 5}


def test_builtin_contains_printed_k4_row():
    want = parse("k=4: g[8i+4] = 4*j[4*(8i+4)] + 2*j[2*(2i+4)]")
    assert want in builtin_table1()


def test_builtin_contains_k5_final_row():
    want = parse("k=5: g[10i+10] = 5*j[5*(10i+10)] + j[2i+2]")
    assert want in builtin_table1()


def test_k2_rows_cover_even_subscripts_once():
    rows = [ast for ast in builtin_table1() if ast.k == 2]
    i_max = 10
    covered = []
    for ast in rows:
        covered.extend(ast.lhs_index(i) for i in range(i_max + 1))
    expected = list(range(2, 4 * i_max + 5, 2))
    assert sorted(covered) == expected


# --- evaluator ---------------------------------------------------------------


@pytest.fixture(scope="module")
def j40(catalog):
    return catalog.j_normalized(40)


def test_evaluate_k2_first_row_anchor(catalog, j40):
    fam = build_family(2, 10, catalog)
    ast = parse("k=2: g[4*i+2] = 2*j[2*(4*i+2)]")
    rep = evaluate(ast, fam, j40, 0, 0)
    row = rep.rows[0]
    assert (row.lhs, row.rhs) == (42987520, 2 * 21493760)
    assert rep.all_pass


def test_evaluate_k2_second_row_anchor(catalog, j40):
    fam = build_family(2, 10, catalog)
    ast = parse("k=2: g[4*i+4] = 2*j[2*(4*i+4)] + j[2*i+2]")
    rep = evaluate(ast, fam, j40, 0, 0)
    row = rep.rows[0]
    assert row.lhs == 40491909396
    assert row.rhs == 2 * 20245856256 + 196884
    assert rep.all_pass


def test_evaluate_k1_identity(catalog):
    fam = build_family(1, 12, catalog)
    ast = parse("k=1: g[2*i+2] = j[2*i+2]")
    rep = evaluate(ast, fam, catalog.j_normalized(12), 0, 10)
    assert rep.all_pass
    assert len(rep.rows) == 11


def test_evaluate_requires_matching_k(catalog, j40):
    fam = build_family(2, 10, catalog)
    ast = parse("k=3: g[6*i+2] = 3*j[3*(6*i+2)]")
    with pytest.raises(ValueError):
        evaluate(ast, fam, j40, 0, 1)


def test_evaluate_insufficient_order(catalog):
    fam = build_family(2, 3, catalog)
    j = catalog.j_normalized(5)
    ast = parse("k=2: g[4*i+2] = 2*j[2*(4*i+2)]")
    with pytest.raises(BeyondTruncation):
        evaluate(ast, fam, j, 0, 4)
    rep = evaluate(ast, fam, j, 0, 4, extend=True, catalog=catalog)
    assert rep.all_pass


def test_evaluate_rejects_odd_subscripts(catalog, j40):
    fam = build_family(2, 10, catalog)
    with pytest.raises(OddSubscript):
        evaluate(parse("k=2: g[2*i+1] = j[2]"), fam, j40, 0, 1)
    with pytest.raises(OddSubscript):
        evaluate(parse("k=2: g[0] = j[2]"), fam, j40, 0, 1)


def test_needed_orders():
    ast = parse("k=2: g[4*i+4] = 2*j[2*(4*i+4)] + j[2*i+2]")
    need_g, need_j = needed_orders(ast, 0, 10)
    assert need_g == (4 * 10 + 4) // 2
    assert need_j == (8 * 10 + 8) // 2


def test_failing_row_reports_exact_values(catalog):
    # A deliberately wrong identity: both sides reported, not hidden.
    fam = build_family(2, 6, catalog)
    ast = parse("k=2: g[4*i+2] = j[2*(4*i+2)]")
    rep = evaluate(ast, fam, catalog.j_normalized(12), 0, 1)
    assert not rep.all_pass
    assert rep.rows[0].lhs == 42987520
    assert rep.rows[0].rhs == 21493760


# --- suite -------------------------------------------------------------------


def test_run_suite_shape_and_k2(catalog):
    reports = run_suite(3, catalog=catalog)
    assert len(reports) == 14
    for rep in reports:
        assert len(rep.rows) == 4
        for row in rep.rows:
            assert isinstance(row.lhs, int) and isinstance(row.rhs, int)
    k2 = [r for r in reports if r.identity.k == 2]
    assert all(r.all_pass for r in k2)


def test_run_suite_reports_suspect_k4_row(catalog):
    reports = run_suite(2, catalog=catalog)
    failing = [r for r in reports if not r.all_pass]
    assert [r.identity.render() for r in failing] == [
        "k=4: g[8*i+4] = 4*j[32*i+16] + 2*j[4*i+8]"
    ]
    bad = failing[0]
    assert not bad.rows[0].passed
    assert bad.rows[0].lhs != bad.rows[0].rhs
    # The other thirteen rows hold on this range.
    assert sum(1 for r in reports if r.all_pass) == 13


def test_run_suite_rejects_negative_imax():
    with pytest.raises(ValueError):
        run_suite(-1)

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from hyperramsey.cost import CostParams, cost_table
from hyperramsey.errors import ParseError, TooManyTermsError
from hyperramsey.pauli import (PauliPolynomial, compile_cost, diagonal, emit, evaluate,
                               parse)
from naive import index_to_bits, naive_counts


def test_single_edge_is_identity():
    poly = compile_cost(CostParams(3, 3, 3, 3))
    assert poly.terms == {(): 1}
    assert emit(poly) == "pauli-z L=1\n1.0\n"


@pytest.mark.parametrize("inst", [(4, 3, 3, 2), (4, 4, 4, 3), (3, 3, 3, 2), (5, 3, 4, 2),
                                  (5, 4, 4, 3), (4, 2, 3, 2), (5, 3, 3, 3)])
def test_diagonal_equivalence(inst):
    p = CostParams(*inst)
    poly = compile_cost(p)
    table = cost_table(p)
    diag = diagonal(poly)
    for x in range(1 << p.L):
        value = evaluate(poly, x)
        assert abs(value - round(value)) < 1e-9
        assert round(value) == table[x]
        assert diag[x] == pytest.approx(value, abs=1e-9)
    assert poly.locality <= p.locality


def test_vectorized_diagonal_l20():
    p = CostParams(6, 3, 3, 3)
    diag = diagonal(compile_cost(p))
    assert (abs(diag - diag.round()) < 1e-9).all()
    assert (diag.round() == cost_table(p)).all()


def test_diagonal_equivalence_against_naive():
    p = CostParams(4, 3, 3, 2)
    poly = compile_cost(p)
    for x in range(64):
        assert round(evaluate(poly, x)) == sum(naive_counts(4, 3, 3, 2, index_to_bits(x, 6)))


def test_all_ones_n4():
    assert evaluate(compile_cost(CostParams(4, 3, 3, 2)), 2**6 - 1) == 4.0


def test_constant_term_is_mean_cost():
    # the identity coefficient is the trace of H_p over 2**L
    for inst in [(3, 3, 3, 2), (4, 3, 3, 2), (5, 3, 4, 2)]:
        p = CostParams(*inst)
        mean = Fraction(int(cost_table(p).sum()), 1 << p.L)
        assert compile_cost(p).terms[()] == mean
    # one triangle: C + I is 1 on 2 of the 8 states
    assert compile_cost(CostParams(3, 3, 3, 2)).terms[()] == Fraction(1, 4)


@pytest.mark.parametrize("inst", [(4, 3, 3, 2), (4, 4, 4, 3), (3, 3, 3, 2), (5, 3, 4, 2),
                                  (4, 2, 3, 2), (5, 4, 4, 3), (4, 2, 2, 2), (6, 3, 3, 3),
                                  (5, 4, 3, 3), (5, 4, 5, 2)])
def test_locality_attainment(inst):
    # Top-degree terms come from full mask supports, with coefficient
    # (-1)^t / 2^t from clique masks and 1 / 2^t from independent masks.
    # When m == n the two share supports and cancel exactly if t is odd.
    N, m, n, r = inst
    p = CostParams(N, m, n, r)
    poly = compile_cost(p)
    t = p.locality
    cancels = m == n and t % 2 == 1
    if not cancels:
        assert poly.locality == t
    else:
        assert poly.locality < t


def test_expansion_is_exact():
    poly = compile_cost(CostParams(5, 3, 4, 2))
    assert all(isinstance(c, Fraction) for c in poly.terms.values())
    assert all(c.denominator & (c.denominator - 1) == 0 for c in poly.terms.values())
    assert 0 not in poly.terms.values()


def test_term_guard():
    with pytest.raises(TooManyTermsError):
        compile_cost(CostParams(6, 3, 3, 2), max_raw_terms=100)


def test_eval_examples():
    assert evaluate(PauliPolynomial(3, {(): 5.0}), 6) == 5.0
    z1 = PauliPolynomial(2, {(1,): 1.0})
    assert evaluate(z1, 0b10) == 1.0
    assert evaluate(z1, 0b01) == -1.0
    with pytest.raises(IndexError):
        evaluate(z1, 4)


def test_polynomial_simplifies():
    poly = PauliPolynomial(3, {(2, 1): 0.5, (1, 2): -0.5, (3,): 1.0})
    assert poly.terms == {(3,): 1.0}
    with pytest.raises(ValueError):
        PauliPolynomial(2, {(3,): 1.0})


def test_emit_format():
    text = emit(PauliPolynomial(6, {(): 1.5, (2, 5): -0.25}))
    assert text == "pauli-z L=6\n1.5\n-0.25 2 5\n"


def test_compiled_n3_emit_roundtrip():
    poly = compile_cost(CostParams(3, 3, 3, 2))
    text = emit(poly)
    assert text.splitlines()[1] == "0.25"
    assert parse(text) == poly


coeffs = st.floats(allow_nan=False, allow_infinity=False, width=64).filter(lambda c: c != 0)


@given(st.integers(1, 8).flatmap(lambda L: st.tuples(
    st.just(L),
    st.dictionaries(st.sets(st.integers(1, L)).map(lambda s: tuple(sorted(s))), coeffs,
                    max_size=12))))
def test_emit_parse_roundtrip(args):
    L, terms = args
    p = PauliPolynomial(L, terms)
    assert parse(emit(p)) == p


def test_parse_accepts_comments_and_scientific():
    text = "# generated\npauli-z L=4\n\n1e-3\n# pair\n-2.5E+1 1 4\n"
    assert parse(text) == PauliPolynomial(4, {(): 0.001, (1, 4): -25.0})


@pytest.mark.parametrize("text, lineno", [
    ("pauli-z L=3\n1.0 1 x\n", 2),
    ("pauli-z L=3\n1.0 2 1\n", 2),
    ("pauli-z L=3\n1.0 4\n", 2),
    ("pauli-z L=3\n1.0 1\n2.0 1\n", 3),
    ("pauli L=3\n", 1),
    ("pauli-z L=x\n", 1),
])
def test_parse_errors(text, lineno):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.lineno == lineno


def test_parse_empty():
    with pytest.raises(ParseError):
        parse("# nothing\n")


def test_real_coefficients():
    poly = compile_cost(CostParams(4, 3, 3, 2))
    assert poly.L == comb(4, 2)
    assert all(isinstance(c, Fraction) for c in poly.terms.values())

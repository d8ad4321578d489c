import json
from fractions import Fraction

import pytest

from ctfpolys import (
    BivariatePolynomial,
    InterpolationError,
    Orientation,
    build_graph,
    count,
    counting_polynomial,
    interpolate,
    local_polynomial,
    polynomial_report,
    rank_generating,
    tutte,
)

X = BivariatePolynomial.variable("x")
Y = BivariatePolynomial.variable("y")
ONE = BivariatePolynomial.constant(1)


def test_interpolate_product_grid():
    values = [[a * b for b in (0, 1)] for a in (0, 1)]
    assert interpolate(values, (0, 1), (0, 1)) == X * Y


def test_interpolate_constant():
    values = [[5]]
    assert interpolate(values, (7,), (9,)) == BivariatePolynomial.constant(5)


def test_interpolate_shape_errors():
    with pytest.raises(ValueError):
        interpolate([[1, 2]], (0,), (0,))
    with pytest.raises(ValueError):
        interpolate([[1], [2]], (0, 0), (0,))


def test_held_out_detects_degree_violation():
    from ctfpolys.polynomials import interpolate_checked

    square = lambda a, b: a * a
    with pytest.raises(InterpolationError):
        interpolate_checked(square, [0, 1], [0], [(5, 0)])


def test_polynomial_arithmetic():
    p = (X - 1) * (X - 2) + 2 * (X - 1) * (Y - 1)
    assert p.evaluate(1, 7) == 0
    assert p.evaluate(3, 3) == 2 + 2 * 2 * 2
    assert (p - p).is_zero()
    assert p.substitute(-1, 0, -1, 0).evaluate(2, 2) == p.evaluate(-2, -2)
    assert p.set_y(1) == (X - 1) * (X - 2)
    assert p.set_x(1).degree_x == 0


def test_rank_generating_small(k2, l1, p8):
    assert rank_generating(k2) == X + 1
    assert rank_generating(l1) == Y + 1
    assert rank_generating(p8).evaluate(1, 1) == 32  # one term per edge subset


def test_tutte_small(p8, c3):
    assert tutte(p8).to_text() == "y^3+x^2+2*x*y+2*y^2+x+y"
    assert tutte(c3) == X * X + X + Y
    assert tutte(build_graph(3, [])) == ONE


def test_tutte_from_rank_generating(small_corpus, p8):
    for g in list(small_corpus) + [p8]:
        assert tutte(g) == rank_generating(g).substitute(1, -1, 1, -1)
        assert rank_generating(g) == tutte(g).substitute(1, 1, 1, 1)


def test_tutte_evaluations(p8):
    t = tutte(p8)
    assert t.evaluate(1, 1) == 8
    assert t.evaluate(2, 2) == 32
    assert t.evaluate(2, 0) == 6
    assert t.evaluate(0, 2) == 18


def test_tension_flow_tutte_specializations(small_corpus):
    # tau(x) = (-1)^r T(1-x, 0) and phi(y) = (-1)^n T(0, 1-y)
    for g in small_corpus:
        stats = g.stats()
        t = tutte(g)
        tau = counting_polynomial(g, "tau_mod")
        want = (-1) ** stats.rank * t.set_y(0).substitute(x_scale=-1, x_shift=1)
        assert tau == want
        phi = counting_polynomial(g, "phi_mod")
        want = (-1) ** stats.nullity * t.set_x(0).substitute(y_scale=-1, y_shift=1)
        assert phi == want


def test_counting_polynomial_examples(p8, k2):
    kappa = counting_polynomial(p8, "kappa_mod")
    assert kappa == (X - 1) * (X - 2) + 2 * (X - 1) * (Y - 1) + (Y - 1) * (Y - 2) * (Y - 2)
    assert counting_polynomial(k2, "kappa_mod") == X - 1
    kbm = counting_polynomial(p8, "kappa_bar_mod")
    assert kbm.to_text() == "y^3+x^2+2*x*y+5*y^2+5*x+10*y+8"
    assert kbm == rank_generating(p8)


def test_counting_polynomial_univariate_families(p8):
    tau = counting_polynomial(p8, "tau_mod")
    assert tau.degree_y == 0
    phi = counting_polynomial(p8, "phi_mod")
    assert phi.degree_x == 0
    assert phi == (Y - 1) * (Y - 2) * (Y - 2)  # kappa_mod at x = 1


def test_counting_polynomials_reproduce_counts(c3, digon_loop):
    for g in (c3, digon_loop):
        kappa = counting_polynomial(g, "kappa_int")
        for p, q in ((1, 1), (2, 2), (3, 2), (4, 5)):
            assert kappa.evaluate(p, q) == count(g, "kappa_int", p=p, q=q)
        bar = counting_polynomial(g, "kappa_bar_mod")
        for p, q in ((0, 0), (1, 2), (3, 3)):
            assert bar.evaluate(p, q) == count(g, "kappa_bar_mod", p=p, q=q)


def test_local_polynomial(p8):
    ref = Orientation.reference(p8)
    kappa_ref = local_polynomial(p8, ref, "kappa_local")
    # reference orientation is acyclic: kappa_rho = (x-1)(x-2)/2
    assert kappa_ref == Fraction(1, 2) * (X - 1) * (X - 2)
    mixed = ref.with_flipped([3])
    assert local_polynomial(p8, mixed, "kappa_local") == (X - 1) * (Y - 1)
    with pytest.raises(ValueError):
        local_polynomial(p8, ref, "kappa_mod")
    with pytest.raises(ValueError):
        counting_polynomial(p8, "kappa_local")


def test_integer_coefficient_families(small_corpus):
    for g in small_corpus:
        for family in ("tau_mod", "phi_mod", "kappa_mod", "kappa_bar_mod"):
            assert counting_polynomial(g, family).has_integer_coefficients()
        assert tutte(g).has_integer_coefficients()
        assert rank_generating(g).has_integer_coefficients()


def test_integral_families_integer_valued_not_integer_coefficient(p8):
    kappa_int = counting_polynomial(p8, "kappa_int")
    assert kappa_int.coefficient(0, 3) == Fraction(14, 3)
    assert not kappa_int.has_integer_coefficients()
    for p in range(1, 7):
        for q in range(1, 7):
            value = kappa_int.evaluate(p, q)
            assert value.denominator == 1


def test_json_serialization(p8):
    t = tutte(p8)
    payload = t.to_json_dict()
    assert payload["vars"] == ["x", "y"]
    assert payload["monomials"] == [
        [2, 0, "1"], [1, 1, "2"], [1, 0, "1"], [0, 3, "1"], [0, 2, "2"], [0, 1, "1"],
    ]
    assert payload["monomials"] == sorted(payload["monomials"], key=lambda m: (m[0], m[1]), reverse=True)
    json.dumps(payload)  # serializable

    kappa_int = counting_polynomial(p8, "kappa_int")
    coeffs = {((i, j)): c for i, j, c in kappa_int.to_json_dict()["monomials"]}
    assert coeffs[(0, 3)] == "14/3"


def test_text_form():
    assert BivariatePolynomial().to_text() == "0"
    assert BivariatePolynomial.constant(5).to_text() == "5"
    assert (X * X - 2 * X + 1).to_text() == "x^2-2*x+1"
    assert (-X).to_text() == "-x"


def test_polynomial_report(k2):
    report = polynomial_report(k2)
    named = report.named()
    assert set(named) == {
        "tutte", "rank_generating",
        "kappa_mod", "kappa_int", "kappa_bar_mod", "kappa_bar_int",
        "tau_mod", "tau_int", "tau_bar_mod", "tau_bar_int",
        "phi_mod", "phi_int", "phi_bar_mod", "phi_bar_int",
    }
    assert named["tutte"] == X
    assert named["kappa_mod"] == X - 1
    assert named["kappa_bar_mod"] == X + 1
    # K2: single bridge; both orientations acyclic, one CE class
    assert named["kappa_bar_int"] == 2 * (X + 1)
    assert named["tau_int"] == 2 * (X - 1)

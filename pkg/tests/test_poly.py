from fractions import Fraction as F

from hypothesis import given, strategies as st

from opinv.poly import BiPoly, Poly

polys = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=20), max_size=11
).map(Poly)


def test_ring_basics():
    x = Poly.x()
    assert (x - 1) * (x + 1) == Poly((-1, 0, 1))
    assert Poly((1, 2)) + Poly((0, -2, 3)) == Poly((1, 0, 3))
    assert 0 * x == Poly.zero()
    assert x ** 0 == Poly.one()


def test_trailing_zeros_trimmed():
    assert Poly((1, 0, 0)).coeffs == (F(1),)
    assert Poly((0, 0)).is_zero()
    assert Poly((0, 0)).degree == -1


def test_derivative_examples():
    assert Poly((0, 0, 1)).derivative() == Poly((0, 2))
    h2 = Poly((F(-1, 4), 0, F(1, 2)))
    assert h2.derivative() == Poly.x()  # H_2' = H_1
    assert Poly((1, 1)).derivative(5).is_zero()


def test_eval_examples():
    h2 = Poly((F(-1, 4), 0, F(1, 2)))
    assert h2(0) == F(-1, 4)
    assert Poly((-1, 0, 1))(1) == 0
    p2 = Poly((F(-1, 2), 0, F(3, 2)))
    assert p2(1) == 1


@given(polys, polys)
def test_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys, polys, st.fractions(min_value=-3, max_value=3, max_denominator=10))
def test_eval_is_ring_homomorphism(p, q, a):
    assert (p * q)(a) == p(a) * q(a)
    assert (p + q)(a) == p(a) + q(a)


def test_composition():
    p = Poly((1, 0, 1))  # 1 + x^2
    assert p(Poly((0, -1))) == p  # even
    assert Poly.x()(Poly((1, 2))) == Poly((1, 2))


def test_bipoly_square_of_half_difference():
    # ((x - y)/2)^2 = x^2/4 - (x/2) y + (1/4) y^2
    half_diff = BiPoly((Poly((0, F(1, 2))), Poly.const(F(-1, 2))), var="y")
    sq = half_diff ** 2
    assert sq.coeffs == (
        Poly((0, 0, F(1, 4))),
        Poly((0, F(-1, 2))),
        Poly.const(F(1, 4)),
    )


@given(polys, polys, st.fractions(min_value=-3, max_value=3, max_denominator=10))
def test_bipoly_eval_commutes_with_mul(p, q, y0):
    a = BiPoly((p, q), var="y")
    b = BiPoly((q, p, Poly.one()), var="y")
    assert (a * b).eval_aux(y0) == a.eval_aux(y0) * b.eval_aux(y0)


def test_bipoly_eval_at_poly():
    # (x + y)^2 at y = x gives 4x^2
    s = BiPoly((Poly.x(), Poly.one()), var="y") ** 2
    assert s.eval_aux(Poly.x()) == Poly((0, 0, 4))


def test_json_roundtrip():
    p = Poly((F(1, 2), 0, F(-3, 7)))
    assert Poly.from_json(p.to_json()) == p
    b = BiPoly((p, Poly.x()), var="M")
    assert BiPoly.from_json(b.to_json()) == b


def test_latex():
    assert Poly((F(-1, 4), 0, F(1, 2))).to_latex() == "\\frac{1}{2}x^{2}-\\frac{1}{4}"
    assert Poly.zero().to_latex() == "0"

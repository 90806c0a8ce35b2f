"""Exact arithmetic: canonical forms, products, expansion, evaluation."""

import random
from fractions import Fraction

import pytest

from schurkit.exact import (
    X,
    FactoredRational,
    LinearForm,
    NotAPolynomialError,
    PoleError,
    ProductBuilder,
    SparsePoly,
    Specialization,
    apply_permutation,
    canonical_parts,
    fr_const,
    fr_div,
    fr_equal,
    fr_eval,
    fr_expand,
    fr_form,
    fr_mul,
    fr_pow,
    negate_x,
    qvar,
    substitute_x,
)
from schurkit.schur import y_kernel


def random_factored(rng: random.Random, max_factors: int = 4) -> FactoredRational:
    """Random canonical value over q1..q3 with small integer data."""
    b = ProductBuilder()
    b.const(Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2, 3])))
    pool = [(1, 2), (1, 3), (2, 3)]
    for _ in range(rng.randint(0, max_factors)):
        s, t = rng.choice(pool)
        c = rng.randint(-3, 3)
        exp = rng.choice([-2, -1, 1, 2])
        b.form(c, qvar(s), qvar(t), exp=exp)
    return b.build()


def random_theta(rng: random.Random, prime=None) -> Specialization:
    if prime is None:
        values = {s: Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for s in (1, 2, 3)}
    else:
        values = {s: rng.randrange(prime) for s in (1, 2, 3)}
    return Specialization(values, x_value=rng.randint(-9, 9), prime=prime)


# ----------------------------------------------------------- canonical form


def test_canonical_orientation():
    form, sign = canonical_parts(0, qvar(2), qvar(1))
    assert (form, sign) == (LinearForm(0, "q1", "q2"), -1)
    form, sign = canonical_parts(3, None, X)
    assert (form, sign) == (LinearForm(-3, "x"), -1)
    form, sign = canonical_parts(5, qvar(1), None)
    assert (form, sign) == (LinearForm(5, "q1"), 1)
    assert canonical_parts(7, None, None) == (None, 7)
    assert canonical_parts(4, qvar(2), qvar(2)) == (None, 4)
    form, sign = canonical_parts(-1, X, qvar(3))
    assert (form, sign) == (LinearForm(1, "q3", "x"), -1)


def test_constants_never_stored_as_factors():
    value = fr_form(4, qvar(1), qvar(1), exp=2)
    assert value == fr_const(16)
    assert value.factors == {}


def test_fr_mul_examples():
    a = fr_form(0, qvar(1), qvar(2))
    assert fr_mul(a, fr_pow(a, -1)) == fr_const(1)

    two = fr_mul(fr_const(2), fr_form(1, qvar(1), qvar(2)))
    three = fr_mul(fr_const(3), fr_form(1, qvar(1), qvar(2)))
    prod = fr_mul(two, three)
    assert prod.constant == 6
    assert prod.factors == {LinearForm(1, "q1", "q2"): 2}

    x = fr_form(0, X)
    one_plus_x = fr_form(1, X)
    assert fr_mul(x, one_plus_x, fr_pow(one_plus_x, -1)) == x


def test_fr_equal_examples():
    x = fr_form(0, X)
    one_plus_x = fr_form(1, X)
    assert fr_equal(fr_div(fr_mul(x, one_plus_x), one_plus_x), x)
    assert not fr_equal(fr_form(0, qvar(1), qvar(2)), fr_form(0, qvar(2), qvar(1)))
    assert fr_equal(y_kernel((1,), (), 2), y_kernel((1,), (), 3))


def test_zero_value():
    zero = fr_mul(fr_const(0), fr_form(1, X))
    assert zero.is_zero() and zero.factors == {}
    with pytest.raises(ZeroDivisionError):
        fr_div(fr_const(1), zero)


# ------------------------------------------------------------------ expand


def test_fr_expand_single_form():
    poly = fr_expand(fr_form(0, qvar(1), qvar(2)))
    assert poly.terms == {(1, 0): 1, (0, 1): -1}


def test_fr_expand_product_frozen_and_at_points():
    # (1 + q1 - q2)(1 + q2 - q1) == 1 - q1^2 + 2 q1 q2 - q2^2
    value = fr_mul(fr_form(1, qvar(1), qvar(2)), fr_form(1, qvar(2), qvar(1)))
    poly = fr_expand(value, ("q1", "q2"))
    assert poly.terms == {(0, 0): 1, (2, 0): -1, (1, 1): 2, (0, 2): -1}
    rng = random.Random(42)
    for _ in range(3):
        theta = Specialization({1: rng.randint(-9, 9), 2: rng.randint(-9, 9)})
        assert poly.evaluate(theta) == fr_eval(value, theta)


def test_fr_expand_rejects_true_quotient():
    value = fr_div(fr_form(0, X), fr_form(1, X))
    with pytest.raises(NotAPolynomialError):
        fr_expand(value)


def test_fr_expand_rejects_fractional_constant():
    from schurkit.exact import NonIntegerConstantError

    with pytest.raises(NonIntegerConstantError):
        fr_expand(fr_mul(fr_const(Fraction(1, 2)), fr_form(0, qvar(1))))


def test_fr_expand_cancels_before_division():
    # the (q1 - q2) below cancels factor-wise, leaving -(-2 + q1 - q2)
    num = fr_mul(fr_form(0, qvar(1), qvar(2)), fr_form(2, qvar(2), qvar(1)))
    value = fr_div(num, fr_form(0, qvar(1), qvar(2)))
    poly = fr_expand(value, ("q1", "q2"))
    assert poly.terms == {(0, 0): 2, (1, 0): -1, (0, 1): 1}


def test_sparse_poly_exact_division():
    diff = fr_expand(fr_form(0, qvar(1), qvar(2)), ("q1", "q2"))
    total = fr_expand(fr_form(0, qvar(1)), ("q1", "q2")) + fr_expand(
        fr_form(0, qvar(2)), ("q1", "q2")
    )
    form = LinearForm(0, "q1", "q2")
    assert (diff * total).div_form_exact(form) == total
    with pytest.raises(NotAPolynomialError):
        (diff * total + SparsePoly.constant(("q1", "q2"), 1)).div_form_exact(form)


# -------------------------------------------------------------------- eval


def test_fr_eval_examples():
    value = fr_mul(fr_form(1, qvar(1), qvar(2)), fr_form(1, qvar(2), qvar(1)))
    assert fr_eval(value, Specialization({1: 2, 2: 0})) == -3

    with pytest.raises(PoleError):
        fr_eval(fr_form(0, qvar(1), qvar(2), exp=-1), Specialization({1: 0, 2: 0}))

    got = fr_eval(fr_form(0, qvar(1), qvar(2)), Specialization({1: 5, 2: 3}, prime=7))
    assert got == 2


def test_fr_eval_constant_denominator_mod_p():
    value = fr_const(Fraction(1, 7))
    with pytest.raises(PoleError):
        fr_eval(value, Specialization({1: 0}, prime=7))
    assert fr_eval(value, Specialization({1: 0}, prime=5)) == pow(7, -1, 5)


def test_specialization_validation():
    with pytest.raises(ValueError):
        Specialization({1: 0}, prime=6)
    theta = Specialization({1: Fraction(1, 2)}, prime=5)
    assert theta.value_of("q1") == 3  # 2^-1 mod 5
    with pytest.raises(ValueError):
        theta.value_of("q2")


# ----------------------------------------------------- permutation action


def test_apply_permutation_examples():
    u = fr_form(0, qvar(1), qvar(2))
    swapped = apply_permutation((2, 1), u)
    assert swapped.constant == -1
    assert swapped.factors == {LinearForm(0, "q1", "q2"): 1}
    assert apply_permutation((1, 2), u) == u
    assert apply_permutation((2, 1), swapped) == u


def test_apply_permutation_group_action():
    rng = random.Random(5)
    for _ in range(300):
        value = random_factored(rng)
        sigma = list(range(1, 4))
        tau = list(range(1, 4))
        rng.shuffle(sigma)
        rng.shuffle(tau)
        composed = [sigma[tau[s - 1] - 1] for s in (1, 2, 3)]
        lhs = apply_permutation(composed, value)
        rhs = apply_permutation(sigma, apply_permutation(tau, value))
        assert lhs == rhs


def test_apply_permutation_on_sparse_poly():
    poly = fr_expand(fr_form(1, qvar(1), qvar(2)), ("q1", "q2"))
    swapped = poly.apply_permutation((2, 1))
    assert swapped.terms == {(0, 0): 1, (0, 1): 1, (1, 0): -1}
    assert swapped.variables == ("q1", "q2")


# ------------------------------------------------------------ substitution


def test_substitute_x_examples():
    x = fr_form(0, X)
    assert substitute_x(x, 1, 2) == fr_form(0, qvar(1), qvar(2))
    assert substitute_x(fr_form(3, X), 1, 2) == fr_form(3, qvar(1), qvar(2))
    # (c - x) -> (c + q2 - q1)
    c_minus_x = fr_form(2, neg=X)
    expected = fr_form(2, qvar(2), qvar(1))
    assert substitute_x(c_minus_x, 1, 2) == expected
    assert substitute_x(fr_form(1, X), 2, 1) == fr_form(1, qvar(2), qvar(1))


def test_substitute_x_rejects_mixed_forms():
    mixed = fr_form(0, qvar(1), X)
    with pytest.raises(ValueError):
        substitute_x(mixed, 2, 3)
    with pytest.raises(ValueError):
        substitute_x(fr_form(0, X), 1, 1)


def test_negate_x():
    assert negate_x(fr_form(1, X)) == fr_mul(fr_const(-1), fr_form(-1, X))
    untouched = fr_form(2, qvar(1), qvar(2))
    assert negate_x(untouched) == untouched
    assert negate_x(negate_x(fr_form(5, X))) == fr_form(5, X)


# ----------------------------------------------------------- randomized


def test_fr_mul_commutative_associative_inverse():
    rng = random.Random(11)
    for _ in range(1000):
        a = random_factored(rng)
        b = random_factored(rng)
        c = random_factored(rng)
        assert fr_mul(a, b) == fr_mul(b, a)
        assert fr_mul(fr_mul(a, b), c) == fr_mul(a, fr_mul(b, c))
        unit = FactoredRational(Fraction(1), a.factors)
        assert fr_mul(unit, fr_pow(unit, -1)) == fr_const(1)


def test_expand_is_multiplicative():
    rng = random.Random(13)
    variables = ("q1", "q2", "q3")
    for _ in range(300):
        a = ProductBuilder()
        b = ProductBuilder()
        for target in (a, b):
            target.const(rng.randint(1, 3))
            for _ in range(rng.randint(0, 3)):
                s, t = rng.choice([(1, 2), (1, 3), (2, 3)])
                target.form(rng.randint(-2, 2), qvar(s), qvar(t))
        av, bv = a.build(), b.build()
        lhs = fr_expand(fr_mul(av, bv), variables)
        rhs = fr_expand(av, variables) * fr_expand(bv, variables)
        assert lhs == rhs


def test_eval_commutes_with_expand():
    rng = random.Random(17)
    variables = ("q1", "q2", "q3")
    for trial in range(1000):
        b = ProductBuilder()
        b.const(rng.randint(-3, 3) or 1)
        for _ in range(rng.randint(0, 4)):
            s, t = rng.choice([(1, 2), (1, 3), (2, 3)])
            b.form(rng.randint(-3, 3), qvar(s), qvar(t))
        value = b.build()
        prime = (None, 101, 10007)[trial % 3]
        theta = random_theta(rng, prime=prime)
        assert fr_eval(value, theta) == fr_expand(value, variables).evaluate(theta)


def test_distinct_canonical_values_are_distinguished_by_points():
    """Two distinct canonical values disagree somewhere: canonicalization sanity."""
    rng = random.Random(23)
    for _ in range(200):
        a = random_factored(rng)
        b = random_factored(rng)
        if a == b:
            continue
        degree = sum(abs(e) for e in a.factors.values()) + sum(
            abs(e) for e in b.factors.values()
        )
        found = False
        attempts = 0
        while not found and attempts < 2 * (1 + degree) + 20:
            attempts += 1
            theta = random_theta(rng)
            try:
                if fr_eval(a, theta) != fr_eval(b, theta):
                    found = True
            except PoleError:
                continue
        assert found, f"indistinguishable distinct values: {a!r} vs {b!r}"


# ------------------------------------------------------------------- misc


def test_render_and_sort_order():
    b = ProductBuilder()
    b.const(2)
    b.form(1, qvar(1), qvar(2))
    b.form(-1, qvar(1), qvar(2))
    b.form(0, qvar(1), qvar(2))
    assert b.build().render() == "2*(-1+q1-q2)(q1-q2)(1+q1-q2)"
    assert fr_const(6).render(latex=True) == "6"
    assert fr_form(1, qvar(1), qvar(2), exp=2).render() == "(1+q1-q2)^2"
    assert fr_form(1, qvar(1), qvar(2)).render(latex=True) == "(1+q_{1}-q_{2})"


def test_json_round_trip():
    rng = random.Random(29)
    for _ in range(100):
        value = random_factored(rng)
        data = value.to_json()
        assert FactoredRational.from_json(data) == value
    encoded = fr_form(1, qvar(1), qvar(2), exp=2).to_json()
    assert encoded["factors"] == [[{"c": 1, "pos": "q1", "neg": "q2"}, 2]]


def test_sparse_poly_json_graded_lex():
    poly = SparsePoly(("q1", "q2"), {(0, 0): 1, (2, 0): -1, (1, 1): 2, (0, 2): -1})
    data = poly.to_json()
    assert data == [[[2, 0], "-1"], [[1, 1], "2"], [[0, 2], "-1"], [[0, 0], "1"]]
    assert SparsePoly.from_json(data, ("q1", "q2")) == poly

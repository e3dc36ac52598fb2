import random
from itertools import combinations

import pytest
from hypothesis import given

from boole import ONE, ZERO, Polynomial, variables
from boole.development import (
    DevelopmentTable,
    constituent,
    constituent_equations,
    develop,
    develop_partial,
    equal_by_development,
    first_difference,
    from_table,
    interpretable_core,
    sigma_assignment,
    sigma_strings,
)
from boole.polynomial import VariableLimitError
from boole.terms import poly
from conftest import VAR_NAMES, polynomials, random_polynomial

x, y, z = variables("x, y, z")


def table_of(p, names=None):
    return {sigma: coeff.constant_value() for sigma, coeff in develop(p, names).items()}


# ----------------------------------------------------------------------
# Sigma plumbing


def test_sigma_strings_counting_order():
    assert list(sigma_strings(2)) == ["00", "01", "10", "11"]
    assert list(sigma_strings(0)) == [""]


def test_sigma_assignment():
    assert sigma_assignment("10", ("x", "y")) == {"x": 1, "y": 0}
    with pytest.raises(ValueError):
        sigma_assignment("2", ("x",))
    with pytest.raises(ValueError):
        sigma_assignment("01", ("x",))


# ----------------------------------------------------------------------
# Constituents


def test_constituent_examples():
    assert constituent("11", ("x", "y")) == x * y
    assert constituent("10", ("x", "y")) == x - x * y
    assert constituent("01", ("x", "y")) == y - x * y
    assert constituent("00", ("x", "y")) == 1 - x - y + x * y
    assert constituent("1", ("x",)) == x
    assert constituent("", ()) == ONE


def test_constituent_validation():
    with pytest.raises(ValueError):
        constituent("1", ("x", "y"))
    with pytest.raises(ValueError):
        constituent("11", ("y", "x"))
    with pytest.raises(ValueError):
        constituent("11", ("x", "x"))


def test_constituent_algebra_small():
    for names in [("x",), ("x", "y"), ("x", "y", "z")]:
        sigmas = list(sigma_strings(len(names)))
        total = ZERO
        for sigma in sigmas:
            c = constituent(sigma, names)
            assert c * c == c
            total = total + c
        assert total == ONE
        for s, t in combinations(sigmas, 2):
            assert constituent(s, names) * constituent(t, names) == ZERO


# ----------------------------------------------------------------------
# Complete development


def test_develop_examples():
    assert table_of(x + y) == {"00": 0, "01": 1, "10": 1, "11": 2}
    assert table_of(x + y - 2 * x * y) == {"00": 0, "01": 1, "10": 1, "11": 0}
    assert table_of(ZERO, ("x",)) == {"0": 0, "1": 0}
    assert table_of(ONE) == {"": 1}


def test_develop_superset_variables():
    assert table_of(x, ("x", "y")) == {"00": 0, "01": 0, "10": 1, "11": 1}


def test_develop_missing_variable_is_an_error():
    with pytest.raises(ValueError, match="missing"):
        develop(x + y, ("x",))


def test_develop_respects_variable_cap():
    wide = Polynomial({tuple(f"x{i:02d}" for i in range(21)): 1})
    with pytest.raises(VariableLimitError):
        develop(wide)
    with pytest.raises(VariableLimitError):
        develop(x, ("x",), max_vars=0)
    assert table_of(x + y) == {
        sigma: coeff.constant_value()
        for sigma, coeff in develop(x + y, max_vars=2).items()
    }


@given(polynomials)
def test_develop_coefficients_are_point_values(p):
    names = p.variables()
    for sigma, coeff in develop(p).items():
        assert coeff.constant_value() == p.evaluate(sigma_assignment(sigma, names))


# ----------------------------------------------------------------------
# Partial development


def test_develop_partial_examples():
    t = develop_partial(y - x, ("y",))
    assert t["1"] == 1 - x and t["0"] == -x
    t = develop_partial(x * y, ("x",))
    assert t["1"] == y and t["0"] == ZERO
    t = develop_partial(x, ("y",))
    assert t["1"] == x and t["0"] == x


def test_develop_partial_reexpands_to_the_polynomial():
    rng = random.Random(5)
    for _ in range(60):
        p = random_polynomial(rng)
        split = rng.randint(0, len(VAR_NAMES))
        eliminated = VAR_NAMES[:split]
        assert from_table(develop_partial(p, eliminated)) == p


# ----------------------------------------------------------------------
# from_table and the bijection


def test_from_table_examples():
    table = DevelopmentTable(
        ("x", "y"),
        {
            "11": Polynomial.constant(2),
            "10": ONE,
            "01": ONE,
            "00": ZERO,
        },
    )
    assert from_table(table) == x + y
    zero_table = DevelopmentTable(("x", "y"), {s: ZERO for s in sigma_strings(2)})
    assert from_table(zero_table) == ZERO
    ones = DevelopmentTable(("x",), {"0": ONE, "1": ONE})
    assert from_table(ones) == ONE


def test_table_validation():
    with pytest.raises(ValueError):
        DevelopmentTable(("x",), {"0": ZERO})
    with pytest.raises(ValueError):
        DevelopmentTable(("x",), {"0": ZERO, "1": ZERO, "11": ZERO})
    table = DevelopmentTable(("x",), {"0": ZERO, "1": ONE})
    with pytest.raises(ValueError):
        table["01"]
    with pytest.raises(TypeError):
        table.coefficients["0"] = ONE  # type: ignore[index]


@given(polynomials)
def test_develop_from_table_bijection(p):
    assert from_table(develop(p)) == p


def test_from_table_develop_bijection_random_tables():
    rng = random.Random(9)
    for _ in range(60):
        names = ("x", "y")
        table = DevelopmentTable(
            names,
            {
                sigma: Polynomial.constant(rng.randint(-10, 10))
                for sigma in sigma_strings(len(names))
            },
        )
        assert develop(from_table(table), names) == table


def test_partial_bijection_with_residual_coefficients():
    rng = random.Random(13)
    for _ in range(40):
        # residual coefficients over a disjoint variable set
        table = DevelopmentTable(
            ("x", "y"),
            {
                sigma: random_polynomial(rng, names=("a", "b"), max_terms=3)
                for sigma in sigma_strings(2)
            },
        )
        assert develop_partial(from_table(table), ("x", "y")) == table


@given(polynomials, polynomials)
def test_development_is_a_pointwise_ring_homomorphism(p, q):
    names = tuple(sorted(set(p.variables()) | set(q.variables())))
    tp = develop(p, names)
    tq = develop(q, names)
    t_sum = develop(p + q, names)
    t_prod = develop(p * q, names)
    for sigma in sigma_strings(len(names)):
        a = tp[sigma].constant_value()
        b = tq[sigma].constant_value()
        assert t_sum[sigma].constant_value() == a + b
        assert t_prod[sigma].constant_value() == a * b


def test_is_complete():
    assert develop(x + y).is_complete()
    assert not develop_partial(y - x, ("y",)).is_complete()
    assert develop_partial(y - x, ("y",)).variables == ("y",)


# ----------------------------------------------------------------------
# Equality criterion


def test_equality_by_development():
    assert equal_by_development(x * (x + y - x * y), x)
    assert not equal_by_development(x + y, x + y - x * y)
    assert first_difference(x + y, x + y - x * y) == "11"
    p = poly("z*(1 - z) + x")
    assert equal_by_development(p, p)


@given(polynomials, polynomials)
def test_development_equality_is_structural_equality(p, q):
    assert equal_by_development(p, q) == (p == q)


# ----------------------------------------------------------------------
# Interpretable core


def test_interpretable_core_examples():
    assert interpretable_core(x + y) == x + y - x * y
    idempotent = x + y - x * y
    assert interpretable_core(idempotent) == idempotent
    assert interpretable_core(ZERO) == ZERO
    assert interpretable_core(Polynomial.constant(5)) == ONE


@given(polynomials)
def test_interpretable_core_properties(p):
    core = interpretable_core(p)
    assert core.is_idempotent()
    names = tuple(sorted(set(p.variables()) | set(core.variables())))
    dp = develop(p, names)
    dc = develop(core, names)
    for sigma in sigma_strings(len(names)):
        value = dp[sigma].constant_value()
        assert dc[sigma].constant_value() == (1 if value else 0)


def test_idempotence_iff_zero_one_coefficients():
    rng = random.Random(3)
    for _ in range(100):
        p = random_polynomial(rng)
        flags = {coeff.constant_value() in (0, 1) for _, coeff in develop(p).items()}
        assert p.is_idempotent() == (flags == {True} or not flags)


# ----------------------------------------------------------------------
# Constituent equations


def test_constituent_equations():
    assert constituent_equations(x + y) == {"01", "10", "11"}
    assert constituent_equations(ZERO) == frozenset()
    assert constituent_equations(ONE, ("x", "y")) == set(sigma_strings(2))

import numpy as np
import pytest

from braceforge.exceptions import CenterNotTrivialError, NotRotaBaxterError, TooLargeError
from braceforge.finite_group import conjugation_table, power_map
from braceforge.gallery import rb_formula_alpha
from braceforge.gamma import gamma_from_inner_rep, verify_gamma, verify_skew_brace
from braceforge.group_families import heisenberg_coordinates, heisenberg_element, make_abelian
from braceforge.rota_baxter import (
    RotaBaxterOperator, brace_of_rb, endomorphisms, enumerate_rb, gamma_of_rb, rb_from_centerless,
    same_gamma_witness, verify_rb
)
from braceforge.verdict_status import GammaRelation


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_operators_on_cyclic_groups_are_the_endomorphisms(n):
    group = make_abelian([n])

    operators = {tuple(operator.images.tolist()) for operator in enumerate_rb(group)}
    expected = {tuple(endo.images.tolist()) for endo in endomorphisms(group)}

    assert operators == expected
    assert len(operators) == n


def test_klein_group_operators_are_its_endomorphisms():
    klein = make_abelian([2, 2])

    assert len(enumerate_rb(klein)) == len(endomorphisms(klein)) == 16


def test_every_small_operator_gives_a_skew_brace(small_groups):
    for group in small_groups:
        operators = enumerate_rb(group)
        images = {tuple(operator.images.tolist()) for operator in operators}

        assert tuple([0] * group.order) in images
        assert tuple(group.inverse.tolist()) in images
        for operator in operators:
            assert operator.verified
            brace = brace_of_rb(group, operator)
            assert brace.gamma.verified
            assert verify_skew_brace(brace.dot, brace.circle)


def test_enumeration_is_capped(s3):
    with pytest.raises(TooLargeError):
        enumerate_rb(s3, enumeration_cap=10)
    with pytest.raises(TooLargeError):
        endomorphisms(s3, enumeration_cap=10)


def test_identity_map_on_s3_is_not_rota_baxter(s3):
    verdict = verify_rb(s3, np.arange(6))

    assert not verdict
    g, h = verdict.witness
    b = g
    argument = s3.mul(s3.mul(s3.mul(g, b), h), s3.inv(b))
    assert argument != s3.mul(g, h)


def test_gamma_of_rb_needs_an_operator(s3):
    with pytest.raises(NotRotaBaxterError):
        gamma_of_rb(s3, np.arange(6))


def test_inverse_operator_gives_the_opposite_group(s3):
    brace = brace_of_rb(s3, power_map(s3, -1))

    assert np.array_equal(brace.circle.table, s3.table.T)


def _central_character(group):
    """u^i v^j k^q -> k^i, a morphism into the centre."""
    return RotaBaxterOperator(group, [heisenberg_element(3, 0, 0, heisenberg_coordinates(3, g)[0])
                                      for g in range(group.order)])


def test_same_gamma_returns_the_central_quotient(heisenberg3):
    zero = RotaBaxterOperator(heisenberg3, np.zeros(27, dtype=int))
    character = _central_character(heisenberg3)

    assert verify_rb(heisenberg3, character)
    result = same_gamma_witness(heisenberg3, zero, character)

    assert result.same
    assert np.array_equal(result.zeta.images, character.images)
    assert gamma_of_rb(heisenberg3, zero) == gamma_of_rb(heisenberg3, character)


def test_different_gammas_give_a_non_central_witness(heisenberg3):
    zero = RotaBaxterOperator(heisenberg3, np.zeros(27, dtype=int))
    inverse = RotaBaxterOperator(heisenberg3, heisenberg3.inverse)

    result = same_gamma_witness(heisenberg3, zero, inverse)

    assert result.relation == GammaRelation.NOT_SAME
    # k^q are central, v is the first element that is not
    assert result.witness == heisenberg_element(3, 0, 1, 0)


def test_centreless_inverse_gamma_gives_the_inverse_map(s3):
    gamma = gamma_from_inner_rep(s3, power_map(s3, -1))

    operator = rb_from_centerless(s3, gamma)

    assert np.array_equal(operator.images, s3.inverse)
    assert operator.verified


def test_centreless_inversion_needs_a_trivial_centre(alpha_instances):
    instance = alpha_instances[1]
    assert verify_gamma(instance.gamma)

    with pytest.raises(CenterNotTrivialError):
        rb_from_centerless(instance.group, instance.gamma)


def test_central_twist_that_is_not_a_morphism_breaks_the_identity(heisenberg3):
    # B2(g) = k^r(g) B(g) with r the k-exponent of g: same conjugations, but r is not additive on o
    formula = rb_formula_alpha(3, 2, heisenberg3)
    twisted = RotaBaxterOperator(heisenberg3, heisenberg3.table[np.arange(27) % 3, formula.images])

    conjugations = conjugation_table(heisenberg3)
    assert np.array_equal(conjugations[twisted.images], conjugations[formula.images])
    assert not verify_rb(heisenberg3, twisted)
    with pytest.raises(NotRotaBaxterError):
        same_gamma_witness(heisenberg3, formula, twisted)

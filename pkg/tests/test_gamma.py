import numpy as np
import pytest

from braceforge.exceptions import GammaNotVerifiedError, NotASkewBraceError, NotAutomorphismError, ShapeMismatchError
from braceforge.finite_group import FiniteGroup, GroupMap, power_map
from braceforge.gamma import (
    GammaFunction, SkewBrace, circle_group, gamma_from_inner_rep, gamma_of_brace, inner_image_check,
    non_inner_elements, skew_brace_of, verify_gamma, verify_skew_brace
)
from braceforge.group_families import make_abelian


def _trivial_gamma(group):
    return GammaFunction(group, np.tile(np.arange(group.order), (group.order, 1)))


def _relabelled_c4():
    """C4 transported along the swap of indices 1 and 2."""
    swap = np.array([0, 2, 1, 3])
    a = np.arange(4)
    return FiniteGroup(swap[(swap[a][:, None] + swap[a][None, :]) % 4])


def test_trivial_gamma_gives_the_dot_group(s3):
    gamma = _trivial_gamma(s3)

    assert verify_gamma(gamma)
    assert gamma.verified
    assert np.array_equal(circle_group(gamma).table, s3.table)


def test_inverse_lift_is_a_gamma_function(s3):
    gamma = gamma_from_inner_rep(s3, power_map(s3, -1))

    assert verify_gamma(gamma)
    # g o h = g g^-1 h g = h g
    assert np.array_equal(circle_group(gamma).table, s3.table.T)


def test_identity_lift_on_s3_fails_the_functional_equation(s3):
    gamma = gamma_from_inner_rep(s3, GroupMap(s3, s3, np.arange(6)))

    verdict = verify_gamma(gamma)

    assert not verdict
    assert len(verdict.witness) == 2
    assert not gamma.verified


def test_non_permutation_action_is_rejected(s3):
    action = np.tile(np.arange(6), (6, 1))
    action[3] = 0

    with pytest.raises(NotAutomorphismError) as error:
        verify_gamma(GammaFunction(s3, action))

    assert error.value.element == 3


def test_circle_group_needs_a_verified_gamma(s3):
    with pytest.raises(GammaNotVerifiedError):
        circle_group(_trivial_gamma(s3))


def test_gamma_action_shape_is_checked(s3):
    with pytest.raises(ShapeMismatchError):
        GammaFunction(s3, np.zeros((6, 5), dtype=int))


def test_trivial_and_opposite_operations_are_skew_braces(s3):
    assert verify_skew_brace(s3, s3)
    assert verify_skew_brace(s3, FiniteGroup(s3.table.T))


def test_skew_brace_failure_carries_a_violating_triple():
    dot = make_abelian([4])
    circle = _relabelled_c4()

    verdict = verify_skew_brace(dot, circle)

    assert not verdict
    g, h, k = verdict.witness
    left = circle.mul(g, dot.mul(h, k))
    right = dot.mul(dot.mul(circle.mul(g, h), dot.inv(g)), circle.mul(g, k))
    assert left != right


def test_skew_brace_orders_must_match(s3):
    with pytest.raises(ShapeMismatchError):
        verify_skew_brace(s3, make_abelian([4]))


def test_gamma_of_brace_reads_back_the_action(s3):
    gamma = gamma_of_brace(s3, FiniteGroup(s3.table.T))

    assert gamma.verified
    assert gamma == gamma_from_inner_rep(s3, power_map(s3, -1))


def test_gamma_of_brace_rejects_non_braces():
    with pytest.raises(NotASkewBraceError):
        gamma_of_brace(make_abelian([4]), _relabelled_c4())


def test_skew_brace_of_alpha_instance(alpha_instances):
    instance = alpha_instances[2]
    brace = skew_brace_of(instance.gamma)

    assert isinstance(brace, SkewBrace)
    assert brace.order == 27
    assert verify_skew_brace(brace.dot, brace.circle)


def test_inner_gamma_has_no_non_inner_values(alpha_instances):
    gamma = alpha_instances[1].gamma

    assert inner_image_check(gamma)
    assert non_inner_elements(gamma) == []

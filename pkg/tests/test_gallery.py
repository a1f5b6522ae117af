import numpy as np
import pytest

from braceforge.cohomology import center_coefficients, coboundary_of, decide_rota_baxter, solve_coboundary
from braceforge.exceptions import AlphaIsMinusHalfError, BadParametersError, NotOddPrimeError
from braceforge.extensions import (
    build_central_extension, derived_intersection_obstruction, extract_cocycle_from_section, find_complement
)
from braceforge.finite_group import center, commutator_table, power_map
from braceforge.gallery import (
    alpha_kappa_closed_form, build_alpha_family, build_noninner_example, closed_form_sigma_alpha,
    closed_form_splitting_section, half_alpha_term, heisenberg_quotient_cocycle, normal_form_switch,
    p5_kappa_closed_form, p5_transported_cocycle, rb_formula_alpha
)
from braceforge.gamma import inner_image_check, verify_gamma, verify_skew_brace
from braceforge.group_families import heisenberg_element
from braceforge.rota_baxter import same_gamma_witness, verify_rb
from braceforge.verdict_status import CertificateStatus

FAMILY = [(p, alpha) for p in (3, 5, 7) for alpha in range(p)]


@pytest.mark.parametrize('p, alpha', FAMILY)
def test_alpha_family_circle_structure(p, alpha):
    instance = build_alpha_family(p, alpha)
    group, circle = instance.group, instance.circle

    assert instance.gamma.verified
    expected = power_map(group, 1 + 2 * alpha).images[commutator_table(group)]
    assert np.array_equal(commutator_table(circle), expected)
    for exponent in range(-1, p):
        assert np.array_equal(power_map(circle, exponent).images, power_map(group, exponent).images)


@pytest.mark.parametrize('p', [3, 5, 7])
def test_only_minus_one_half_fails_to_split(p):
    residue = (p - 1) // 2

    assert [alpha for alpha in range(p) if not build_alpha_family(p, alpha).splits] == [residue]


@pytest.mark.parametrize('p', [3, 5, 7])
def test_three_certificates_agree_on_the_non_split_residue(p):
    instance = build_alpha_family(p, (p - 1) // 2)
    extension = build_central_extension(instance.kappa)

    assert solve_coboundary(instance.kappa).status == CertificateStatus.UNSOLVABLE
    complement = find_complement(extension)
    assert complement.status == CertificateStatus.NONSPLIT
    assert complement.candidates == p ** 3
    obstruction = derived_intersection_obstruction(extension)
    assert obstruction.found
    assert instance.kappa.coeff.embedding.images[obstruction.witness] in center(instance.group)


@pytest.mark.parametrize('p, alpha', [(p, a) for p, a in FAMILY if (1 + 2 * a) % p])
def test_split_cases_match_the_closed_forms(p, alpha):
    instance = build_alpha_family(p, alpha)
    group = instance.group

    decision = decide_rota_baxter(group, instance.gamma, instance.representative)
    formula = rb_formula_alpha(p, alpha, group)

    assert verify_rb(group, decision.operator)
    assert same_gamma_witness(group, decision.operator, formula).same
    assert coboundary_of(closed_form_sigma_alpha(instance)) == instance.kappa
    if alpha == 0:
        assert not formula.images.any()
    if alpha == p - 1:
        assert np.array_equal(formula.images, group.inverse)


def test_closed_form_section_splits_the_extension(split_instance):
    extension = build_central_extension(split_instance.kappa)
    section = closed_form_splitting_section(split_instance, extension)

    assert section.is_homomorphism()
    assert extract_cocycle_from_section(extension, section).is_trivial


def test_normal_form_switch():
    p, alpha = 5, 1
    circle = build_alpha_family(p, alpha).circle
    k_tilde = heisenberg_element(p, 0, 0, 1 + 2 * alpha)

    for i in range(p):
        for j in range(p):
            for r in range(p):
                a, b, q = normal_form_switch(p, alpha, i, j, r)
                word = circle.mul(heisenberg_element(p, a, 0, 0), heisenberg_element(p, 0, b, 0))
                word = circle.mul(word, power_map(circle, q).images[k_tilde])
                assert word == heisenberg_element(p, i, j, r)


def test_family_parameters_are_checked():
    with pytest.raises(BadParametersError):
        build_alpha_family(3, 3)
    with pytest.raises(NotOddPrimeError):
        build_alpha_family(9, 1)
    with pytest.raises(AlphaIsMinusHalfError):
        rb_formula_alpha(5, 2)
    with pytest.raises(AlphaIsMinusHalfError):
        normal_form_switch(3, 1, 0, 0, 1)


def test_heisenberg_quotient_cocycle_is_not_a_coboundary():
    cocycle = heisenberg_quotient_cocycle(3)

    assert cocycle.base.order == 9
    assert solve_coboundary(cocycle, 'all_pairs').status == CertificateStatus.UNSOLVABLE


@pytest.mark.parametrize('kind, params, order', [('c4_d4', {}, 32), ('v_h_q', {'p': 7, 'q': 3}, 441)])
def test_non_inner_examples(kind, params, order):
    example = build_noninner_example(kind, **params)
    brace = example.brace

    assert brace.order == order
    assert verify_skew_brace(brace.dot, brace.circle)
    assert verify_gamma(example.gamma)
    verdict = inner_image_check(example.gamma)
    assert not verdict
    assert verdict.witness[0] in example.non_inner


def test_trivial_action_control_is_inner():
    example = build_noninner_example('c4_d4', trivial_action=True)

    assert inner_image_check(example.gamma)
    assert example.non_inner == []


def test_non_inner_parameters_are_checked():
    with pytest.raises(BadParametersError):
        build_noninner_example('v_h_q', p=7, q=5)
    with pytest.raises(BadParametersError):
        build_noninner_example('s3_s3')


@pytest.mark.slow
def test_p5_gamma_and_kappa(p5_instance):
    assert p5_instance.group.order == 243
    assert p5_instance.gamma.verified
    assert center_coefficients(p5_instance.group).rank == 3


@pytest.mark.slow
def test_p5_kappa_is_not_a_coboundary(p5_instance):
    certificate = solve_coboundary(p5_instance.kappa, 'generator_rows')

    assert certificate.status == CertificateStatus.UNSOLVABLE
    assert certificate.unknowns == 729


@pytest.mark.slow
def test_p5_transported_cocycle_is_the_heisenberg_quotient(p5_instance):
    transported = p5_transported_cocycle(p5_instance)

    assert np.array_equal(transported.values, heisenberg_quotient_cocycle(3).values)
    certificate = solve_coboundary(transported, 'generator_rows')
    assert certificate.status == CertificateStatus.UNSOLVABLE
    assert certificate.unknowns == 9


@pytest.mark.slow
def test_p5_extension_obstruction(p5_instance):
    extension = build_central_extension(p5_instance.kappa)

    assert extension.total.order == 3 ** 8
    obstruction = derived_intersection_obstruction(extension)
    assert obstruction.found
    ambient = p5_instance.kappa.coeff.embedding.images[obstruction.witness]
    # the witness is a power of k inside S x H
    assert ambient < p5_instance.heisenberg.order


@pytest.mark.parametrize('p', [3, 5, 7])
def test_half_alpha_term_ignores_the_representative(p):
    for alpha in range(p):
        for k in range(-2, 3):
            assert half_alpha_term(p, alpha + k * p) == half_alpha_term(p, alpha)


def test_kappa_closed_form_helpers(alpha_instances):
    for instance in alpha_instances.values():
        unchecked = build_alpha_family(3, instance.alpha, check_closed_form=False)
        assert np.array_equal(alpha_kappa_closed_form(unchecked), instance.kappa.ambient_values)


@pytest.mark.slow
def test_p5_kappa_closed_form(p5_instance):
    assert np.array_equal(p5_kappa_closed_form(p5_instance), p5_instance.kappa.ambient_values)

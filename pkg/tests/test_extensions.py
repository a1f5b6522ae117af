import numpy as np
import pytest

from braceforge.cohomology import coboundary_of, extract_kappa
from braceforge.exceptions import NotASectionError, NotGeneratingError, TooLargeError
from braceforge.extensions import (
    build_central_extension, coboundary_from_section, derived_intersection_obstruction,
    extract_cocycle_from_section, find_complement
)
from braceforge.finite_group import GroupMap, find_associativity_failure
from braceforge.verdict_status import CertificateStatus


def test_extension_is_a_group_with_central_kernel(nonsplit_extension):
    total = nonsplit_extension.total

    assert total.order == 81
    assert find_associativity_failure(total.table) is None
    for q in nonsplit_extension.kernel:
        assert np.array_equal(total.table[q], total.table[:, q])


def test_standard_section_reads_back_the_cocycle(nonsplit_extension, split_extension):
    for extension in (nonsplit_extension, split_extension):
        assert extract_cocycle_from_section(extension, extension.standard_section) == extension.cocycle


def test_projection_is_a_morphism(nonsplit_extension):
    projection = nonsplit_extension.projection()

    assert projection.is_homomorphism()
    assert nonsplit_extension.pair(nonsplit_extension.element(2, 5)) == (2, 5)


def test_non_normalised_cocycle_round_trips(alpha_instances):
    instance = alpha_instances[1]
    group = instance.group
    # C'(g) = k C(g) moves kappa(1, 1) off the identity
    recoded = GroupMap(group, group, group.table[1, instance.representative.images])
    kappa = extract_kappa(group, instance.gamma, recoded, instance.kappa.coeff)
    assert kappa.values[0, 0] != 0

    extension = build_central_extension(kappa)

    assert extension.shift == kappa.values[0, 0]
    assert np.array_equal(extension.total.table[0], np.arange(extension.total.order))
    assert extract_cocycle_from_section(extension, extension.standard_section) == kappa


def test_non_split_extension_has_no_complement(nonsplit_extension):
    result = find_complement(nonsplit_extension)

    assert result.status == CertificateStatus.NONSPLIT
    # the circle group is elementary abelian of rank 3
    assert result.candidates == 27
    assert result.section is None


def test_split_extension_has_a_morphism_section(split_extension):
    result = find_complement(split_extension)

    assert result.split
    assert result.section.is_homomorphism()
    assert extract_cocycle_from_section(split_extension, result.section).is_trivial
    sigma = coboundary_from_section(split_extension, result.section)
    assert coboundary_of(sigma) == split_extension.cocycle


def test_complement_search_checks_generators_and_cap(nonsplit_extension):
    with pytest.raises(NotGeneratingError):
        find_complement(nonsplit_extension, generators=[1])
    with pytest.raises(TooLargeError):
        find_complement(nonsplit_extension, complement_cap=1)


def test_obstruction_certifies_the_non_split_case(nonsplit_extension):
    result = derived_intersection_obstruction(nonsplit_extension)

    assert result.found
    assert result.witness != 0
    assert result.element in nonsplit_extension.kernel
    assert result.element == nonsplit_extension.element(result.witness, 0)


def test_obstruction_is_inconclusive_when_split(split_extension):
    result = derived_intersection_obstruction(split_extension)

    assert result.status == CertificateStatus.INCONCLUSIVE
    assert result.witness is None


def test_sections_must_cover_the_base(nonsplit_extension):
    with pytest.raises(NotASectionError) as error:
        extract_cocycle_from_section(nonsplit_extension, np.zeros(27, dtype=int))

    assert error.value.element == 1

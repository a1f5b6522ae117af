"""
Central extensions E = Q x G built from 2-cocycles, sections, complements and the
derived-subgroup obstruction to splitting.

The pair (q, g) sits at index q*|G| + g. A cocycle with theta(1, 1) = c != 1 is
encoded through theta~ = theta * c^-1, so that (1, 1) stays the identity and the
standard section g -> (c, g) reads back exactly theta.
"""
import itertools
import logging

import numpy as np

from .cohomology import Coboundary, TwoCocycle, require_cocycle
from .config import DEFAULT_COMPLEMENT_CAP
from .exceptions import NotASectionError, NotGeneratingError, TheoremViolationError, TooLargeError
from .finite_group import (
    TABLE_DTYPE, FiniteGroup, GroupMap, Subgroup, check_order, derived_subgroup, subgroup_generated, validate_table
)
from .verdict_status import CertificateStatus

logger = logging.getLogger(__name__)


class CentralExtension:
    def __init__(self, total, coeff, base, cocycle):
        self.total = total
        self.coeff = coeff
        self.base = base
        self.cocycle = cocycle
        self.shift = int(cocycle.values[0, 0])
        self.kernel = Subgroup(total, np.arange(coeff.order) * base.order)
        self.standard_section = GroupMap(base, total, self.shift * base.order + np.arange(base.order))

    def element(self, q, g):
        return int(q) * self.base.order + int(g)

    def pair(self, e):
        return divmod(int(e), self.base.order)

    def projection(self):
        return GroupMap(self.total, self.base, np.arange(self.total.order) % self.base.order)

    def __str__(self):
        return "Central extension:\n--Kernel order: {}\n--Base: {}\n--Total order: {}\n".format(
            self.coeff.order,
            self.base.label,
            self.total.order)

    __repr__ = __str__


class ComplementResult:
    def __init__(self, status, candidates, section=None, lifts=None):
        self.status = status
        self.candidates = candidates
        self.section = section
        self.lifts = lifts

    @property
    def split(self):
        return self.status == CertificateStatus.SPLIT

    def to_params(self):
        return {
            'status': self.status,
            'candidates': self.candidates,
            'section': None if self.section is None else self.section.images.tolist(),
            'lifts': self.lifts,
        }


class ObstructionResult:
    def __init__(self, status, witness=None, element=None):
        self.status = status
        self.witness = witness
        self.element = element

    @property
    def found(self):
        return self.status == CertificateStatus.NONSPLIT

    def to_params(self):
        return {'status': self.status, 'witness': self.witness, 'element': self.element}


def build_central_extension(cocycle, order_cap=None):
    """(q1, a1)(q2, a2) = (q1 q2 theta~(a1, a2), a1 o a2), built one q1 block at a time."""
    require_cocycle(cocycle)
    coeff, base = cocycle.coeff, cocycle.base
    kernel, size = coeff.group, base.order
    order = kernel.order * size
    check_order(order, order_cap)
    logger.info('Building central extension of order %d', order)
    shifted = kernel.table[cocycle.values, kernel.inverse[cocycle.values[0, 0]]]
    table = np.empty((order, order), dtype=TABLE_DTYPE)
    for q1 in range(kernel.order):
        q = kernel.table[kernel.table[q1][None, :, None], shifted[:, None, :]]
        block = q * size + base.table[:, None, :]
        table[q1 * size:(q1 + 1) * size] = block.reshape(size, order)
    # associativity is the cocycle identity, already checked
    validate_table(table, verify_associativity=False)
    names = None
    if coeff.ambient.names is not None and base.names is not None:
        ambient = coeff.embedding.images
        names = ['({},{})'.format(coeff.ambient.names[ambient[q]], base.names[g])
                 for q in range(kernel.order) for g in range(size)]
    total = FiniteGroup(table, names=names, label='E({})'.format(base.label))
    return CentralExtension(total, coeff, base, cocycle)


def _section_images(extension, section):
    images = np.asarray(section.images if isinstance(section, GroupMap) else section, dtype=np.int64)
    size = extension.base.order
    if images.shape != (size,):
        raise NotASectionError(0)
    wrong = np.nonzero(images % size != np.arange(size))[0]
    if wrong.size:
        raise NotASectionError(int(wrong[0]))
    return images


def extract_cocycle_from_section(extension, section):
    """theta(a, b) = s(a) s(b) s(a o b)^-1, read off in Q."""
    images = _section_images(extension, section)
    table, inverse = extension.total.table, extension.total.inverse
    size = extension.base.order
    products = table[table[images[:, None], images[None, :]], inverse[images[extension.base.table]]]
    if np.any(products % size):
        raise TheoremViolationError('Section defect left the kernel')
    return require_cocycle(TwoCocycle(extension.base, extension.coeff, products // size))


def coboundary_from_section(extension, section):
    """sigma with s'(g) = sigma(g) s(g) for the standard section s."""
    images = _section_images(extension, section)
    total = extension.total
    standard = extension.standard_section.images
    quotient = total.table[images, total.inverse[standard]]
    return Coboundary(extension.base, extension.coeff, quotient // extension.base.order)


def find_complement(extension, generators=None, complement_cap=None):
    """
    Searches the lifts t_i = (q_i, s_i) of a generating set of the base in
    lexicographic order of (q_1, ..., q_r) for one generating a complement of Q x 1.
    """
    complement_cap = DEFAULT_COMPLEMENT_CAP if complement_cap is None else complement_cap
    base, total, kernel = extension.base, extension.total, extension.kernel
    generators = list(base.generators) if generators is None else [int(s) for s in generators]
    generated = subgroup_generated(base, generators).order
    if generated != base.order:
        raise NotGeneratingError(generated, base.order)
    size = extension.coeff.order ** len(generators)
    if size > complement_cap:
        raise TooLargeError(size, complement_cap)
    logger.info('Searching %d lifts of %d generators for a complement', size, len(generators))
    for tried, lift in enumerate(itertools.product(range(extension.coeff.order), repeat=len(generators)), 1):
        lifts = [extension.element(q, s) for q, s in zip(lift, generators)]
        closure = subgroup_generated(total, lifts)
        if closure.order != base.order or not closure.intersection(kernel).is_trivial:
            continue
        images = np.empty(base.order, dtype=np.int64)
        images[closure.members % base.order] = closure.members
        logger.info('Found a complement after %d candidates', tried)
        return ComplementResult(CertificateStatus.SPLIT, tried, GroupMap(base, total, images), list(lift))
    logger.info('No complement among %d candidates', size)
    return ComplementResult(CertificateStatus.NONSPLIT, size)


def derived_intersection_obstruction(extension):
    """
    A split central extension has Q x 1 meeting [E, E] trivially, so any other
    element of the intersection certifies that E does not split. A trivial
    intersection proves nothing.
    """
    derived = derived_subgroup(extension.total)
    common = derived.intersection(extension.kernel)
    if common.is_trivial:
        return ObstructionResult(CertificateStatus.INCONCLUSIVE)
    element = int(common.members[1])
    q = element // extension.base.order
    logger.info('Kernel element %d lies in the derived subgroup of order %d', q, derived.order)
    return ObstructionResult(CertificateStatus.NONSPLIT, witness=q, element=element)

import logging

import numpy as np

from .config import DEFAULT_ENUMERATION_CAP
from .exceptions import (
    CenterNotTrivialError, GammaNotInnerError, NotRotaBaxterError, TheoremViolationError, TooLargeError
)
from .finite_group import GroupMap, center
from .gamma import (
    SkewBrace, circle_group, gamma_from_inner_rep, inner_representatives, require_verified, verify_gamma,
    verify_skew_brace
)
from .verdict import Verdict
from .verdict_status import GammaRelation

logger = logging.getLogger(__name__)


class RotaBaxterOperator(GroupMap):
    """B: G -> G with B(g B(g) h B(g)^-1) = B(g) B(h); kept apart from GroupMap so its verified flag stays its own."""

    def __init__(self, group, images, verified=False):
        super().__init__(group, group, images)
        self.verified = verified

    @property
    def group(self):
        return self.source

    def __str__(self):
        return "Rota-Baxter operator:\n--Group: {}\n--Verified: {}\n".format(self.group.label, self.verified)

    __repr__ = __str__


class SameGammaResult:
    def __init__(self, relation, zeta=None, witness=None):
        self.relation = relation
        self.zeta = zeta
        self.witness = witness

    @property
    def same(self):
        return self.relation == GammaRelation.SAME

    def __str__(self):
        return "Same gamma result:\n--Relation: {}\n--Witness: {}\n".format(self.relation, self.witness)


def as_operator(group, operator):
    if isinstance(operator, RotaBaxterOperator):
        return operator
    images = operator.images if isinstance(operator, GroupMap) else operator
    return RotaBaxterOperator(group, images)


def verify_rb(group, operator):
    operator = as_operator(group, operator)
    table, inverse, images = group.table, group.inverse, operator.images
    for g in range(group.order):
        b = images[g]
        arguments = table[table[table[g, b]], inverse[b]]
        mismatch = np.nonzero(images[arguments] != table[b, images])[0]
        if mismatch.size:
            return Verdict.fails(g, mismatch[0], message='Rota-Baxter identity fails')
    operator.verified = True
    return Verdict.holds()


def _require_rb(group, operator):
    operator = as_operator(group, operator)
    if not operator.verified:
        verdict = verify_rb(group, operator)
        if not verdict:
            raise NotRotaBaxterError(verdict.witness)
    return operator


def gamma_of_rb(group, operator):
    """gamma(g) = iota(B(g)); its circle operation is g o h = g B(g) h B(g)^-1."""
    operator = _require_rb(group, operator)
    gamma = gamma_from_inner_rep(group, operator)
    verdict = verify_gamma(gamma)
    if not verdict:
        raise TheoremViolationError('Gamma function of a Rota-Baxter operator fails the functional equation',
                                    verdict.witness)
    return gamma


def brace_of_rb(group, operator):
    gamma = gamma_of_rb(group, operator)
    circle = circle_group(gamma)
    verdict = verify_skew_brace(group, circle)
    if not verdict:
        raise TheoremViolationError('Operations induced by a Rota-Baxter operator are not a skew brace',
                                    verdict.witness)
    return SkewBrace(group, circle, gamma)


def _search_size(order):
    return order ** max(order - 1, 0)


def _backtrack(order, accepts):
    """All image lists with images[0] = 0, filled in index order, pruned by accepts(images, m)."""
    images = [0] * order
    found = []

    def extend(m):
        if m == order:
            found.append(list(images))
            return
        for candidate in range(order):
            images[m] = candidate
            if accepts(images, m):
                extend(m + 1)

    if accepts(images, 0):
        extend(1)
    return found


def enumerate_rb(group, enumeration_cap=None):
    """
    Every Rota-Baxter operator on the group, in lexicographic image order.

    B(1) = 1 is forced (take g = h = 1), and each pair (g, h) is checked as soon
    as g, h and the argument g B(g) h B(g)^-1 all carry images.
    """
    enumeration_cap = DEFAULT_ENUMERATION_CAP if enumeration_cap is None else enumeration_cap
    size = _search_size(group.order)
    if size > enumeration_cap:
        raise TooLargeError(size, enumeration_cap)
    table = group.table.tolist()
    inverse = group.inverse.tolist()

    def accepts(images, m):
        for g in range(m + 1):
            b = images[g]
            left = table[table[g][b]]
            b_inverse = inverse[b]
            image_row = table[b]
            for h in range(m + 1):
                x = table[left[h]][b_inverse]
                if x <= m and (g == m or h == m or x == m):
                    if images[x] != image_row[images[h]]:
                        return False
        return True

    logger.info('Enumerating Rota-Baxter operators on a group of order %d', group.order)
    operators = [RotaBaxterOperator(group, images, verified=True) for images in _backtrack(group.order, accepts)]
    logger.info('Found %d Rota-Baxter operators', len(operators))
    return operators


def endomorphisms(group, enumeration_cap=None):
    """Brute-force endomorphism list, the oracle for abelian groups."""
    enumeration_cap = DEFAULT_ENUMERATION_CAP if enumeration_cap is None else enumeration_cap
    size = _search_size(group.order)
    if size > enumeration_cap:
        raise TooLargeError(size, enumeration_cap)
    table = group.table.tolist()

    def accepts(images, m):
        for g in range(m + 1):
            for h in range(m + 1):
                x = table[g][h]
                if x <= m and (g == m or h == m or x == m):
                    if images[x] != table[images[g]][images[h]]:
                        return False
        return True

    return [GroupMap(group, group, images) for images in _backtrack(group.order, accepts)]


def same_gamma_witness(group, first, second):
    """
    When iota(B1(g)) = iota(B2(g)) for all g, returns zeta(g) = B2(g) B1(g)^-1, which
    must be a morphism from the circle group of B1 into the centre.
    """
    first = _require_rb(group, first)
    second = _require_rb(group, second)
    zeta = group.table[second.images, group.inverse[first.images]]
    central = center(group).mask
    outside = np.nonzero(~central[zeta])[0]
    if outside.size:
        return SameGammaResult(GammaRelation.NOT_SAME, witness=int(outside[0]))
    circle = circle_group(gamma_of_rb(group, first))
    mismatch = zeta[circle.table] != group.table[zeta[:, None], zeta[None, :]]
    if mismatch.any():
        g, h = np.argwhere(mismatch)[0]
        raise TheoremViolationError('zeta is not a morphism from the circle group into the centre',
                                    (int(g), int(h)))
    return SameGammaResult(GammaRelation.SAME, zeta=GroupMap(group, group, zeta))


def rb_from_centerless(group, gamma):
    """On a centreless group iota is injective, so B(g) is the unique x with iota(x) = gamma(g)."""
    center_order = center(group).order
    if center_order != 1:
        raise CenterNotTrivialError(center_order)
    require_verified(gamma)
    representatives = inner_representatives(gamma)
    outside = np.nonzero(representatives < 0)[0]
    if outside.size:
        raise GammaNotInnerError(int(outside[0]))
    operator = RotaBaxterOperator(group, representatives)
    verdict = verify_rb(group, operator)
    if not verdict:
        raise TheoremViolationError('iota^-1 composed with gamma is not a Rota-Baxter operator', verdict.witness)
    return operator

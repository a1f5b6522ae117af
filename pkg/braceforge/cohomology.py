"""
2-cocycles with values in a trivial abelian module, and the coboundary solver, which needs
the module elementary abelian.

Coboundaries follow the sign convention
    kappa(g, h) = sigma(g)^-1 * sigma(h)^-1 * sigma(g o h),
which in F_p coordinates reads -sigma(g) - sigma(h) + sigma(g o h) = kappa(g, h).
"""
import collections
import logging

import numpy as np

from .coefficients import CoefficientGroup
from .config import ALL_PAIRS_CELL_CAP
from .exceptions import (
    CenterNotElementaryAbelianError, NotACocycleError, NotAHomomorphismError, NotElementaryAbelianError,
    ReconstructionFailedError, RepMismatchError, ShapeMismatchError, SigmaDoesNotCertifyError, TheoremViolationError,
    TooLargeError, ValueNotCentralError
)
from .finite_group import GroupMap, Subgroup, center, conjugation_table, frozen_array
from .gamma import circle_group, require_verified
from .linear_fp import solve_linear_fp
from .rota_baxter import RotaBaxterOperator, verify_rb
from .verdict import Verdict
from .verdict_status import CertificateStatus

logger = logging.getLogger(__name__)

SOLVE_METHODS = ('spanning_tree', 'generator_rows', 'all_pairs')
COMPLEMENT_METHOD = 'complement_search'


class TwoCocycle:
    def __init__(self, base, coeff, values):
        values = frozen_array(values)
        if values.shape != (base.order, base.order):
            raise ShapeMismatchError('Cocycle table must have shape ({0}, {0}), got {1}'.format(
                base.order, values.shape))
        if values.size and (values.min() < 0 or values.max() >= coeff.order):
            raise ShapeMismatchError('Cocycle values must lie in 0..{}'.format(coeff.order - 1))
        self.base = base
        self.coeff = coeff
        self.values = values

    @property
    def ambient_values(self):
        return self.coeff.embedding.images[self.values]

    @property
    def is_trivial(self):
        return not self.values.any()

    def __eq__(self, other):
        if not isinstance(other, TwoCocycle):
            return NotImplemented
        return self.base == other.base and self.coeff == other.coeff and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.base, self.values.tobytes()))

    def __str__(self):
        return "2-cocycle:\n--Base: {}\n--Coefficients: order {}\n--Trivial: {}\n".format(
            self.base.label,
            self.coeff.order,
            self.is_trivial)

    __repr__ = __str__


class Coboundary:
    """sigma: base -> Q, stored as coefficient indices."""

    def __init__(self, base, coeff, images):
        self.base = base
        self.coeff = coeff
        self.sigma = GroupMap(base, coeff.group, images)

    @property
    def images(self):
        return self.sigma.images

    @property
    def ambient_images(self):
        return self.coeff.embedding.images[self.sigma.images]

    def __str__(self):
        return "Coboundary:\n--Base: {}\n--Coefficients: order {}\n".format(self.base.label, self.coeff.order)

    __repr__ = __str__


class CoboundaryCertificate:
    """
    Outcome of solve_coboundary.

    SOLVABLE carries the coboundary; UNSOLVABLE carries the coordinate and the
    weighted equations (g, h, y) whose combination reads 0 = 1 in that coordinate.
    Coefficients without an F_p basis are decided by a complement search instead:
    SPLIT carries the coboundary read off the complement, NONSPLIT the number of
    lifts tried and, when one exists, a kernel element inside [E, E].
    """

    def __init__(self, status, method, unknowns, coboundary=None, witness=None, obstruction_witness=None):
        self.status = status
        self.method = method
        self.unknowns = unknowns
        self.coboundary = coboundary
        self.witness = witness
        self.obstruction_witness = obstruction_witness

    @property
    def solvable(self):
        return self.status in (CertificateStatus.SOLVABLE, CertificateStatus.SPLIT)

    def to_params(self):
        return {
            'status': self.status,
            'method': self.method,
            'unknowns': self.unknowns,
            'sigma': None if self.coboundary is None else self.coboundary.images.tolist(),
            'witness': self.witness,
            'obstruction_witness': self.obstruction_witness,
        }

    def __str__(self):
        return "Coboundary certificate:\n--Status: {}\n--Method: {}\n--Unknowns: {}\n".format(
            self.status,
            self.method,
            self.unknowns)

    __repr__ = __str__


class RotaBaxterDecision:
    def __init__(self, kappa, certificate, operator=None):
        self.kappa = kappa
        self.certificate = certificate
        self.operator = operator

    @property
    def status(self):
        return self.certificate.status


def check_cocycle(cocycle):
    """Exhaustive check of theta(b, c) theta(a, b o c) = theta(a o b, c) theta(a, b)."""
    base, values = cocycle.base.table, cocycle.values
    coeff = cocycle.coeff.group.table
    for a in range(cocycle.base.order):
        left = coeff[values, values[a][base]]
        right = coeff[values[base[a]], values[a][:, None]]
        mismatch = left != right
        if mismatch.any():
            b, c = np.argwhere(mismatch)[0]
            return Verdict.fails(a, b, c, message='cocycle identity fails')
    return Verdict.holds()


def require_cocycle(cocycle):
    verdict = check_cocycle(cocycle)
    if not verdict:
        raise NotACocycleError(verdict.witness)
    return cocycle


def center_coefficients(group, general=False):
    """Z(G) with its F_p basis; with general=True a centre that is not elementary abelian comes back without one."""
    subgroup, label = center(group), 'Z({})'.format(group.label)
    try:
        return CoefficientGroup.from_subgroup(subgroup, label=label)
    except NotElementaryAbelianError as error:
        if not general:
            raise CenterNotElementaryAbelianError(str(error))
    return CoefficientGroup.general(*subgroup.as_group(label))


def extract_kappa(group, gamma, representative, coeff=None):
    """kappa(g, h) = C(g) C(h) C(g o h)^-1, for C with iota(C(g)) = gamma(g)."""
    require_verified(gamma)
    rows = conjugation_table(group)[representative.images]
    mismatch = np.nonzero(np.any(rows != gamma.action, axis=1))[0]
    if mismatch.size:
        raise RepMismatchError(int(mismatch[0]))
    coeff = center_coefficients(group) if coeff is None else coeff
    circle = circle_group(gamma)
    table, lift = group.table, representative.images
    ambient = table[table[lift[:, None], lift[None, :]], group.inverse[lift[circle.table]]]
    values = coeff.position()[ambient]
    outside = values < 0
    if outside.any():
        g, h = np.argwhere(outside)[0]
        raise ValueNotCentralError(int(g), int(h))
    logger.info('Extracted cocycle over %s with coefficients of order %d', circle.label, coeff.order)
    return require_cocycle(TwoCocycle(circle, coeff, values))


def coboundary_of(coboundary):
    """delta sigma(g, h) = sigma(g)^-1 sigma(h)^-1 sigma(g o h)."""
    coeff, sigma = coboundary.coeff, coboundary.images
    table, inverse = coeff.group.table, coeff.group.inverse
    values = table[table[inverse[sigma][:, None], inverse[sigma][None, :]], sigma[coboundary.base.table]]
    return TwoCocycle(coboundary.base, coeff, values)


def cocycle_quotient(first, second):
    """Entrywise first * second^-1."""
    if first.base != second.base or first.coeff != second.coeff:
        raise ShapeMismatchError('Cocycles live over different groups')
    coeff = first.coeff.group
    return TwoCocycle(first.base, first.coeff, coeff.table[first.values, coeff.inverse[second.values]])


def _spanning_tree_system(cocycle, generators):
    """
    sigma(1) is pinned to -kappa(1, 1); the unknowns are sigma(s) for s in the generators.
    A breadth-first tree over right multiplication by generators writes every
    sigma(x) as an affine form in them; every edge (x, s) is one equation.
    """
    base = cocycle.base
    coords = cocycle.coeff.coords.astype(np.int64)[cocycle.values]
    count = len(generators)
    coefficients = np.zeros((base.order, count), dtype=np.int64)
    constants = np.zeros((base.order, cocycle.coeff.rank), dtype=np.int64)
    constants[0] = -coords[0, 0]
    seen = np.zeros(base.order, dtype=bool)
    seen[0] = True
    queue = collections.deque([0])
    while queue:
        x = queue.popleft()
        for t, s in enumerate(generators):
            y = int(base.table[x, s])
            if not seen[y]:
                seen[y] = True
                coefficients[y] = coefficients[x]
                coefficients[y, t] += 1
                constants[y] = constants[x] + coords[x, s]
                queue.append(y)
    pairs, matrix, rhs = [], [], []
    for x in range(base.order):
        for t, s in enumerate(generators):
            y = int(base.table[x, s])
            row = coefficients[x].copy()
            row[t] += 1
            pairs.append((x, s))
            matrix.append(row - coefficients[y])
            rhs.append(constants[y] - constants[x] - coords[x, s])
    matrix = np.array(matrix, dtype=np.int64).reshape(len(pairs), count)
    rhs = np.array(rhs, dtype=np.int64).reshape(len(pairs), cocycle.coeff.rank)

    def expand(x):
        return (coefficients @ x[:, None]).ravel() if count else np.zeros(base.order, dtype=np.int64)

    def sigma_column(solution, t):
        return expand(solution) + constants[:, t]

    return pairs, matrix, rhs, sigma_column


def _pair_system(cocycle, pairs):
    """Unknowns sigma(g) for every g; one equation -e_g - e_h + e_(g o h) per pair."""
    base = cocycle.base
    coords = cocycle.coeff.coords.astype(np.int64)[cocycle.values]
    matrix = np.zeros((len(pairs), base.order), dtype=np.int64)
    rows = np.arange(len(pairs))
    g = np.array([pair[0] for pair in pairs], dtype=np.int64)
    h = np.array([pair[1] for pair in pairs], dtype=np.int64)
    np.add.at(matrix, (rows, g), -1)
    np.add.at(matrix, (rows, h), -1)
    np.add.at(matrix, (rows, base.table[g, h]), 1)
    rhs = coords[g, h]

    def sigma_column(solution, t):
        return solution

    return pairs, matrix, rhs, sigma_column


def _assemble(cocycle, method):
    base = cocycle.base
    if method == 'spanning_tree':
        return _spanning_tree_system(cocycle, list(base.generators))
    if method == 'generator_rows':
        generators = [0] + list(base.generators)
        return _pair_system(cocycle, [(g, h) for g in range(base.order) for h in generators])
    if method == 'all_pairs':
        cells = base.order ** 3
        if cells > ALL_PAIRS_CELL_CAP:
            raise TooLargeError(cells, ALL_PAIRS_CELL_CAP)
        return _pair_system(cocycle, [(g, h) for g in range(base.order) for h in range(base.order)])
    raise ValueError('Unknown coboundary method', method)


def solve_coboundary(cocycle, method='spanning_tree'):
    """
    Decides whether the cocycle is a coboundary.

    Every method returns a sigma certified against all pairs, or an inconsistent
    combination of the equations it assembled; each coordinate of Q is solved
    separately since the coefficient matrix is the same for all of them.
    """
    coeff = cocycle.coeff
    coeff.require_elementary()
    pairs, matrix, rhs, sigma_column = _assemble(cocycle, method)
    unknowns = int(matrix.shape[1]) * coeff.rank
    logger.info('Solving coboundary system over %s: %d equations, %d unknowns per coordinate (%s)',
                cocycle.base.label, len(pairs), matrix.shape[1], method)
    columns = []
    for t in range(coeff.rank):
        solution = solve_linear_fp(matrix, rhs[:, t], coeff.prime)
        if not solution:
            witness = {
                'coordinate': t,
                'equations': [[int(pairs[r][0]), int(pairs[r][1]), y] for r, y in sorted(solution.witness.items())],
            }
            logger.info('Coboundary system is inconsistent in coordinate %d', t)
            return CoboundaryCertificate(CertificateStatus.UNSOLVABLE, method, unknowns, witness=witness)
        columns.append(sigma_column(solution.x, t))
    vectors = np.column_stack(columns) if columns else np.zeros((cocycle.base.order, 0), dtype=np.int64)
    coboundary = Coboundary(cocycle.base, coeff, coeff.element_of(vectors))
    mismatch = coboundary_of(coboundary).values != cocycle.values
    if mismatch.any():
        g, h = np.argwhere(mismatch)[0]
        raise NotACocycleError((int(g), int(h)))
    return CoboundaryCertificate(CertificateStatus.SOLVABLE, method, unknowns, coboundary=coboundary)


def transport_cocycle(cocycle, subgroup, coeff_morphism, target):
    """kappa'(s, t) = f(kappa(s, t)) on a subgroup of the base, for a morphism f: Q -> Q'."""
    subgroup = Subgroup.from_elements(cocycle.base, subgroup.members if isinstance(subgroup, Subgroup) else subgroup)
    if coeff_morphism.source != cocycle.coeff.group or coeff_morphism.target != target.group:
        raise ShapeMismatchError('Coefficient morphism must go from {} to {}'.format(
            cocycle.coeff.group.label, target.group.label))
    verdict = coeff_morphism.is_homomorphism()
    if not verdict:
        raise NotAHomomorphismError(*verdict.witness)
    base, _ = subgroup.as_group('{}-sub{}'.format(cocycle.base.label, subgroup.order))
    members = subgroup.members
    values = coeff_morphism.images[cocycle.values[np.ix_(members, members)]]
    return require_cocycle(TwoCocycle(base, target, values))


def reconstruct_rb(group, gamma, representative, coboundary, kappa=None):
    """B(g) = sigma(g) C(g), a Rota-Baxter operator whose gamma function is gamma."""
    kappa = extract_kappa(group, gamma, representative, coboundary.coeff) if kappa is None else kappa
    mismatch = coboundary_of(coboundary).values != kappa.values
    if mismatch.any():
        g, h = np.argwhere(mismatch)[0]
        raise SigmaDoesNotCertifyError(int(g), int(h))
    images = group.table[coboundary.ambient_images, representative.images]
    operator = RotaBaxterOperator(group, images)
    verdict = verify_rb(group, operator)
    if not verdict:
        raise ReconstructionFailedError(verdict.witness)
    if not np.array_equal(conjugation_table(group)[images], gamma.action):
        raise TheoremViolationError('Reconstructed operator does not reproduce gamma')
    logger.info('Reconstructed a Rota-Baxter operator on %s', group.label)
    return operator


def _decide_by_complement(group, gamma, representative, kappa, complement_cap):
    from .extensions import (
        build_central_extension, coboundary_from_section, derived_intersection_obstruction, find_complement
    )
    logger.info('Coefficients %s have no F_p basis, searching the extension for a complement',
                kappa.coeff.group.label)
    extension = build_central_extension(kappa)
    complement = find_complement(extension, complement_cap=complement_cap)
    witness = {'candidates': complement.candidates}
    if not complement.split:
        obstruction = derived_intersection_obstruction(extension)
        certificate = CoboundaryCertificate(CertificateStatus.NONSPLIT, COMPLEMENT_METHOD, None, witness=witness,
                                            obstruction_witness=obstruction.witness)
        return RotaBaxterDecision(kappa, certificate)
    coboundary = coboundary_from_section(extension, complement.section)
    certificate = CoboundaryCertificate(CertificateStatus.SPLIT, COMPLEMENT_METHOD, None, coboundary=coboundary,
                                        witness=witness)
    operator = reconstruct_rb(group, gamma, representative, coboundary, kappa)
    return RotaBaxterDecision(kappa, certificate, operator)


def decide_rota_baxter(group, gamma, representative, coeff=None, method='spanning_tree', complement_cap=None):
    """
    Whether gamma comes from a Rota-Baxter operator: the operator, or the certificate that none exists.
    A centre that is not elementary abelian is decided through the central extension.
    """
    coeff = center_coefficients(group, general=True) if coeff is None else coeff
    kappa = extract_kappa(group, gamma, representative, coeff)
    if not coeff.elementary:
        return _decide_by_complement(group, gamma, representative, kappa, complement_cap)
    certificate = solve_coboundary(kappa, method)
    if not certificate.solvable:
        return RotaBaxterDecision(kappa, certificate)
    operator = reconstruct_rb(group, gamma, representative, certificate.coboundary, kappa)
    return RotaBaxterDecision(kappa, certificate, operator)


def random_central_recoding(group, representative, coeff, rng):
    """C'(g) = z(g) C(g) for a uniformly random z: G -> Q."""
    z = rng.integers(0, coeff.order, size=group.order)
    return GroupMap(group, group, group.table[coeff.embedding.images[z], representative.images])

"""
Worked examples: the Heisenberg family gamma(g) = iota(g^alpha), the order p^5
group S x H whose gamma function has no Rota-Baxter operator, and two skew braces
whose gamma function takes non-inner values.
"""
import logging

import numpy as np
from sympy import isprime, n_order

from .cohomology import (
    Coboundary, TwoCocycle, center_coefficients, extract_kappa, require_cocycle, transport_cocycle
)
from .exceptions import AlphaIsMinusHalfError, BadParametersError, NotOddPrimeError, TheoremViolationError
from .finite_group import GroupMap, Subgroup, commutator_table, power_map
from .gamma import (
    SkewBrace, circle_group, gamma_from_inner_rep, gamma_of_brace, non_inner_elements, verify_gamma,
    verify_skew_brace
)
from .group_families import (
    direct_product, heisenberg_element, make_abelian, make_dihedral, make_heisenberg, semidirect_product
)
from .rota_baxter import RotaBaxterOperator, verify_rb

logger = logging.getLogger(__name__)

NONINNER_KINDS = ('c4_d4', 'v_h_q')


class AlphaFamilyInstance:
    def __init__(self, p, alpha, group, gamma, representative, kappa):
        self.p = p
        self.alpha = alpha
        self.group = group
        self.gamma = gamma
        self.representative = representative
        self.kappa = kappa
        self.splits = (1 + 2 * alpha) % p != 0

    @property
    def circle(self):
        return circle_group(self.gamma)

    def __str__(self):
        return "Alpha family instance:\n--p: {}\n--alpha: {}\n--Splits: {}\n".format(self.p, self.alpha, self.splits)

    __repr__ = __str__


class P5Instance:
    def __init__(self, p, abelian, heisenberg, group, gamma, representative, kappa):
        self.p = p
        self.abelian = abelian
        self.heisenberg = heisenberg
        self.group = group
        self.gamma = gamma
        self.representative = representative
        self.kappa = kappa

    @property
    def circle(self):
        return circle_group(self.gamma)

    def abelian_members(self):
        """S x 1 inside G."""
        return np.arange(self.abelian.order) * self.heisenberg.order

    def __str__(self):
        return "p^5 instance:\n--p: {}\n--Order: {}\n".format(self.p, self.group.order)

    __repr__ = __str__


class NonInnerExample:
    def __init__(self, kind, params, brace, non_inner):
        self.kind = kind
        self.params = params
        self.brace = brace
        self.non_inner = non_inner

    @property
    def gamma(self):
        return self.brace.gamma

    def __str__(self):
        return "Non-inner example:\n--Kind: {}\n--Order: {}\n--Non-inner values: {}\n".format(
            self.kind,
            self.brace.order,
            len(self.non_inner))

    __repr__ = __str__


def _check_odd_prime(p):
    if p % 2 == 0 or not isprime(p):
        raise NotOddPrimeError(p)


def half_alpha_term(p, alpha):
    """(alpha^2 + alpha) / 2 mod p; any integer representative of alpha gives the same residue."""
    return (alpha * alpha + alpha) // 2 % p


def _switch_denominator(p, alpha):
    unit = (1 + 2 * alpha) % p
    if unit == 0:
        raise AlphaIsMinusHalfError(p, alpha)
    return pow(unit, -1, p)


def _require_gamma(gamma, message):
    verdict = verify_gamma(gamma)
    if not verdict:
        raise TheoremViolationError(message, verdict.witness)
    return gamma


def alpha_kappa_closed_form(instance):
    """[g, h]^-((alpha^2 + alpha)/2) over the Heisenberg group, as ambient elements."""
    group = instance.group
    exponent = -half_alpha_term(instance.p, instance.alpha) % instance.p
    return power_map(group, exponent).images[commutator_table(group)]


def _require_closed_form(kappa, expected, message):
    mismatch = kappa.ambient_values != expected
    if mismatch.any():
        g, h = np.argwhere(mismatch)[0]
        raise TheoremViolationError(message, (int(g), int(h)))


def build_alpha_family(p, alpha, order_cap=None, check_closed_form=True):
    """gamma(g) = iota(g^alpha) on the Heisenberg group of order p^3, with C(g) = g^alpha."""
    _check_odd_prime(p)
    if not 0 <= alpha < p:
        raise BadParametersError('alpha must lie in 0..{}, got {}'.format(p - 1, alpha))
    group = make_heisenberg(p, order_cap=order_cap)
    representative = power_map(group, alpha)
    gamma = _require_gamma(gamma_from_inner_rep(group, representative), 'iota(g^alpha) is not a gamma function')
    kappa = extract_kappa(group, gamma, representative)
    instance = AlphaFamilyInstance(p, alpha, group, gamma, representative, kappa)
    if check_closed_form:
        _require_closed_form(kappa, alpha_kappa_closed_form(instance),
                             'kappa differs from [g,h]^-(alpha^2+alpha)/2')
    logger.info('Built alpha family instance p=%d alpha=%d', p, alpha)
    return instance


def normal_form_switch(p, alpha, i, j, r):
    """u^i v^j k^r = u^i o v^j o k~^q with k~ = k^(1+2 alpha); returns (i, j, q)."""
    q = (r - i * j * alpha) * _switch_denominator(p, alpha) % p
    return i % p, j % p, q


def rb_formula_alpha(p, alpha, group=None):
    """B(u^i v^j k^r) = u^(i alpha) v^(j alpha) k^(alpha^2 (r - ij alpha) / (1 + 2 alpha))."""
    _check_odd_prime(p)
    denominator = _switch_denominator(p, alpha)
    group = make_heisenberg(p) if group is None else group
    i, j, r = np.unravel_index(np.arange(p ** 3), (p, p, p))
    central = alpha * alpha * (r - i * j * alpha) % p * denominator % p
    images = heisenberg_element(p, i * alpha, j * alpha, central)
    operator = RotaBaxterOperator(group, images)
    verdict = verify_rb(group, operator)
    if not verdict:
        raise TheoremViolationError('Closed-form operator fails the Rota-Baxter identity', verdict.witness)
    return operator


def closed_form_sigma_alpha(instance):
    """sigma(u^i o v^j o k~^q) = k^(-((alpha^2 + alpha)/2)(2q + ij)); a coboundary for kappa when alpha != -1/2."""
    p, alpha = instance.p, instance.alpha
    i, j, r = np.unravel_index(np.arange(p ** 3), (p, p, p))
    q = (r - i * j * alpha) * _switch_denominator(p, alpha) % p
    exponent = -half_alpha_term(p, alpha) * (2 * q + i * j) % p
    coeff = instance.kappa.coeff
    sigma = coeff.position()[heisenberg_element(p, 0, 0, exponent)]
    return Coboundary(instance.kappa.base, coeff, sigma)


def closed_form_splitting_section(instance, extension):
    """s'(g) = sigma(g) s(g) for the closed-form sigma; a morphism section of E."""
    sigma = closed_form_sigma_alpha(instance)
    kernel = extension.coeff.group
    q = kernel.table[sigma.images, extension.shift]
    return GroupMap(extension.base, extension.total, q * extension.base.order + np.arange(extension.base.order))


def p5_kappa_closed_form(instance):
    """k^(-jl) for g = x^i y^j c and h = x^l y^m c', as ambient elements."""
    s = np.arange(instance.group.order) // instance.heisenberg.order
    i, j = np.divmod(s, instance.p)
    return heisenberg_element(instance.p, 0, 0, -j[:, None] * i[None, :])


def build_p5_example(p, order_cap=None, check_closed_form=True):
    """
    G = S x H with S = C_p^2 and H the Heisenberg group, C(x^i y^j c) = u^i v^j.
    Elements are (s, h) at s*p^3 + h, and x^i y^j is s = i*p + j.
    """
    _check_odd_prime(p)
    abelian = make_abelian([p, p], order_cap=order_cap)
    heisenberg = make_heisenberg(p, order_cap=order_cap)
    group = direct_product(abelian, heisenberg, order_cap=order_cap)
    s = np.arange(group.order) // heisenberg.order
    i, j = np.divmod(s, p)
    representative = GroupMap(group, group, heisenberg_element(p, i, j, 0))
    gamma = _require_gamma(gamma_from_inner_rep(group, representative), 'iota(C(g)) is not a gamma function')
    kappa = extract_kappa(group, gamma, representative)
    instance = P5Instance(p, abelian, heisenberg, group, gamma, representative, kappa)
    if check_closed_form:
        _require_closed_form(kappa, p5_kappa_closed_form(instance), 'kappa differs from k^-jl')
    members = instance.abelian_members()
    circle = circle_group(gamma)
    if not np.array_equal(circle.table[np.ix_(members, members)], group.table[np.ix_(members, members)]):
        raise TheoremViolationError('The two operations differ on S')
    logger.info('Built p^5 instance p=%d of order %d', p, group.order)
    return instance


def p5_transported_cocycle(instance):
    """kappa restricted to S <= (G, o), with Z(G) = S x K projected onto K."""
    coeff = instance.kappa.coeff
    target = center_coefficients(instance.heisenberg)
    images = target.position()[coeff.embedding.images % instance.heisenberg.order]
    projection = GroupMap(coeff.group, target.group, images)
    subgroup = Subgroup(instance.circle, instance.abelian_members())
    return transport_cocycle(instance.kappa, subgroup, projection, target)


def heisenberg_quotient_cocycle(p):
    """Cocycle of 1 -> K -> H -> S -> 1 for the section x^i y^j -> u^i v^j."""
    _check_odd_prime(p)
    abelian = make_abelian([p, p])
    heisenberg = make_heisenberg(p)
    target = center_coefficients(heisenberg)
    i, j = np.divmod(np.arange(abelian.order), p)
    section = heisenberg_element(p, i, j, 0)
    table, inverse = heisenberg.table, heisenberg.inverse
    products = table[table[section[:, None], section[None, :]], inverse[section[abelian.table]]]
    return require_cocycle(TwoCocycle(abelian, target, target.position()[products]))


def _d4_shear(acting, acted):
    """a acts on D8 by r^x s^y -> r^(x + a y) s^y."""
    a = np.arange(acting.order)[:, None]
    x, y = np.divmod(np.arange(acted.order)[None, :], 2)
    return ((x + a * y) % 4) * 2 + y


def _scalar_of_order(p, q):
    for c in range(2, p):
        if n_order(c, p) == q:
            return c
    raise BadParametersError('No element of multiplicative order {} modulo {}'.format(q, p))


def _vhq_groups(p, q, order_cap):
    if p == 2 or not isprime(p) or not isprime(q) or (p - 1) % q:
        raise BadParametersError('v_h_q needs odd primes p and q with q dividing p-1, got p={} q={}'.format(p, q))
    c = _scalar_of_order(p, q)
    plane = make_abelian([p, p], order_cap=order_cap)
    cyclic = make_abelian([q], order_cap=order_cap)
    x, y = np.divmod(np.arange(plane.order), p)
    scale = np.array([pow(c, h, p) for h in range(q)])[:, None]
    # mu^h = c^h I on V
    mu = (scale * x % p) * p + scale * y % p
    acted = semidirect_product(cyclic, plane, mu, order_cap=order_cap)
    h, v = np.divmod(np.arange(acted.order), plane.order)
    vx, vy = np.divmod(v, p)
    # nu^a = diag(c^a, 1) on V, identity on H
    psi = h[None, :] * plane.order + (scale * vx[None, :] % p) * p + vy[None, :]
    return make_abelian([q], order_cap=order_cap), acted, psi, c


def build_noninner_example(kind, p=7, q=3, trivial_action=False, order_cap=None):
    """
    (A x B, .) and (A |x B, o) on the same index set a*|B| + b, where A acts on B
    through automorphisms psi(a) that are not inner.
    """
    if kind == 'c4_d4':
        acting = make_abelian([4], order_cap=order_cap)
        acted = make_dihedral(4, order_cap=order_cap)
        action = _d4_shear(acting, acted)
        params = {}
    elif kind == 'v_h_q':
        acting, acted, action, c = _vhq_groups(p, q, order_cap)
        params = {'p': p, 'q': q, 'c': c}
    else:
        raise BadParametersError('Unknown non-inner example kind {!r}'.format(kind))
    if trivial_action:
        action = np.tile(np.arange(acted.order), (acting.order, 1))
        params['trivial_action'] = True
    dot = direct_product(acting, acted, order_cap=order_cap)
    circle = semidirect_product(acting, acted, action, order_cap=order_cap)
    verdict = verify_skew_brace(dot, circle)
    if not verdict:
        raise TheoremViolationError('Direct and semidirect products do not form a skew brace', verdict.witness)
    gamma = gamma_of_brace(dot, circle)
    non_inner = non_inner_elements(gamma)
    logger.info('Built %s example of order %d with %d non-inner gamma values', kind, dot.order, len(non_inner))
    return NonInnerExample(kind, params, SkewBrace(dot, circle, gamma), non_inner)

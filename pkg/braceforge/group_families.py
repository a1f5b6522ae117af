import itertools
import logging

import numpy as np
from sympy import isprime

from .exceptions import (
    ActionNotAutomorphismError, ActionNotHomomorphismError, BadParametersError, NotOddPrimeError, ShapeMismatchError
)
from .finite_group import FiniteGroup, check_order, validate_table

logger = logging.getLogger(__name__)


def _power_name(symbol, exponent):
    if exponent == 0:
        return ''
    if exponent == 1:
        return symbol
    return '{}^{}'.format(symbol, exponent)


def _word(*parts):
    word = '*'.join(part for part in parts if part)
    return word or '1'


def _finish(table, names, label, verify):
    if verify:
        validate_table(table)
    return FiniteGroup(table, names=names, label=label)


def make_abelian(invariant_factors, verify=False, order_cap=None):
    """
    Direct sum of cyclic groups. The element with exponents (e_1, ..., e_r) sits at
    the mixed-radix index e_1*(n_2*...*n_r) + ... + e_r.
    """
    factors = [int(n) for n in invariant_factors]
    if not factors or any(n < 1 for n in factors):
        raise BadParametersError('Invariant factors must be a non-empty list of positive integers')
    order = int(np.prod(factors))
    check_order(order, order_cap)
    exponents = np.unravel_index(np.arange(order), factors)
    sums = [(e[:, None] + e[None, :]) % n for e, n in zip(exponents, factors)]
    table = np.ravel_multi_index(sums, factors)
    symbols = ['a{}'.format(t) for t in range(len(factors))] if len(factors) > 1 else ['a']
    names = [_word(*(_power_name(s, int(e[x])) for s, e in zip(symbols, exponents))) for x in range(order)]
    return _finish(table, names, 'C' + 'xC'.join(str(n) for n in factors), verify)


def make_heisenberg(p, verify=False, order_cap=None):
    """
    Heisenberg group of order p^3 on normal forms u^i v^j k^q, stored at i*p^2 + j*p + q.
    (i1, j1, q1)(i2, j2, q2) = (i1 + i2, j1 + j2, q1 + q2 - j1*i2), so [u, v] = k.
    """
    if p % 2 == 0 or not isprime(p):
        raise NotOddPrimeError(p)
    order = p ** 3
    check_order(order, order_cap)
    i, j, q = np.unravel_index(np.arange(order), (p, p, p))
    table = np.ravel_multi_index(
        ((i[:, None] + i[None, :]) % p,
         (j[:, None] + j[None, :]) % p,
         (q[:, None] + q[None, :] - j[:, None] * i[None, :]) % p),
        (p, p, p))
    names = [_word(_power_name('u', int(i[x])), _power_name('v', int(j[x])), _power_name('k', int(q[x])))
             for x in range(order)]
    return _finish(table, names, 'H{}'.format(p), verify)


def heisenberg_element(p, i, j, q):
    return (i % p) * p * p + (j % p) * p + q % p


def heisenberg_coordinates(p, g):
    i, rest = divmod(int(g), p * p)
    j, q = divmod(rest, p)
    return i, j, q


def make_dihedral(n, verify=False, order_cap=None):
    """Dihedral group of order 2n: r^a s^b at index 2a + b, with s r s = r^-1."""
    if n < 1:
        raise BadParametersError('Dihedral group needs n >= 1, got {}'.format(n))
    order = 2 * n
    check_order(order, order_cap)
    a, b = np.divmod(np.arange(order), 2)
    sign = 1 - 2 * b
    table = ((a[:, None] + sign[:, None] * a[None, :]) % n) * 2 + (b[:, None] + b[None, :]) % 2
    names = [_word(_power_name('r', int(a[x])), _power_name('s', int(b[x]))) for x in range(order)]
    return _finish(table, names, 'D{}'.format(order), verify)


def make_symmetric(n, verify=False, order_cap=None):
    """Permutations of n letters in lexicographic order (identity first); (st)(x) = s(t(x))."""
    permutations = list(itertools.permutations(range(n)))
    order = len(permutations)
    check_order(order, order_cap)
    position = {perm: index for index, perm in enumerate(permutations)}
    table = np.array([[position[tuple(s[t[x]] for x in range(n))] for t in permutations] for s in permutations])
    names = [''.join(str(x + 1) for x in perm) for perm in permutations]
    return _finish(table, names, 'S{}'.format(n), verify)


def direct_product(first, second, verify=False, order_cap=None):
    """Pairs (g, h) at index g*|H| + h with componentwise multiplication."""
    order = first.order * second.order
    check_order(order, order_cap)
    g, h = np.divmod(np.arange(order), second.order)
    table = (first.table[g[:, None], g[None, :]].astype(np.int64) * second.order
             + second.table[h[:, None], h[None, :]])
    names = None
    if first.names is not None and second.names is not None:
        names = ['({},{})'.format(first.names[x], second.names[y]) for x, y in zip(g, h)]
    return _finish(table, names, '{}x{}'.format(first.label, second.label), verify)


def validate_action(acting, acted, action):
    """action[a] must be an automorphism of the acted group and a -> action[a] a homomorphism."""
    action = np.asarray(action, dtype=np.int64)
    if action.shape != (acting.order, acted.order):
        raise ShapeMismatchError('Action table must have shape ({}, {}), got {}'.format(
            acting.order, acted.order, action.shape))
    expected = np.arange(acted.order)
    for a in range(acting.order):
        images = action[a]
        if not np.array_equal(np.sort(images), expected):
            raise ActionNotAutomorphismError(a)
        if not np.array_equal(images[acted.table], acted.table[images[:, None], images[None, :]]):
            raise ActionNotAutomorphismError(a)
    for a in range(acting.order):
        composed = action[a][action]
        mismatch = np.nonzero(np.any(action[acting.table[a]] != composed, axis=1))[0]
        if mismatch.size:
            raise ActionNotHomomorphismError(a, int(mismatch[0]))
    return action


def semidirect_product(acting, acted, action, verify=False, order_cap=None):
    """Pairs (a, b) at index a*|B| + b with (a, b)(a', b') = (a*a', b*action[a](b'))."""
    action = validate_action(acting, acted, action)
    order = acting.order * acted.order
    check_order(order, order_cap)
    a, b = np.divmod(np.arange(order), acted.order)
    table = (acting.table[a[:, None], a[None, :]].astype(np.int64) * acted.order
             + acted.table[b[:, None], action[a[:, None], b[None, :]]])
    names = None
    if acting.names is not None and acted.names is not None:
        names = ['({},{})'.format(acting.names[x], acted.names[y]) for x, y in zip(a, b)]
    return _finish(table, names, '{}|x{}'.format(acting.label, acted.label), verify)

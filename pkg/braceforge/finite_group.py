"""
Finite groups as dense Cayley tables.

Elements are the indices 0..n-1, index 0 is always the identity and
table[a, b] is the index of a*b. Commutators use [g, h] = g*h*g^-1*h^-1.
"""
import hashlib
import logging

import numpy as np

from .config import get_order_cap
from .exceptions import (
    NoIdentityError, NotASubgroupError, NotAssociativeError, NotLatinSquareError, OrderOverflowError,
    ShapeMismatchError
)
from .verdict import Verdict

logger = logging.getLogger(__name__)

TABLE_DTYPE = np.int32
# Rows processed per block by the exhaustive table scans.
_CELLS_PER_BLOCK = 2 ** 22


def frozen_array(values):
    array = np.array(values, dtype=TABLE_DTYPE, copy=True)
    array.setflags(write=False)
    return array


def check_order(order, order_cap=None):
    order_cap = get_order_cap() if order_cap is None else order_cap
    if order > order_cap:
        raise OrderOverflowError(order, order_cap)


class FiniteGroup:
    """
    Immutable group on the indices 0..order-1.

    The constructor trusts its table; untrusted tables go through build_group.
    """

    def __init__(self, table, names=None, label=None):
        self.table = frozen_array(table)
        self.order = int(self.table.shape[0])
        self.names = None if names is None else tuple(str(name) for name in names)
        self.label = label or 'G{}'.format(self.order)
        inverse = np.argmax(self.table == 0, axis=1)
        self.inverse = frozen_array(inverse)
        self._is_abelian = None
        self._generators = None
        self._digest = None

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return int(self.inverse[a])

    def elements(self):
        return range(self.order)

    def name(self, a):
        if self.names is None:
            return str(int(a))
        return self.names[a]

    @property
    def is_abelian(self):
        if self._is_abelian is None:
            self._is_abelian = bool(np.array_equal(self.table, self.table.T))
        return self._is_abelian

    @property
    def generators(self):
        if self._generators is None:
            self._generators = tuple(generating_set(self))
        return self._generators

    def digest(self):
        if self._digest is None:
            self._digest = hashlib.sha256(self.table.tobytes()).hexdigest()
        return self._digest

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or (self.order == other.order and self.digest() == other.digest())

    def __hash__(self):
        return hash(self.digest())

    def __str__(self):
        return "Finite group:\n--Label: {}\n--Order: {}\n--Abelian: {}\n".format(
            self.label,
            self.order,
            self.is_abelian)

    __repr__ = __str__


class GroupMap:
    """A total function between the element sets of two groups. No homomorphism property is assumed."""

    def __init__(self, source, target, images):
        images = frozen_array(images)
        if images.shape != (source.order,):
            raise ShapeMismatchError('Map needs {} images, got shape {}'.format(source.order, images.shape))
        if images.size and (images.min() < 0 or images.max() >= target.order):
            raise ShapeMismatchError('Map images must lie in 0..{}'.format(target.order - 1))
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, g):
        return int(self.images[g])

    def compose(self, inner):
        """self after inner."""
        return GroupMap(inner.source, self.target, self.images[inner.images])

    def is_homomorphism(self):
        return is_homomorphism(self)

    def __eq__(self, other):
        if not isinstance(other, GroupMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and np.array_equal(self.images, other.images))

    def __hash__(self):
        return hash((self.source, self.target, self.images.tobytes()))

    def __str__(self):
        return "Group map:\n--Source: {}\n--Target: {}\n".format(self.source.label, self.target.label)

    __repr__ = __str__


class Subgroup:
    def __init__(self, parent, members):
        self.parent = parent
        self.members = frozen_array(np.unique(np.asarray(members, dtype=np.int64)))
        self.order = int(self.members.size)
        self._mask = None

    @classmethod
    def from_elements(cls, parent, elements):
        """Checked constructor: the elements must already form a subgroup."""
        subgroup = cls(parent, elements)
        if subgroup.order == 0 or subgroup.members[0] != 0:
            raise NotASubgroupError(0, 0)
        products = parent.table[np.ix_(subgroup.members, subgroup.members)]
        outside = ~subgroup.mask[products]
        if outside.any():
            a, b = np.argwhere(outside)[0]
            raise NotASubgroupError(int(subgroup.members[a]), int(subgroup.members[b]))
        return subgroup

    @property
    def mask(self):
        if self._mask is None:
            mask = np.zeros(self.parent.order, dtype=bool)
            mask[self.members] = True
            mask.setflags(write=False)
            self._mask = mask
        return self._mask

    @property
    def is_trivial(self):
        return self.order == 1

    def __contains__(self, g):
        return bool(self.mask[g])

    def __iter__(self):
        return iter(int(g) for g in self.members)

    def __len__(self):
        return self.order

    def intersection(self, other):
        return Subgroup(self.parent, self.members[other.mask[self.members]])

    def as_group(self, label=None):
        """Returns the subgroup as a stand-alone group, plus the embedding into the parent."""
        position = np.full(self.parent.order, -1, dtype=np.int64)
        position[self.members] = np.arange(self.order)
        table = position[self.parent.table[np.ix_(self.members, self.members)]]
        names = None
        if self.parent.names is not None:
            names = [self.parent.names[g] for g in self.members]
        group = FiniteGroup(table, names=names, label=label or '{}-sub{}'.format(self.parent.label, self.order))
        return group, GroupMap(group, self.parent, self.members)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash((self.parent, self.members.tobytes()))

    def __str__(self):
        return "Subgroup:\n--Parent: {}\n--Order: {}\n".format(self.parent.label, self.order)

    __repr__ = __str__


def _row_blocks(order):
    step = max(1, _CELLS_PER_BLOCK // max(order, 1))
    for start in range(0, order, step):
        yield start, min(order, start + step)


def _check_latin_square(table):
    order = table.shape[0]
    expected = np.arange(order)
    for axis, view in (('row', table), ('column', table.T)):
        for start, stop in _row_blocks(order):
            block = np.sort(view[start:stop], axis=1)
            bad = np.nonzero(np.any(block != expected, axis=1))[0]
            if bad.size:
                raise NotLatinSquareError(axis, start + int(bad[0]))


def _find_identity(table):
    expected = np.arange(table.shape[0])
    for e in np.nonzero(np.all(table == expected, axis=1))[0]:
        if np.array_equal(table[:, e], expected):
            return int(e)
    raise NoIdentityError()


def find_associativity_failure(table):
    """First triple (a, b, c) in index order with (ab)c != a(bc), or None."""
    for a in range(table.shape[0]):
        left = table[table[a]]
        right = table[a][table]
        mismatch = left != right
        if mismatch.any():
            b, c = np.argwhere(mismatch)[0]
            return a, int(b), int(c)
    return None


def validate_table(table, verify_associativity=True):
    _check_latin_square(table)
    identity = _find_identity(table)
    if verify_associativity:
        failure = find_associativity_failure(table)
        if failure is not None:
            raise NotAssociativeError(*failure)
    return identity


def build_group(table, names=None, verify_associativity=True, label=None, order_cap=None):
    array = np.asarray(table, dtype=np.int64)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
        raise ShapeMismatchError('Cayley table must be a non-empty square array, got shape {}'.format(array.shape))
    order = array.shape[0]
    check_order(order, order_cap)
    out_of_range = np.nonzero(np.any((array < 0) | (array >= order), axis=1))[0]
    if out_of_range.size:
        raise NotLatinSquareError('row', int(out_of_range[0]))
    if names is not None and len(names) != order:
        raise ShapeMismatchError('Expected {} names, got {}'.format(order, len(names)))
    identity = validate_table(array, verify_associativity)
    if identity != 0:
        logger.info('Relocating identity %d to index 0', identity)
        rename = np.arange(order)
        rename[0], rename[identity] = identity, 0
        array = rename[array[np.ix_(rename, rename)]]
        if names is not None:
            names = [names[rename[x]] for x in range(order)]
    return FiniteGroup(array, names=names, label=label)


def is_homomorphism(group_map):
    source, target, images = group_map.source, group_map.target, group_map.images
    for a in range(source.order):
        left = images[source.table[a]]
        right = target.table[images[a], images]
        mismatch = np.nonzero(left != right)[0]
        if mismatch.size:
            return Verdict.fails(a, mismatch[0], message='map is not multiplicative')
    return Verdict.holds()


def center(group):
    table = group.table
    members = np.nonzero(np.all(table == table.T, axis=1))[0]
    return Subgroup(group, members)


def commutator(group, g, h):
    table, inverse = group.table, group.inverse
    return int(table[table[table[g, h], inverse[g]], inverse[h]])


def commutator_table(group):
    table, inverse = group.table, group.inverse
    return table[table[table, inverse[:, None]], inverse[None, :]]


def conjugation_table(group):
    """Row g is the inner automorphism x -> g*x*g^-1."""
    return group.table[group.table, group.inverse[:, None]]


def subgroup_generated(group, generators):
    generators = np.unique(np.asarray(list(generators), dtype=np.int64))
    mask = np.zeros(group.order, dtype=bool)
    mask[0] = True
    frontier = np.array([0], dtype=np.int64)
    if generators.size:
        mask[generators] = True
        frontier = np.concatenate([frontier, generators])
        while frontier.size:
            products = np.unique(group.table[np.ix_(frontier, generators)])
            frontier = products[~mask[products]]
            mask[frontier] = True
    return Subgroup(group, np.nonzero(mask)[0])


def derived_subgroup(group):
    table, inverse = group.table, group.inverse
    seen = np.zeros(group.order, dtype=bool)
    for g in range(group.order):
        seen[table[table[table[g], inverse[g]], inverse]] = True
    return subgroup_generated(group, np.nonzero(seen)[0])


def generating_set(group, preferred=()):
    """Preferred elements first (skipping redundant ones), completed greedily in index order."""
    generators = []
    current = subgroup_generated(group, generators)
    candidates = list(preferred) + list(range(1, group.order))
    for x in candidates:
        if current.order == group.order:
            break
        if x not in current:
            generators.append(int(x))
            current = subgroup_generated(group, generators)
    return generators


def inner_automorphism(group, g):
    return GroupMap(group, group, group.table[group.table[g], group.inverse[g]])


def power_map(group, exponent):
    """g -> g^exponent for every g."""
    base = np.arange(group.order)
    if exponent < 0:
        base = group.inverse.astype(np.int64)
        exponent = -exponent
    result = np.zeros(group.order, dtype=np.int64)
    while exponent:
        if exponent & 1:
            result = group.table[result, base]
        base = group.table[base, base]
        exponent >>= 1
    return GroupMap(group, group, result)


def element_order(group, g):
    order, x = 1, int(g)
    while x != 0:
        x = group.mul(x, g)
        order += 1
    return order

import logging

import numpy as np
from sympy import primefactors

from .exceptions import NotElementaryAbelianError, ShapeMismatchError
from .finite_group import FiniteGroup, GroupMap, frozen_array, generating_set, power_map

logger = logging.getLogger(__name__)


class CoefficientGroup:
    """
    Abelian group Q of trivial coefficients, usually elementary abelian with a fixed F_p basis.

    group is Q as a stand-alone group, embedding sends it into the group it was
    cut out of (the centre of G, a subgroup of Z(H), ...), and coords[x] is the
    coordinate vector of x in the basis. A general abelian Q (prime None) has no
    coordinates: it can carry cocycles and extensions but not the linear solver.
    """

    def __init__(self, group, embedding, basis, prime, coords):
        self.group = group
        self.embedding = embedding
        self.basis = tuple(int(b) for b in basis)
        self.prime = None if prime is None else int(prime)
        self.rank = len(self.basis)
        self._position = None
        if self.prime is None:
            self.coords = None
            return
        self.coords = frozen_array(coords)
        self._weights = self.prime ** np.arange(self.rank - 1, -1, -1, dtype=np.int64)
        lookup = np.zeros(self.prime ** self.rank, dtype=np.int64)
        lookup[self.coords.astype(np.int64) @ self._weights] = np.arange(group.order)
        self._lookup = lookup

    @property
    def elementary(self):
        return self.prime is not None

    @classmethod
    def from_group(cls, group, embedding=None, prime=None):
        if embedding is None:
            embedding = GroupMap(group, group, np.arange(group.order))
        if group.order == 1:
            return cls(group, embedding, [], prime or 2, np.zeros((1, 0), dtype=np.int64))
        if not group.is_abelian:
            raise NotElementaryAbelianError('Coefficient group {} is not abelian'.format(group.label))
        factors = primefactors(group.order)
        if len(factors) != 1 or (prime is not None and factors[0] != prime):
            raise NotElementaryAbelianError('Coefficient group of order {} is not a p-group'.format(group.order))
        p = int(factors[0])
        if power_map(group, p).images.any():
            raise NotElementaryAbelianError('Coefficient group {} has elements of order above {}'.format(
                group.label, p))
        basis = generating_set(group)
        # x = b_0^c_0 * ... * b_{r-1}^c_{r-1}, built one basis vector at a time
        elements = np.zeros(1, dtype=np.int64)
        vectors = np.zeros((1, 0), dtype=np.int64)
        for b in basis:
            layers, layer_vectors = [], []
            current = elements
            for c in range(p):
                layers.append(current)
                layer_vectors.append(np.column_stack([vectors, np.full(len(vectors), c)]))
                current = group.table[current, b]
            elements = np.concatenate(layers)
            vectors = np.concatenate(layer_vectors)
        coords = np.zeros((group.order, len(basis)), dtype=np.int64)
        coords[elements] = vectors
        logger.debug('Coefficient group %s has rank %d over F_%d', group.label, len(basis), p)
        return cls(group, embedding, basis, p, coords)

    @classmethod
    def general(cls, group, embedding=None):
        if embedding is None:
            embedding = GroupMap(group, group, np.arange(group.order))
        if not group.is_abelian:
            raise NotElementaryAbelianError('Coefficient group {} is not abelian'.format(group.label))
        logger.debug('Coefficient group %s of order %d has no F_p basis', group.label, group.order)
        return cls(group, embedding, [], None, None)

    @classmethod
    def from_subgroup(cls, subgroup, label=None, prime=None):
        group, embedding = subgroup.as_group(label)
        return cls.from_group(group, embedding, prime)

    @classmethod
    def trivial(cls, prime=2, ambient=None):
        group = FiniteGroup([[0]], names=['1'], label='1')
        embedding = GroupMap(group, ambient if ambient is not None else group, [0])
        return cls(group, embedding, [], prime, np.zeros((1, 0), dtype=np.int64))

    @property
    def order(self):
        return self.group.order

    @property
    def ambient(self):
        return self.embedding.target

    def element_of(self, vectors):
        """Index of the element with the given coordinates; works row-wise on arrays of vectors."""
        self.require_elementary()
        vectors = np.asarray(vectors, dtype=np.int64) % self.prime
        if vectors.shape[-1:] != (self.rank,):
            raise ShapeMismatchError('Coordinate vectors must have length {}'.format(self.rank))
        return self._lookup[vectors @ self._weights]

    def require_elementary(self):
        if not self.elementary:
            raise NotElementaryAbelianError('Coefficient group {} has no F_p coordinates'.format(self.group.label))

    def position(self):
        """Array over the ambient group: index in Q of each ambient element, -1 outside Q."""
        if self._position is None:
            position = np.full(self.ambient.order, -1, dtype=np.int64)
            position[self.embedding.images] = np.arange(self.order)
            position.setflags(write=False)
            self._position = position
        return self._position

    def __eq__(self, other):
        if not isinstance(other, CoefficientGroup):
            return NotImplemented
        return (self.group == other.group and self.prime == other.prime
                and np.array_equal(self.embedding.images, other.embedding.images)
                and (not self.elementary or np.array_equal(self.coords, other.coords)))

    def __hash__(self):
        return hash((self.group, self.prime))

    def __str__(self):
        return "Coefficient group:\n--Prime: {}\n--Rank: {}\n--Basis: {}\n".format(self.prime, self.rank, self.basis)

    __repr__ = __str__

class BraceforgeError(ValueError):
    pass


# Group construction

class NotLatinSquareError(BraceforgeError):
    def __init__(self, axis, index):
        self.axis = axis
        self.index = index
        super().__init__('Table {} {} is not a permutation of the element indices'.format(axis, index))


class NoIdentityError(BraceforgeError):
    def __init__(self):
        super().__init__('Table has no two-sided identity element')


class NotAssociativeError(BraceforgeError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__('Table is not associative at triple ({}, {}, {})'.format(a, b, c))


class OrderOverflowError(BraceforgeError):
    def __init__(self, order, cap):
        self.order = order
        self.cap = cap
        super().__init__('Group order {} exceeds the configured cap {}'.format(order, cap))


class NotOddPrimeError(BraceforgeError):
    def __init__(self, p):
        self.p = p
        super().__init__('{} is not an odd prime'.format(p))


class ActionNotAutomorphismError(BraceforgeError):
    def __init__(self, a):
        self.element = a
        super().__init__('Action of element {} is not an automorphism'.format(a))


class ActionNotHomomorphismError(BraceforgeError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__('Action is not a homomorphism at pair ({}, {})'.format(a, b))


class NotASubgroupError(BraceforgeError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__('Set is not closed: product of {} and {} falls outside'.format(a, b))


# Gamma functions and skew braces

class NotAutomorphismError(BraceforgeError):
    def __init__(self, g):
        self.element = g
        super().__init__('gamma({}) is not an automorphism'.format(g))


class GammaNotVerifiedError(BraceforgeError):
    def __init__(self):
        super().__init__('Gamma function must pass verify_gamma first')


class ShapeMismatchError(BraceforgeError):
    def __init__(self, message):
        super().__init__(message)


class NotASkewBraceError(BraceforgeError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__('Operations do not form a skew brace, witness {}'.format(witness))


class GammaNotInnerError(BraceforgeError):
    def __init__(self, g):
        self.element = g
        super().__init__('gamma({}) is not an inner automorphism'.format(g))


# Rota-Baxter operators

class NotRotaBaxterError(BraceforgeError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__('Map is not a Rota-Baxter operator, witness {}'.format(witness))


class CenterNotTrivialError(BraceforgeError):
    def __init__(self, center_order):
        self.center_order = center_order
        super().__init__('Group centre has order {}, expected a centreless group'.format(center_order))


class TooLargeError(BraceforgeError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__('Search space of size {} exceeds the configured cap {}'.format(size, cap))


class TheoremViolationError(BraceforgeError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__('{} (witness {})'.format(message, witness))


# Cohomology

class NotElementaryAbelianError(BraceforgeError):
    def __init__(self, message):
        super().__init__(message)


class CenterNotElementaryAbelianError(NotElementaryAbelianError):
    pass


class RepMismatchError(BraceforgeError):
    def __init__(self, g):
        self.element = g
        super().__init__('iota(C({0})) differs from gamma({0})'.format(g))


class ValueNotCentralError(BraceforgeError):
    def __init__(self, g, h):
        self.pair = (g, h)
        super().__init__('kappa({}, {}) is not in the coefficient group'.format(g, h))


class NotACocycleError(BraceforgeError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__('Table is not a 2-cocycle, witness {}'.format(witness))


class NotASectionError(BraceforgeError):
    def __init__(self, g):
        self.element = g
        super().__init__('Map is not a section: projection of s({0}) is not {0}'.format(g))


class NotAHomomorphismError(BraceforgeError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__('Map is not a homomorphism at pair ({}, {})'.format(a, b))


class NotGeneratingError(BraceforgeError):
    def __init__(self, generated, order):
        self.generated = generated
        self.order = order
        super().__init__('Generators span a subgroup of order {} in a group of order {}'.format(generated, order))


class SigmaDoesNotCertifyError(BraceforgeError):
    def __init__(self, g, h):
        self.pair = (g, h)
        super().__init__('sigma does not certify kappa at pair ({}, {})'.format(g, h))


class ReconstructionFailedError(BraceforgeError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__('Reconstructed map fails the Rota-Baxter identity, witness {}'.format(witness))


class DimensionMismatchError(BraceforgeError):
    def __init__(self, rows, rhs_length):
        super().__init__('Matrix has {} rows but right-hand side has length {}'.format(rows, rhs_length))


class NotPrimeError(BraceforgeError):
    def __init__(self, p):
        self.p = p
        super().__init__('{} is not prime'.format(p))


# Gallery

class AlphaIsMinusHalfError(BraceforgeError):
    def __init__(self, p, alpha):
        super().__init__('alpha={} is -1/2 modulo {}, 1+2*alpha is not invertible'.format(alpha, p))


class BadParametersError(BraceforgeError):
    def __init__(self, message):
        super().__init__(message)


# CLI

class SchemaError(BraceforgeError):
    def __init__(self, pointer, message):
        self.pointer = pointer
        super().__init__('{}: {}'.format(pointer or '/', message))

"""Exception types shared across the package."""


class VanderComplexError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(VanderComplexError, ValueError):
    """Malformed input data: permutations, diagrams, morphisms, vectors."""


class FormatError(ValidationError):
    """Input text that does not conform to the expected file format."""


class StructureError(ValidationError):
    """A diagram that is not closed (an arc end used other than twice)."""


class PreconditionError(ValidationError):
    """An operation was called outside its documented preconditions."""


class CompositionError(ValidationError):
    """Morphisms whose boundary color vectors do not match."""


class SizeError(VanderComplexError):
    """A size cap or memory budget would be exceeded."""


class MembershipError(VanderComplexError):
    """A vector expected to lie in a subspace does not."""


class ConsistencyError(VanderComplexError):
    """An internal invariant failed; indicates a construction bug."""

"""Exception types shared across the package."""


class PosetError(Exception):
    """Base class for all errors raised by this package."""


class CycleError(PosetError):
    """Two distinct elements are mutually comparable after closure."""


class UnknownElementError(PosetError):
    """An element label or index does not belong to the poset at hand."""


class ExtremaError(PosetError):
    """A poset has a global minimum or maximum where none is allowed."""


class NotASubsetError(PosetError):
    """An operation requiring B ⊆ A received sets violating that."""


class MixedBaseError(PosetError):
    """Subsets or cuts over different base posets were combined."""


class SizeCapError(PosetError):
    """An enumeration would exceed the configured size cap."""


class InvalidSelectorError(PosetError):
    """A cofinal selector produced a set that is not a cofinal subset."""


class GenerationExhaustedError(PosetError):
    """Random instance generation ran out of retries."""


class UnknownCheckError(PosetError):
    """A verification check id is not in the registered catalog."""


class ParseError(PosetError):
    """An instance document is not syntactically valid."""


class ValidationError(PosetError):
    """An instance document is well-formed JSON but breaks an invariant."""

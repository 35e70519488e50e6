"""Error types shared across the package."""


class DomainError(ValueError):
    """A precondition on mathematical input was violated."""


class ResourceCapError(RuntimeError):
    """A configured budget (nodes, words, pairs) was exceeded before completion."""


class FieldMixError(TypeError):
    """Exact arithmetic was requested across incompatible quadratic fields."""


class ComparisonUnresolved(RuntimeError):
    """A certified comparison stayed ambiguous at the maximum refinement depth."""


class BracketCrossingError(RuntimeError):
    """A computed lower bound exceeded the matching upper bound; never clamped."""

"""Exception types shared across the package."""


class PermutationParseError(ValueError):
    """Input text is not valid cycle or one-line notation."""


class DegreeMismatchError(ValueError):
    """Two permutations were combined but act on different ground sets."""


class PreconditionError(ValueError):
    """An operation's stated precondition was violated (as opposed to the
    operation running and returning a negative answer)."""


class ResourceCapError(RuntimeError):
    """A configurable size cap would be exceeded; raise instead of grinding."""

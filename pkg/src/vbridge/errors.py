"""Exception types shared across the package."""


class VbridgeError(Exception):
    """Base class for all library errors."""


class GaussCodeError(VbridgeError, ValueError):
    """Invalid Gauss-code input."""


class EmptyInputError(GaussCodeError):
    """The code contains no components at all."""


class GaussSyntaxError(GaussCodeError):
    """The code does not match the token grammar."""


class UnbalancedChordError(GaussCodeError):
    """A chord label does not occur exactly once as O and once as U."""


class SignMismatchError(GaussCodeError):
    """The two passages of one chord carry different signs."""


class NotAKnotError(VbridgeError, ValueError):
    """Operation is defined only for one-component diagrams."""


class CutSplitError(VbridgeError, ValueError):
    """Operation is defined only for diagrams that are not cut-split."""


class SearchExhaustedError(VbridgeError, RuntimeError):
    """Seed-set search hit the requested size cap without success."""


class SearchTimeoutError(VbridgeError, RuntimeError):
    """Seed-set search hit its wall-clock limit."""


class BadIdealIndexError(VbridgeError, ValueError):
    """Elementary-ideal index outside 0 <= k < number of generators."""


class QuandleAxiomError(VbridgeError, ValueError):
    """Operation table fails a quandle axiom; ``witness`` pins the failure."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotIdempotentError(QuandleAxiomError):
    pass


class NotRightInvertibleError(QuandleAxiomError):
    pass


class NotDistributiveError(QuandleAxiomError):
    pass


class NotOneOverbridgeError(VbridgeError, ValueError):
    """Diagram does not have exactly one tail-bearing strand."""

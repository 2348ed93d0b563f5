"""Exception types shared across the package."""


class HypersimplexError(Exception):
    pass


class ParameterMismatchError(HypersimplexError, ValueError):
    """Two vertices (or a vertex and a permutation) come from different graphs."""


class RegimeError(HypersimplexError, ValueError):
    """Operation needs 1 <= k <= d/2.

    The graph G(d, k) is isomorphic to G(d, d - k); callers outside the regime
    should route through ``complement_params`` first.
    """


class ArithmeticOverflowError(HypersimplexError, OverflowError):
    """A count does not fit the unsigned 64-bit result type."""


class SizeCapError(HypersimplexError, RuntimeError):
    """An explicit construction would exceed its configured size cap."""


class SamplerError(HypersimplexError, RuntimeError):
    pass


class UndersampledError(HypersimplexError, ValueError):
    def __init__(self, message: str, required_samples: int):
        super().__init__(message)
        self.required_samples = required_samples

"""Exception types shared across the package.

Argument errors (bad shapes, out-of-range values) use the built-in
``ValueError``; these classes cover the two failure modes that need to be
distinguishable at the CLI boundary.
"""


class ConfigError(Exception):
    """A configuration document is malformed or inconsistent.

    The message names the dotted path of the offending key, e.g.
    ``"operator.T: must be > 0"``.
    """


class NumericError(RuntimeError):
    """A numeric procedure failed (NaN at a quadrature node, factorization
    breakdown, quadrature too coarse for the requested assembly)."""

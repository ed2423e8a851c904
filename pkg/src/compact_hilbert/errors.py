"""Exception hierarchy.

Configuration-type errors (bad sizes, truncation, aliasing, violated
preconditions) derive from ``ValueError``; numerical failures derive from
``ArithmeticError``. The CLI maps the two families to different exit codes.
"""


class CompactHilbertError(Exception):
    pass


class ConfigError(CompactHilbertError, ValueError):
    pass


class NumericalError(CompactHilbertError, ArithmeticError):
    pass


class GridSizeError(ConfigError):
    pass


class AliasingError(ConfigError):
    pass


class TruncationError(ConfigError):
    pass


class PreconditionError(ConfigError):
    pass


class EvaluationError(NumericalError):
    pass


class SingularityError(NumericalError):
    pass


class QuadratureError(NumericalError):
    pass

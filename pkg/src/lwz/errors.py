"""Exception hierarchy shared by every module of the package."""


class LWZError(Exception):
    """Base class for all library errors."""


class ZeroDivisor(LWZError, ArithmeticError):
    """Division by a lightlike (zero-divisor) split-complex number."""


class DomainError(LWZError, ValueError):
    pass


class ExprSyntaxError(LWZError, SyntaxError):
    """Malformed expression text.

    ``offset`` is the byte offset of the offending token and ``expected`` the
    set of token kinds the parser would have accepted there.
    """

    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} at offset {offset}")
        self.msg = message
        self.offset = offset
        self.expected = frozenset(expected)


class QuadratureFailure(LWZError, RuntimeError):
    pass


class PathError(LWZError):
    """The integration path crosses a point where the integrand is undefined."""


class SingularPoint(LWZError):
    pass


class NotSingular(LWZError):
    pass


class GaussMapMismatch(LWZError):
    pass


class FlatRegion(LWZError):
    pass


class NotNull(LWZError):
    pass


class Degenerate(LWZError):
    pass


class Inconclusive(LWZError):
    pass


class NotConformal(LWZError):
    pass


class LightlikeFactor(NotConformal):
    pass


class Singular(LWZError):
    """A matrix over the split-complex numbers is not invertible."""


class IllConditioned(LWZError):
    pass


class NotALineSymmetry(LWZError):
    pass

"""Exception types shared across the package.

Every error that a caller may want to catch separately gets its own class;
all of them derive from GradedCYError so `except GradedCYError` catches any
mathematical or validation failure without swallowing genuine bugs.
"""


class GradedCYError(Exception):
    pass


class CapTooSmall(GradedCYError):
    """Rewriting cap below what the relation set requires."""


class NonStabilizing(GradedCYError):
    """Graded dimension kept changing when the cap was raised.

    Signals a degree-0 cycle surviving in the quotient, i.e. an input whose
    grading does not make the graded pieces finite dimensional.
    """


class PositiveDegree(GradedCYError):
    """A construction that needs a negatively graded input got arrows of
    positive degree."""


class NotSurjective(GradedCYError):
    """The chosen arrow images fail to generate the target algebra."""


class NotBasic(GradedCYError):
    """Idempotent decomposition has isomorphic repeats."""


class NotSplitBasic(GradedCYError):
    """The semisimple quotient over the declared idempotents is not a
    product of copies of the ground field."""


class NotBipartite(GradedCYError):
    pass


class NotTorus(GradedCYError):
    pass


class Inhomogeneous(GradedCYError):
    """A relation is not homogeneous for the given grading."""


class NotComplex(GradedCYError):
    """Consecutive differentials do not compose to zero after reduction."""


class NotFree(GradedCYError):
    pass


class WindowViolation(GradedCYError):
    """Query outside the degree window where the identification is valid."""


class WindowTooSmall(GradedCYError):
    """Boundary effects make the requested computation inconclusive; the
    message lists the degrees that could not be certified."""


class Cyclic(GradedCYError):
    """An acyclic quiver was required."""


class NotHereditary(GradedCYError):
    pass


class NotUnimodular(GradedCYError):
    pass


class Inconclusive(GradedCYError):
    """A bounded search ended without a definite answer."""


class ParseError(GradedCYError):
    """Input file rejected; carries file name and line number."""

    def __init__(self, message, filename=None, line=None):
        self.filename = filename
        self.line = line
        where = ""
        if filename is not None:
            where = f"{filename}:" + (f"{line}: " if line is not None else " ")
        super().__init__(where + message)

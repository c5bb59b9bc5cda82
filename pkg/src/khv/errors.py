"""Exception hierarchy shared across the pipeline."""


class KhvError(Exception):
    """Base class; ``stage`` names the pipeline step that failed."""

    stage = "khv"


class PDError(KhvError, ValueError):
    stage = "parse"


class MalformedTerm(PDError):
    pass


class EdgeDegree(PDError):
    pass


class OrientationConflict(PDError):
    pass


class TooLarge(KhvError):
    stage = "homology"


class InexactDivision(KhvError, ArithmeticError):
    stage = "jones"


class EmptyPolynomial(KhvError, ValueError):
    stage = "expansion"


class UnknownKnot(KhvError, KeyError):
    stage = "corpus"

    def __str__(self):
        return Exception.__str__(self)

"""Exception hierarchy shared by the engine modules."""


class ChowCheckError(Exception):
    """Base class for every structured error raised by the engine."""


class AlphabetMismatchError(ChowCheckError):
    def __init__(self, parameter, message=None):
        self.parameter = parameter
        super().__init__(message or f"parameter {parameter!r} is not shared by both alphabets")


class NonLinearError(ChowCheckError):
    def __init__(self, unknown, message=None):
        self.unknown = unknown
        super().__init__(message or f"entry is not linear in unknown {unknown!r}")


class ParametricCoefficientError(ChowCheckError):
    """An unknown's coefficient still depends on parameters."""


class SingularSystemError(ChowCheckError):
    pass


class UnboundedError(ChowCheckError):
    pass


class PresentationError(ChowCheckError):
    pass


class RewriteCycleError(PresentationError):
    pass


class RingMismatchError(ChowCheckError):
    pass


class DegreeError(ChowCheckError):
    pass


class UnhousedSymbolError(ChowCheckError):
    def __init__(self, monomial):
        self.monomial = monomial
        super().__init__(f"no integration value for top-degree monomial {monomial}")


class RankError(ChowCheckError):
    pass

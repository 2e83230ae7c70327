"""Exception hierarchy shared by the library and the command line."""


class GeoTypeError(Exception):
    """Base class for every error raised by :mod:`geotypes`."""


class InvalidGeometricType(GeoTypeError, ValueError):
    """A candidate quadruple fails the geometric type axioms."""

    def __init__(self, report):
        self.report = report
        details = "; ".join(f"{axiom}: {detail}" for axiom, detail in report.violations)
        super().__init__(f"invalid geometric type ({details})")


class InvalidLabel(GeoTypeError, ValueError):
    pass


class FlavorError(GeoTypeError, ValueError):
    """An s-flavored label was given where a u-flavored one is required, or vice versa."""


class PreconditionError(GeoTypeError, ValueError):
    """An operation was called outside its domain (non-binary type, wrong stratum, ...)."""


class DomainError(PreconditionError):
    pass


class IndeterminateError(GeoTypeError):
    """A closure hit its size cap, so the answer cannot be decided."""


class BudgetExceeded(GeoTypeError):
    pass


class ParseError(GeoTypeError, ValueError):
    pass

"""Exception hierarchy shared by every module.

Each exception carries a short machine-readable ``code`` used by the CLI.
"""


class JKError(Exception):
    code = "error"


class ValidationError(JKError, ValueError):
    code = "invalid"


class NotSquare(ValidationError):
    code = "not_square"


class DependentBasis(ValidationError):
    code = "dependent_basis"


class OutsideSpan(ValidationError):
    code = "outside_span"


class ZeroForm(ValidationError):
    code = "zero_form"


class NotSpanning(ValidationError):
    code = "not_spanning"


class NotPointed(ValidationError):
    code = "not_pointed"


class NotRegular(ValidationError):
    code = "not_regular"


class OutsideCone(ValidationError):
    code = "outside_cone"


class Infeasible(ValidationError):
    code = "infeasible"


class NotIntegral(ValidationError):
    code = "not_integral"


class MarginMismatch(ValidationError):
    code = "margin_mismatch"


class Disconnected(ValidationError):
    code = "disconnected"


class NonUnimodular(JKError):
    code = "non_unimodular"


class BudgetExceeded(JKError):
    code = "budget_exceeded"

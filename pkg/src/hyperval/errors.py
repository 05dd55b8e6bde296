"""Exception hierarchy shared by all hyperval modules.

DomainError subclasses map to CLI exit code 2, BudgetExceeded to exit 3.
"""


class HypervalError(Exception):
    pass


class DomainError(HypervalError):
    pass


class BudgetExceeded(HypervalError):
    """A configured enumeration or search cap would be exceeded."""


class NotEisenstein(DomainError):
    pass


class NotIrreducible(DomainError):
    pass


class PrecisionTooSmall(DomainError):
    pass


class MixedFields(DomainError):
    """Operands belong to different field models."""


class DivisionByZero(DomainError):
    pass


class PrecisionExhausted(DomainError):
    """An operation would need more precision than the operands carry."""


class ZeroAtPrecision(DomainError):
    """Element is indistinguishable from 0 at working precision but is not an exact zero."""


class NegativeValuation(DomainError):
    pass


class HenselPreconditionFailed(DomainError):
    pass


class NoRootFound(DomainError):
    pass


class ThresholdNotMet(DomainError):
    pass


class NotTame(DomainError):
    pass


class NotNormalForm(DomainError):
    pass


class IncompatibleResidueEmbedding(DomainError):
    pass


class RestrictionMismatch(DomainError):
    pass


class NonUnitDenominator(DomainError):
    pass


class CongruenceFailed(DomainError):
    """p-power congruence check found a counterexample (implementation bug signal)."""

    def __init__(self, i, witness):
        super().__init__(f"congruence failed at exponent i={i}: {witness}")
        self.i = i
        self.witness = witness


class AxiomViolation(DomainError):
    """Hyperfield axiom checker found a violation (implementation bug signal)."""

    def __init__(self, axiom, witness):
        super().__init__(f"axiom {axiom} violated by {witness}")
        self.axiom = axiom
        self.witness = witness


class HomViolation(DomainError):
    """A homomorphism condition failed for a candidate HomSpec."""

    def __init__(self, condition, witness):
        super().__init__(f"homomorphism condition ({condition}) violated by {witness}")
        self.condition = condition
        self.witness = witness


class TranslationDisagreement(DomainError):
    def __init__(self, sentence, detail):
        super().__init__(f"definite disagreement on {sentence!r}: {detail}")
        self.sentence = sentence
        self.detail = detail


class FormulaSyntaxError(DomainError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class SortError(DomainError):
    pass

"""
Error types and the check result returned by every verification suite.
"""

from typing import Any, Optional


class HiggsFourierError(Exception):
    """Raised when a computation cannot be carried out on its input."""
    def __init__(self, message):
        super().__init__(message)
        self.message = message


class BadCharacteristic(HiggsFourierError):
    """The base field has characteristic 2 or the modulus is not prime."""


class BadDegree(HiggsFourierError):
    """The curve polynomial does not have odd degree at least 5."""


class NotSquarefree(HiggsFourierError):
    """The curve polynomial has a repeated root."""


class ZeroFunction(HiggsFourierError):
    """A valuation or divisor was requested for the zero function."""


class ZeroDifferential(HiggsFourierError):
    """A divisor was requested for the zero differential."""


class PoleAtPlace(HiggsFourierError):
    """A function was evaluated at one of its poles."""


class IrrationalSupport(HiggsFourierError):
    """A divisor would need places that are not rational over F_p."""


class NoRationalFibre(HiggsFourierError):
    """No fibre of x over F_p has rational points, or none avoids a given support."""


class NotASection(HiggsFourierError):
    """A function is not a section of the line bundle it is used as."""


class NotInvertible(HiggsFourierError):
    """A gauge matrix is singular or its inverse is not a bundle map."""


class UnsupportedRank(HiggsFourierError):
    """The operation is only implemented for another rank."""


class NonzeroDegree(HiggsFourierError):
    """The transform is only defined for degree-0 Higgs bundles."""


class EvaluationFailure(HiggsFourierError):
    """The Higgs field could not be evaluated at the base point."""


class NotTrivializable(HiggsFourierError):
    """A summand of the bundle is not trivial on the chart."""


class NotLinearizable(HiggsFourierError):
    """A presentation matrix is not of the form T*L + C with L invertible over A."""


class ChartsDontCover(HiggsFourierError):
    """Two charts do not cover the curve."""


class InvariantViolation(HiggsFourierError):
    """An identity that must hold exactly (e.g. the Euler identity) failed."""


class ConfigError(HiggsFourierError):
    """Input files or flags could not be parsed."""


class CheckResult:
    """Represents the outcome of one verification check."""
    def __init__(self, name=None, passed=True, output=None, error=None, witness=None):
        self.name = name
        self.passed = passed
        self.output = output
        self.error = error
        self.witness = witness

    def replace(self, **kwargs):
        """Returns a new CheckResult with the given fields replaced."""
        new_result = CheckResult(
            name=self.name,
            passed=self.passed,
            output=self.output,
            error=self.error,
            witness=self.witness,
        )
        for key, value in kwargs.items():
            setattr(new_result, key, value)
        return new_result

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "output": self.output,
            "error": self.error,
            "witness": self.witness,
        }

    def __repr__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CheckResult({self.name!r}, {status})"


def failed(name: str, error: Optional[str], witness: Any = None) -> CheckResult:
    return CheckResult(name=name, passed=False, error=error, witness=witness)

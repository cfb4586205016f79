"""Exception types shared across the package."""


class SelfInverseError(Exception):
    """Base class for package errors."""


class CapabilityError(SelfInverseError):
    """Operation not available for the given distribution (no density, no cdf, ...)."""


class AdmissionError(SelfInverseError):
    """A distribution is not admissible for the requested role (e.g. atom at 0)."""


class SpecSyntaxError(SelfInverseError, ValueError):
    """Spec text does not match the grammar."""

    def __init__(self, text: str, position: int, expected):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        super().__init__(
            f"syntax error at position {position}: expected {' or '.join(self.expected)}"
        )

    def diagnostic(self) -> str:
        """Message with the offending text and a caret under the error position."""
        return f"{self}\n  {self.text}\n  {' ' * self.position}^"


class SpecDomainError(SelfInverseError, ValueError):
    """Spec parses but a parameter lies outside its admissible set."""

    def __init__(self, param: str, value, admissible: str):
        self.param = param
        self.value = value
        self.admissible = admissible
        super().__init__(f"{param}={value} outside admissible set {admissible}")


class ZeroDenominatorError(SelfInverseError, ArithmeticError):
    """A ratio denominator was exactly zero."""


class QuadratureError(SelfInverseError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""

    def __init__(self, value: float, error: float, tol: float):
        self.value = value
        self.error = error
        self.tol = tol
        super().__init__(
            f"quadrature did not converge: estimate {value!r}, "
            f"error bound {error:.3g} > tol {tol:.3g}"
        )


class SampleSizeError(SelfInverseError, ValueError):
    """Sample too small for the requested test."""

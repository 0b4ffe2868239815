"""Exception types raised across the package."""

from __future__ import annotations


class FuchsiaError(Exception):
    """Base class for all package errors."""


class ShapeError(FuchsiaError):
    """Operator does not have the shape required by a theta-form conversion."""


class DivisionDegenerate(FuchsiaError):
    """Left division by an operator whose leading coefficient vanishes."""


class IrregularSingular(FuchsiaError):
    """Indicial polynomial has lower degree than the operator order."""


class UnknownOperator(FuchsiaError):
    """No tabulated data exist for the requested operator."""


class UnknownName(FuchsiaError):
    """Unknown catalog, recurrence or check identifier."""


class MissingParam(FuchsiaError):
    """A required parameter was not supplied."""


class ResonanceObstruction(FuchsiaError):
    """A Frobenius recurrence hits a resonance with nonzero right-hand side."""


class NonGenericExponent(FuchsiaError):
    """Integral exponent or order where a generic one is required."""


class DegenerateParams(FuchsiaError):
    """Parameters fall on a degenerate locus for the requested construction."""


class NonLinearFactor(FuchsiaError):
    """A rational function does not split into rational linear factors."""


class PoleBeforeTermination(FuchsiaError):
    """A lower parameter of a terminating series is a non-positive integer
    reached before the series terminates."""


class DegenerateDenominator(FuchsiaError):
    """A contiguous-relation coefficient has a vanishing denominator."""


class BalanceViolation(FuchsiaError):
    """Parameters violate the balancing condition required by a relation."""


class PoleInCoefficient(FuchsiaError):
    """A hypergeometric coefficient has a pole at the requested index."""


class NonConvergent(FuchsiaError):
    """Numerical summation did not converge within its budget."""


class GammaPole(FuchsiaError):
    """An upper Gamma argument lands on a pole."""

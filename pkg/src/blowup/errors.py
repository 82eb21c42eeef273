# PyBlowup - Hilbert coefficients and blowup certificates for Python
# Copyright (C) 2024 PyBlowup contributors
#
# This file is part of PyBlowup.
#
# PyBlowup is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# PyBlowup is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with PyBlowup.  If not, see <http://www.gnu.org/licenses/>.

"""
.. module:: errors
    :synopsis: Exception hierarchy of pyblowup

Three families are distinguished by the command line front-end:

* :class:`InputError` (also a ``ValueError``): the caller handed over something malformed or out of range
* :class:`ResourceError` (also a ``RuntimeError``): a configured budget or window ran out before an answer
  was certified
* mathematical refusals (:class:`NotAReductionError`, :class:`HypothesisNotVerifiedError`) and internal
  contradictions (:class:`ConsistencyError`)
"""

from typing import Any, Optional, Sequence


class BlowupError(Exception):
    """
    Base class of every error raised by pyblowup
    """


class InputError(BlowupError, ValueError):
    pass


class PolynomialSyntaxError(InputError):
    """
    Raised by the polynomial parser

    Args:
        message (``str``): What went wrong
        text (``str``): The text being parsed
        position (``int``): Offset of the offending character in :attr:`text`
    """

    def __init__(self, message: str, text: str = '', position: int = 0):
        self.text = text
        self.position = position
        super().__init__('{} at position {}'.format(message, position))


class UnknownVariableError(PolynomialSyntaxError):
    pass


class ZeroDenominatorError(PolynomialSyntaxError):
    pass


class ExponentOverflowError(PolynomialSyntaxError):
    pass


class RingMismatchError(InputError):
    pass


class LengthMismatchError(InputError):
    pass


class NotMPrimaryError(InputError):
    pass


class NotArtinianError(InputError):
    pass


class UnsupportedFiltrationError(InputError):
    pass


class DimensionNotSupportedError(InputError):
    pass


class ConfigurationError(InputError):
    pass


class ResourceError(BlowupError, RuntimeError):
    """
    A computation gave up because a configured limit was reached.

    Attributes:
        stage (``str``): Name of the pipeline stage that gave up, filled in by the caller that knows it
    """

    stage: Optional[str] = None


class BudgetExceededError(ResourceError):
    def __init__(self, message: str, pairs: int = 0, basis_size: int = 0):
        self.pairs = pairs
        self.basis_size = basis_size
        super().__init__(message)


class StabilizationNotReachedError(ResourceError):
    def __init__(self, message: str, terms: int = 0):
        self.terms = terms
        super().__init__(message)


class RatliffRushNotStableError(ResourceError):
    """
    The colon chain did not repeat within the configured number of steps

    Attributes:
        chain (``list``): The chain values computed so far
    """

    def __init__(self, message: str, chain: Sequence[Any] = ()):
        self.chain = list(chain)
        super().__init__(message)


class CertificationFailedError(ResourceError):
    """
    No sampled element could be certified superficial

    Attributes:
        window (``tuple``): First and last degree that were checked
        lengths (``list``): The B-module lengths of the last attempt
    """

    def __init__(self, message: str, window: Sequence[int] = (), lengths: Sequence[int] = ()):
        self.window = tuple(window)
        self.lengths = list(lengths)
        super().__init__(message)


class NoReductionFoundError(ResourceError):
    pass


class NotAReductionError(BlowupError, ValueError):
    pass


class HypothesisNotVerifiedError(BlowupError):
    pass


class ConsistencyError(BlowupError, AssertionError):
    """
    Two independent computations of the same quantity disagree. Always a bug (or a sensational finding).
    """


__all__ = [
    'BlowupError', 'InputError', 'PolynomialSyntaxError', 'UnknownVariableError', 'ZeroDenominatorError',
    'ExponentOverflowError', 'RingMismatchError', 'LengthMismatchError', 'NotMPrimaryError', 'NotArtinianError',
    'UnsupportedFiltrationError', 'DimensionNotSupportedError', 'ConfigurationError', 'ResourceError',
    'BudgetExceededError', 'StabilizationNotReachedError', 'RatliffRushNotStableError',
    'CertificationFailedError', 'NoReductionFoundError', 'NotAReductionError', 'HypothesisNotVerifiedError',
    'ConsistencyError',
]

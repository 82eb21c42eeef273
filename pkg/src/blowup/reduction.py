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
.. module:: reduction
    :synopsis: Superficial sequences, minimal reductions, reduction numbers and σ-sequences

Random combinations of monomial generators may vanish at points away from the origin, so every length here is a
length at the origin: either the ideal contains a power of ``a`` (then global and local lengths agree), or a
power of ``a`` known to lie in the origin component is added before counting.
"""

import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from blowup.config import AnalysisConfig, resolve_config
from blowup.errors import (
    CertificationFailedError, ConsistencyError, InputError, NoReductionFoundError, NotAReductionError,
)
from blowup.filtration import Term, as_ideal, require_m_primary, term_length, term_power, term_product
from blowup.groebner import Ideal, artinian_quotient_length, ideal_colon, ideal_intersection, ideal_membership
from blowup.monomial import MonomialIdeal
from blowup.rings import Polynomial

logger = logging.getLogger(__name__)

Generators = Union[Ideal, Sequence[Polynomial]]


def ideal_generators(a: Term) -> List[Polynomial]:
    return a.to_polynomials() if isinstance(a, MonomialIdeal) else list(a.generators)


def _as_sequence(c: Generators) -> List[Polynomial]:
    return list(c.generators) if isinstance(c, Ideal) else list(c)


def _with(term: Term, extra: Sequence[Polynomial]) -> Ideal:
    return Ideal(term.ring, as_ideal(term).generators + tuple(extra))


def _products(ys: Sequence[Polynomial], term: Term) -> List[Polynomial]:
    return [y * g for y in ys for g in ideal_generators(term)]


@dataclass(frozen=True)
class SuperficialCertificate:
    """
    Finite-window superficiality certificate of ``x`` for ``a`` modulo earlier sequence elements

    Attributes:
        element (:class:`~blowup.rings.Polynomial`): The element ``x = Σ λ_i g_i``
        coefficients (``tuple`` of ``int``): The sampled ``λ_i``
        modulo (``int``): Number of earlier sequence elements factored out
        start (``int``): The exponent ``c`` in ``(a^(n+1) : x) ∩ a^c``
        window (``tuple``): First and last ``n`` checked
        lengths (``tuple`` of ``int``): ``b_n`` for every checked ``n``, all zero
        attempts (``int``): Samples drawn until this one passed
    """

    element: Polynomial
    coefficients: Tuple[int, ...]
    modulo: int
    start: int
    window: Tuple[int, int]
    lengths: Tuple[int, ...]
    attempts: int

    def to_dict(self) -> dict:
        return {
            'element': str(self.element),
            'coefficients': list(self.coefficients),
            'modulo': self.modulo,
            'start': self.start,
            'window': list(self.window),
            'lengths': list(self.lengths),
            'attempts': self.attempts,
        }


def b_module_lengths(a: Term, x: Polynomial, ns: Sequence[int], modulo: Sequence[Polynomial] = (),
                     start: int = 2, config: Optional[AnalysisConfig] = None) -> List[int]:
    """
    ``b_n = ℓ(((a^(n+1) : x) ∩ a^c) / a^n)`` over ``A/(modulo)`` for every ``n`` in ``ns`` (``n >= c``)

    The length of ``(a^(n+1) : x) / a^n`` comes from the exact sequence
    ``0 -> (a^(n+1) : x)/a^n -> A/a^n -> A/a^(n+1) -> A/(a^(n+1), x) -> 0``; only where it is nonzero is the colon
    intersected with ``a^c`` by Gröbner computations.
    """
    config = resolve_config(config)
    lengths: Dict[int, int] = {}

    def quotient(k: int) -> int:
        if k not in lengths:
            lengths[k] = artinian_quotient_length(_with(term_power(a, k, config), modulo), config)
        return lengths[k]

    result = []
    for n in ns:
        if n < start:
            raise InputError('b_n needs n >= c, got n = {} and c = {}'.format(n, start))
        upper = _with(term_power(a, n + 1, config), modulo)
        b = quotient(n) - quotient(n + 1) + artinian_quotient_length(_with(upper, [x]), config)
        if b:
            lower = _with(term_power(a, n, config), modulo)
            colon = ideal_colon(upper, Ideal(a.ring, [x]), floor=lower, config=config)
            meet = ideal_intersection(colon, _with(term_power(a, start, config), modulo), floor=lower, config=config)
            b = quotient(n) - artinian_quotient_length(meet, config)
        result.append(b)
    return result


def sample_superficial_element(a: Term, rng: random.Random, modulo: Sequence[Polynomial] = (),
                               window: Optional[int] = None,
                               config: Optional[AnalysisConfig] = None) -> SuperficialCertificate:
    """
    Draw ``x = Σ λ_i g_i`` over the generators ``g_i`` of ``a`` and certify it superficial on a window

    Args:
        a (:class:`~blowup.monomial.MonomialIdeal` | :class:`~blowup.groebner.Ideal`): m-primary ideal
        rng (``random.Random``): Source of the coefficients ``λ_i``, drawn from ``-B..B``
        modulo (``list`` of :class:`~blowup.rings.Polynomial`, *optional*): Earlier elements of the sequence
        window (``int``, *optional*): Certify ``b_n = 0`` for ``n = c..c+window``
        config (:class:`~blowup.config.AnalysisConfig`, *optional*): Supplies ``sample_bound``,
            ``superficial_start``, ``superficial_window`` and ``superficial_retries``

    Raises:
        :class:`~blowup.errors.InputError` on the zero ideal or a field too small to sample from
        :class:`~blowup.errors.CertificationFailedError` if every retry fails
    """
    config = resolve_config(config)
    if isinstance(a, Ideal) and a.is_zero():
        raise InputError('superficial elements of the zero ideal are not defined')
    field = a.ring.field
    if not field.is_effectively_infinite(config.fp_sampling_floor):
        raise InputError('field {} is too small for generic sampling (floor {})'.format(
            field.name, config.fp_sampling_floor))
    generators = ideal_generators(a)
    bound = config.sample_bound
    start = config.superficial_start
    window = config.superficial_window if window is None else window
    ns = list(range(start, start + window + 1))
    lengths: List[int] = []
    for attempt in range(1, config.superficial_retries + 1):
        coefficients = tuple(rng.randint(-bound, bound) for _ in generators)
        x = sum((g * lam for lam, g in zip(coefficients, generators)), a.ring.zero())
        if x.is_zero():
            continue
        lengths = b_module_lengths(a, x, ns, modulo, start, config)
        if not any(lengths):
            logger.debug('superficial element %s certified on n = %d..%d after %d attempts',
                         x, ns[0], ns[-1], attempt)
            return SuperficialCertificate(x, coefficients, len(modulo), start, (ns[0], ns[-1]), tuple(lengths),
                                          attempt)
        logger.debug('sample %s rejected: b = %s', x, lengths)
    raise CertificationFailedError('no superficial element for {} modulo {} elements after {} samples'.format(
        a, len(modulo), config.superficial_retries), (ns[0], ns[-1]), lengths)


def recertify(a: Term, certificate: SuperficialCertificate, modulo: Sequence[Polynomial], last: int,
              config: Optional[AnalysisConfig] = None) -> Optional[SuperficialCertificate]:
    """
    Extend a certificate to ``n = c..last``; ``None`` if some new ``b_n`` is nonzero
    """
    first, end = certificate.window
    if last <= end:
        return certificate
    extra = b_module_lengths(a, certificate.element, range(end + 1, last + 1), modulo, certificate.start, config)
    if any(extra):
        return None
    return SuperficialCertificate(certificate.element, certificate.coefficients, certificate.modulo,
                                  certificate.start, (first, last), certificate.lengths + tuple(extra),
                                  certificate.attempts)


def power_reduction(c: Generators, n: int) -> List[Polynomial]:
    """
    ``c^[n] = (y_1^n, .., y_d^n)``, a reduction of ``a^n`` whenever ``c`` reduces ``a``
    """
    return [y ** n for y in _as_sequence(c)]


def _in_ideal(f: Polynomial, a: Term, config: AnalysisConfig) -> bool:
    if isinstance(a, MonomialIdeal):
        return all(a.contains_exponent(m) for _, m in f.terms)
    return ideal_membership(f, a, config)


def reduction_holds(a: Term, ys: Sequence[Polynomial], r: int, config: Optional[AnalysisConfig] = None) -> bool:
    config = resolve_config(config)
    # Nakayama: c a^r = a^(r+1) at the origin iff c a^r + m a^(r+1) has the colength of a^(r+1)
    upper = term_power(a, r + 1, config)
    floor = term_product(MonomialIdeal.maximal(a.ring), upper, config)
    combined = Ideal(a.ring, _products(ys, term_power(a, r, config)) + ideal_generators(floor))
    return artinian_quotient_length(combined, config) == term_length(upper, config)


def reduction_number(a: Term, c: Generators, config: Optional[AnalysisConfig] = None) -> int:
    """
    Smallest ``r`` with ``c a^r = a^(r+1)``

    Args:
        a (:class:`~blowup.monomial.MonomialIdeal` | :class:`~blowup.groebner.Ideal`): m-primary ideal
        c (:class:`~blowup.groebner.Ideal` | ``list`` of :class:`~blowup.rings.Polynomial`): Candidate reduction

    Raises:
        :class:`~blowup.errors.NotAReductionError` if ``c`` is not inside ``a`` or no ``r <= reduction_max`` works
    """
    config = resolve_config(config)
    ys = _as_sequence(c)
    if not ys or not all(_in_ideal(y, a, config) for y in ys):
        raise NotAReductionError('{} is not contained in {}'.format([str(y) for y in ys], a))
    for r in range(config.reduction_max + 1):
        if reduction_holds(a, ys, r, config):
            return r
    raise NotAReductionError('({}) is not a reduction of {} with r <= {}'.format(
        ', '.join(str(y) for y in ys), a, config.reduction_max))


def sigma_sequence(a: Term, c: Generators, red: Optional[int] = None,
                   config: Optional[AnalysisConfig] = None) -> List[int]:
    """
    ``σ_i = ℓ(a^(i+1) / c a^i)`` for ``i = 0..red``

    Raises:
        :class:`~blowup.errors.ConsistencyError` if some ``σ_i`` is negative or ``σ_red`` is not zero
    """
    config = resolve_config(config)
    ys = _as_sequence(c)
    if red is None:
        red = reduction_number(a, ys, config)
    sigma = []
    for i in range(red + 1):
        # c a^i contains a^(max(i, red)+1) at the origin
        floor = term_power(a, max(i, red) + 1, config)
        product = Ideal(a.ring, _products(ys, term_power(a, i, config)) + ideal_generators(floor))
        sigma.append(artinian_quotient_length(product, config) - term_length(term_power(a, i + 1, config), config))
    if any(s < 0 for s in sigma) or sigma[-1] != 0:
        raise ConsistencyError('invalid σ-sequence {} for {}'.format(sigma, a))
    return sigma


@dataclass(frozen=True)
class ReductionData:
    """
    A verified minimal reduction

    Attributes:
        reduction_generators (``tuple`` of :class:`~blowup.rings.Polynomial`): ``y_1..y_d``
        reduction_number (``int``): ``r`` with ``c a^r = a^(r+1)``
        sigma (``tuple`` of ``int``): ``σ_0..σ_r``
        rng_seed (``int``): Seed the coefficients were drawn with
        certificates (``tuple`` of :class:`SuperficialCertificate`): One per sampled element, empty when ``a`` is
            its own reduction
        attempts (``int``): Number of sequences drawn
    """

    reduction_generators: Tuple[Polynomial, ...]
    reduction_number: int
    sigma: Tuple[int, ...]
    rng_seed: int
    certificates: Tuple[SuperficialCertificate, ...] = ()
    attempts: int = 0

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.reduction_generators[0].ring, self.reduction_generators)

    def to_dict(self) -> dict:
        return {
            'generators': [str(y) for y in self.reduction_generators],
            'reduction_number': self.reduction_number,
            'sigma': list(self.sigma),
            'rng_seed': self.rng_seed,
            'attempts': self.attempts,
            'certificates': [c.to_dict() for c in self.certificates],
        }


def minimal_reduction(a: Term, seed: int = 0, config: Optional[AnalysisConfig] = None,
                      rng: Optional[random.Random] = None) -> ReductionData:
    """
    Minimal reduction of ``a`` generated by a certified superficial sequence

    An ideal with exactly ``d`` generators is its own reduction with ``r = 0``. Otherwise ``y_j`` is sampled
    superficial for ``a`` modulo ``y_1..y_(j-1)``, the reduction number found by ascending search, and each
    certificate extended to ``n = c..c+r+3``.

    Args:
        a (:class:`~blowup.monomial.MonomialIdeal` | :class:`~blowup.groebner.Ideal`): m-primary ideal
        seed (``int``): Seed of the sampling stream, recorded in the result
        config (:class:`~blowup.config.AnalysisConfig`, *optional*): Sampling and search parameters
        rng (``random.Random``, *optional*): Use this stream instead of ``random.Random(seed)``

    Raises:
        :class:`~blowup.errors.NoReductionFoundError` after ``reduction_retries`` failed sequences
    """
    config = resolve_config(config)
    require_m_primary(a, config)
    d = a.ring.dimension
    generators = ideal_generators(a)
    if len(generators) == d:
        r = reduction_number(a, generators, config)
        return ReductionData(tuple(generators), r, tuple(sigma_sequence(a, generators, r, config)), seed)
    rng = rng or random.Random(seed)
    for attempt in range(1, config.reduction_retries + 1):
        ys: List[Polynomial] = []
        certificates: List[SuperficialCertificate] = []
        for _ in range(d):
            certificate = sample_superficial_element(a, rng, ys, config=config)
            certificates.append(certificate)
            ys.append(certificate.element)
        try:
            r = reduction_number(a, ys, config)
        except NotAReductionError as e:
            logger.debug('attempt %d: %s', attempt, e)
            continue
        last = config.superficial_start + r + 3
        extended = [recertify(a, cert, ys[:j], last, config) for j, cert in enumerate(certificates)]
        if any(cert is None for cert in extended):
            logger.debug('attempt %d: certificate failed on the window up to n = %d', attempt, last)
            continue
        sigma = sigma_sequence(a, ys, r, config)
        logger.debug('reduction of %s with r = %d, σ = %s after %d attempts', a, r, sigma, attempt)
        return ReductionData(tuple(ys), r, tuple(sigma), seed, tuple(extended), attempt)
    raise NoReductionFoundError('no minimal reduction of {} within {} attempts'.format(a, config.reduction_retries))


__all__ = [
    'ideal_generators', 'SuperficialCertificate', 'b_module_lengths', 'sample_superficial_element', 'recertify',
    'power_reduction', 'reduction_holds', 'reduction_number', 'sigma_sequence', 'ReductionData', 'minimal_reduction',
]

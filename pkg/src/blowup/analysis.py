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
.. module:: analysis
    :synopsis: Cohen-Macaulay certificates, coefficient identities and the per-instance verdict

The associated graded ring of an m-primary ideal ``a`` with a minimal reduction ``(y_1..y_d)`` is Cohen-Macaulay
iff ``a^n ∩ (y_1..y_j) = (y_1..y_j) a^(n-1)`` for all ``j`` and ``n``. Past ``n = red + 1`` the identity follows from
``a^n = c a^(n-1)``, which makes the certificate finite.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from blowup.config import AnalysisConfig, resolve_config
from blowup.errors import (
    ConsistencyError, DimensionNotSupportedError, HypothesisNotVerifiedError, InputError, ResourceError,
)
from blowup.filtration import (
    AdicFiltration, IntegralClosureFiltration, Term, VeroneseFiltration, as_ideal, ratliff_rush_closure,
    rr_deviation_sequence, term_contains, term_length, term_power,
)
from blowup.groebner import Ideal, ideal_intersection, ideal_membership
from blowup.hilbert import HilbertData, hilbert_coefficients
from blowup.monomial import MonomialIdeal, NormalityReport, integral_closure, normality_report
from blowup.reduction import (
    ReductionData, ideal_generators, minimal_reduction, power_reduction, reduction_holds, reduction_number,
)
from blowup.rings import CoefficientField, Polynomial
from blowup.utils import binomial, rational_to_str

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValabregaVallaCheck:
    j: int
    n: int
    holds: bool
    witness: Optional[str] = None

    def to_dict(self) -> dict:
        return {'j': self.j, 'n': self.n, 'holds': self.holds, 'witness': self.witness}


@dataclass(frozen=True)
class DepthReport:
    """
    Depth information on the associated graded ring

    Attributes:
        depth_ge1 (``bool``): Every power up to the Ratliff-Rush window is Ratliff-Rush closed
        rr_deviation (``list`` of ``int``): ``ℓ(closure(a^(n+1))/a^(n+1))`` over the window
        checks (``tuple`` of :class:`ValabregaVallaCheck`): One per ``(j, n)``
        cm (``bool``): All checks pass
        depth_lower_bound (``int``): Largest ``j`` whose checks pass at every level up to ``j``
        depth_upper_bound (``int``): ``d`` when Cohen-Macaulay, ``d - 1`` otherwise, ``0`` without positive depth
        n_max (``int``): Last ``n`` checked, ``red + 1``
        rationale (``str``): Why the finite table decides the question
    """

    depth_ge1: bool
    rr_deviation: Tuple[int, ...]
    checks: Tuple[ValabregaVallaCheck, ...]
    cm: bool
    depth_lower_bound: int
    depth_upper_bound: int
    n_max: int
    rationale: str = ''

    @property
    def witnesses(self) -> List[ValabregaVallaCheck]:
        return [c for c in self.checks if not c.holds]

    def to_dict(self) -> dict:
        return {
            'depth_ge1': self.depth_ge1,
            'rr_deviation': list(self.rr_deviation),
            'cm': self.cm,
            'depth_bounds': [self.depth_lower_bound, self.depth_upper_bound],
            'n_max': self.n_max,
            'checks': [c.to_dict() for c in self.checks],
            'rationale': self.rationale,
        }


def _vv_table(a: Term, ys: Sequence[Polynomial], red: int,
              config: AnalysisConfig) -> Tuple[List[ValabregaVallaCheck], int]:
    checks = []
    lower = 0
    for j in range(1, len(ys) + 1):
        level_ok = True
        for n in range(1, red + 2):
            previous = term_power(a, n - 1, config)
            product = Ideal(a.ring, [y * g for y in ys[:j] for g in ideal_generators(previous)])
            meet = ideal_intersection(as_ideal(term_power(a, n, config)), Ideal(a.ring, ys[:j]), floor=product,
                                      config=config)
            witness = next((g for g in meet.generators if not ideal_membership(g, product, config)), None)
            checks.append(ValabregaVallaCheck(j, n, witness is None, None if witness is None else str(witness)))
            if witness is not None:
                logger.debug('%s: a^%d ∩ (y_1..y_%d) has %s outside (y) a^%d', a, n, j, witness, n - 1)
                level_ok = False
        if level_ok and lower == j - 1:
            lower = j
    return checks, lower


def valabrega_valla_certificate(a: Term, reduction: ReductionData,
                                config: Optional[AnalysisConfig] = None) -> DepthReport:
    """
    Check ``a^n ∩ (y_1..y_j) = (y_1..y_j) a^(n-1)`` for ``j = 1..d`` and ``n = 1..red+1``

    Args:
        a (:class:`~blowup.monomial.MonomialIdeal` | :class:`~blowup.groebner.Ideal`): m-primary ideal
        reduction (:class:`~blowup.reduction.ReductionData`): Minimal reduction generated by a superficial sequence

    Raises:
        :class:`~blowup.errors.ConsistencyError` if the table certifies Cohen-Macaulayness while some power is not
        Ratliff-Rush closed
    """
    config = resolve_config(config)
    d = a.ring.dimension
    red = reduction.reduction_number
    deviation = rr_deviation_sequence(a, config.rr_window, config)
    depth_ge1 = not any(deviation)
    checks, lower = _vv_table(a, reduction.reduction_generators, red, config)
    cm = all(c.holds for c in checks)
    if cm and not depth_ge1:
        raise ConsistencyError('{}: Valabrega-Valla certifies CM but Ratliff-Rush deviation is {}'.format(
            a, deviation))
    if depth_ge1:
        lower = max(lower, 1)
    upper = d if cm else (d - 1 if depth_ge1 else 0)
    rationale = ('checked n = 1..{0}; for n > {0} a^n = c a^(n-1) because the reduction number is {1}, so '
                 'a^n ∩ (y) = (y) a^(n-1) follows from the checked levels'.format(red + 1, red))
    return DepthReport(depth_ge1, tuple(deviation), tuple(checks), cm, lower, upper, red + 1, rationale)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    expected: Any
    actual: Any

    @property
    def holds(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        def dump(v):
            return rational_to_str(v) if isinstance(v, (int, Fraction)) else v
        return {'name': self.name, 'expected': dump(self.expected), 'actual': dump(self.actual), 'holds': self.holds}


@dataclass(frozen=True)
class IdentityReport:
    """
    ``e_i`` against the σ-sums ``Σ C(k, i-1) σ_k`` and the h-polynomial shape

    Attributes:
        hypothesis (``str``): Which depth hypothesis was verified
        checks (``tuple`` of :class:`IdentityCheck`): ``e1``, ``e2``, ``e3`` and ``h``
        sigma2_zero (``bool`` | ``None``): ``σ_2 = 0``, filled in when ``e_3 = 0``
        cube_from_square (``bool`` | ``None``): ``a^3 = c a^2``, filled in when ``e_3 = 0``
    """

    hypothesis: str
    checks: Tuple[IdentityCheck, ...]
    sigma2_zero: Optional[bool] = None
    cube_from_square: Optional[bool] = None

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks) and self.sigma2_zero is not False and \
            self.cube_from_square is not False

    def to_dict(self) -> dict:
        return {
            'hypothesis': self.hypothesis,
            'checks': [c.to_dict() for c in self.checks],
            'sigma2_zero': self.sigma2_zero,
            'cube_from_square': self.cube_from_square,
            'holds': self.holds,
        }


def expected_h_polynomial(colength: int, sigma: Sequence[int]) -> List[int]:
    """
    ``ℓ(A/a) + Σ (σ_(i-1) - σ_i) t^i``, trailing zeros dropped
    """
    sigma = list(sigma) + [0]
    h = [colength] + [sigma[i - 1] - sigma[i] for i in range(1, len(sigma))]
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


def coefficient_identities(a: Term, reduction: Optional[ReductionData] = None, hilbert: Optional[HilbertData] = None,
                           depth: Optional[DepthReport] = None, config: Optional[AnalysisConfig] = None,
                           seed: int = 0) -> IdentityReport:
    """
    Compare ``e_1, e_2, e_3`` with ``Σ σ_i``, ``Σ i σ_i`` and ``Σ C(i, 2) σ_i``

    The identities are asserted only when the depth of the associated graded ring is at least ``d - 1``: through the
    Ratliff-Rush deviation for ``d = 2`` and through the Valabrega-Valla table for ``d >= 3``.

    Raises:
        :class:`~blowup.errors.HypothesisNotVerifiedError` if the depth hypothesis cannot be verified
    """
    config = resolve_config(config)
    d = a.ring.dimension
    reduction = reduction or minimal_reduction(a, seed, config)
    if depth is None:
        depth = valabrega_valla_certificate(a, reduction, config)
    if d == 1:
        hypothesis = 'depth >= 0'
    elif d == 2:
        if not depth.depth_ge1:
            raise HypothesisNotVerifiedError('{}: depth G >= 1 not verified, deviation {}'.format(
                a, list(depth.rr_deviation)))
        hypothesis = 'depth >= 1 (Ratliff-Rush deviation zero on n = 1..{})'.format(len(depth.rr_deviation))
    else:
        if depth.depth_lower_bound < d - 1:
            raise HypothesisNotVerifiedError('{}: depth G >= {} not verified, lower bound {}'.format(
                a, d - 1, depth.depth_lower_bound))
        hypothesis = 'depth >= {} (Valabrega-Valla table)'.format(depth.depth_lower_bound)
    if hilbert is None or hilbert.e is None or len(hilbert.e) < 4:
        hilbert = hilbert_coefficients(AdicFiltration(a, config), up_to=max(3, d), config=config)
    sigma = list(reduction.sigma)
    e = hilbert.e
    checks = [
        IdentityCheck('e{}'.format(i), sum(binomial(k, i - 1) * s for k, s in enumerate(sigma)), e[i])
        for i in (1, 2, 3)
    ]
    trimmed = list(hilbert.h_vector)
    while len(trimmed) > 1 and trimmed[-1] == 0:
        trimmed.pop()
    checks.append(IdentityCheck('h', expected_h_polynomial(term_length(a, config), sigma), trimmed))
    sigma2_zero = cube_from_square = None
    if e[3] == 0 and all(c.holds for c in checks):
        sigma2_zero = (sigma + [0, 0, 0])[2] == 0
        cube_from_square = reduction_holds(a, reduction.reduction_generators, 2, config)
        logger.debug('%s: e_3 = 0, σ_2 = 0 is %s, a^3 = c a^2 is %s', a, sigma2_zero, cube_from_square)
    return IdentityReport(hypothesis, tuple(checks), sigma2_zero, cube_from_square)


@dataclass(frozen=True)
class InequalityReport:
    """
    Sign conditions on the Hilbert coefficients of the adic and integral closure filtrations

    Attributes:
        signs (``dict``): ``e1``, ``e2``, ``e1*``, ``e2*``, ``e3*`` mapped to ``value >= 0``
        parameter_ideal (``bool``): ``a`` is generated by ``d`` elements
        northcott (``bool``): ``e_1 = 0`` exactly when ``a`` is a parameter ideal
        power_reductions (``tuple``): ``(n, red(a^n))`` pairs, only for ``d = 2`` with ``e_2 = 0``
        window_note (``str``): Scope of the power check
    """

    signs: Dict[str, bool]
    parameter_ideal: bool
    northcott: bool
    power_reductions: Tuple[Tuple[int, int], ...] = ()
    window_note: str = ''

    @property
    def narita(self) -> Optional[bool]:
        if not self.power_reductions:
            return None
        return all(r <= 1 for _, r in self.power_reductions)

    @property
    def holds(self) -> bool:
        # red(a^n) <= 1 is only expected for n >> 0; narita is reported, not gated
        return all(self.signs.values()) and self.northcott

    def to_dict(self) -> dict:
        return {
            'signs': dict(self.signs),
            'parameter_ideal': self.parameter_ideal,
            'northcott': self.northcott,
            'power_reductions': [list(p) for p in self.power_reductions],
            'narita': self.narita,
            'holds': self.holds,
            'note': self.window_note,
        }


def power_reduction_numbers(a: Term, reduction: ReductionData, window: int,
                            config: Optional[AnalysisConfig] = None) -> List[Tuple[int, int]]:
    """
    ``red(a^n)`` with respect to ``c^[n]`` for ``n = 1..window``
    """
    config = resolve_config(config)
    result = []
    for n in range(1, window + 1):
        ys = power_reduction(reduction.reduction_generators, n)
        result.append((n, reduction_number(term_power(a, n, config), ys, config)))
    return result


def itoh_inequalities(a: MonomialIdeal, adic: Optional[HilbertData] = None, closure: Optional[HilbertData] = None,
                      reduction: Optional[ReductionData] = None, config: Optional[AnalysisConfig] = None,
                      seed: int = 0) -> InequalityReport:
    """
    Check ``e_1, e_2 >= 0`` for ``a`` and ``e_1*, e_2*, e_3* >= 0`` for its integral closure filtration

    In two variables with ``e_2 = 0`` the reduction numbers of ``a^n`` are also checked to be at most one on the
    configured power window.
    """
    config = resolve_config(config)
    if not isinstance(a, MonomialIdeal):
        raise InputError('sign checks need a monomial ideal')
    d = a.dimension
    up_to = max(3, d)
    if adic is None:
        adic = hilbert_coefficients(AdicFiltration(a, config), up_to=up_to, config=config)
    if closure is None:
        closure = hilbert_coefficients(IntegralClosureFiltration(a, config), up_to=up_to, config=config)
    e, star = adic.e, closure.e
    signs = {'e1': e[1] >= 0, 'e2': e[2] >= 0, 'e1*': star[1] >= 0, 'e2*': star[2] >= 0, 'e3*': star[3] >= 0}
    parameter = len(a.generators) == d
    northcott = (e[1] == 0) == parameter
    powers: List[Tuple[int, int]] = []
    note = ''
    if d == 2 and e[2] == 0:
        reduction = reduction or minimal_reduction(a, seed, config)
        powers = power_reduction_numbers(a, reduction, config.power_window, config)
        note = 'red(a^n) <= 1 checked for n = 1..{} only'.format(config.power_window)
    for name, ok in signs.items():
        if not ok:
            logger.warning('%s: sign condition %s fails', a, name)
    return InequalityReport(signs, parameter, northcott, tuple(powers), note)


def closure_intersection_identity(a: Term, reduction: ReductionData,
                                  config: Optional[AnalysisConfig] = None) -> Tuple[bool, Optional[str]]:
    """
    ``a^2 ∩ c = c a``, expected whenever ``a`` is integrally closed

    Returns:
        ``(holds, witness)`` with a generator of ``a^2 ∩ c`` outside ``c a`` as the witness
    """
    config = resolve_config(config)
    ys = reduction.reduction_generators
    product = Ideal(a.ring, [y * g for y in ys for g in ideal_generators(a)])
    meet = ideal_intersection(as_ideal(term_power(a, 2, config)), Ideal(a.ring, ys), floor=product, config=config)
    witness = next((g for g in meet.generators if not ideal_membership(g, product, config)), None)
    return witness is None, None if witness is None else str(witness)


def power_depth_probe(a: Term, reduction: ReductionData,
                      config: Optional[AnalysisConfig] = None) -> List[Dict[str, Any]]:
    """
    Depth bounds of the associated graded rings of ``a^l``, ``l = 2..power_depth_max``, from the Valabrega-Valla
    table of ``(a^l, c^[l])``; reported only
    """
    config = resolve_config(config)
    result = []
    for l in range(2, config.power_depth_max + 1):
        power = term_power(a, l, config)
        ys = power_reduction(reduction.reduction_generators, l)
        red = reduction_number(power, ys, config)
        checks, lower = _vv_table(power, ys, red, config)
        result.append({'l': l, 'reduction_number': red, 'depth_lower_bound': lower,
                       'cm': all(c.holds for c in checks)})
    return result


def veronese_scaling(F: AdicFiltration, base: HilbertData, degrees: Sequence[int],
                     config: Optional[AnalysisConfig] = None) -> List[Dict[str, Any]]:
    """
    ``e_0(a^l) = l^d e_0(a)`` and ``e_d(a^l) = e_d(a)`` through the Veronese filtrations of ``F``
    """
    config = resolve_config(config)
    d = F.dimension
    result = []
    for l in degrees:
        data = hilbert_coefficients(VeroneseFiltration(F, l), up_to=d, config=config)
        # P_{a^l}(n) = P_a(l(n+1)-1); at n = -1 both sides give (-1)^d e_d
        relation = all(data.hilbert_polynomial(n) == base.hilbert_polynomial(l * (n + 1) - 1) for n in range(d + 1))
        entry = {
            'l': l,
            'e0': int(data.e[0]),
            'expected_e0': l ** d * int(base.e[0]),
            'ed': rational_to_str(data.e[d]),
            'expected_ed': rational_to_str(base.e[d]),
            'polynomial_relation': relation,
        }
        entry['holds'] = (entry['e0'] == entry['expected_e0'] and entry['ed'] == entry['expected_ed'] and relation)
        result.append(entry)
    return result


class Classification(Enum):
    """
    Members:
        * VERIFIED = 'VerifiedInstance'
        * VACUOUS = 'VacuousInstance'
        * COUNTEREXAMPLE_CANDIDATE = 'COUNTEREXAMPLE-CANDIDATE'
        * UNRESOLVED = 'Unresolved'
    """

    VERIFIED = 'VerifiedInstance'
    VACUOUS = 'VacuousInstance'
    COUNTEREXAMPLE_CANDIDATE = 'COUNTEREXAMPLE-CANDIDATE'
    UNRESOLVED = 'Unresolved'


@dataclass(frozen=True)
class ItohVerdict:
    """
    Everything needed to re-derive whether a normal ideal with ``e_3 = 0`` has a Cohen-Macaulay associated graded
    ring

    Attributes:
        classification (:class:`Classification`): Verdict
        theorem_applicable (``bool``): Normal and ``e_3 = 0``
        conclusion_holds (``bool``): The Valabrega-Valla table certifies Cohen-Macaulayness
        failed_stage (``str`` | ``None``): Stage that ran out of resources, for :attr:`Classification.UNRESOLVED`
    """

    ideal: str
    dimension: int
    seed: int
    classification: Classification
    theorem_applicable: bool = False
    conclusion_holds: bool = False
    normality: Optional[NormalityReport] = None
    adic: Optional[HilbertData] = None
    closure: Optional[HilbertData] = None
    reduction: Optional[ReductionData] = None
    depth: Optional[DepthReport] = None
    identities: Optional[IdentityReport] = None
    inequalities: Optional[InequalityReport] = None
    power_reductions: Tuple[Tuple[int, int], ...] = ()
    closure_intersection: Optional[bool] = None
    rr_in_closure: Optional[bool] = None
    power_depth: Tuple[Dict[str, Any], ...] = ()
    failed_stage: Optional[str] = None
    error: Optional[str] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def e(self) -> Optional[List[Fraction]]:
        return None if self.adic is None else self.adic.e

    @property
    def power_bound_holds(self) -> Optional[bool]:
        if not self.power_reductions:
            return None
        return all(r <= 2 for _, r in self.power_reductions)

    def to_dict(self) -> dict:
        def dump(value):
            return None if value is None else value.to_dict()
        return {
            'ideal': self.ideal,
            'dimension': self.dimension,
            'seed': self.seed,
            'classification': self.classification.value,
            'theorem_applicable': self.theorem_applicable,
            'conclusion_holds': self.conclusion_holds,
            'normality': dump(self.normality),
            'adic': dump(self.adic),
            'closure': dump(self.closure),
            'reduction': dump(self.reduction),
            'depth': dump(self.depth),
            'identities': dump(self.identities),
            'inequalities': dump(self.inequalities),
            'power_reductions': [list(p) for p in self.power_reductions],
            'power_bound_holds': self.power_bound_holds,
            'closure_intersection': self.closure_intersection,
            'rr_in_closure': self.rr_in_closure,
            'power_depth': list(self.power_depth),
            'failed_stage': self.failed_stage,
            'error': self.error,
            'notes': list(self.notes),
        }


def field_caveat(coefficient_field: CoefficientField) -> Optional[str]:
    """
    Note carried by every report computed over a prime field, ``None`` over Q
    """
    if coefficient_field.is_rational:
        return None
    return ('computed over {}: reductions are sampled from a finite field, the results are exact there but the '
            'theory assumes an infinite residue field'.format(coefficient_field.name))


def itoh_verdict(a: MonomialIdeal, seed: int = 0, config: Optional[AnalysisConfig] = None) -> ItohVerdict:
    """
    Run the whole pipeline on one ideal

    Args:
        a (:class:`~blowup.monomial.MonomialIdeal`): m-primary monomial ideal in at most three variables
        seed (``int``): Seed of the reduction sampling
        config (:class:`~blowup.config.AnalysisConfig`, *optional*): Budgets and windows

    Returns:
        :class:`ItohVerdict`; any resource error turns into :attr:`Classification.UNRESOLVED` naming its stage

    Raises:
        :class:`~blowup.errors.DimensionNotSupportedError` for more than three variables
        :class:`~blowup.errors.ConsistencyError` if independent computations disagree
    """
    config = resolve_config(config)
    if not isinstance(a, MonomialIdeal):
        raise InputError('the verdict pipeline needs a monomial ideal')
    d = a.dimension
    if d > 3:
        raise DimensionNotSupportedError('verdicts are computed for at most 3 variables, got {}'.format(d))
    a.require_m_primary()
    up_to = max(3, d)
    notes: List[str] = []
    caveat = field_caveat(a.ring.field)
    if caveat:
        notes.append(caveat)
    partial: Dict[str, Any] = {}
    stage = 'normality'
    try:
        partial['normality'] = normality = normality_report(a, config.normality_window_for(d))
        stage = 'hilbert'
        adic_filtration = AdicFiltration(a, config)
        partial['adic'] = adic = hilbert_coefficients(adic_filtration, up_to=up_to, config=config)
        stage = 'closure-hilbert'
        partial['closure'] = closure = hilbert_coefficients(IntegralClosureFiltration(a, config), up_to=up_to,
                                                            config=config)
        stage = 'reduction'
        partial['reduction'] = reduction = minimal_reduction(a, seed, config)
        stage = 'depth'
        partial['depth'] = depth = valabrega_valla_certificate(a, reduction, config)
        stage = 'identities'
        try:
            partial['identities'] = coefficient_identities(a, reduction, adic, depth, config)
        except HypothesisNotVerifiedError as e:
            notes.append(str(e))
        stage = 'inequalities'
        partial['inequalities'] = itoh_inequalities(a, adic, closure, reduction, config)
        stage = 'ratliff-rush'
        partial['rr_in_closure'] = term_contains(integral_closure(a), ratliff_rush_closure(a, 1, config), config)
        applicable = normality.is_normal and adic.e[3] == 0
        if applicable:
            stage = 'powers'
            partial['power_reductions'] = tuple(power_reduction_numbers(a, reduction, config.power_window, config))
            notes.append('red(a^n) <= 2 checked for n = 1..{} only'.format(config.power_window))
        if normality.first_failure != 1:
            stage = 'intersection'
            holds, witness = closure_intersection_identity(a, reduction, config)
            if not holds:
                raise ConsistencyError('{} is integrally closed but a^2 ∩ c contains {} outside c a'.format(
                    a, witness))
            partial['closure_intersection'] = holds
        if config.power_depth_probe:
            stage = 'power-depth'
            partial['power_depth'] = tuple(power_depth_probe(a, reduction, config))
    except ResourceError as e:
        e.stage = e.stage or stage
        logger.warning('%s: unresolved at stage %s: %s', a, stage, e)
        return ItohVerdict(str(a), d, seed, Classification.UNRESOLVED, failed_stage=stage, error=str(e),
                           notes=tuple(notes), **partial)
    if applicable:
        classification = Classification.VERIFIED if depth.cm else Classification.COUNTEREXAMPLE_CANDIDATE
    else:
        classification = Classification.VACUOUS
    if classification is Classification.COUNTEREXAMPLE_CANDIDATE:
        logger.error('%s: normal with e_3 = 0 but the Valabrega-Valla table fails: %s', a,
                     [c.to_dict() for c in depth.witnesses])
    return ItohVerdict(str(a), d, seed, classification, theorem_applicable=applicable, conclusion_holds=depth.cm,
                       notes=tuple(notes), **partial)


__all__ = [
    'ValabregaVallaCheck', 'DepthReport', 'valabrega_valla_certificate', 'IdentityCheck', 'IdentityReport',
    'expected_h_polynomial', 'coefficient_identities', 'InequalityReport', 'power_reduction_numbers',
    'itoh_inequalities', 'closure_intersection_identity', 'power_depth_probe', 'veronese_scaling', 'Classification',
    'ItohVerdict', 'field_caveat', 'itoh_verdict',
]

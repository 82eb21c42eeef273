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
.. module:: corpus
    :synopsis: Seeded corpora of monomial ideals and the batch runner

Workers receive plain ``dict`` tasks and return plain ``dict`` records, so nothing but JSON-compatible data crosses
process boundaries and a record can be replayed from its serialization alone.
"""

import itertools
import logging
import multiprocessing
import random
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from blowup.analysis import Classification, itoh_verdict, veronese_scaling
from blowup.config import AnalysisConfig, resolve_config
from blowup.errors import InputError, ResourceError
from blowup.filtration import AdicFiltration
from blowup.monomial import MonomialIdeal, default_ring, normality_report
from blowup.rings import CoefficientField, RingDescriptor
from blowup.utils import derive_seed, get_real_elapsed_time

logger = logging.getLogger(__name__)

EXHAUSTIVE_MONOMIAL_LIMIT = 20


@dataclass(frozen=True)
class CorpusSpec:
    """
    What to generate

    Args:
        dimension (``int``): Number of variables, 2 or 3
        max_degree (``int``): Largest generator degree ``D``, at most 8
        count (``int`` | ``None``): Number of ideals, ``None`` for every ideal of the box
        seed (``int``): Generator seed
        field (``str``): ``q`` or ``fp:<p>``
        require_normal (``bool``): Keep only ideals whose powers are integrally closed on the normality window

    Raises:
        :class:`~blowup.errors.InputError` on out-of-range parameters
    """

    dimension: int = 3
    max_degree: int = 5
    count: Optional[int] = 200
    seed: int = 0
    field: str = 'q'
    require_normal: bool = False

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise InputError('corpus dimension must be 2 or 3, got {}'.format(self.dimension))
        if not 1 <= self.max_degree <= 8:
            raise InputError('max degree must lie in 1..8, got {}'.format(self.max_degree))
        if self.count is not None and not 0 <= self.count <= 10 ** 5:
            raise InputError('count must lie in 0..100000, got {}'.format(self.count))
        CoefficientField.parse(self.field)

    @property
    def ring(self) -> RingDescriptor:
        return default_ring(self.dimension, CoefficientField.parse(self.field))


def _random_monomial(rng: random.Random, d: int, D: int) -> Tuple[int, ...]:
    exponents = [0] * d
    for _ in range(rng.randint(1, D)):
        exponents[rng.randrange(d)] += 1
    return tuple(exponents)


def _sampled(spec: CorpusSpec, ring: RingDescriptor) -> Iterator[MonomialIdeal]:
    rng = random.Random(spec.seed)
    d, D = spec.dimension, spec.max_degree
    for _ in itertools.count():
        generators = []
        for i in range(d):
            pure = [0] * d
            pure[i] = rng.randint(1, D)
            generators.append(tuple(pure))
        generators += [_random_monomial(rng, d, D) for _ in range(rng.randint(0, 2 * d))]
        yield MonomialIdeal(ring, generators)


def _antichains(monomials: Sequence[Tuple[int, ...]], chosen: List[Tuple[int, ...]], start: int):
    yield list(chosen)
    for k in range(start, len(monomials)):
        m = monomials[k]
        if any(all(x >= y for x, y in zip(m, c)) or all(y >= x for x, y in zip(m, c)) for c in chosen):
            continue
        chosen.append(m)
        yield from _antichains(monomials, chosen, k + 1)
        chosen.pop()


def _exhaustive(spec: CorpusSpec, ring: RingDescriptor) -> Iterator[MonomialIdeal]:
    d, D = spec.dimension, spec.max_degree
    monomials = sorted((v for v in itertools.product(range(D + 1), repeat=d) if 0 < sum(v) <= D),
                       key=lambda v: (sum(v), tuple(-x for x in v)))
    if len(monomials) > EXHAUSTIVE_MONOMIAL_LIMIT:
        raise InputError('exhaustive enumeration is limited to {} monomials, (d, D) = ({}, {}) has {}'.format(
            EXHAUSTIVE_MONOMIAL_LIMIT, d, D, len(monomials)))
    ideals = []
    for chain in _antichains(monomials, [], 0):
        if chain:
            ideal = MonomialIdeal(ring, chain)
            if ideal.is_m_primary():
                ideals.append(ideal)
    ideals.sort(key=lambda I: (len(I.generators), sorted(sum(g) for g in I.generators), I.generators))
    return iter(ideals)


def generate_corpus(spec: CorpusSpec) -> Iterator[MonomialIdeal]:
    """
    Deterministic stream of distinct m-primary monomial ideals

    Seeded mode draws a pure power ``x_i^k_i`` (``k_i <= D``) of every variable plus ``0..2d`` random monomials of
    degree at most ``D``; exhaustive mode (``count=None``) lists every m-primary ideal generated in degrees ``<= D``.
    A filter that cannot be met within the attempt budget ends the stream early with a warning.
    """
    ring = spec.ring
    source = _exhaustive(spec, ring) if spec.count is None else _sampled(spec, ring)
    limit = spec.count
    budget = None if limit is None else 50 * limit + 1000
    seen = set()
    emitted = attempts = 0
    for ideal in source:
        if limit is not None and emitted >= limit:
            return
        attempts += 1
        if budget is not None and attempts > budget:
            logger.warning('corpus is partial: %d of %d ideals after %d attempts', emitted, limit, budget)
            return
        if ideal.generators in seen or not ideal.is_m_primary():
            continue
        seen.add(ideal.generators)
        if spec.require_normal and not normality_report(ideal).is_normal:
            continue
        emitted += 1
        yield ideal


@dataclass(frozen=True)
class CorpusRecord:
    """
    Self-contained result of one instance

    Attributes:
        id (``int``): Instance index
        ideal (``str``): Canonical form of the ideal
        generators (``list``): Exponent vectors of the minimal generators
        variables (``list`` of ``str``): Variable names
        field (``str``): Coefficient field
        seed (``int``): Seed of the reduction sampling
        verdict (``dict`` | ``None``): Serialized :class:`~blowup.analysis.ItohVerdict`
        veronese (``list``): Veronese scaling checks
        error (``dict`` | ``None``): ``type`` and ``message`` of an error that stopped the pipeline
        timings (``dict`` | ``None``): Wall time in seconds, only when requested
        config (``dict`` | ``None``): Analysis config the record was produced with
    """

    id: int
    ideal: str
    generators: Tuple[Tuple[int, ...], ...]
    variables: Tuple[str, ...]
    field: str
    seed: int
    verdict: Optional[Dict[str, Any]] = None
    veronese: Tuple[Dict[str, Any], ...] = ()
    error: Optional[Dict[str, str]] = None
    timings: Optional[Dict[str, float]] = None
    config: Optional[Dict[str, Any]] = None

    @property
    def dimension(self) -> int:
        return len(self.variables)

    @property
    def classification(self) -> Optional[str]:
        return None if self.verdict is None else self.verdict['classification']

    def _coefficients(self, key: str) -> Optional[List[str]]:
        if self.verdict is None or self.verdict.get(key) is None:
            return None
        return self.verdict[key]['e']

    @property
    def e(self) -> Optional[List[str]]:
        return self._coefficients('adic')

    @property
    def e_star(self) -> Optional[List[str]]:
        return self._coefficients('closure')

    @property
    def reduction_number(self) -> Optional[int]:
        if self.verdict is None or self.verdict.get('reduction') is None:
            return None
        return self.verdict['reduction']['reduction_number']

    @property
    def normal(self) -> Optional[bool]:
        if self.verdict is None or self.verdict.get('normality') is None:
            return None
        return self.verdict['normality']['verdict'].startswith('Normal(')

    @property
    def cm(self) -> Optional[bool]:
        if self.verdict is None or self.verdict.get('depth') is None:
            return None
        return self.verdict['depth']['cm']

    def to_dict(self) -> dict:
        result = {
            'id': self.id,
            'ideal': self.ideal,
            'generators': [list(g) for g in self.generators],
            'variables': list(self.variables),
            'field': self.field,
            'seed': self.seed,
            'verdict': self.verdict,
            'veronese': list(self.veronese),
            'error': self.error,
        }
        if self.config is not None:
            result['config'] = self.config
        if self.timings is not None:
            result['timings'] = self.timings
        return result

    @classmethod
    def from_dict(cls, data: dict) -> 'CorpusRecord':
        return cls(
            id=data['id'],
            ideal=data['ideal'],
            generators=tuple(tuple(g) for g in data['generators']),
            variables=tuple(data['variables']),
            field=data['field'],
            seed=data['seed'],
            verdict=data.get('verdict'),
            veronese=tuple(data.get('veronese', ())),
            error=data.get('error'),
            timings=data.get('timings'),
            config=data.get('config'),
        )


def make_task(index: int, ideal: MonomialIdeal, seed: int, config: AnalysisConfig, timings: bool = False) -> dict:
    return {
        'id': index,
        'generators': [list(g) for g in ideal.generators],
        'variables': list(ideal.ring.variable_names),
        'field': ideal.ring.field.name,
        'seed': seed,
        'config': config.to_dict(),
        'timings': timings,
    }


def analyze_task(task: dict) -> dict:
    """
    Full pipeline on one task, errors captured in the record
    """
    ring = RingDescriptor(tuple(task['variables']), CoefficientField.parse(task['field']))
    ideal = MonomialIdeal(ring, task['generators'])
    config = AnalysisConfig(task['config'])
    start = get_real_elapsed_time()
    verdict = None
    veronese: List[Dict[str, Any]] = []
    error = None
    try:
        result = itoh_verdict(ideal, task['seed'], config)
        verdict = result.to_dict()
        if result.classification is not Classification.UNRESOLVED and config.veronese_degrees:
            try:
                veronese = veronese_scaling(AdicFiltration(ideal, config), result.adic, config.veronese_degrees,
                                            config)
            except ResourceError as e:
                logger.warning('%s: Veronese checks skipped: %s', ideal, e)
                veronese = [{'error': str(e)}]
    except Exception as e:
        logger.exception('instance %d (%s) failed', task['id'], ideal)
        error = {'type': type(e).__name__, 'message': str(e)}
    record = CorpusRecord(
        id=task['id'],
        ideal=str(ideal),
        generators=tuple(tuple(g) for g in ideal.generators),
        variables=tuple(task['variables']),
        field=task['field'],
        seed=task['seed'],
        verdict=verdict,
        veronese=tuple(veronese),
        error=error,
        timings={'total': round(get_real_elapsed_time() - start, 3)} if task.get('timings') else None,
        config=config.to_dict(),
    )
    return record.to_dict()


CorpusInput = Union[Iterable[MonomialIdeal], Iterable[Tuple[int, MonomialIdeal]]]


def run_analysis(corpus: CorpusInput, config: Optional[AnalysisConfig] = None, seed: int = 0, jobs: int = 1,
                 timings: bool = False, progress: bool = False) -> List[CorpusRecord]:
    """
    Analyze every ideal of ``corpus`` independently

    Args:
        corpus: Ideals, or ``(id, ideal)`` pairs to keep given ids
        config (:class:`~blowup.config.AnalysisConfig`, *optional*): Shared by every task
        seed (``int``): Corpus seed; instance ``i`` samples with ``seed ^ i``
        jobs (``int``): Worker processes, ``1`` runs in this process
        timings (``bool``): Record wall time per instance (breaks byte-exact output)
        progress (``bool``): Show a progress bar on stderr

    Returns:
        ``list`` of :class:`CorpusRecord` ordered by id regardless of completion order
    """
    config = resolve_config(config)
    tasks = []
    for index, item in enumerate(corpus):
        ident, ideal = item if isinstance(item, tuple) else (index, item)
        tasks.append(make_task(ident, ideal, derive_seed(seed, ident), config, timings))
    results: List[dict] = []
    bar = tqdm(total=len(tasks), disable=not progress, unit='ideal')
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            for result in pool.imap_unordered(analyze_task, tasks):
                results.append(result)
                bar.update()
    else:
        for task in tasks:
            results.append(analyze_task(task))
            bar.update()
    bar.close()
    results.sort(key=lambda r: r['id'])
    return [CorpusRecord.from_dict(r) for r in results]


def replay_record(record: Union[CorpusRecord, dict], config: Optional[AnalysisConfig] = None) -> CorpusRecord:
    """
    Re-run the pipeline from a record's ideal and seed

    Args:
        record (:class:`CorpusRecord` | ``dict``): Stored record
        config (:class:`~blowup.config.AnalysisConfig`, *optional*): Overrides the config stored in the record
    """
    if isinstance(record, dict):
        record = CorpusRecord.from_dict(record)
    if config is None:
        config = AnalysisConfig(record.config) if record.config is not None else resolve_config(None)
    ring = RingDescriptor(record.variables, CoefficientField.parse(record.field))
    ideal = MonomialIdeal(ring, record.generators)
    task = make_task(record.id, ideal, record.seed, config, record.timings is not None)
    return CorpusRecord.from_dict(analyze_task(task))


__all__ = [
    'CorpusSpec', 'generate_corpus', 'CorpusRecord', 'make_task', 'analyze_task', 'run_analysis', 'replay_record',
]

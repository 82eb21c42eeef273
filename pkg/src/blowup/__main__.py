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

import argparse
import json
import logging
import sys
from typing import Any, Dict, Iterator, List, Optional, TextIO, Tuple, Union

from blowup import __version__
from blowup.analysis import Classification, coefficient_identities, field_caveat, valabrega_valla_certificate
from blowup.config import AnalysisConfig
from blowup.corpus import CorpusRecord, CorpusSpec, generate_corpus, replay_record, run_analysis
from blowup.errors import (
    ConfigurationError, DimensionNotSupportedError, HypothesisNotVerifiedError, InputError, ResourceError,
)
from blowup.filtration import AdicFiltration, require_m_primary
from blowup.groebner import Ideal
from blowup.hilbert import hilbert_coefficients
from blowup.monomial import MonomialIdeal
from blowup.parser import format_polynomial
from blowup.reduction import minimal_reduction
from blowup.report import aggregate, emit_report, record_violations
from blowup.rings import CoefficientField, Polynomial, RingDescriptor
from blowup.utils import get_log_file_path

logger = logging.getLogger('blowup')

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_COUNTEREXAMPLE = 4


def load_ideal(data: Dict[str, Any], config: Optional[AnalysisConfig] = None) -> Union[MonomialIdeal, Ideal]:
    """
    Build an ideal from the JSON input schema ``{"vars": [...], "field": "Q", "generators": ["x^2", ...]}``

    Returns:
        :class:`~blowup.monomial.MonomialIdeal` when every generator is a monomial, else
        :class:`~blowup.groebner.Ideal`

    Raises:
        :class:`~blowup.errors.InputError` on a malformed object or generator
    """
    if not isinstance(data, dict):
        raise InputError('an ideal is a JSON object, got {}'.format(type(data).__name__))
    try:
        names, generators = data['vars'], data['generators']
    except KeyError as e:
        raise InputError('ideal input is missing {}'.format(e)) from None
    if not isinstance(names, list) or not isinstance(generators, list) or not generators:
        raise InputError('"vars" and "generators" must be non-empty lists')
    prime = None if config is None else config.default_prime
    ring = RingDescriptor(tuple(names), CoefficientField.parse(str(data.get('field', 'q')), prime))
    cap = None if config is None else config.exponent_cap
    ideal = Ideal.from_strings(ring, [str(g) for g in generators], cap)
    if ideal.is_zero():
        raise InputError('every generator is zero')
    if ideal.is_monomial():
        return MonomialIdeal.from_ideal(ideal)
    return ideal


def ideal_to_input(ideal: MonomialIdeal, ident: Optional[int] = None) -> Dict[str, Any]:
    result: Dict[str, Any] = {} if ident is None else {'id': ident}
    result.update({
        'vars': list(ideal.ring.variable_names),
        'field': ideal.ring.field.name,
        'generators': [format_polynomial(Polynomial.monomial(ideal.ring, g)) for g in ideal.generators],
    })
    return result


def read_corpus(stream: TextIO, config: AnalysisConfig) -> Iterator[Tuple[int, MonomialIdeal]]:
    """
    Ideals of a json-lines corpus file, one input object per line, ids taken from ``"id"`` or the line number
    """
    for index, line in enumerate(line for line in stream if line.strip()):
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise InputError('corpus line {}: {}'.format(index + 1, e)) from e
        ideal = load_ideal(data, config)
        if not isinstance(ideal, MonomialIdeal):
            raise InputError('corpus line {}: {} is not a monomial ideal'.format(index + 1, ideal))
        yield data.get('id', index), ideal


def general_report(a: Ideal, seed: int, config: AnalysisConfig) -> Dict[str, Any]:
    """
    Report on a non-monomial ideal: adic Hilbert coefficients, a minimal reduction, the depth table and, when the
    depth hypothesis holds, the coefficient identities
    """
    require_m_primary(a, config)
    d = a.ring.dimension
    adic = hilbert_coefficients(AdicFiltration(a, config), up_to=max(3, d), config=config)
    reduction = minimal_reduction(a, seed, config)
    depth = valabrega_valla_certificate(a, reduction, config)
    report = {
        'ideal': str(a),
        'dimension': d,
        'field': a.ring.field.name,
        'seed': seed,
        'adic': adic.to_dict(),
        'reduction': reduction.to_dict(),
        'depth': depth.to_dict(),
        'identities': None,
        'notes': [],
    }
    caveat = field_caveat(a.ring.field)
    if caveat:
        report['notes'].append(caveat)
    try:
        report['identities'] = coefficient_identities(a, reduction, adic, depth, config).to_dict()
    except HypothesisNotVerifiedError as e:
        report['notes'].append(str(e))
    return report


def _build_config(args: argparse.Namespace) -> AnalysisConfig:
    config = AnalysisConfig()
    if args.config:
        try:
            with open(args.config, encoding='utf-8') as f:
                config = AnalysisConfig.from_json(f.read())
        except OSError as e:
            raise ConfigurationError('cannot read config file {}: {}'.format(args.config, e)) from e
    if args.budget_pairs is not None:
        config.update({'budget_pairs': args.budget_pairs})
    if getattr(args, 'power_depth', False):
        config.update({'power_depth_probe': True})
    return config


def _count(text: str) -> Optional[int]:
    if text == 'all':
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('count must be an integer or "all"') from None
    if value < 0:
        raise argparse.ArgumentTypeError('count must be non-negative')
    return value


def _corpus_spec(args: argparse.Namespace) -> CorpusSpec:
    return CorpusSpec(args.dim, args.max_deg, args.count, args.seed, args.field, args.require_normal)


def _open_output(path: Optional[str]) -> TextIO:
    if path is None or path == '-':
        return sys.stdout
    try:
        return open(path, 'w', encoding='utf-8', newline='')
    except OSError as e:
        raise InputError('cannot write {}: {}'.format(path, e)) from e


def _write(path: Optional[str], text: str):
    stream = _open_output(path)
    try:
        stream.write(text)
    finally:
        if stream is not sys.stdout:
            stream.close()


def _records_exit_code(records: List[CorpusRecord]) -> int:
    if any(r.classification == Classification.COUNTEREXAMPLE_CANDIDATE.value for r in records):
        return EXIT_COUNTEREXAMPLE
    if any(r.error is not None and r.error['type'] == 'ConsistencyError' for r in records):
        return EXIT_DISAGREEMENT
    failed = [(r.id, kinds) for r, kinds in ((r, record_violations(r)) for r in records) if kinds]
    for ident, kinds in failed:
        logger.error('record %d fails the %s checks', ident, ', '.join(kinds))
    if failed:
        return EXIT_DISAGREEMENT
    return EXIT_OK


def command_compute(args: argparse.Namespace, config: AnalysisConfig) -> int:
    if args.replay:
        with open(args.replay, encoding='utf-8') as f:
            lines = [line for line in f if line.strip()]
        if len(lines) != 1:
            raise InputError('{} must hold exactly one record, found {}'.format(args.replay, len(lines)))
        stored = CorpusRecord.from_dict(json.loads(lines[0]))
        overridden = args.config or args.budget_pairs is not None or getattr(args, 'power_depth', False)
        replayed = replay_record(stored, config if overridden else None)
        _write(args.output, emit_report([replayed], args.format))
        if replayed.to_dict() != stored.to_dict():
            logger.error('replay of record %d differs from the stored record', stored.id)
            return EXIT_DISAGREEMENT
        return _records_exit_code([replayed])
    if args.input is None:
        raise InputError('compute needs --input or --replay')
    try:
        with open(args.input, encoding='utf-8') as f:
            data = json.load(f)
    except OSError as e:
        raise InputError('cannot read {}: {}'.format(args.input, e)) from e
    except json.JSONDecodeError as e:
        raise InputError('{} is not valid JSON: {}'.format(args.input, e)) from e
    ideal = load_ideal(data, config)
    if isinstance(ideal, MonomialIdeal):
        ideal.require_m_primary()
        if ideal.dimension > 3:
            raise DimensionNotSupportedError('verdicts are computed for at most 3 variables, got {}'.format(
                ideal.dimension))
        records = run_analysis([(0, ideal)], config, seed=args.seed, timings=args.timings)
        _write(args.output, emit_report(records, args.format))
        if records[0].classification == Classification.UNRESOLVED.value:
            return EXIT_RESOURCE
        return _records_exit_code(records)
    report = general_report(ideal, args.seed, config)
    _write(args.output, json.dumps(report, ensure_ascii=False, indent=2) + '\n')
    return EXIT_OK


def command_gen_corpus(args: argparse.Namespace, config: AnalysisConfig) -> int:
    lines = [json.dumps(ideal_to_input(ideal, index), ensure_ascii=False)
             for index, ideal in enumerate(generate_corpus(_corpus_spec(args)))]
    _write(args.output, ''.join(line + '\n' for line in lines))
    logger.info('generated %d ideals', len(lines))
    return EXIT_OK


def command_verify_itoh(args: argparse.Namespace, config: AnalysisConfig) -> int:
    if args.input:
        with open(args.input, encoding='utf-8') as f:
            corpus: list = list(read_corpus(f, config))
    else:
        corpus = list(generate_corpus(_corpus_spec(args)))
    records = run_analysis(corpus, config, seed=args.seed, jobs=args.jobs, timings=args.timings,
                           progress=args.progress)
    _write(args.output, emit_report(records, args.format))
    counts = aggregate(records)
    logger.info('aggregate: %s', ', '.join('{} {}'.format(k, v) for k, v in counts.items()))
    if counts['counterexample-candidates']:
        logger.error('%d counterexample candidates', counts['counterexample-candidates'])
    return _records_exit_code(records)


def command_oracle_check(args: argparse.Namespace, config: AnalysisConfig) -> int:
    from blowup.oracle import run_oracle_suites
    count = 100 if args.count is None else args.count
    dimensions = (args.dim,) if args.dim is not None else (2, 3)
    results = run_oracle_suites(count, args.seed, dimensions, args.max_deg, config)
    summary = {name: suite.to_dict() for name, suite in results.items()}
    _write(args.output, json.dumps(summary, ensure_ascii=False, indent=2) + '\n')
    return EXIT_OK if all(s.passed for s in results.values()) else EXIT_DISAGREEMENT


COMMANDS = {
    'compute': command_compute,
    'gen-corpus': command_gen_corpus,
    'verify-itoh': command_verify_itoh,
    'oracle-check': command_oracle_check,
}


def _common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--seed', type=int, default=0, help='Seed of corpus sampling and reductions.')
    parser.add_argument('--format', choices=['json-lines', 'csv', 'table'], default='json-lines',
                        help='Output format of records.')
    parser.add_argument('--output', '-o', help='Write output to this file instead of stdout.')
    parser.add_argument('--config', help='JSON file with analysis config overrides.')
    parser.add_argument('--budget-pairs', type=int, help='S-pair budget of each Gröbner basis computation.')
    parser.add_argument('--timings', action='store_true', help='Record wall time per instance.')
    parser.add_argument('--power-depth', action='store_true', help='Probe depth G(a^l) for small l.')
    parser.add_argument('--logs-dir', help='Also write a timestamped log file into this directory.')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More logging (repeat for debug).')


def _corpus_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--dim', type=int, default=3, help='Number of variables (2 or 3).')
    parser.add_argument('--max-deg', type=int, default=5, help='Largest generator degree.')
    parser.add_argument('--count', type=_count, default=200, help='Number of ideals, or "all" to enumerate.')
    parser.add_argument('--field', default='q', help='Coefficient field: q, fp:<p> or fp (configured default prime).')
    parser.add_argument('--require-normal', action='store_true', help='Keep normal ideals only.')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='blowup', description='Hilbert coefficients and blowup certificates of '
                                                                'm-primary ideals.')
    parser.add_argument('--version', action='version', version=__version__, help='Print the version and exit.')
    sub = parser.add_subparsers(dest='command', metavar='command')

    compute = sub.add_parser('compute', help='Full report on a single ideal.')
    compute.add_argument('--input', '-i', help='JSON file {"vars", "field", "generators"}.')
    compute.add_argument('--replay', help='Re-run a stored json-lines record and compare.')
    _common_arguments(compute)

    gen = sub.add_parser('gen-corpus', help='Generate a seeded corpus of monomial ideals.')
    _corpus_arguments(gen)
    _common_arguments(gen)

    verify = sub.add_parser('verify-itoh', help='Run the verdict pipeline over a corpus.')
    verify.add_argument('--input', '-i', help='json-lines corpus, as written by gen-corpus.')
    verify.add_argument('--jobs', '-j', type=int, default=1, help='Worker processes.')
    verify.add_argument('--progress', action='store_true', help='Show a progress bar.')
    _corpus_arguments(verify)
    _common_arguments(verify)

    oracle = sub.add_parser('oracle-check', help='Run the equivalence suites.')
    oracle.add_argument('--dim', type=int, help='Restrict to one dimension (default: 2 and 3).')
    oracle.add_argument('--max-deg', type=int, default=4, help='Largest generator degree.')
    oracle.add_argument('--count', type=int, default=100, help='Number of ideals.')
    _common_arguments(oracle)
    return parser


def configure_logging(verbose: int, logs_dir: Optional[str], name: str):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    formatter = logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s')
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    handlers: List[logging.Handler] = [handler]
    if logs_dir:
        file_handler = logging.FileHandler(get_log_file_path(logs_dir, name), encoding='utf-8')
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.DEBUG)
        handlers.append(file_handler)
    logging.basicConfig(level=logging.DEBUG if logs_dir else level, handlers=handlers, force=True)
    handler.setLevel(level)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_INPUT
    configure_logging(args.verbose, args.logs_dir, args.command)
    try:
        config = _build_config(args)
        return COMMANDS[args.command](args, config)
    except InputError as e:
        logger.error('input error: %s', e)
        return EXIT_INPUT
    except ResourceError as e:
        logger.error('resource limit reached%s: %s', '' if e.stage is None else ' at ' + e.stage, e)
        return EXIT_RESOURCE
    except OSError as e:
        logger.error('%s', e)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()

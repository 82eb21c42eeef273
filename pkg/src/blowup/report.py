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

import csv
import io
import json
from enum import Enum
from typing import Dict, Iterable, List, Optional, TextIO, Union

from blowup.analysis import Classification
from blowup.corpus import CorpusRecord
from blowup.errors import InputError


class ReportFormat(Enum):
    """
    Members:
        * JSON_LINES = 'json-lines'
        * CSV = 'csv'
        * TABLE = 'table'
    """

    JSON_LINES = 'json-lines'
    CSV = 'csv'
    TABLE = 'table'


CSV_HEADER = ['id', 'd', 'gens', 'e0', 'e1', 'e2', 'e3', 'e0*', 'e1*', 'e2*', 'e3*', 'red', 'normal', 'cm',
              'classification']


def _flag(value: Optional[bool]) -> str:
    return '' if value is None else str(value).lower()


def _padded(values: Optional[List[str]]) -> List[str]:
    values = list(values or [])[:4]
    return values + [''] * (4 - len(values))


def summary_row(record: CorpusRecord) -> List[str]:
    """
    Flat summary of a record in :data:`CSV_HEADER` order
    """
    red = record.reduction_number
    classification = record.classification or ('Error' if record.error else '')
    return ([str(record.id), str(record.dimension), str(len(record.generators))] + _padded(record.e) +
            _padded(record.e_star) + ['' if red is None else str(red), _flag(record.normal), _flag(record.cm),
                                      classification])


VIOLATION_KINDS = ('identity', 'inequality', 'power-bound', 'rr-closure', 'veronese')


def record_violations(record: CorpusRecord) -> List[str]:
    """
    Kinds of check (from :data:`VIOLATION_KINDS`) that ``record`` reports as failed

    A check that did not run (``None``) is not a violation.
    """
    verdict = record.verdict
    if verdict is None:
        return []
    holds = {
        'identity': (verdict.get('identities') or {}).get('holds'),
        'inequality': (verdict.get('inequalities') or {}).get('holds'),
        'power-bound': verdict.get('power_bound_holds'),
        'rr-closure': verdict.get('rr_in_closure'),
        'veronese': False if any(entry.get('holds') is False for entry in record.veronese) else None,
    }
    return [kind for kind in VIOLATION_KINDS if holds[kind] is False]


def aggregate(records: Iterable[CorpusRecord]) -> Dict[str, int]:
    """
    Counts of instances, normal ideals, ``e_3 = 0``, theorem-applicable, verified and counterexample candidates,
    plus the number of records failing each kind of check
    """
    counts = {'instances': 0, 'normal': 0, 'e3=0': 0, 'theorem-applicable': 0, 'verified': 0,
              'counterexample-candidates': 0, 'unresolved': 0, 'errors': 0, 'violations': 0}
    counts.update(('{}-violations'.format(kind), 0) for kind in VIOLATION_KINDS)
    for record in records:
        counts['instances'] += 1
        if record.error is not None:
            counts['errors'] += 1
            continue
        verdict = record.verdict
        counts['normal'] += bool(record.normal)
        counts['e3=0'] += record.e is not None and len(record.e) > 3 and record.e[3] == '0'
        counts['theorem-applicable'] += bool(verdict['theorem_applicable'])
        classification = Classification(verdict['classification'])
        counts['verified'] += classification is Classification.VERIFIED
        counts['counterexample-candidates'] += classification is Classification.COUNTEREXAMPLE_CANDIDATE
        counts['unresolved'] += classification is Classification.UNRESOLVED
        violations = record_violations(record)
        counts['violations'] += bool(violations)
        for kind in violations:
            counts['{}-violations'.format(kind)] += 1
    return counts


def _write_json_lines(records: List[CorpusRecord], stream: TextIO):
    for record in records:
        stream.write(json.dumps(record.to_dict(), ensure_ascii=False))
        stream.write('\n')


def _write_csv(records: List[CorpusRecord], stream: TextIO):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(summary_row(record))


def _write_table(records: List[CorpusRecord], stream: TextIO):
    rows = [CSV_HEADER] + [summary_row(r) for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_HEADER))]
    for row in rows:
        stream.write('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
        stream.write('\n')
    stream.write('\n')
    for key, value in aggregate(records).items():
        stream.write('{}: {}\n'.format(key, value))


def emit_report(records: Iterable[CorpusRecord], format: Union[ReportFormat, str] = ReportFormat.JSON_LINES,
                stream: Optional[TextIO] = None) -> str:
    """
    Render records

    Args:
        records (``list`` of :class:`~blowup.corpus.CorpusRecord`): Records, already ordered
        format (:class:`ReportFormat` | ``str``): ``json-lines``, ``csv`` or ``table``
        stream (``TextIO``, *optional*): Also write the output here

    Returns:
        The rendered output as ``str``

    Raises:
        :class:`~blowup.errors.InputError` on an unknown format
    """
    try:
        format = ReportFormat(format)
    except ValueError:
        raise InputError('unknown report format {!r}'.format(format)) from None
    records = list(records)
    buffer = io.StringIO()
    {
        ReportFormat.JSON_LINES: _write_json_lines,
        ReportFormat.CSV: _write_csv,
        ReportFormat.TABLE: _write_table,
    }[format](records, buffer)
    output = buffer.getvalue()
    if stream is not None:
        stream.write(output)
    return output


def read_json_lines(stream: TextIO) -> List[CorpusRecord]:
    return [CorpusRecord.from_dict(json.loads(line)) for line in stream if line.strip()]


__all__ = [
    'ReportFormat', 'CSV_HEADER', 'summary_row', 'VIOLATION_KINDS', 'record_violations', 'aggregate', 'emit_report',
    'read_json_lines',
]

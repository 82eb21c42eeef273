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

import dataclasses
import io

import pytest

from blowup import (
    CSV_HEADER, CorpusRecord, InputError, ReportFormat, aggregate, emit_report, read_json_lines, record_violations,
    summary_row,
)


def make_record(ident=0, classification='VerifiedInstance', e3='0', error=None):
    verdict = None if error else {
        'classification': classification,
        'theorem_applicable': classification in ('VerifiedInstance', 'COUNTEREXAMPLE-CANDIDATE'),
        'normality': {'verdict': 'Normal(3)'},
        'adic': {'e': ['8', '4', '0', e3]},
        'closure': {'e': ['8', '4', '0', '0']},
        'reduction': {'reduction_number': 1},
        'depth': {'cm': classification == 'VerifiedInstance'},
    }
    return CorpusRecord(id=ident, ideal='(x^2, x*y, x*z, y^2, y*z, z^2)',
                        generators=((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)),
                        variables=('x', 'y', 'z'), field='Q', seed=ident, verdict=verdict, error=error)


def test_summary_row():
    row = summary_row(make_record())
    assert ','.join(row) == '0,3,6,8,4,0,0,8,4,0,0,1,true,true,VerifiedInstance'
    assert len(row) == len(CSV_HEADER)


def test_summary_row_of_failed_record():
    row = summary_row(make_record(4, error={'type': 'ConsistencyError', 'message': 'boom'}))
    assert row[:3] == ['4', '3', '6']
    assert row[3:14] == [''] * 11
    assert row[-1] == 'Error'


def test_csv():
    output = emit_report([make_record(), make_record(1, 'VacuousInstance', '1')], 'csv')
    lines = output.splitlines()
    assert lines[0] == ','.join(CSV_HEADER)
    assert lines[2].endswith(',8,4,0,1,8,4,0,0,1,true,false,VacuousInstance')


def test_empty_reports():
    assert emit_report([], ReportFormat.JSON_LINES) == ''
    assert emit_report([], 'csv') == ','.join(CSV_HEADER) + '\n'
    assert 'instances: 0' in emit_report([], 'table')


def test_json_lines_round_trip():
    records = [make_record(0), make_record(1, 'Unresolved')]
    stream = io.StringIO()
    output = emit_report(records, 'json-lines', stream)
    assert stream.getvalue() == output
    assert len(output.splitlines()) == 2
    assert read_json_lines(io.StringIO(output + '\n')) == records


def test_aggregate():
    records = [
        make_record(0),
        make_record(1, 'VacuousInstance', '1'),
        make_record(2, 'COUNTEREXAMPLE-CANDIDATE'),
        make_record(3, 'Unresolved'),
        make_record(4, error={'type': 'ConsistencyError', 'message': 'boom'}),
    ]
    assert aggregate(records) == {
        'instances': 5, 'normal': 4, 'e3=0': 3, 'theorem-applicable': 2, 'verified': 1,
        'counterexample-candidates': 1, 'unresolved': 1, 'errors': 1, 'violations': 0,
        'identity-violations': 0, 'inequality-violations': 0, 'power-bound-violations': 0,
        'rr-closure-violations': 0, 'veronese-violations': 0,
    }


def test_table():
    output = emit_report([make_record()], 'table')
    header, row = output.splitlines()[:2]
    assert header.split() == CSV_HEADER
    assert row.split()[-1] == 'VerifiedInstance'
    assert 'verified: 1' in output


def test_unknown_format():
    with pytest.raises(InputError):
        emit_report([], 'xml')


def with_checks(record, **checks):
    verdict = dict(record.verdict, identities={'holds': True}, inequalities={'holds': True}, power_bound_holds=True,
                   rr_in_closure=True)
    verdict.update(checks)
    return dataclasses.replace(record, verdict=verdict)


def test_power_bound_violation_is_counted():
    record = with_checks(make_record(5), power_reductions=[[1, 1], [2, 3], [3, 2]], power_bound_holds=False)
    assert record.classification == 'VerifiedInstance'
    assert record_violations(record) == ['power-bound']
    counts = aggregate([make_record(0), with_checks(make_record(1)), record])
    assert counts['violations'] == 1
    assert counts['power-bound-violations'] == 1
    assert counts['identity-violations'] == counts['inequality-violations'] == 0
    assert 'power-bound-violations: 1' in emit_report([record], 'table')


def test_every_failed_check_is_named():
    record = with_checks(make_record(), identities={'holds': False}, inequalities={'holds': False},
                         rr_in_closure=False)
    record = dataclasses.replace(record, veronese=({'l': 2, 'holds': True}, {'l': 3, 'holds': False}))
    assert record_violations(record) == ['identity', 'inequality', 'rr-closure', 'veronese']
    assert aggregate([record])['violations'] == 1


def test_checks_that_did_not_run_are_not_violations():
    record = with_checks(make_record(), identities=None, inequalities=None, power_bound_holds=None,
                         rr_in_closure=None)
    record = dataclasses.replace(record, veronese=({'error': 'budget'},))
    assert record_violations(record) == []
    assert record_violations(make_record(error={'type': 'ResourceError', 'message': 'budget'})) == []

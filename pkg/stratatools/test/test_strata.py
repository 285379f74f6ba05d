# -*- coding: utf-8 -*-
# Copyright (C) 2025-2026  Nexedi SA and Contributors.
#
# This program is free software: you can Use, Study, Modify and Redistribute
# it under the terms of the GNU General Public License version 3, or (at your
# option) any later version, as published by the Free Software Foundation.
#
# You can also Link and Combine this program with other software covered by
# the terms of any of the Free Software licenses or any of the Open Source
# Initiative approved licenses and Convey the resulting work. Corresponding
# source of such a combination shall include the source code for all other
# software used.
#
# This program is distributed WITHOUT ANY WARRANTY; without even the implied
# warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
# See COPYING file for full licensing terms.
# See https://www.nexedi.com/licensing for rationale and options.

import json
import sys
try:
    from unittest import mock
except ImportError:
    # BBB python2
    import mock

import pytest
from zope.interface import implementer

from stratatools import strata
from stratatools import help as help_module
from stratatools import cli
from stratatools.core import VHSType
from stratatools.util import IReport, ReportList, render_table, tojson, DAGGER
from stratatools.dims import dim_component, SPECIAL_NOTE


# stratarun runs strata.main with argv and returns exit code + captured stdout/stderr.
def stratarun(capsys, *argv):
    with mock.patch.object(sys, 'argv', ('strata',) + argv), \
         pytest.raises(SystemExit) as excinfo:
        strata.main()
    assert len(excinfo.value.args) == 1
    ecode = excinfo.value.args[0]
    return ecode, capsys.readouterr()


@pytest.fixture(autouse=True)
def noformatenv(monkeypatch):
    monkeypatch.delenv(cli.FORMAT_ENV, raising=False)


# errline asserts that err consists of exactly one E: line with given code.
def errline(err, code):
    linev = [_ for _ in err.splitlines() if _.startswith("E: ")]
    assert len(linev) == 1, err
    assert linev[0].startswith("E: %s: " % code), err


def test_main(capsys):
    e, _ = stratarun(capsys)
    assert e == 1
    assert "" == _.out
    assert "Strata is a tool" in _.err

    e, _ = stratarun(capsys, '-h')
    assert e == 0
    assert "Strata is a tool" in _.out
    assert "" == _.err

    e, _ = stratarun(capsys, 'frobnicate')
    assert e == 1
    errline(_.err, "UsageError")


@pytest.mark.parametrize(
    "help_topic",
    tuple(strata.command_dict) + tuple(help_module.topic_dict))
def test_help(capsys, help_topic):
    e, _ = stratarun(capsys, 'help', help_topic)
    assert e == 0
    assert _.err == ""
    assert _.out != ""

def test_help_unknown(capsys):
    e, _ = stratarun(capsys, 'help', 'nosuchtopic')
    assert e == 1
    errline(_.err, "UsageError")


def test_enumerate(capsys):
    e, _ = stratarun(capsys, 'enumerate', '--rank', '2', '--genus', '2', '--format', 'json')
    assert e == 0
    assert json.loads(_.out) == [
        {"ranks": [2],   "degrees": [0]},
        {"ranks": [1,1], "degrees": [1,-1]},
    ]

    e, _ = stratarun(capsys, 'enumerate', '-r', '3', '-g', '2', '-f', 'table')
    assert e == 0
    assert "5 types" in _.out
    assert _.out.splitlines()[0].split() == ["l", "ranks", "degrees"]


def test_enumerate_errors(capsys):
    e, _ = stratarun(capsys, 'enumerate', '--genus', '2')
    assert e == 1
    errline(_.err, "UsageError")

    e, _ = stratarun(capsys, 'enumerate', '--rank', 'x', '--genus', '2')
    assert e == 1
    errline(_.err, "UsageError")

    e, _ = stratarun(capsys, 'enumerate', '--rank', '9', '--genus', '2')
    assert e == 2
    errline(_.err, "RankCapExceeded")
    assert _.out == ""

    e, _ = stratarun(capsys, 'enumerate', '--rank', '2', '--genus', '1')
    assert e == 2
    errline(_.err, "GenusTooSmall")

    e, _ = stratarun(capsys, 'enumerate', '--rank', '2', '--genus', '2', '--format', 'xml')
    assert e == 1
    errline(_.err, "UsageError")


# output does not depend on number of workers.
def test_enumerate_jobs(capsys):
    e, out1 = stratarun(capsys, 'enumerate', '-r', '5', '-g', '2', '-f', 'json')
    assert e == 0
    e, out4 = stratarun(capsys, 'enumerate', '-r', '5', '-g', '2', '-f', 'json', '-j', '4')
    assert e == 0
    assert out1.out == out4.out


def test_format_env(capsys, monkeypatch):
    monkeypatch.setenv(cli.FORMAT_ENV, 'table')
    e, _ = stratarun(capsys, 'moduli', '--rank', '2', '--genus', '2')
    assert e == 0
    assert "oper stratum dim" in _.out

    # explicit --format wins
    e, _ = stratarun(capsys, 'moduli', '--rank', '2', '--genus', '2', '--format', 'json')
    assert e == 0
    assert json.loads(_.out)["oper_dim"] == 7

    monkeypatch.setenv(cli.FORMAT_ENV, 'yaml')
    e, _ = stratarun(capsys, 'moduli', '--rank', '2', '--genus', '2')
    assert e == 1
    errline(_.err, "UsageError")


def test_moduli(capsys):
    e, _ = stratarun(capsys, 'moduli', '--rank', '2', '--genus', '2', '--format', 'table')
    assert e == 0
    rows = dict(line.rsplit(None, 1) for line in _.out.splitlines()[2:6])
    assert rows["oper stratum dim"] == "7"
    assert rows["max stratum dim"] == "10"

    e, _ = stratarun(capsys, 'moduli', '--rank', '3', '--genus', '2', '--extremal', '-f', 'json')
    assert e == 0
    j = json.loads(_.out)
    assert j["moduli"]["oper_dim"] == 12
    assert j["extremal"]["min_types"] == [{"ranks": [1,1,1], "degrees": [2,0,-2]}]
    assert j["extremal"]["bounds_hold"]

    e, _ = stratarun(capsys, 'moduli', '--rank', '1', '--genus', '2')
    assert e == 2
    errline(_.err, "RankTooSmall")


def test_check_type(capsys, typesfile):
    e, _ = stratarun(capsys, 'check-type', '--ranks', '1,2', '--degrees', '2,-2',
                     '--genus', '3', '-f', 'json')
    assert e == 0
    assert json.loads(_.out)[0]["verdict"] == "pass"

    path = typesfile([
        {"ranks": [1,2], "degrees": [2,-2], "g": 3},
        {"ranks": [1,1], "degrees": [2,-2]},
    ])
    e, _ = stratarun(capsys, 'check-type', '--file', path, '--genus', '2', '-f', 'json')
    assert e == 2
    errline(_.err, "NotAdmissible")
    repv = json.loads(_.out)
    assert [(r["g"], r["verdict"]) for r in repv] == [(3, "pass"), (2, "fail")]
    assert repv[1]["violations"][0]["condition"] == "V2"

    # entry without genus and no --genus
    path = typesfile({"ranks": [1,1], "degrees": [1,-1]})
    e, _ = stratarun(capsys, 'check-type', '--file', path)
    assert e == 1
    errline(_.err, "UsageError")

    path = typesfile({"ranks": [1,1], "degrees": [1,0]})
    e, _ = stratarun(capsys, 'check-type', '--file', path, '-g', '2')
    assert e == 2
    errline(_.err, "NonZeroTotalDegree")

    path = typesfile({"ranks": [1,1]})
    e, _ = stratarun(capsys, 'check-type', '--file', path, '-g', '2')
    assert e == 2
    errline(_.err, "MalformedType")


# a bad entry in a bulk file gets its own report and does not stop the others.
def test_check_type_bulk_errors(capsys, typesfile):
    path = typesfile([
        {"ranks": [1,2], "degrees": [2,-2], "g": 3},
        {"ranks": [1,1], "degrees": [1,0]},
        {"ranks": [1,1], "degrees": [2,-2]},
        {"ranks": [1,1]},
    ])
    e, _ = stratarun(capsys, 'check-type', '--file', path, '-g', '2', '-f', 'json')
    assert e == 2
    errline(_.err, "NonZeroTotalDegree")
    assert "3 of 4 types failed" in _.err
    repv = json.loads(_.out)
    assert [r["verdict"] for r in repv] == ["pass", "error", "fail", "error"]
    assert repv[1]["error"]["code"] == "NonZeroTotalDegree"
    assert repv[1]["type"] == {"ranks": [1,1], "degrees": [1,0]}
    assert repv[1]["g"] == 2
    assert repv[3]["error"]["code"] == "MalformedType"

    e, _ = stratarun(capsys, 'check-type', '--file', path, '-g', '2', '-f', 'table')
    assert e == 2
    assert "NonZeroTotalDegree: " in _.out
    assert "MalformedType: " in _.out


def test_check_type_chain(capsys):
    e, _ = stratarun(capsys, 'check-type', '--ranks', '1,1', '--degrees', '1,-1',
                     '-g', '2', '--chain', '--delta', '3', '-f', 'json')
    assert e == 0
    j = json.loads(_.out)[0]
    assert j["chain"]["verdict"] == "pass"
    assert j["chain"]["ties"] == []


def test_io_errors(capsys, tmpdir):
    e, _ = stratarun(capsys, 'check-type', '--file', str(tmpdir.join('nonexistent.json')), '-g', '2')
    assert e == 3
    errline(_.err, "IoError")

    bad = tmpdir.join('bad.json')
    bad.write('{"ranks": [1,')
    e, _ = stratarun(capsys, 'check-type', '--file', str(bad), '-g', '2')
    assert e == 3
    errline(_.err, "IoError")

    e, _ = stratarun(capsys, 'moduli', '-r', '2', '-g', '2', '-o', str(tmpdir.join('no', 'such', 'dir')))
    assert e == 3
    errline(_.err, "IoError")


def test_output_file(capsys, tmpdir):
    path = str(tmpdir.join('out.json'))
    e, _ = stratarun(capsys, 'dims', '--ranks', '1,2', '--degrees', '2,-2', '-g', '3', '-o', path)
    assert e == 0
    assert _.out == ""
    with open(path) as f:
        j = json.load(f)
    assert (j["dim"], j["provenance"]) == (6, "special-case-table")


def test_dims(capsys):
    e, _ = stratarun(capsys, 'dims', '--ranks', '1,2', '--degrees', '2,-2', '-g', '3', '-f', 'table')
    assert e == 0
    assert u"6" + DAGGER in _.out
    assert SPECIAL_NOTE in _.out

    e, _ = stratarun(capsys, 'dims', '--ranks', '1,1', '--degrees', '2,-2', '-g', '2')
    assert e == 2
    errline(_.err, "NotAdmissible")


def test_strata(capsys):
    e, _ = stratarun(capsys, 'strata', '-r', '3', '-g', '2', '-f', 'json')
    assert e == 0
    rowv = json.loads(_.out)
    assert len(rowv) == 5
    assert [r["stratum_dim"] for r in rowv] == [20, 14, 14, 14, 12]
    assert rowv[0]["case"] == "I"
    assert rowv[4]["codim_bound"] is None

    e, _ = stratarun(capsys, 'strata', '-r', '3', '-g', '2', '-f', 'table')
    assert e == 0
    linev = _.out.splitlines()
    assert len(linev) == 2 + 5 + 2
    assert linev[-1] == SPECIAL_NOTE


def test_simpson3(capsys):
    e, _ = stratarun(capsys, 'simpson3', '--shape', 'line', '--d', '1', '--deg-i', '-2',
                     '-g', '3', '-f', 'json')
    assert e == 0
    j = json.loads(_.out)
    assert j["case"] == "1.1"
    assert j["limit"] == [{"ranks": [1,2], "degrees": [1,-1]}]
    assert j["subbundle_degree_bound"] == 1

    e, _ = stratarun(capsys, 'simpson3', '--shape', 'full', '--a1', '1', '--a2', '1',
                     '--deg-j', '-2', '-g', '3')
    assert e == 2
    errline(_.err, "MissingSaturationDegree")

    e, _ = stratarun(capsys, 'simpson3', '--shape', 'line', '--d', '2', '--deg-i', '-1', '-g', '2')
    assert e == 2
    errline(_.err, "HNWindowViolated")

    e, _ = stratarun(capsys, 'simpson3', '--shape', 'cone', '--d', '1', '-g', '2')
    assert e == 2
    errline(_.err, "UnknownShape")

    e, _ = stratarun(capsys, 'simpson3', '--shape', 'rank2', '--d', '1', '-g', '2', '-f', 'json')
    assert e == 0
    assert json.loads(_.out)["case"] == "2.hn"


def test_iterate_step(capsys, typesfile):
    path = typesfile([
        {"graded": [[3,0]], "destabilizer": [[1,1]]},
        {"graded": [[2,-1],[1,1]], "destabilizer": [[0,0],[1,1]]},
    ])
    e, _ = stratarun(capsys, 'iterate-step', '--file', path, '-f', 'json')
    assert e == 0
    assert json.loads(_.out) == [[[2,-1],[1,1]], [[2,-1],[0,0],[1,1]]]

    path = typesfile({"graded": [[2,0]], "destabilizer": [[1,-1]]})
    e, _ = stratarun(capsys, 'iterate-step', '--file', path)
    assert e == 2
    errline(_.err, "NotDestabilizing")

    path = typesfile([{"graded": [[2,0]]}])
    e, _ = stratarun(capsys, 'iterate-step', '--file', path)
    assert e == 3
    errline(_.err, "IoError")

    # graded types that are not lists
    for pair in [{"graded": 5, "destabilizer": [[1,1]]},
                 {"graded": [[3,0]], "destabilizer": None}]:
        path = typesfile(pair)
        e, _ = stratarun(capsys, 'iterate-step', '--file', path)
        assert e == 2
        errline(_.err, "InvalidGradedType")
        assert _.out == ""


def test_verbose(capsys):
    e, _ = stratarun(capsys, '-v', 'enumerate', '-r', '2', '-g', '2', '-f', 'json')
    assert e == 0
    assert len(json.loads(_.out)) == 2


# ---- rendering ----

@implementer(IReport)
class Rows(object):
    def __init__(self, header, rows, notes=()):
        self.header, self.rows, self.notes = header, rows, list(notes)
    def ok(self):
        return True
    def asjson(self):
        return [list(_) for _ in self.rows]
    def table(self):
        return self.header, self.rows, self.notes


def test_render_table():
    assert render_table(Rows(("a", "bb"), [])) == u"a  bb\n-  --\n"
    assert render_table(Rows(("a", "b"), [("xyz", "1")], ["note"])) == \
            u"a    b\n---  -\nxyz  1\n\nnote\n"

    with pytest.raises(ValueError):
        render_table(Rows(("a", "b"), [("1",)]))
    with pytest.raises(TypeError):
        render_table(object())


def test_render_special_case():
    rep = ReportList([dim_component(VHSType([1,2], [2,-2]), 3),
                      dim_component(VHSType([1,2], [1,-1]), 3),
                      dim_component(VHSType([2,1], [2,-2]), 3)],
                     ("type", "dim", "stratum_dim", "provenance", "caveat"))
    text = render_table(rep)
    assert text.count(DAGGER) == 2 + 1     # two cells and the footnote
    assert text.endswith(SPECIAL_NOTE + u"\n")


def test_tojson():
    rep = Rows(("a",), [(1,), (2,)])
    assert tojson(rep) == "[\n  [\n    1\n  ],\n  [\n    2\n  ]\n]\n"
    assert tojson(ReportList([], ("a",))) == "[]\n"

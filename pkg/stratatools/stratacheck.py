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
"""Strata check-type - check admissibility of C-VHS types

Types come either from command line (--ranks, --degrees) or from a JSON file
with one type object or a list of them. Every entry may carry its own genus
as field "g"; otherwise --genus applies.

With --chain, every type is also twisted into a chain with the Higgs
stability parameter and checked against necessary conditions of chain
semistability.

An entry that cannot be checked, e.g. a malformed type, gets a report with
verdict "error" and the remaining entries are still checked.
"""

from __future__ import print_function

from collections import OrderedDict
import json

from zope.interface import implementer

from stratatools import cli
from stratatools.core import StrataError, vhs_type_fromjson, make_vhs_type
from stratatools.util import IReport, ReportList
from stratatools.vhs import check_vhs_admissible
from stratatools.chains import vhs_to_chain, check_chain_necessary


HEADER = ("type", "g", "verdict", "violations")

# EntryError is the report for an entry that could not be checked at all,
# e.g. a malformed type or a type of non-zero total degree.
@implementer(IReport)
class EntryError(object):
    # .entry    JSON entry as read
    # .genus    int | None
    # .error    StrataError
    def __init__(self, entry, genus, error):
        self.entry = entry
        self.genus = genus
        self.error = error

    def ok(self):
        return False

    def asjson(self):
        return OrderedDict([
            ("type",        self.entry),
            ("g",           self.genus),
            ("verdict",     "error"),
            ("error",       OrderedDict([("code", self.error.code), ("message", str(self.error))])),
        ])

    def table(self):
        entry = json.dumps(self.entry, sort_keys=True)
        g = '' if self.genus is None else '%s' % (self.genus,)
        return HEADER, [(entry, g, "error", "%s: %s" % (self.error.code, self.error))], []


# check_entries checks every JSON type entry and returns list of reports.
#
# An entry that cannot be checked gets EntryError and the others are still
# checked.
def check_entries(entryv, genus=None, chain=False, delta=0): # -> ReportList
    repv = []
    for entry in entryv:
        g = entry.get("g", genus) if isinstance(entry, dict) else genus
        try:
            v = vhs_type_fromjson(entry)
            if g is None:
                raise cli.UsageError("%s: genus is not given: use --genus or field \"g\"" % (v,))
            rep = check_vhs_admissible(v, g)
            if chain:
                ct, alpha = vhs_to_chain(v, delta, g)
                rep.chain = check_chain_necessary(ct, alpha)
        except StrataError as e:
            rep = EntryError(entry, g, e)
        repv.append(rep)
    return ReportList(repv, HEADER)


def report(cfg): # -> ReportList
    if cfg.input_path is not None:
        entryv = cli.load_json(cfg.input_path)
        if isinstance(entryv, dict):
            entryv = [entryv]
        if not isinstance(entryv, list):
            raise cli.IoError("%s: expected type object or list of them" % cfg.input_path)
    else:
        v = make_vhs_type(cfg.need('ranks'), cfg.need('degrees'))
        entryv = [v.asjson()]
    return check_entries(entryv, cfg.genus, chain=cfg.params.get('chain', False),
                         delta=cfg.params.get('delta', 0))

# failure describes why report is not ok.
#
# The code is that of the first entry that could not be checked, or
# NotAdmissible when every entry was checked.
def failure(report): # -> (code, message)
    failv = [_ for _ in report.items if not _.ok()]
    code = "NotAdmissible"
    for rep in failv:
        if isinstance(rep, EntryError):
            code = rep.error.code
            break
    return code, "%d of %d types failed the check" % (len(failv), len(report))


# ----------------------------------------
import getopt
import sys

summary = "check admissibility of C-VHS types"

def usage(out):
    print("""\
Usage: strata check-type [OPTIONS] (--file <types.json> | --ranks <r⃗> --degrees <d⃗>) [--genus <g>]
Check types of C-VHS against the conditions for existence of C-VHS of that
type with all components of the Higgs field non-zero.

Types are given either on the command line or in a JSON file (see 'strata help
type'). A report is printed for every type; an entry that cannot be checked gets
verdict "error". The exit status is 2 if any type fails the check.

Options:

    -i  --file=<path>       read types from JSON file
        --ranks=<r,...>     ranks of the type to check
        --degrees=<d,...>   degrees of the type to check
    -g  --genus=<g>         genus of the curve, unless given per entry as "g"
        --chain             also check the twisted chain against necessary
                            conditions of semistability
        --delta=<δ>         twist parameter for --chain (default 0)
    -f  --format=<fmt>      output format: json or table
    -o  --output=<file>     write report to file instead of stdout
    -h  --help              show this help
""", file=out)

def main(argv):
    cfg = cli.RunConfig('check-type')
    try:
        optv, argv = getopt.getopt(argv[1:], cli.COMMON_SHORTOPTS,
                cli.COMMON_LONGOPTS + ["ranks=", "degrees=", "chain", "delta="])
        for opt, arg in optv:
            if opt in ("-h", "--help"):
                usage(sys.stdout)
                sys.exit(0)
            elif opt in ("--ranks", "--degrees"):
                cfg.params[opt[2:]] = cli.atoiv(opt, arg)
            elif opt == "--chain":
                cfg.params['chain'] = True
            elif opt == "--delta":
                cfg.params['delta'] = cli.atoi(opt, arg)
            else:
                cli.common_option(cfg, opt, arg)
        if argv:
            raise cli.UsageError("unexpected arguments %s" % ' '.join(argv))
    except (getopt.GetoptError, cli.UsageError) as e:
        sys.exit(cli.usage_error(e, usage))

    sys.exit(cli.run(cfg))

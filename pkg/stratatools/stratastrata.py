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
"""Strata strata - table of all strata of rank-r de Rham moduli"""

from __future__ import print_function

from collections import OrderedDict

from zope.interface import implementer

from stratatools import cli
from stratatools.core import AllRanksOne, asgenus
from stratatools.util import IReport
from stratatools.vhs import enumerate_vhs_types
from stratatools.dims import dim_component, codim_nonstable_bound, family_case


# StrataRow describes the stratum over one C-VHS component.
class StrataRow(object):
    # .dimrep       DimReport
    # .case         str | None      case of rank-3/4 dimension table
    # .codim_bound  int | None      None when all r_i = 1
    def __init__(self, dimrep, case, codim_bound):
        self.dimrep      = dimrep
        self.case        = case
        self.codim_bound = codim_bound

    def asjson(self):
        d = self.dimrep
        return OrderedDict([
            ("type",                d.type.asjson()),
            ("case",                self.case),
            ("dim",                 d.dim),
            ("stratum_dim",         d.stratum_dim),
            ("provenance",          d.provenance),
            ("stable_locus_caveat", d.stable_locus_caveat),
            ("codim_bound",         self.codim_bound),
        ])


# StrataReport is the per-type table of strata of rank-r de Rham moduli.
@implementer(IReport)
class StrataReport(object):
    # .rank, .genus
    # .rows     [] StrataRow    in canonical order of types
    def __init__(self, rank, genus, rows):
        self.rank  = rank
        self.genus = genus
        self.rows  = rows

    def __len__(self):
        return len(self.rows)

    def ok(self):
        return True

    def asjson(self):
        return [_.asjson() for _ in self.rows]

    def table(self):
        header = ("type", "case", "dim", "stratum_dim", "provenance", "codim_bound", "caveat")
        rows  = []
        notes = []
        for row in self.rows:
            d = row.dimrep
            rows.append((str(d.type), row.case or '', d.dimcell(), '%d' % d.stratum_dim,
                         d.provenance, '-' if row.codim_bound is None else '%d' % row.codim_bound,
                         'yes' if d.stable_locus_caveat else ''))
            for n in d.notes():
                if n not in notes:
                    notes.append(n)
        return header, rows, notes


# strata_report computes StrataRow for every admissible type of rank r.
def strata_report(r, genus, jobs=1): # -> StrataReport
    g = asgenus(genus)
    rows = []
    for v in enumerate_vhs_types(r, g, jobs=jobs):
        try:
            codim = codim_nonstable_bound(v, g)
        except AllRanksOne:
            codim = None
        rows.append(StrataRow(dim_component(v, g), family_case(v), codim))
    return StrataReport(r, g, rows)


def report(cfg): # -> StrataReport
    return strata_report(cfg.need('rank'), cfg.need('genus'), jobs=cfg.jobs)


# ----------------------------------------
import getopt
import sys

summary = "table of all strata of rank-r de Rham moduli"

def usage(out):
    print("""\
Usage: strata strata [OPTIONS] --rank <r> --genus <g>
Print, for every admissible C-VHS type of rank r, the dimension of its
component, the dimension of the stratum over it, and the lower bound on
codimension of the non-stable locus inside the component.

Columns of the table, in order:

    type            (r⃗; d⃗)
    case            case of the rank 3 / rank 4 dimension table
    dim             dimension of the component, † for special-case values
    stratum_dim     dim + r²(g-1) + 1
    provenance      formula or special-case-table
    codim_bound     lower bound on codimension of non-stable locus, - if all r_i = 1
    caveat          yes if the formula may overcount (rank >= 5)

Options:

    -r  --rank=<r>      total rank (1 .. 8)
    -g  --genus=<g>     genus of the curve (>= 2)
    -j  --jobs=<n>      enumerate compositions of r with n workers
    -f  --format=<fmt>  output format: json or table
    -o  --output=<file> write report to file instead of stdout
    -h  --help          show this help
""", file=out)

def main(argv):
    cfg = cli.RunConfig('strata')
    try:
        optv, argv = getopt.getopt(argv[1:], cli.COMMON_SHORTOPTS, cli.COMMON_LONGOPTS)
        for opt, arg in optv:
            if opt in ("-h", "--help"):
                usage(sys.stdout)
                sys.exit(0)
            cli.common_option(cfg, opt, arg)
        if argv:
            raise cli.UsageError("unexpected arguments %s" % ' '.join(argv))
    except (getopt.GetoptError, cli.UsageError) as e:
        sys.exit(cli.usage_error(e, usage))

    sys.exit(cli.run(cfg))

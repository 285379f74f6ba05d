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
"""Strata enumerate - list admissible C-VHS types of given rank"""

from __future__ import print_function

from zope.interface import implementer

from stratatools import cli
from stratatools.util import IReport
from stratatools.vhs import enumerate_vhs_types


# TypeList is IReport over a list of types.
@implementer(IReport)
class TypeList(object):
    # .types    [] VHSType  in canonical order
    def __init__(self, types):
        self.types = types

    def __len__(self):
        return len(self.types)

    def ok(self):
        return True

    def asjson(self):
        return [_.asjson() for _ in self.types]

    def table(self):
        header = ("l", "ranks", "degrees")
        rows = [('%d' % t.l, ','.join('%d' % _ for _ in t.ranks),
                             ','.join('%d' % _ for _ in t.degrees)) for t in self.types]
        return header, rows, ["%d types" % len(self.types)]


def report(cfg): # -> TypeList
    typev = enumerate_vhs_types(cfg.need('rank'), cfg.need('genus'), jobs=cfg.jobs)
    return TypeList(typev)


# ----------------------------------------
import getopt
import sys

summary = "list admissible C-VHS types of given rank"

def usage(out):
    print("""\
Usage: strata enumerate [OPTIONS] --rank <r> --genus <g>
List all admissible types (r⃗, d⃗) of C-VHS of rank r on a curve of genus g.

A type is admissible when C-VHS of that type with all θ_i non-zero exist.
Types are listed in canonical order (see 'strata help type').

Options:

    -r  --rank=<r>      total rank (1 .. 8)
    -g  --genus=<g>     genus of the curve (>= 2)
    -j  --jobs=<n>      enumerate compositions of r with n workers
    -f  --format=<fmt>  output format: json or table (see 'strata help formats')
    -o  --output=<file> write report to file instead of stdout
    -h  --help          show this help
""", file=out)

def main(argv):
    cfg = cli.RunConfig('enumerate')
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

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
"""Strata moduli - dimensions of rank-r de Rham moduli and of its extreme strata"""

from __future__ import print_function

from collections import OrderedDict

from zope.interface import implementer

from stratatools import cli
from stratatools.util import IReport
from stratatools.dims import moduli_dims, extremal_report


# ModuliReport is ModuliDims, optionally together with ExtremalReport,
# displayed as quantity/value table.
@implementer(IReport)
class ModuliReport(object):
    # .moduli       ModuliDims
    # .extremal     ExtremalReport | None
    def __init__(self, moduli, extremal=None):
        self.moduli   = moduli
        self.extremal = extremal

    def ok(self):
        return self.extremal is None or self.extremal.ok()

    def asjson(self):
        j = self.moduli.asjson()
        if self.extremal is not None:
            j = OrderedDict([("moduli", j), ("extremal", self.extremal.asjson())])
        return j

    def table(self):
        m = self.moduli
        rows = [
            ("dim de Rham moduli",      '%d' % m.dim_mdr),
            ("half dim",                '%d' % m.half_dim),
            ("oper stratum dim",        '%d' % m.oper_dim),
            ("max stratum dim",         '%d' % m.max_stratum_dim),
        ]
        notes = ["r=%d g=%d" % (m.rank, m.genus)]
        x = self.extremal
        if x is not None:
            rows += [
                ("min component dim",   '%d' % x.min_dim),
                ("min attained at",     ' '.join(str(_) for _ in x.min_types)),
                ("max component dim",   '%d' % x.max_dim),
                ("max attained at",     ' '.join(str(_) for _ in x.max_types)),
                ("bounds hold",         'yes' if x.bounds_hold else 'no'),
            ]
        return ("quantity", "value"), rows, notes


def report(cfg): # -> ModuliReport
    r, g = cfg.need('rank'), cfg.need('genus')
    moduli = moduli_dims(r, g)
    extremal = None
    if cfg.params.get('extremal'):
        extremal = extremal_report(r, g, jobs=cfg.jobs)
    return ModuliReport(moduli, extremal)

# failure describes why report is not ok.
def failure(report): # -> (code, message)
    return "BoundsViolated", "extreme dimensions are not attained exactly by " \
                             "the uniformizing type and by (r; 0)"


# ----------------------------------------
import getopt
import sys

summary = "dimensions of de Rham moduli, oper stratum and maximal stratum"

def usage(out):
    print("""\
Usage: strata moduli [OPTIONS] --rank <r> --genus <g>
Print dimension of the moduli of rank-r flat bundles of degree 0 on a curve
of genus g, half of it, dimension of the closed stratum of opers and of the
open maximal stratum.

With --extremal, also evaluate dimensions of all C-VHS components of rank r
and report where the minimum and maximum are attained.

Options:

    -r  --rank=<r>      rank (>= 2)
    -g  --genus=<g>     genus of the curve (>= 2)
        --extremal      also report extreme component dimensions
    -j  --jobs=<n>      enumerate compositions of r with n workers
    -f  --format=<fmt>  output format: json or table
    -o  --output=<file> write report to file instead of stdout
    -h  --help          show this help
""", file=out)

def main(argv):
    cfg = cli.RunConfig('moduli')
    try:
        optv, argv = getopt.getopt(argv[1:], cli.COMMON_SHORTOPTS,
                cli.COMMON_LONGOPTS + ["extremal"])
        for opt, arg in optv:
            if opt in ("-h", "--help"):
                usage(sys.stdout)
                sys.exit(0)
            elif opt == "--extremal":
                cfg.params['extremal'] = True
            else:
                cli.common_option(cfg, opt, arg)
        if argv:
            raise cli.UsageError("unexpected arguments %s" % ' '.join(argv))
    except (getopt.GetoptError, cli.UsageError) as e:
        sys.exit(cli.usage_error(e, usage))

    sys.exit(cli.run(cfg))

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
"""Strata dims - dimension of a C-VHS component and of the stratum over it"""

from __future__ import print_function

from stratatools import cli
from stratatools.core import make_vhs_type
from stratatools.dims import dim_component


def report(cfg): # -> DimReport
    v = make_vhs_type(cfg.need('ranks'), cfg.need('degrees'))
    return dim_component(v, cfg.need('genus'))


# ----------------------------------------
import getopt
import sys

summary = "dimension of a C-VHS component and of its stratum"

def usage(out):
    print("""\
Usage: strata dims [OPTIONS] --ranks <r⃗> --degrees <d⃗> --genus <g>
Print dimension of the component of C-VHS of given admissible type, and
dimension of the stratum of de Rham moduli flowing to it under the C*-action.

The dimension is computed by the general formula, except for rank 3 and
rank 4 families with empty stable locus, where it is taken from the
special-case table. For rank >= 5, caveat is set when the type splits into
two admissible types and the formula may overcount.

Options:

        --ranks=<r,...>     ranks of the type
        --degrees=<d,...>   degrees of the type
    -g  --genus=<g>         genus of the curve
    -f  --format=<fmt>      output format: json or table
    -o  --output=<file>     write report to file instead of stdout
    -h  --help              show this help
""", file=out)

def main(argv):
    cfg = cli.RunConfig('dims')
    try:
        optv, argv = getopt.getopt(argv[1:], cli.COMMON_SHORTOPTS,
                cli.COMMON_LONGOPTS + ["ranks=", "degrees="])
        for opt, arg in optv:
            if opt in ("-h", "--help"):
                usage(sys.stdout)
                sys.exit(0)
            elif opt in ("--ranks", "--degrees"):
                cfg.params[opt[2:]] = cli.atoiv(opt, arg)
            else:
                cli.common_option(cfg, opt, arg)
        if argv:
            raise cli.UsageError("unexpected arguments %s" % ' '.join(argv))
    except (getopt.GetoptError, cli.UsageError) as e:
        sys.exit(cli.usage_error(e, usage))

    sys.exit(cli.run(cfg))

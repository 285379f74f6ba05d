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
"""Strata iterate-step - one numerical step of the destabilizing iteration"""

from __future__ import print_function

from stratatools import cli
from stratatools.util import ReportList
from stratatools.simpson3 import make_graded_type, iterate_step


def report(cfg): # -> ReportList of GradedType
    path = cfg.need('input_path')
    pairv = cli.load_json(path)
    if isinstance(pairv, dict):
        pairv = [pairv]
    if not isinstance(pairv, list):
        raise cli.IoError("%s: expected object or list of objects" % path)

    outv = []
    for pair in pairv:
        try:
            graded, destabilizer = pair["graded"], pair["destabilizer"]
        except (KeyError, TypeError):
            raise cli.IoError("%s: entry without \"graded\" and \"destabilizer\": %r" % (path, pair))
        outv.append(iterate_step(make_graded_type(graded),
                                 make_graded_type(destabilizer, allow_zero=True)))
    return ReportList(outv, ("p", "rank", "degree"))


# ----------------------------------------
import getopt
import sys

summary = "one step of the destabilizing iteration on (rank, degree) data"

def usage(out):
    print("""\
Usage: strata iterate-step [OPTIONS] --file <pairs.json>
Given (rank, degree) per Hodge level of a graded object and of its maximal
destabilizing sub-object, print (rank, degree) per Hodge level of the graded
object of the next filtration (see 'strata help type' for the file format).

The destabilizer moves one Hodge level up: level p of the result is

    (r_p - h_p + h_{p-1},  d_p - e_p + e_{p-1})

Options:

    -i  --file=<path>       read (graded, destabilizer) pairs from JSON file
    -f  --format=<fmt>      output format: json or table
    -o  --output=<file>     write report to file instead of stdout
    -h  --help              show this help
""", file=out)

def main(argv):
    cfg = cli.RunConfig('iterate-step')
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

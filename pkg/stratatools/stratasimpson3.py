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
"""Strata simpson3 - limit of a rank-3 flat bundle under the C*-action"""

from __future__ import print_function

from stratatools import cli
from stratatools.simpson3 import HN3Profile, simpson_limit_rank3, simpson_limit_rank2, \
        subbundle_degree_bound


# degree flags accepted by simpson3: flag -> HN3Profile field
degree_flags = [
    ("d",       "d"),
    ("l",       "l"),
    ("a1",      "a1"),
    ("a2",      "a2"),
    ("deg-i",   "deg_I"),
    ("deg-n",   "deg_N"),
    ("deg-j",   "deg_J"),
    ("deg-m",   "deg_M"),
]

def report(cfg): # -> SimpsonOutcome
    shape = cfg.need('shape')
    g = cfg.need('genus')
    degrees = cfg.params.get('degrees', {})
    if shape == 'rank2':
        if 'd' not in degrees:
            raise cli.UsageError("--d is required")
        return simpson_limit_rank2(degrees['d'], g)

    p = HN3Profile(shape, **degrees)
    out = simpson_limit_rank3(p, g)
    out.subbundle_bound = subbundle_degree_bound(p, g)
    return out


# ----------------------------------------
import getopt
import sys

summary = "limit of a rank-3 flat bundle given its HN profile"

def usage(out):
    print("""\
Usage: strata simpson3 [OPTIONS] --shape <shape> <degrees> --genus <g>
Decide the Simpson filtration of a flat bundle of rank 3 and degree 0 from
the shape of its Harder-Narasimhan filtration and degrees of saturations, and
print the limiting C-VHS under the C*-action, the case of the decision tree,
and the bound on degrees of subbundles.

Shapes and the degrees they use:

    line    H¹ ⊂ E:         --d=deg H¹            --deg-i=deg I
    plane   G¹ ⊂ E:         --l=deg G¹            --deg-n=deg N
    full    A¹ ⊂ A² ⊂ E:    --a1=deg A¹ --a2=deg A²   --deg-j=deg J [--deg-m=deg M]
    rank2   L ⊂ E of rank 2: --d=deg L (d <= 0 for semistable E)

--deg-m is needed only when the decision reaches case 3.3.2; without it the
command fails with MissingSaturationDegree.

Options:

        --shape=<shape>     line, plane, full or rank2
    -g  --genus=<g>         genus of the curve
    -f  --format=<fmt>      output format: json or table
    -o  --output=<file>     write report to file instead of stdout
    -h  --help              show this help
""", file=out)

def main(argv):
    cfg = cli.RunConfig('simpson3')
    degrees = cfg.params['degrees'] = {}
    flag2field = dict(("--" + flag, field) for (flag, field) in degree_flags)
    try:
        optv, argv = getopt.getopt(argv[1:], cli.COMMON_SHORTOPTS,
                cli.COMMON_LONGOPTS + ["shape="] + [_ + "=" for (_, __) in degree_flags])
        for opt, arg in optv:
            if opt in ("-h", "--help"):
                usage(sys.stdout)
                sys.exit(0)
            elif opt == "--shape":
                cfg.params['shape'] = arg
            elif opt in flag2field:
                degrees[flag2field[opt]] = cli.atoi(opt, arg)
            else:
                cli.common_option(cfg, opt, arg)
        if argv:
            raise cli.UsageError("unexpected arguments %s" % ' '.join(argv))
    except (getopt.GetoptError, cli.UsageError) as e:
        sys.exit(cli.usage_error(e, usage))

    sys.exit(cli.run(cfg))

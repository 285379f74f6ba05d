# -*- coding: utf-8 -*-
# stratatools - help topics
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

from collections import OrderedDict

# topic_name -> (topic_summary, topic_help)
topic_dict = OrderedDict()

help_type = """\
Many strata commands work with types (r⃗, d⃗) of chains and of C-VHS: ranks
r_1 .. r_l, all positive, and degrees d_1 .. d_l. A type of a C-VHS has total
degree 0.

On the command line a type is given by two comma-separated lists:

    --ranks 1,2 --degrees 1,-1

In JSON a type is an object

    {"ranks": [1, 2], "degrees": [1, -1]}

optionally with genus of the curve as integer field "g":

    {"ranks": [1, 2], "degrees": [1, -1], "g": 3}

Files given to check-type contain either one such object or a list of them.
Files given to iterate-step contain an object, or list of objects, of the form

    {"graded": [[3, 0]], "destabilizer": [[1, 1]]}

where every pair is (rank, degree) at Hodge level p = 0, 1, ...

Lists of types are always output in canonical order: lexicographic on
(l, r⃗, d⃗).
"""

help_formats = """\
Reports are output either as JSON or as aligned-column table:

    --format json       JSON, byte-for-byte reproducible for the same input
    --format table      text for reading; lossy - use JSON for processing

If --format is not given, the format is taken from $STRATA_FORMAT. If that is
not set either, table is used when output goes to a terminal and JSON
otherwise, in particular when --output <file> is given.

In tables, dimensions that come from the special-case table of rank 3 and
rank 4 components with empty stable locus are marked with † and explained in
a footnote.
"""

help_exit = """\
Strata commands exit with the following statuses:

    0   success
    1   usage error: unknown command or option, missing or invalid flag value
    2   domain error: invalid type or profile, failed check, e.g. an
        inadmissible type given to check-type
    3   input/output error: unreadable or malformed input file, unwritable
        output file

On failure exactly one line is printed to stderr:

    E: <code>: <message>

where <code> is one word, e.g. UsageError, IoError, NotAdmissible,
HNWindowViolated, SaturationOutOfRange, MissingSaturationDegree, GenusTooSmall.
"""

topic_dict['type']      = "specifying types of chains and C-VHS",   help_type
topic_dict['formats']   = "output formats",                         help_formats
topic_dict['exit']      = "exit statuses and error codes",          help_exit

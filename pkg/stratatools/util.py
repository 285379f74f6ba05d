# -*- coding: utf-8 -*-
# stratatools - various utility routines
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
import io

import six
from zope.interface import Interface, implementer


# marker put onto table cells whose value comes from the special-case table.
DAGGER = u"†"


# IReport is implemented by everything stratatools can emit.
class IReport(Interface):

    def asjson():
        """asjson returns JSON-serializable representation of the report.

        Key order is fixed, so that dumped JSON is byte-for-byte reproducible.
        """

    def table():
        """table returns (header, rows, notes) for aligned-column display.

        header is tuple of column names, rows is list of tuples of cells with
        the same arity as header, and notes is list of footnote lines.
        """

    def ok():
        """ok returns whether the report describes a successful check."""


# ReportList is IReport over a sequence of homogeneous reports.
#
# Its table concatenates rows of the items; header is taken from .header
# so that an empty list still renders with columns.
@implementer(IReport)
class ReportList(object):
    # .items    [] IReport
    # .header   (str,)
    def __init__(self, items, header):
        self.items  = list(items)
        self.header = tuple(header)

    def __len__(self):
        return len(self.items)

    def ok(self):
        return all(_.ok() for _ in self.items)

    def asjson(self):
        return [_.asjson() for _ in self.items]

    def table(self):
        rows  = []
        notes = []
        for item in self.items:
            _, irows, inotes = item.table()
            rows.extend(irows)
            for n in inotes:
                if n not in notes:
                    notes.append(n)
        return self.header, rows, notes


# tojson returns canonical JSON text of report.
def tojson(report): # -> str
    _checkreport(report)
    return json.dumps(report.asjson(), indent=2, separators=(',', ': ')) + "\n"

# render_table returns report as aligned-column text.
#
# Columns are left-aligned, separated by 2 spaces, with a dashed rule under
# the header. Footnotes follow after an empty line.
def render_table(report): # -> unicode
    _checkreport(report)
    header, rows, notes = report.table()
    header = [utext(_) for _ in header]
    rows   = [[utext(_) for _ in row] for row in rows]
    for row in rows:
        if len(row) != len(header):
            raise ValueError("table row %r does not match header %r" % (row, header))

    width = [len(_) for _ in header]
    for row in rows:
        for i, cell in enumerate(row):
            width[i] = max(width[i], len(cell))

    def line(cells):
        return u"  ".join(c.ljust(w) for c, w in zip(cells, width)).rstrip()

    out = [line(header), line([u"-"*w for w in width])]
    out.extend(line(row) for row in rows)
    if notes:
        out.append(u"")
        out.extend(utext(_) for _ in notes)
    return u"\n".join(out) + u"\n"


def _checkreport(report):
    if not IReport.providedBy(report):
        raise TypeError("%r does not provide IReport" % (report,))

# utext converts cell value to unicode text.
def utext(x):
    if isinstance(x, six.text_type):
        return x
    if isinstance(x, bytes):
        return x.decode('utf-8')
    return six.text_type(x)


# readfile reads file content as text.
def readfile(path): # -> unicode
    with io.open(path, 'r', encoding='utf-8') as _:
        return _.read()

# writeout writes text to a standard stream.
def writeout(out, text):
    text = utext(text)
    if six.PY2 and not isinstance(out, io.TextIOBase):
        text = text.encode('utf-8')
    out.write(text)

# -*- coding: utf-8 -*-
# stratatools - dimensions of fixed-point components and strata
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
"""Dims - dimensions of C-VHS components, strata and de Rham moduli

The component V^{r⃗,d⃗} of C-VHS of admissible type (r⃗, d⃗), when its stable
locus is non-empty, has dimension

    (g-1)∑r_i(r_i+r_{i+1}) + ∑r_i(d_{i+1}-d_{i-1}) + 1

For a few rank-3 and rank-4 families the stable locus is empty and the
dimension is read from a table instead. A stratum over V^{r⃗,d⃗} has dimension
dim V^{r⃗,d⃗} + r²(g-1) + 1, half the dimension of the de Rham moduli space
being r²(g-1) + 1.

In every rank the minimal dimension g is attained only by the uniformizing
type, and the maximal r²(g-1)+1 only by (r; 0).
"""

from __future__ import print_function

from collections import OrderedDict

from zope.interface import implementer

from stratatools.core import NotAdmissible, NonIntegralTableValue, AllRanksOne, \
        RankTooSmall, VHSType, asgenus, asint, asvhs
from stratatools.util import IReport, DAGGER
from stratatools import vhs


# provenance of a dimension value
FORMULA       = "formula"
SPECIAL_CASE  = "special-case-table"

# footnote shown for special-case values in tables
SPECIAL_NOTE  = DAGGER + u" special-case table value: the stable locus is empty"


# DimReport is the result of dim_component.
@implementer(IReport)
class DimReport(object):
    # .type                 VHSType
    # .genus                Genus
    # .dim                  int
    # .provenance           FORMULA | SPECIAL_CASE
    # .stable_locus_caveat  bool    formula may overcount: the type splits
    # .stratum_dim          int
    def __init__(self, type, genus, dim, provenance, stable_locus_caveat):
        self.type                = type
        self.genus               = genus
        self.dim                 = dim
        self.provenance          = provenance
        self.stable_locus_caveat = stable_locus_caveat
        self.stratum_dim         = dim + half_dim(type.rank, genus)

    def ok(self):
        return True

    def asjson(self):
        return OrderedDict([
            ("type",                self.type.asjson()),
            ("g",                   int(self.genus)),
            ("dim",                 self.dim),
            ("provenance",          self.provenance),
            ("stable_locus_caveat", self.stable_locus_caveat),
            ("stratum_dim",         self.stratum_dim),
        ])

    # dimcell is dim formatted for display, with special-case marker.
    def dimcell(self):
        if self.provenance == SPECIAL_CASE:
            return u"%d%s" % (self.dim, DAGGER)
        return u"%d" % self.dim

    def notes(self):
        return [SPECIAL_NOTE] if self.provenance == SPECIAL_CASE else []

    def table(self):
        header = ("type", "dim", "stratum_dim", "provenance", "caveat")
        row = (str(self.type), self.dimcell(), '%d' % self.stratum_dim,
               self.provenance, 'yes' if self.stable_locus_caveat else '')
        return header, [row], self.notes()


# half_dim returns r²(g-1) + 1 - half the dimension of rank-r de Rham moduli.
def half_dim(r, genus): # -> int
    g = asgenus(genus)
    return r*r*(g-1) + 1


# dim_formula returns (g-1)∑r_i(r_i+r_{i+1}) + ∑r_i(d_{i+1}-d_{i-1}) + 1.
#
# The value is computed unconditionally; it is the dimension of the component
# only when its stable locus is non-empty.
def dim_formula(v, genus): # -> int
    v = asvhs(v)
    g = asgenus(genus)
    l = v.l
    r, d = v.r, v.d
    return (g-1) * sum(r(i)*(r(i) + r(i+1)) for i in range(1, l+1)) + \
           sum(r(i)*(d(i+1) - d(i-1)) for i in range(1, l+1)) + 1


# family_case returns numeral of the case in rank-3 (I-IV) or rank-4 (I-VIII)
# dimension table a type belongs to, or None for other ranks.
_family_cases = {
    3: {(3,): 'I', (1,1,1): 'II', (1,2): 'III', (2,1): 'IV'},
    4: {(4,): 'I', (1,1,1,1): 'II', (1,3): 'III', (3,1): 'IV', (2,2): 'V',
        (1,1,2): 'VI', (2,1,1): 'VII', (1,2,1): 'VIII'},
}
def family_case(v): # -> str | None
    v = asvhs(v)
    return _family_cases.get(v.rank, {}).get(v.ranks)


# _special_dim returns dimension from the special-case table, or None when
# type v does not lie on a locus with empty stable locus.
def _special_dim(v, g):
    ranks, d = v.ranks, v.degrees
    G = g - 1
    if ranks in ((1,2), (2,1)):
        if d[0] == G:
            return 2*g
    elif ranks in ((1,3), (3,1)):
        if d[0] == G:
            return 5*g - 3
    elif ranks == (1,1,2):
        if 2*d[1] + d[0] == 2*G:
            if d[0] % 2 != 0:
                raise NonIntegralTableValue("%s g=%d: 5g-3-(3/2)d_1 is not an integer for d_1=%d"
                                            % (v, g, d[0]))
            return 5*g - 3 - 3*d[0]//2
    elif ranks == (2,1,1):
        if d[0] - d[1] == 2*G:
            return 8*g - 6 - 3*d[0]
    elif ranks == (1,2,1):
        if d == (2*G, 0, -2*G):
            return 2*g
    return None


# dim_component returns dimension of component of C-VHS of admissible type v.
def dim_component(v, genus): # -> DimReport
    v = asvhs(v)
    g = asgenus(genus)
    rep = vhs.check_vhs_admissible(v, g)
    if not rep.verdict:
        raise NotAdmissible("%s is not admissible for g=%d: %s" % (v, g,
                    ', '.join('%s%r' % (_.condition, list(_.indices)) for _ in rep.violations)))

    caveat = False
    if v.rank in (3, 4):
        dim = _special_dim(v, g)
        if dim is not None:
            return DimReport(v, g, dim, SPECIAL_CASE, caveat)
    elif v.rank >= 5:
        caveat = any(True for _ in vhs.iter_splittings(v, g))

    return DimReport(v, g, dim_formula(v, g), FORMULA, caveat)


# codim_nonstable_bound returns lower bound on codimension of the non-stable
# locus inside V^{r⃗,d⃗}.
#
# The bound is the minimum over m with r_m > 1 of piecewise values, taking at
# each m the minimum over all branches whose guard holds.
def codim_nonstable_bound(v, genus): # -> int
    v = asvhs(v)
    g = asgenus(genus)
    G = g - 1
    r = v.r
    best = None
    for m in range(1, v.l+1):
        rm, prev, nxt = r(m), r(m-1), r(m+1)
        if rm <= 1:
            continue
        branchv = []
        if prev >= rm and nxt >= rm:
            branchv.append(G*(nxt + prev - 2*rm) + 1)
        if prev <= rm and nxt <= rm:
            branchv.append(G*(2*rm - nxt - prev) + 1)
        if nxt >= rm >= prev:
            branchv.append(G*(nxt - prev) + 1)
        if nxt <= rm <= prev:
            branchv.append(G*(prev - nxt) + 1)
        x = min(branchv)
        if best is None or x < best:
            best = x

    if best is None:
        raise AllRanksOne("%s: no r_m > 1" % (v,))
    return best


# stratum_dim returns dimension of the stratum over component of type v.
def stratum_dim(v, genus): # -> int
    return dim_component(v, genus).stratum_dim


# ModuliDims describes dimensions of rank-r de Rham moduli and its strata.
@implementer(IReport)
class ModuliDims(object):
    # .rank, .genus
    # .dim_mdr          2r²(g-1)+2      de Rham moduli
    # .half_dim         r²(g-1)+1
    # .oper_dim         r²(g-1)+g+1     stratum of opers (minimal)
    # .max_stratum_dim  = dim_mdr       stratum over (r; 0) (open)
    def __init__(self, rank, genus):
        self.rank            = rank
        self.genus           = genus
        self.half_dim        = half_dim(rank, genus)
        self.dim_mdr         = 2*self.half_dim
        self.oper_dim        = self.half_dim + genus
        self.max_stratum_dim = self.dim_mdr

    def ok(self):
        return True

    def asjson(self):
        return OrderedDict([
            ("r",               self.rank),
            ("g",               int(self.genus)),
            ("dim_mdr",         self.dim_mdr),
            ("half_dim",        self.half_dim),
            ("oper_dim",        self.oper_dim),
            ("max_stratum_dim", self.max_stratum_dim),
        ])

    def table(self):
        header = ("r", "g", "dim_mdr", "half_dim", "oper_dim", "max_stratum_dim")
        row = tuple('%d' % _ for _ in (self.rank, self.genus, self.dim_mdr,
                                       self.half_dim, self.oper_dim, self.max_stratum_dim))
        return header, [row], []


# moduli_dims returns dimensions of rank-r de Rham moduli.
def moduli_dims(r, genus): # -> ModuliDims
    r = asint(r, 'rank')
    g = asgenus(genus)
    if r < 2:
        raise RankTooSmall("rank must be >= 2; got %d" % r)
    return ModuliDims(r, g)


# ExtremalReport describes where dimensions of C-VHS components of rank r
# attain their minimum and maximum.
@implementer(IReport)
class ExtremalReport(object):
    # .rank, .genus
    # .min_dim, .min_types      minimal dimension and types attaining it
    # .max_dim, .max_types      maximal dimension and types attaining it
    # .bounds_hold              all dimensions lie in [g, r²(g-1)+1]
    def __init__(self, rank, genus, dimv):
        self.rank  = rank
        self.genus = genus
        dims = [_.dim for _ in dimv]
        self.min_dim   = min(dims)
        self.max_dim   = max(dims)
        self.min_types = [_.type for _ in dimv if _.dim == self.min_dim]
        self.max_types = [_.type for _ in dimv if _.dim == self.max_dim]
        self.bounds_hold = all(genus <= x <= half_dim(rank, genus) for x in dims)

    # extremal_ok tells whether extremes are attained exactly by the
    # uniformizing type and by (r; 0).
    def extremal_ok(self):
        if self.rank < 2:
            return self.bounds_hold
        return self.bounds_hold and \
               self.min_types == [vhs.uniformizing_type(self.rank, self.genus)] and \
               self.max_types == [VHSType([self.rank], [0])]

    def ok(self):
        return self.extremal_ok()

    def asjson(self):
        return OrderedDict([
            ("r",           self.rank),
            ("g",           int(self.genus)),
            ("min_dim",     self.min_dim),
            ("min_types",   [_.asjson() for _ in self.min_types]),
            ("max_dim",     self.max_dim),
            ("max_types",   [_.asjson() for _ in self.max_types]),
            ("bounds_hold", self.bounds_hold),
        ])

    def table(self):
        header = ("extreme", "dim", "types")
        rows = [
            ("min", '%d' % self.min_dim, ' '.join(str(_) for _ in self.min_types)),
            ("max", '%d' % self.max_dim, ' '.join(str(_) for _ in self.max_types)),
        ]
        notes = ["bounds [%d, %d] %s" % (self.genus, half_dim(self.rank, self.genus),
                                          "hold" if self.bounds_hold else "VIOLATED")]
        return header, rows, notes


# extremal_report evaluates dim_component over all admissible types of rank r.
def extremal_report(r, genus, jobs=1): # -> ExtremalReport
    g = asgenus(genus)
    typev = vhs.enumerate_vhs_types(r, g, jobs=jobs)
    return ExtremalReport(asint(r, 'rank'), g, [dim_component(_, g) for _ in typev])

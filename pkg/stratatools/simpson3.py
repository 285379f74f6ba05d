# -*- coding: utf-8 -*-
# stratatools - Simpson filtrations of rank-3 flat bundles
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
"""Simpson3 - limits of rank-3 flat bundles under the C*-action

A flat bundle (E, ∇) of rank 3 and degree 0 is described here by the shape of
its Harder-Narasimhan filtration and by degrees of a few saturations:

    line    H¹ ⊂ E, deg H¹ = d                     saturation degree deg_I
    plane   G¹ ⊂ E, deg G¹ = l                     saturation degree deg_N
    full    A¹ ⊂ A² ⊂ E, deg A¹ = a1, deg A² = a2   saturation degrees deg_J, deg_M

These data decide which Griffiths-transverse filtration has semistable
associated graded Higgs bundle (the Simpson filtration) and therefore the
limit lim_{t→0} t·(E, ∇) in the nilpotent cone. simpson_limit_rank3
implements that decision tree with cases labelled 1.1 ... 3.3.2.3; deg_J is
examined first, then the sign of a2-a1, then deg_M, which is required only
on the 3.3.2 branch.

iterate_step is one numerical step of the general iteration: given the
(rank, degree) per Hodge level of a graded object and of its maximal
destabilizing sub-object, it computes the data of the next graded object.
"""

from __future__ import print_function

from collections import OrderedDict
from fractions import Fraction

from golang.gcompat import qq
from zope.interface import implementer

from stratatools.core import VHSType, CaseGapError, HNWindowViolated, SaturationOutOfRange, \
        MissingSaturationDegree, InvalidGradedType, LevelOverflow, NotDestabilizing, \
        ZeroOrFullDestabilizer, UnknownShape, asgenus, asint, fmtrat
from stratatools.util import IReport


LINE, PLANE, FULL = 'line', 'plane', 'full'

# HN3Profile describes Harder-Narasimhan shape of a rank-3 flat bundle.
class HN3Profile(object):
    # .shape    LINE | PLANE | FULL
    # .d        int     deg H¹                  (line)
    # .l        int     deg G¹                  (plane)
    # .a1, .a2  int     deg A¹, deg A²          (full)
    # .deg_I, .deg_N, .deg_J, .deg_M    int | None  saturation degrees
    __slots__ = ('shape', 'd', 'l', 'a1', 'a2', 'deg_I', 'deg_N', 'deg_J', 'deg_M')

    def __init__(self, shape, d=None, l=None, a1=None, a2=None,
                 deg_I=None, deg_N=None, deg_J=None, deg_M=None):
        if shape not in (LINE, PLANE, FULL):
            raise UnknownShape("unknown HN shape %s" % qq(shape))
        self.shape = shape
        opt = lambda x, what: None if x is None else asint(x, what)
        self.d, self.l   = opt(d, 'd'), opt(l, 'l')
        self.a1, self.a2 = opt(a1, 'a1'), opt(a2, 'a2')
        self.deg_I, self.deg_N = opt(deg_I, 'deg_I'), opt(deg_N, 'deg_N')
        self.deg_J, self.deg_M = opt(deg_J, 'deg_J'), opt(deg_M, 'deg_M')

        primary = {LINE: ('d',), PLANE: ('l',), FULL: ('a1', 'a2')}[shape]
        for name in primary:
            if getattr(self, name) is None:
                raise HNWindowViolated("%s: degree %s is required" % (shape, name))

    @classmethod
    def line(cls, d, deg_I=None):
        return cls(LINE, d=d, deg_I=deg_I)

    @classmethod
    def plane(cls, l, deg_N=None):
        return cls(PLANE, l=l, deg_N=deg_N)

    @classmethod
    def full(cls, a1, a2, deg_J=None, deg_M=None):
        return cls(FULL, a1=a1, a2=a2, deg_J=deg_J, deg_M=deg_M)

    def __repr__(self):
        fields = [(_, getattr(self, _)) for _ in self.__slots__[1:]]
        return 'HN3Profile.%s(%s)' % (self.shape,
                    ', '.join('%s=%d' % (k, v) for (k, v) in fields if v is not None))


# validate_hn3 verifies that profile p describes a possible flat bundle of
# rank 3 on a curve of genus g and that its saturation degrees are in range.
def validate_hn3(p, genus):
    g = asgenus(genus)
    K = g.degK

    def window(ok, what):
        if not ok:
            raise HNWindowViolated("%s: %s" % (p.shape, what))

    def saturation(name, x, lo, hi):
        if x is None:
            raise MissingSaturationDegree("%s: %s is required" % (p.shape, name))
        if not (lo <= x <= hi):
            raise SaturationOutOfRange("%s: need %s <= %s <= %s; got %s=%d" % (
                        p.shape, fmtrat(lo), name, fmtrat(hi), name, x))

    if p.shape == LINE:
        d = p.d
        window(0 < d and 3*d <= 2*K, "need 0 < d <= 2/3(2g-2) = %s; got d=%d" % (fmtrat(Fraction(2*K, 3)), d))
        saturation('deg_I', p.deg_I, d - K, Fraction(-d, 2))

    elif p.shape == PLANE:
        l = p.l
        window(0 < l and 3*l <= 2*K, "need 0 < l <= 2/3(2g-2) = %s; got l=%d" % (fmtrat(Fraction(2*K, 3)), l))
        saturation('deg_N', p.deg_N, 2*l - K, Fraction(l, 2))

    else:
        a1, a2 = p.a1, p.a2
        window(0 < 2*a1 - a2 <= K, "need 0 < 2a1-a2 <= 2g-2 = %d; got 2a1-a2=%d" % (K, 2*a1 - a2))
        window(0 < 2*a2 - a1 <= K, "need 0 < 2a2-a1 <= 2g-2 = %d; got 2a2-a1=%d" % (K, 2*a2 - a1))
        saturation('deg_J', p.deg_J, a1 - K, a2 - a1)
        # deg_M is read only on the 3.3.2 branch
        if p.deg_M is not None and a1 - K <= p.deg_J < -a1 and a2 >= a1:
            saturation('deg_M', p.deg_M, 2*a2 - K, a2 - a1)


# SimpsonOutcome is the limit of a flat bundle under the C*-action.
@implementer(IReport)
class SimpsonOutcome(object):
    # .case_label           str
    # .limit_summands       [] VHSType      one element for stable limit
    # .filtration           [] (rank, degree) | None    Simpson filtration
    #                                       F^0=E ⊃ F^1 ⊃ ..., when it is unique
    # .equals_hn            bool    Simpson filtration is the HN filtration
    # .graded_matches_hn    bool    limit bundle is the HN graded bundle
    # .unique_filtration    bool
    # .subbundle_bound      int | None      filled by subbundle_degree_bound
    def __init__(self, case_label, limit_summands, filtration,
                 equals_hn=False, unique_filtration=True, graded_matches_hn=None):
        self.case_label        = case_label
        self.limit_summands    = limit_summands
        self.filtration        = filtration
        self.equals_hn         = equals_hn
        self.unique_filtration = unique_filtration
        self.graded_matches_hn = equals_hn if graded_matches_hn is None else graded_matches_hn
        self.subbundle_bound   = None

    @property
    def filtration_ranks_degrees(self):
        return self.filtration

    def ok(self):
        return True

    def asjson(self):
        j = OrderedDict([
            ("case",                self.case_label),
            ("limit",               [_.asjson() for _ in self.limit_summands]),
            ("filtration",          None if self.filtration is None else
                                        [list(_) for _ in self.filtration]),
            ("equals_hn",           self.equals_hn),
            ("graded_matches_hn",   self.graded_matches_hn),
            ("unique_filtration",   self.unique_filtration),
        ])
        if self.subbundle_bound is not None:
            j["subbundle_degree_bound"] = self.subbundle_bound
        return j

    def table(self):
        header = ("case", "limit", "filtration", "equals_hn", "unique", "deg_W_bound")
        filt = '-' if self.filtration is None else \
                ' ⊃ '.join('(%d,%d)' % _ for _ in self.filtration)
        row = (self.case_label, ' ⊕ '.join(str(_) for _ in self.limit_summands), filt,
               'yes' if self.equals_hn else 'no', 'yes' if self.unique_filtration else 'no',
               '' if self.subbundle_bound is None else '%d' % self.subbundle_bound)
        return header, [row], []


def _t(ranks, degrees):
    return VHSType(ranks, degrees)

# simpson_limit_rank3 returns limit of rank-3 flat bundle with HN profile p.
def simpson_limit_rank3(p, genus): # -> SimpsonOutcome
    g = asgenus(genus)
    validate_hn3(p, g)
    K = g.degK
    O = SimpsonOutcome

    if p.shape == LINE:
        d, I = p.d, p.deg_I
        if d - K <= I < -d:
            return O('1.1', [_t([1,2], [d,-d])], [(3,0), (1,d)], equals_hn=True)
        if I == -d:
            return O('1.2', [_t([1,1], [d,-d]), _t([1], [0])], None, unique_filtration=False)
        if -d < I and 2*I <= -d:
            return O('1.3', [_t([1,1,1], [d, I, -d-I])], [(3,0), (2,d+I), (1,d)])

    elif p.shape == PLANE:
        l, N = p.l, p.deg_N
        if 2*l - K <= N < 0:
            return O('2.1', [_t([2,1], [l,-l])], [(3,0), (2,l)], equals_hn=True)
        if N == 0:
            return O('2.2', [_t([1], [0]), _t([1,1], [l,-l])], None, unique_filtration=False)
        if 0 < N and 2*N <= l:
            return O('2.3', [_t([1,1,1], [N, l-N, -l])], [(3,0), (2,l), (1,N)])

    else:
        a1, a2, J, M = p.a1, p.a2, p.deg_J, p.deg_M
        if -a1 < J <= a2 - a1:
            return O('3.1', [_t([1,1,1], [a1, J, -a1-J])], [(3,0), (2,a1+J), (1,a1)],
                     equals_hn=(J == a2 - a1))
        if J == -a1:
            return O('3.2', [_t([1,1], [a1,-a1]), _t([1], [0])], None, unique_filtration=False)
        if a1 - K <= J < -a1:
            if a2 - a1 < 0:
                return O('3.3.1', [_t([1,2], [a1,-a1])], [(3,0), (1,a1)])
            if M is None:
                raise MissingSaturationDegree("full: deg_M is required for case 3.3.2 "
                                              "(deg_J=%d < -a1, a2 >= a1)" % J)
            if 2*a2 - K <= M < 0:
                return O('3.3.2.1', [_t([2,1], [a2,-a2])], [(3,0), (2,a2)])
            if M == 0:
                return O('3.3.2.2', [_t([1], [0]), _t([1,1], [a2,-a2])], None, unique_filtration=False)
            if 0 < M <= a2 - a1:
                return O('3.3.2.3', [_t([1,1,1], [M, a2-M, -a2])], [(3,0), (2,a2), (1,M)],
                         graded_matches_hn=(M == a2 - a1))

    raise CaseGapError("%r g=%d: no case matches" % (p, g))


# subbundle_degree_bound returns upper bound on deg W over subbundles W of
# the flat bundle with HN profile p.
def subbundle_degree_bound(p, genus): # -> int
    out = simpson_limit_rank3(p, genus)
    case = out.case_label
    if case == '1.1':
        return p.d
    if case in ('1.2', '1.3'):
        return 3*p.d // 2
    if case == '2.1':
        return p.l
    if case in ('2.2', '2.3'):
        return 3*p.l // 2
    if case in ('3.1', '3.2'):
        return p.a1 + p.a2
    if case == '3.3.1':
        return p.a1
    if case == '3.3.2.1':
        return p.a2
    if case in ('3.3.2.2', '3.3.2.3'):
        return 2*p.a2 - p.a1
    raise CaseGapError("case %s has no subbundle bound" % case)


# simpson_limit_rank2 returns limit of rank-2 flat bundle whose HN line
# subbundle has degree d (d ≤ 0 means E is semistable).
#
# In rank 2 the Simpson filtration is the HN filtration.
def simpson_limit_rank2(d, genus): # -> SimpsonOutcome
    d = asint(d, 'd')
    g = asgenus(genus)
    if d <= 0:
        return SimpsonOutcome('2.ss', [_t([2], [0])], [(2,0)], equals_hn=True)
    if d > g - 1:
        raise HNWindowViolated("rank 2: need d <= g-1 = %d; got d=%d" % (g-1, d))
    return SimpsonOutcome('2.hn', [_t([1,1], [d,-d])], [(2,0), (1,d)], equals_hn=True)


# GradedType is (rank, degree) per Hodge level p = 0, 1, ... of a graded object.
@implementer(IReport)
class GradedType(object):
    # .levels   ((rank, degree),)
    __slots__ = ('levels',)

    def __init__(self, levels):
        self.levels = tuple((r, d) for (r, d) in levels)

    @property
    def rank(self):
        return sum(r for (r, _) in self.levels)

    @property
    def degree(self):
        return sum(d for (_, d) in self.levels)

    # level returns (rank, degree) at level p, or (0, 0) outside.
    def level(self, p):
        if 0 <= p < len(self.levels):
            return self.levels[p]
        return (0, 0)

    def ok(self):
        return True

    def asjson(self):
        return [list(_) for _ in self.levels]

    def table(self):
        header = ("p", "rank", "degree")
        rows = [('%d' % p, '%d' % r, '%d' % d) for p, (r, d) in enumerate(self.levels)]
        return header, rows, []

    def __eq__(a, b):
        return isinstance(b, GradedType) and a.levels == b.levels

    def __ne__(a, b):
        return not (a == b)

    def __hash__(self):
        return hash(self.levels)

    def __repr__(self):
        return 'GradedType(%r)' % (list(self.levels),)


# make_graded_type validates levels and returns GradedType.
#
# Ranks must be non-negative, and a level of rank 0 must have degree 0.
# Unless allow_zero, at least one level must have positive rank.
def make_graded_type(levels, allow_zero=False): # -> GradedType
    if not isinstance(levels, (list, tuple)):
        raise InvalidGradedType("graded type must be a list of (rank, degree); got %r" % (levels,))
    levv = []
    for p, level in enumerate(levels):
        try:
            r, d = level
        except (TypeError, ValueError):
            raise InvalidGradedType("level %d: expected (rank, degree); got %r" % (p, level))
        r = asint(r, 'rank')
        d = asint(d, 'degree')
        if r < 0:
            raise InvalidGradedType("level %d: negative rank %d" % (p, r))
        if r == 0 and d != 0:
            raise InvalidGradedType("level %d: rank 0 with degree %d" % (p, d))
        levv.append((r, d))
    if not levv:
        raise InvalidGradedType("graded type without levels")
    if not allow_zero and all(r == 0 for (r, _) in levv):
        raise InvalidGradedType("graded type of total rank 0")
    return GradedType(levv)

def _asgraded(x, allow_zero=False):
    if isinstance(x, GradedType):
        return x
    return make_graded_type(x, allow_zero=allow_zero)


# graded_slope returns ∑degree / ∑rank.
def graded_slope(gt): # -> Fraction
    gt = _asgraded(gt)
    return Fraction(gt.degree, gt.rank)

# is_destabilizing returns whether sub has slope strictly bigger than gt.
def is_destabilizing(gt, sub): # -> bool
    gt  = _asgraded(gt)
    sub = _asgraded(sub, allow_zero=True)
    if sub.rank == 0:
        return False
    return graded_slope(sub) > graded_slope(gt)


# iterate_step returns graded type of the next filtration given graded type gt
# of the current one and levels of its maximal destabilizing sub-object.
#
# Level p of the result is (r_p - h_p + h_{p-1}, d_p - e_p + e_{p-1}): the
# destabilizer moves one level up. Zero-rank levels at the top are trimmed.
def iterate_step(gt, destabilizer): # -> GradedType
    gt = _asgraded(gt)
    h  = _asgraded(destabilizer, allow_zero=True)
    k  = len(gt.levels)

    for p in range(k, len(h.levels)):
        if h.level(p)[0] != 0:
            raise LevelOverflow("level %d: destabilizer above the top level %d" % (p, k-1))
    for p in range(k):
        (r, d), (hp, ep) = gt.level(p), h.level(p)
        if hp > r:
            raise LevelOverflow("level %d: destabilizer rank %d > %d" % (p, hp, r))
        if hp == r and ep != d:
            raise LevelOverflow("level %d: destabilizer of full rank %d has degree %d != %d"
                                % (p, r, ep, d))

    if not (0 < h.rank < gt.rank):
        raise ZeroOrFullDestabilizer("destabilizer rank %d not in (0, %d)" % (h.rank, gt.rank))
    if not is_destabilizing(gt, h):
        raise NotDestabilizing("slope %s of destabilizer <= slope %s" % (
                    fmtrat(graded_slope(h)), fmtrat(graded_slope(gt))))

    levv = []
    for p in range(k+1):
        (r, d), (hp, ep), (hq, eq) = gt.level(p), h.level(p), h.level(p-1)
        levv.append((r - hp + hq, d - ep + eq))
    while len(levv) > 1 and levv[-1][0] == 0:
        levv.pop()
    return GradedType(levv)

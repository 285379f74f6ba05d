# -*- coding: utf-8 -*-
# stratatools - discrete types of chains and complex variations of Hodge structure
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
"""Core types shared by all stratatools modules.

A chain E_1 → E_2 → ... → E_l of holomorphic bundles is described here only
by its discrete invariants - ranks r⃗ = (r_1, ..., r_l), all positive, and
degrees d⃗ = (d_1, ..., d_l). Such a pair is ChainType. A ChainType with total
degree 0 is VHSType - the type of a C-VHS E = ⊕E_i, θ_i: E_i → E_{i+1}⊗K.

Indices in formulas are 1-based, and r_0 = r_{l+1} = 0, d_0 = d_{l+1} = 0.

Integers are Python ints and never overflow. Slopes and stability parameters
are exact rationals (fractions.Fraction); there is no floating point in any
decision path.

JSON form of a type is {"ranks": [...], "degrees": [...]}; when a genus comes
along it is the integer field "g".
"""

from __future__ import print_function

from collections import OrderedDict
from fractions import Fraction

import six


# StrataError is the base class for errors about invalid input.
#
# .code is the machine-parsable error name, as printed by `strata`.
class StrataError(ValueError):
    @property
    def code(self):
        return type(self).__name__

class EmptyType(StrataError):               pass
class NonPositiveRank(StrataError):         pass
class LengthMismatch(StrataError):          pass
class NonZeroTotalDegree(StrataError):      pass
class NotAnInteger(StrataError):            pass
class MalformedType(StrataError):           pass
class GenusTooSmall(StrataError):           pass
class RankTooSmall(StrataError):            pass
class RankCapExceeded(StrataError):         pass
class NonDecreasingParameter(StrataError):  pass
class NotAdmissible(StrataError):           pass
class NonIntegralTableValue(StrataError):   pass
class AllRanksOne(StrataError):             pass
class HNWindowViolated(StrataError):        pass
class SaturationOutOfRange(StrataError):    pass
class MissingSaturationDegree(StrataError): pass
class InvalidGradedType(StrataError):       pass
class LevelOverflow(StrataError):           pass
class NotDestabilizing(StrataError):        pass
class ZeroOrFullDestabilizer(StrataError):  pass
class UnknownShape(StrataError):            pass

# CaseGapError indicates that a decision procedure found no matching case for
# input that passed its own validation. It is a bug, not an input error.
class CaseGapError(RuntimeError):
    pass


# asint verifies that x is an integer and returns it.
def asint(x, what='value'): # -> int
    if isinstance(x, bool) or not isinstance(x, six.integer_types):
        raise NotAnInteger("%s: expected integer; got %r" % (what, x))
    return int(x)


# Genus is the genus g ≥ 2 of the underlying compact Riemann surface.
class Genus(int):
    def __new__(cls, g):
        g = asint(g, 'genus')
        if g < 2:
            raise GenusTooSmall("genus must be >= 2; got %d" % g)
        return super(Genus, cls).__new__(cls, g)

    # degK is deg K_X = 2g-2.
    @property
    def degK(self):
        return 2*self - 2

    def __repr__(self):
        return 'Genus(%d)' % self

def asgenus(g): # -> Genus
    if isinstance(g, Genus):
        return g
    return Genus(g)


# Rational is the exact number type used for slopes and stability parameters.
Rational = Fraction

# rational converts x to Rational.
#
# Integers, Fractions and "p/q" strings are accepted; floats are rejected
# since they cannot represent slopes exactly.
def rational(x): # -> Rational
    if isinstance(x, Fraction):
        return x
    if isinstance(x, six.string_types):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise NotAnInteger("invalid rational %r" % x)
    return Fraction(asint(x, 'rational'))

# fmtrat formats q as "p/q", or as "p" when q is integral.
def fmtrat(q): # -> str
    return str(Fraction(q))


# ChainType represents ranks and degrees of a chain E_1 → ... → E_l.
#
# Use make_chain_type to construct ChainType from untrusted input.
class ChainType(object):
    # .ranks    (int,)  r_1 .. r_l
    # .degrees  (int,)  d_1 .. d_l
    __slots__ = ('ranks', 'degrees')

    def __init__(self, ranks, degrees):
        self.ranks   = tuple(ranks)
        self.degrees = tuple(degrees)

    # l is the length of the chain.
    @property
    def l(self):
        return len(self.ranks)

    # rank is total rank ∑r_i.
    @property
    def rank(self):
        return sum(self.ranks)

    # degree is total degree ∑d_i.
    @property
    def degree(self):
        return sum(self.degrees)

    # r returns r_i with boundary convention r_0 = r_{l+1} = 0.
    def r(self, i):
        if 1 <= i <= len(self.ranks):
            return self.ranks[i-1]
        return 0

    # d returns d_i with boundary convention d_0 = d_{l+1} = 0.
    def d(self, i):
        if 1 <= i <= len(self.degrees):
            return self.degrees[i-1]
        return 0

    # sortkey returns key of canonical ordering: lexicographic on (l, r⃗, d⃗).
    def sortkey(self):
        return (len(self.ranks), self.ranks, self.degrees)

    def asjson(self):
        return OrderedDict([
            ("ranks",   list(self.ranks)),
            ("degrees", list(self.degrees)),
        ])

    def __eq__(a, b):
        return isinstance(b, ChainType) and \
                (a.ranks, a.degrees) == (b.ranks, b.degrees)

    def __ne__(a, b):
        return not (a == b)

    def __lt__(a, b):
        return a.sortkey() < b.sortkey()

    def __hash__(self):
        return hash((self.ranks, self.degrees))

    def __repr__(self):
        return '%s(%r, %r)' % (type(self).__name__, list(self.ranks), list(self.degrees))

    def __str__(self):
        return '(%s; %s)' % (','.join('%d' % _ for _ in self.ranks),
                             ','.join('%d' % _ for _ in self.degrees))


# VHSType is the type of a C-VHS: a ChainType of total degree 0.
class VHSType(ChainType):
    __slots__ = ()

    @property
    def underlying(self): # -> ChainType
        return ChainType(self.ranks, self.degrees)


# make_chain_type validates ranks and degrees and returns ChainType.
def make_chain_type(ranks, degrees): # -> ChainType
    ranks   = [asint(_, 'rank')   for _ in ranks]
    degrees = [asint(_, 'degree') for _ in degrees]
    if len(ranks) == 0 and len(degrees) == 0:
        raise EmptyType("type of length 0")
    if len(ranks) != len(degrees):
        raise LengthMismatch("len(ranks)=%d != len(degrees)=%d" % (len(ranks), len(degrees)))
    for i, r in enumerate(ranks):
        if r <= 0:
            raise NonPositiveRank("r_%d = %d is not positive" % (i+1, r))
    return ChainType(ranks, degrees)

# make_vhs_type validates ranks and degrees and returns VHSType.
def make_vhs_type(ranks, degrees): # -> VHSType
    ct = make_chain_type(ranks, degrees)
    if ct.degree != 0:
        raise NonZeroTotalDegree("total degree %d != 0" % ct.degree)
    return VHSType(ct.ranks, ct.degrees)

# asvhs converts ChainType, or (ranks, degrees) pair, to VHSType.
def asvhs(v): # -> VHSType
    if isinstance(v, VHSType):
        return v
    if isinstance(v, ChainType):
        return make_vhs_type(v.ranks, v.degrees)
    ranks, degrees = v
    return make_vhs_type(ranks, degrees)

# chain_type_fromjson decodes {"ranks": [...], "degrees": [...]} into ChainType.
def chain_type_fromjson(obj): # -> ChainType
    if not isinstance(obj, dict):
        raise MalformedType("type must be a JSON object; got %r" % (obj,))
    try:
        ranks, degrees = obj["ranks"], obj["degrees"]
    except KeyError as e:
        raise MalformedType("type object without %s" % e)
    if not isinstance(ranks, list) or not isinstance(degrees, list):
        raise MalformedType("ranks and degrees must be JSON arrays")
    return make_chain_type(ranks, degrees)

# vhs_type_fromjson decodes JSON type object into VHSType.
def vhs_type_fromjson(obj): # -> VHSType
    return asvhs(chain_type_fromjson(obj))

# canonical returns types sorted in canonical order.
def canonical(types): # -> [] ChainType
    return sorted(types, key=lambda t: t.sortkey())


# StabilityParam is a stability parameter α⃗ = (α_1, ..., α_l) of a chain.
class StabilityParam(object):
    # .alphas   (Rational,) α_1 .. α_l
    # .higgs    bool        whether α⃗ is of Higgs type (strictly decreasing)
    __slots__ = ('alphas', 'higgs')

    def __init__(self, alphas, higgs=False):
        self.alphas = tuple(rational(_) for _ in alphas)
        self.higgs  = higgs
        if higgs and not self.is_strictly_decreasing():
            raise NonDecreasingParameter("Higgs-type parameter %s is not strictly decreasing" % self)

    def __len__(self):
        return len(self.alphas)

    def is_strictly_decreasing(self):
        a = self.alphas
        return all(a[i] > a[i+1] for i in range(len(a)-1))

    def asjson(self):
        return [fmtrat(_) for _ in self.alphas]

    def __eq__(a, b):
        return isinstance(b, StabilityParam) and \
                (a.alphas, a.higgs) == (b.alphas, b.higgs)

    def __ne__(a, b):
        return not (a == b)

    def __hash__(self):
        return hash((self.alphas, self.higgs))

    def __repr__(self):
        return 'StabilityParam(%s%s)' % (self, ', higgs=True' if self.higgs else '')

    def __str__(self):
        return '(%s)' % ', '.join(fmtrat(_) for _ in self.alphas)

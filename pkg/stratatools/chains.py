# -*- coding: utf-8 -*-
# stratatools - holomorphic chains: α-slope, Higgs parameter, necessary conditions
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
"""Chains - slopes and necessary conditions for α-semistable chains

For a chain of type (r⃗, d⃗) and stability parameter α⃗ the α-slope is

    μ = (∑d_i + ∑α_i r_i) / ∑r_i

A C-VHS of type (r⃗, d⃗) gives, for every δ ∈ Z, the chain
E_i ⊗ K^-(l-i+δ) of degrees d'_i = d_i - r_i(l-i+δ)(2g-2), which is
semistable with respect to α_i = (l-i+δ)(2g-2).

check_chain_necessary evaluates the 4 families of necessary conditions that
every α-semistable chain with α_1 > ... > α_l satisfies:

    C1  for j in 2..l:          ∑_{i≥j}(d_i+α_i r_i) / ∑_{i≥j} r_i  ≤ μ
    C2  for r_j = r_{j+1}:      d_j ≤ d_{j+1}
    C3  for k<j, r_k < min(r_{k+1}..r_j):
            (∑_{i∉[k,j]}(d_i+α_i r_i) + (j-k+1)d_k + (∑_{i=k}^j α_i) r_k) /
            (∑_{i∉[k,j]} r_i + (j-k+1)r_k)                              ≤ μ
    C4  for k<j, r_k > max(r_{k+1}..r_j):
            ∑_{i=k}^{j-1}(d_i - d_j + α_i(r_i - r_j)) / ∑_{i=k}^{j-1}(r_i - r_j)  ≤ μ

C1, C3 and C4 are evaluated cleared of denominators as num ≤ μ·den, and
their violations report lhs=num, rhs=μ·den. The C4 denominator is not
always positive, e.g. for r⃗ = (3,1,2), so the cleared form is the one
that is checked. Passing all conditions does not imply semistability.
"""

from __future__ import print_function

from collections import OrderedDict

from zope.interface import implementer

from stratatools.core import Rational, StabilityParam, ChainType, LengthMismatch, \
        NonDecreasingParameter, EmptyType, asgenus, asint, asvhs, fmtrat
from stratatools.util import IReport


# alpha_slope returns α-slope of chain type ct.
def alpha_slope(ct, alpha): # -> Rational
    _checklen(ct, alpha)
    num = ct.degree + sum(a*r for a, r in zip(alpha.alphas, ct.ranks))
    return Rational(num) / ct.rank

# higgs_parameter returns α⃗ with α_i = (l-i+δ)(2g-2), i = 1..l.
def higgs_parameter(l, delta, genus): # -> StabilityParam
    l     = asint(l, 'l')
    delta = asint(delta, 'delta')
    g     = asgenus(genus)
    if l < 1:
        raise EmptyType("chain length %d < 1" % l)
    return StabilityParam([(l-i+delta)*g.degK for i in range(1, l+1)], higgs=True)

# vhs_to_chain returns the chain obtained from a C-VHS of type v by twisting
# E_i with K^-(l-i+δ), together with the matching Higgs parameter.
def vhs_to_chain(v, delta, genus): # -> (ChainType, StabilityParam)
    v = asvhs(v)
    alpha = higgs_parameter(v.l, delta, genus)
    degrees = [d - r*a for (r, d, a) in zip(v.ranks, v.degrees, alpha.alphas)]
    return ChainType(v.ranks, [int(_) for _ in degrees]), alpha


# ChainViolation is one failed necessary condition.
class ChainViolation(object):
    # .condition    'C1'|'C2'|'C3'|'C4'
    # .indices      (j,) or (k,j)
    # .lhs, .rhs    Rational    the condition reads lhs ≤ rhs; here lhs > rhs
    __slots__ = ('condition', 'indices', 'lhs', 'rhs')

    def __init__(self, condition, indices, lhs, rhs):
        self.condition = condition
        self.indices   = tuple(indices)
        self.lhs       = Rational(lhs)
        self.rhs       = Rational(rhs)

    # key identifies the failed condition regardless of the evaluated values.
    def key(self):
        return (self.condition, self.indices)

    def asjson(self):
        return OrderedDict([
            ("condition",   self.condition),
            ("indices",     list(self.indices)),
            ("lhs",         fmtrat(self.lhs)),
            ("rhs",         fmtrat(self.rhs)),
        ])

    def __repr__(self):
        return 'ChainViolation(%s%r: %s > %s)' % (self.condition, self.indices,
                                                  fmtrat(self.lhs), fmtrat(self.rhs))


# ChainCheckReport is the result of check_chain_necessary.
@implementer(IReport)
class ChainCheckReport(object):
    # .mu           Rational            α-slope of the chain
    # .violations   [] ChainViolation
    # .ties         [] int              j for which C1 holds with equality
    def __init__(self, mu, violations, ties):
        self.mu         = mu
        self.violations = violations
        self.ties       = ties

    @property
    def verdict(self):
        return len(self.violations) == 0

    def ok(self):
        return self.verdict

    def asjson(self):
        return OrderedDict([
            ("mu",          fmtrat(self.mu)),
            ("verdict",     "pass" if self.verdict else "fail"),
            ("violations",  [_.asjson() for _ in self.violations]),
            ("ties",        list(self.ties)),
        ])

    def table(self):
        header = ("condition", "indices", "lhs", "rhs")
        rows = [(v.condition, ','.join('%d' % _ for _ in v.indices), fmtrat(v.lhs), fmtrat(v.rhs))
                    for v in self.violations]
        notes = ["mu = %s: %s" % (fmtrat(self.mu), "pass" if self.verdict else "fail")]
        if self.ties:
            notes.append("C1 ties at j = %s" % ', '.join('%d' % _ for _ in self.ties))
        return header, rows, notes


# check_chain_necessary checks chain type ct against necessary conditions of
# α-semistability.
def check_chain_necessary(ct, alpha): # -> ChainCheckReport
    _checklen(ct, alpha)
    if not alpha.is_strictly_decreasing():
        raise NonDecreasingParameter("parameter %s is not strictly decreasing" % alpha)

    l  = ct.l
    r  = lambda i: ct.r(i)
    d  = lambda i: ct.d(i)
    a  = lambda i: alpha.alphas[i-1] if 1 <= i <= l else 0
    w  = lambda i: d(i) + a(i)*r(i)       # α-weighted degree of E_i

    mu = alpha_slope(ct, alpha)
    violations = []
    ties = []

    # (C1)
    for j in range(2, l+1):
        num = sum(w(i) for i in range(j, l+1))
        den = sum(r(i) for i in range(j, l+1))
        if num > mu*den:
            violations.append(ChainViolation('C1', (j,), num, mu*den))
        elif num == mu*den:
            ties.append(j)

    # (C2)
    for j in range(1, l):
        if r(j) == r(j+1) and d(j) > d(j+1):
            violations.append(ChainViolation('C2', (j,), d(j), d(j+1)))

    for k in range(1, l):
        for j in range(k+1, l+1):
            inner = [r(i) for i in range(k+1, j+1)]

            # (C3)
            if r(k) < min(inner):
                outside = [i for i in range(1, l+1) if not (k <= i <= j)]
                num = sum(w(i) for i in outside) + (j-k+1)*d(k) + \
                      sum(a(i) for i in range(k, j+1))*r(k)
                den = sum(r(i) for i in outside) + (j-k+1)*r(k)
                if num > mu*den:
                    violations.append(ChainViolation('C3', (k,j), num, mu*den))

            # (C4)
            if r(k) > max(inner):
                num = sum(d(i) - d(j) + a(i)*(r(i) - r(j)) for i in range(k, j))
                den = sum(r(i) - r(j) for i in range(k, j))
                if num > mu*den:
                    violations.append(ChainViolation('C4', (k,j), num, mu*den))

    return ChainCheckReport(mu, violations, ties)


def _checklen(ct, alpha):
    if ct.l != len(alpha):
        raise LengthMismatch("chain of length %d, parameter of length %d" % (ct.l, len(alpha)))

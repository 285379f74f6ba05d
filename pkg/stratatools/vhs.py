# -*- coding: utf-8 -*-
# stratatools - admissible types of C-VHS
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
"""Vhs - admissibility and enumeration of C-VHS types

The set of C-VHS of type (r⃗, d⃗) with every θ_i non-zero is non-empty if and
only if the type satisfies

    V1  for 1 < j ≤ l:          ∑_{i≥j} d_i < 0
    V2  for r_j = r_{j+1}:      d_j/r_j - d_{j+1}/r_{j+1} ≤ 2g-2
    V3  for k<j, r_k < min(r_{k+1}..r_j):
            -∑_{i=k+1}^j d_i + (j-k)(d_k - (j-k+1)(g-1)r_k) ≤ 0
    V4  for k<j, r_k > max(r_{k+1}..r_j):
            ∑_{i=k}^{j-1} d_i - (j-k)(d_j + (j-k+1)(g-1)r_j) ≤ 0

Such types are called admissible. For l = 1 the conditions are vacuous.

Admissible types of fixed rank are finite in number: V2-V4 imply
d_j - d_{j+1} ≤ (2g-2)·min(r_j, r_{j+1}), and together with V1 this bounds
every degree. enumerate_vhs_types walks that polytope depth-first per
composition of r and filters candidates by the full condition set.
"""

from __future__ import print_function

from collections import OrderedDict
from itertools import product
import logging as log

from golang import sync, context
from zope.interface import implementer

from stratatools.core import VHSType, RankCapExceeded, RankTooSmall, \
        asgenus, asint, asvhs, canonical
from stratatools.util import IReport


# maximum total rank enumerate_vhs_types is allowed to handle.
RANK_CAP = 8


# Violation is one failed admissibility condition.
class Violation(object):
    # .condition    'V1'|'V2'|'V3'|'V4'
    # .indices      (j,) or (k,j)
    # .lhs, .rhs    int     the condition reads lhs ≤ rhs; here lhs > rhs
    __slots__ = ('condition', 'indices', 'lhs', 'rhs')

    def __init__(self, condition, indices, lhs, rhs):
        self.condition = condition
        self.indices   = tuple(indices)
        self.lhs       = lhs
        self.rhs       = rhs

    def asjson(self):
        return OrderedDict([
            ("condition",   self.condition),
            ("indices",     list(self.indices)),
            ("lhs",         self.lhs),
            ("rhs",         self.rhs),
        ])

    def __repr__(self):
        return 'Violation(%s%r: %d > %d)' % (self.condition, self.indices, self.lhs, self.rhs)


# AdmissibilityReport is the result of check_vhs_admissible.
@implementer(IReport)
class AdmissibilityReport(object):
    # .type         VHSType
    # .genus        Genus
    # .violations   [] Violation
    # .chain        ChainCheckReport | None     filled by `strata check-type --chain`
    def __init__(self, type, genus, violations):
        self.type       = type
        self.genus      = genus
        self.violations = violations
        self.chain      = None

    @property
    def verdict(self):
        return len(self.violations) == 0

    def ok(self):
        return self.verdict and (self.chain is None or self.chain.verdict)

    def asjson(self):
        j = OrderedDict([
            ("type",        self.type.asjson()),
            ("g",           int(self.genus)),
            ("verdict",     "pass" if self.verdict else "fail"),
            ("violations",  [_.asjson() for _ in self.violations]),
        ])
        if self.chain is not None:
            j["chain"] = self.chain.asjson()
        return j

    def table(self):
        header = ("type", "g", "verdict", "violations")
        viol = ' '.join('%s%r' % (v.condition, list(v.indices)) for v in self.violations)
        verdict = "pass" if self.verdict else "fail"
        if self.chain is not None:
            verdict += " / chain %s" % ("pass" if self.chain.verdict else "fail")
        return header, [(str(self.type), '%d' % self.genus, verdict, viol)], []


# check_vhs_admissible checks type v against conditions V1-V4.
def check_vhs_admissible(v, genus): # -> AdmissibilityReport
    v = asvhs(v)
    g = asgenus(genus)
    l = v.l
    r = v.r
    d = v.d
    violations = []

    # (V1) in integer form: ∑_{i≥j} d_i ≤ -1
    for j in range(2, l+1):
        s = sum(d(i) for i in range(j, l+1))
        if s > -1:
            violations.append(Violation('V1', (j,), s, -1))

    # (V2) cleared of denominators
    for j in range(1, l):
        if r(j) == r(j+1):
            lhs = d(j)*r(j+1) - d(j+1)*r(j)
            rhs = g.degK * r(j)*r(j+1)
            if lhs > rhs:
                violations.append(Violation('V2', (j,), lhs, rhs))

    for k in range(1, l):
        for j in range(k+1, l+1):
            inner = [r(i) for i in range(k+1, j+1)]

            # (V3)
            if r(k) < min(inner):
                lhs = -sum(d(i) for i in range(k+1, j+1)) + \
                      (j-k)*(d(k) - (j-k+1)*(g-1)*r(k))
                if lhs > 0:
                    violations.append(Violation('V3', (k,j), lhs, 0))

            # (V4)
            if r(k) > max(inner):
                lhs = sum(d(i) for i in range(k, j)) - \
                      (j-k)*(d(j) + (j-k+1)*(g-1)*r(j))
                if lhs > 0:
                    violations.append(Violation('V4', (k,j), lhs, 0))

    return AdmissibilityReport(v, g, violations)


# uniformizing_type returns type of the uniformizing C-VHS of rank r:
#
#   r⃗ = (1, ..., 1),  d⃗ = ((r-1)(g-1), (r-3)(g-1), ..., (-r+1)(g-1))
def uniformizing_type(r, genus): # -> VHSType
    r = asint(r, 'rank')
    g = asgenus(genus)
    if r < 2:
        raise RankTooSmall("rank must be >= 2; got %d" % r)
    return VHSType([1]*r, [(r - 2*i + 1)*(g-1) for i in range(1, r+1)])


# compositions yields all compositions of r - ordered tuples of positive
# integers summing to r.
def compositions(r):
    if r == 0:
        yield ()
        return
    for first in range(1, r+1):
        for rest in compositions(r - first):
            yield (first,) + rest


# enumerate_vhs_types returns all admissible types of total rank r in canonical order.
#
# With jobs > 1 compositions are processed by that many workers concurrently.
# The result does not depend on jobs.
def enumerate_vhs_types(r, genus, jobs=1): # -> [] VHSType
    r = asint(r, 'rank')
    g = asgenus(genus)
    jobs = asint(jobs, 'jobs')
    if r < 1:
        raise RankTooSmall("rank must be >= 1; got %d" % r)
    if r > RANK_CAP:
        raise RankCapExceeded("rank %d exceeds enumeration cap %d" % (r, RANK_CAP))

    compv = list(compositions(r))
    if jobs <= 1:
        typev = []
        for ranks in compv:
            typev.extend(composition_types(ranks, g))
    else:
        typev = _enumerate_parallel(compv, g, jobs)

    log.debug("enumerate r=%d g=%d: %d types over %d compositions", r, g, len(typev), len(compv))
    return canonical(typev)

def _enumerate_parallel(compv, g, jobs):
    # compositions are dealt round-robin into jobs buckets
    bucketv = [compv[i::jobs] for i in range(jobs)]
    resultv = [None] * len(bucketv)

    def work(ctx, i):
        found = []
        for ranks in bucketv[i]:
            found.extend(composition_types(ranks, g))
        resultv[i] = found

    wg = sync.WorkGroup(context.background())
    for i in range(len(bucketv)):
        wg.go(work, i)
    wg.wait()

    typev = []
    for found in resultv:
        typev.extend(found)
    return typev


# composition_types returns admissible types with given ranks in canonical order.
#
# Results are memoized per (ranks, g). The memo holds at most MEMO_CAP entries
# and is dropped as a whole when full.
MEMO_CAP = 512
_composition_memo = {}
def composition_types(ranks, genus): # -> [] VHSType
    g = asgenus(genus)
    key = (tuple(ranks), int(g))
    typev = _composition_memo.get(key)
    if typev is None:
        if len(_composition_memo) >= MEMO_CAP:
            log.debug("composition memo: dropping %d entries", len(_composition_memo))
            _composition_memo.clear()
        typev = _composition_memo[key] = _composition_types(key[0], g)
        log.debug("composition %r g=%d: %d types", key[0], g, len(typev))
    return typev

def _composition_types(ranks, g):
    l = len(ranks)
    if l == 1:
        return [VHSType(ranks, (0,))]

    # drop[j] bounds d_j - d_{j+1}   (0-based j)
    drop = [g.degK * min(ranks[j], ranks[j+1]) for j in range(l-1)]

    typev = []
    degrees = [0]*l

    # dfs assigns d_j given P = d_1 + ... + d_{j-1}   (j 0-based)
    def dfs(j, P):
        if j == l-1:
            dl = -P
            if degrees[l-2] - dl > drop[l-2]:
                return
            degrees[l-1] = dl
            v = VHSType(ranks, degrees)
            if check_vhs_admissible(v, g).verdict:
                typev.append(v)
            return

        lo = 1 - P      # d_1 + ... + d_j ≥ 1
        if j > 0:
            lo = max(lo, degrees[j-1] - drop[j-1])

        # every later d_t ≥ d_j - (drop_j + ... + drop_{t-1}), and d_j..d_l sum to -P
        slack = 0
        c = 0
        for t in range(j+1, l):
            c += drop[t-1]
            slack += c
        hi = (slack - P) // (l - j)

        for dj in range(lo, hi+1):
            degrees[j] = dj
            dfs(j+1, P + dj)

    dfs(0, 0)
    return canonical(typev)


# iter_splittings yields pairs (v1, v2) of admissible degree-0 types such that
# v is their direct sum: ranks and degrees add up levelwise, and each summand
# occupies a contiguous run of levels.
#
# Every unordered splitting is yielded once per order of its summands.
def iter_splittings(v, genus):
    v = asvhs(v)
    g = asgenus(genus)
    l = v.l
    for a in range(l):
        for b in range(a, l):
            for sub in product(*[range(1, v.ranks[i]+1) for i in range(a, b+1)]):
                r1 = [0]*a + list(sub) + [0]*(l-b-1)
                r2 = [x - y for (x, y) in zip(v.ranks, r1)]
                supp2 = [i for i in range(l) if r2[i] > 0]
                if not supp2 or supp2 != list(range(supp2[0], supp2[-1]+1)):
                    continue
                for t1 in composition_types(sub, g):
                    d1 = [0]*a + list(t1.degrees) + [0]*(l-b-1)
                    d2 = [x - y for (x, y) in zip(v.degrees, d1)]
                    if any(d2[i] != 0 for i in range(l) if r2[i] == 0):
                        continue
                    t2 = VHSType([r2[i] for i in supp2], [d2[i] for i in supp2])
                    if check_vhs_admissible(t2, g).verdict:
                        yield t1, t2

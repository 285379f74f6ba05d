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

from collections import defaultdict

import pytest

from stratatools.core import VHSType, NotAdmissible, AllRanksOne, RankTooSmall, RankCapExceeded
from stratatools.vhs import enumerate_vhs_types, uniformizing_type
from stratatools.dims import dim_formula, dim_component, codim_nonstable_bound, stratum_dim, \
        moduli_dims, extremal_report, family_case, half_dim, FORMULA, SPECIAL_CASE


def T(ranks, degrees):
    return VHSType(ranks, degrees)


def test_dim_formula():
    assert dim_formula(T([3], [0]), 2) == 10
    assert dim_formula(T([2,2], [1,-1]), 2) == 9
    assert dim_formula(T([1,1,1], [1,0,-1]), 2) == 4
    assert dim_formula(T([1,1,1], [2,0,-2]), 2) == 2
    assert dim_formula(([1], [0]), 5) == 5


def test_dim_component():
    rep = dim_component(T([1,2], [2,-2]), 3)
    assert (rep.dim, rep.provenance) == (6, SPECIAL_CASE)
    assert rep.dimcell() == u"6†"
    assert len(rep.notes()) == 1

    rep = dim_component(T([1,2], [1,-1]), 3)
    assert (rep.dim, rep.provenance) == (12, FORMULA)
    assert rep.dimcell() == u"12"
    assert rep.notes() == []

    rep = dim_component(T([1,2,1], [4,0,-4]), 3)
    assert (rep.dim, rep.provenance) == (6, SPECIAL_CASE)

    # rank-4 special lines at g=2
    assert dim_component(T([1,3], [1,-1]), 2).dim == 7         # 5g-3
    assert dim_component(T([3,1], [1,-1]), 2).dim == 7
    assert dim_component(T([1,1,2], [2,0,-2]), 2).dim == 4     # 5g-3-(3/2)d_1
    assert dim_component(T([2,1,1], [2,0,-2]), 2).dim == 4     # 8g-6-3d_1
    for v in [T([1,3], [1,-1]), T([1,1,2], [2,0,-2]), T([2,1,1], [2,0,-2])]:
        assert dim_component(v, 2).provenance == SPECIAL_CASE

    with pytest.raises(NotAdmissible):
        dim_component(T([1,1], [2,-2]), 2)


def test_dim_component_json():
    rep = dim_component(T([2], [0]), 2)
    assert rep.asjson() == {
        "type":                 {"ranks": [2], "degrees": [0]},
        "g":                    2,
        "dim":                  5,
        "provenance":           "formula",
        "stable_locus_caveat":  False,
        "stratum_dim":          10,
    }


def test_stable_locus_caveat():
    assert dim_component(T([5], [0]), 2).stable_locus_caveat
    assert not dim_component(uniformizing_type(5, 2), 2).stable_locus_caveat
    # heuristic applies from rank 5 on
    assert not dim_component(T([4], [0]), 2).stable_locus_caveat


# closed forms of the rank-3 and rank-4 dimension tables
closed_forms = {
    (3,):       lambda g, d: 9*g - 8,
    (1,1,1):    lambda g, d: 5*g - 4 - 2*d[0] - d[1],
    (1,2):      lambda g, d: 7*g - 6 - 3*d[0],
    (2,1):      lambda g, d: 7*g - 6 - 3*d[0],
    (4,):       lambda g, d: 16*g - 15,
    (1,1,1,1):  lambda g, d: 7*g - 6 - 2*d[0] - d[1] - d[2],
    (1,3):      lambda g, d: 13*g - 12 - 4*d[0],
    (3,1):      lambda g, d: 13*g - 12 - 4*d[0],
    (2,2):      lambda g, d: 12*g - 11 - 4*d[0],
    (1,1,2):    lambda g, d: 9*g - 8 - 2*d[0] - 2*d[1],
    (2,1,1):    lambda g, d: 9*g - 8 - 2*d[0],
    (1,2,1):    lambda g, d: 10*g - 9 - 4*d[0] - 2*d[1],
}

@pytest.mark.parametrize('g', [2, 3, 4, 5, 6])
@pytest.mark.parametrize('r', [3, 4])
def test_closed_forms(r, g):
    for v in enumerate_vhs_types(r, g):
        assert dim_formula(v, g) == closed_forms[v.ranks](g, v.degrees), v


def test_family_case():
    assert family_case(T([3], [0])) == 'I'
    assert family_case(T([1,2], [1,-1])) == 'III'
    assert family_case(T([1,1,2], [2,0,-2])) == 'VI'
    assert family_case(T([1,2,1], [2,0,-2])) == 'VIII'
    assert family_case(T([1,1], [1,-1])) is None
    assert family_case(T([5], [0])) is None


# dim decreases strictly along the projection variable of each rank-3 family.
@pytest.mark.parametrize('g', [2, 3, 4, 5])
def test_monotonicity(g):
    projection = {
        (1,1,1):    lambda d: 2*d[0] + d[1],
        (1,2):      lambda d: d[0],
        (2,1):      lambda d: d[0],
    }
    byfamily = defaultdict(dict)
    for v in enumerate_vhs_types(3, g):
        p = projection.get(v.ranks)
        if p is None:
            continue
        dim = dim_component(v, g).dim
        x = p(v.degrees)
        assert byfamily[v.ranks].setdefault(x, dim) == dim
        if v.ranks != (1,1,1) and v.degrees[0] < g-1:
            assert 4*g - 3 <= dim < 7*g - 6

    for ranks, dimbyx in byfamily.items():
        dimv = [dimbyx[x] for x in sorted(dimbyx)]
        for a, b in zip(dimv, dimv[1:]):
            assert a > b, (ranks, dimv)


def test_codim_nonstable_bound():
    assert codim_nonstable_bound(T([1,2], [1,-1]), 3) == 7
    assert codim_nonstable_bound(T([2], [0]), 2) == 5
    with pytest.raises(AllRanksOne):
        codim_nonstable_bound(T([1,1], [1,-1]), 2)

def test_codim_positive(admissible):
    r, g, typev = admissible
    for v in typev:
        if max(v.ranks) > 1:
            assert codim_nonstable_bound(v, g) >= 1


def test_stratum_dim():
    assert stratum_dim(uniformizing_type(3, 2), 2) == 12
    assert stratum_dim(T([3], [0]), 2) == 20
    assert stratum_dim(T([1,2], [1,-1]), 2) == 14     # 2g + half_dim


def test_moduli_dims():
    def dims(r, g):
        m = moduli_dims(r, g)
        return (m.dim_mdr, m.half_dim, m.oper_dim, m.max_stratum_dim)

    assert dims(2, 2) == (10, 5, 7, 10)
    assert dims(3, 2) == (20, 10, 12, 20)
    assert dims(2, 3) == (18, 9, 12, 18)

    assert list(moduli_dims(2, 2).asjson().keys()) == \
            ["r", "g", "dim_mdr", "half_dim", "oper_dim", "max_stratum_dim"]

    with pytest.raises(RankTooSmall):
        moduli_dims(1, 2)


# strata over the uniformizing type and over (r; 0) are the oper stratum and the open one.
@pytest.mark.parametrize('g', [2, 3, 4, 5])
@pytest.mark.parametrize('r', [2, 3, 4, 5, 6])
def test_extreme_strata(r, g):
    m = moduli_dims(r, g)
    assert stratum_dim(uniformizing_type(r, g), g) == m.oper_dim
    assert stratum_dim(T([r], [0]), g) == m.max_stratum_dim
    assert m.half_dim == half_dim(r, g)


def test_extremal_report():
    rep = extremal_report(2, 2)
    assert (rep.min_dim, rep.min_types) == (2, [T([1,1], [1,-1])])
    assert (rep.max_dim, rep.max_types) == (5, [T([2], [0])])
    assert rep.bounds_hold
    assert rep.ok()

    rep = extremal_report(3, 2)
    assert (rep.min_dim, rep.min_types) == (2, [T([1,1,1], [2,0,-2])])
    assert (rep.max_dim, rep.max_types) == (10, [T([3], [0])])

    rep = extremal_report(4, 2)
    assert (rep.min_dim, rep.min_types) == (2, [uniformizing_type(4, 2)])
    assert (rep.max_dim, rep.max_types) == (17, [T([4], [0])])

    with pytest.raises(RankCapExceeded):
        extremal_report(9, 2)


@pytest.mark.parametrize('r', [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_extremal_bounds(r, genus):
    rep = extremal_report(r, genus)
    assert rep.bounds_hold
    assert rep.extremal_ok()
    assert rep.min_dim == genus
    assert rep.max_dim == r*r*(genus-1) + 1

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

import pytest

from stratatools.vhs import enumerate_vhs_types


# genus is test fixture to run a test for genera 2 and 3.
@pytest.fixture(params=[2, 3], ids=lambda g: 'g%d' % g)
def genus(request):
    return request.param


# admissible is test fixture yielding (r, g, types) - all admissible types of
# rank r ≤ 4 for g ∈ {2,3}.
@pytest.fixture(params=[(r, g) for r in (1, 2, 3, 4) for g in (2, 3)],
                ids=lambda _: 'r%d-g%d' % _)
def admissible(request): # -> (r, g, [] VHSType)
    r, g = request.param
    return r, g, enumerate_vhs_types(r, g)


# typesfile is test fixture writing a list of JSON objects into a temporary
# file and returning its path.
@pytest.fixture
def typesfile(tmpdir):
    import json
    def _(objv):
        path = str(tmpdir.join('types.json'))
        with open(path, 'w') as f:
            json.dump(objv, f)
        return path
    return _

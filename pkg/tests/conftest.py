import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vbridge.gauss import parse_gauss_code

# six-chord knot with bridge count 3 but Wirtinger number 1
D6_CODE = "O1-O2-O3-U1-O4-U3-O5-U6-U2-U5-U4-O6-"
# virtual trefoil
DV_CODE = "O1+O2+U1+U2+"
# classical trefoil
D3_CODE = "O1-U2-O3-U1-O2-U3-"
# one-seed knot whose last-colored strand carries an arrowtail
DL_CODE = "O1+O2+U1+U2+O3+U3+"


@pytest.fixture(scope="session")
def d6():
    return parse_gauss_code(D6_CODE)


@pytest.fixture(scope="session")
def dv():
    return parse_gauss_code(DV_CODE)


@pytest.fixture(scope="session")
def d3():
    return parse_gauss_code(D3_CODE)


@pytest.fixture(scope="session")
def dl():
    return parse_gauss_code(DL_CODE)

"""Shared fixtures and precomputed high-precision reference values.

Reference constants were computed once with an arbitrary-precision package
before the build and frozen here; they are independent of the code under
test.
"""

import math
import random

import pytest

# zeta(s, a, c) references
Z_BASE = complex(0.94425831423820007992, 0.0)  # (1/2, 1/2, 1/2)
Z_S0_AI_C1 = complex(1.0018709365986606441, 0.0)  # (0, i, 1) = 1/(1 - e^{-2 pi})
Z_2_I_1 = complex(1.0004672485729238729, 0.0)
Z_1_I_1 = complex(1.0009348854438452007, 0.0)
Z_05_04_06 = complex(0.85030324638498035169, 0.1702791075545324348)
Z_M05_04_06 = complex(0.22567242168866682929, 0.13908660779056910475)
Z_M3_05_05 = complex(0.0, 0.0)
Z_15_04_06 = complex(1.8320275260955288571, 0.15512054413433526235)
Z_25_03_02i_07 = complex(2.4111593757669638239, 0.067471810545761627383)
Z_05_03_02i_07 = complex(1.097837681501666021, 0.17430156590367620427)
Z_C2 = complex(0.60210200931336634319, 0.034153230894431166033)  # (0.7, 0.3+0.4i, 2)
Z_07_03i04_m15 = complex(-0.24065751961272490901, -0.65024842584635008684)
Z_COMPLEX_S = complex(0.28969810539601873978, 0.64343510196149722057)  # (1.3+2.1i, .35+.2i, .7-.3i)
Z_HIGH_IMS = complex(0.97032574823794411851, 1.0059306863808751233)  # (0.5+5i, .35, .65)
Z_3_03_07 = complex(2.8267250536459371788, 0.15953460458991894859)
# principal-sheet value just right of the downward ray below a = 1, deep in the
# lower half-plane (from direct quadrature of the integral representation)
Z_NEAR_CUT = complex(-9.8515975171897576362, 9.3791318783265704326)  # (0.753+1.504i, 1.011-0.1725i, 0.4209-0.2332i)

PI2_12 = math.pi**2 / 12.0
PI2_6 = math.pi**2 / 6.0

# two-sided sums
TS_PLUS_3_05_05 = complex(0.0, 0.0)
TS_PLUS_3_03_07 = complex(-8.9206128481395396712, -34.771635582530411365)
TS_MINUS_4_05_05 = complex(31.646225655715370755, 0.0)
TS_MINUS_3_05_05 = complex(15.503138340149910088, 0.0)

# gamma references on the contract box |Im| <= 50, -50 <= Re <= 50
GAMMA_HALF = complex(1.7724538509055160273, 0.0)
RGAMMA_2_5 = complex(0.75225277806367504926, 0.0)
GAMMA_GRID = [
    (complex(0.5, 0.0), complex(1.7724538509055160273, 0.0)),
    (complex(1.0, 0.0), complex(1.0, 0.0)),
    (complex(2.5, 0.0), complex(1.3293403881791370205, 0.0)),
    (complex(-2.5, 0.0), complex(-0.94530872048294188123, 0.0)),
    (complex(0.5, 50.0), complex(9.0332043526006192339e-35, 1.7263622522690938061e-34)),
    (complex(-0.5, 50.0), complex(3.4343146643665497187e-36, -1.840984017163789344e-36)),
    (complex(50.0, 0.0), complex(6.0828186403426756087e62, 0.0)),
    (complex(50.0, 50.0), complex(1.1121416728629092081e53, 1.0242389193852624159e53)),
    (complex(-49.5, 0.0), complex(7.3222696892341270352e-64, 0.0)),
    (complex(-49.5, 0.5), complex(-1.0993261838402478908e-64, 2.7110924335111542237e-64)),
    (complex(-50.0, 50.0), complex(3.5479617137674991867e-123, -1.4598316657859098942e-124)),
    (complex(3.7, -20.2), complex(1.6414369550439737641e-10, -6.1171049630561293809e-10)),
    (complex(-15.3, 7.7), complex(-3.944434760080409431e-22, -6.9953859159123820325e-23)),
    (complex(30.1, -44.9), complex(3.1838891789488117305e19, 3.1192187501297232932e18)),
    (complex(0.3, 0.2), complex(1.9803581728234425391, -1.4145760083733033149)),
    (complex(-8.5, -8.5), complex(-3.0932329506187350766e-15, 3.5251405157742093414e-15)),
]


@pytest.fixture
def rng():
    return random.Random(20260810)

"""Shared systems used across the suite.

Two tiny worked systems (GF(11) in shape position, GF(2) not in shape
position), a 12-dimensional bivariate input accepted as given for the
array-sweep tests, and the monomial ideal the sweep is expected to decline.
"""

import pytest

from sparsefglm.buchberger import buchberger
from sparsefglm.field import PrimeField
from sparsefglm.poly import GroebnerBasis, MultiPoly
from sparsefglm.quotient import QuotientStructure
from sparsefglm.sysio import parse_system, poly_str

GF11_TEXT = """\
p 11
vars 3
x2^2 + 9*x2 + 2*x1 + 6
x1^2 + 2*x2 + 9
x3 + 9
"""

GF2_TEXT = """\
p 2
vars 2
x1^3*x2 + x1^3 + x1 + 1
x1^4 + x1^3 + x2 + 1
x2^2 + x1^2
"""

# probe vector for the 12-dimensional sweep example
PROBE12 = [6757, 43420, 39830, 45356, 52762, 17712, 27676, 17194, 138, 48036, 12649, 11037]


def quotient_from_text(text: str) -> QuotientStructure:
    F, polys = parse_system(text)
    return QuotientStructure(buchberger(polys, "drl", F), F)


def basis_strs(polys) -> list[str]:
    if isinstance(polys, GroebnerBasis):
        polys = polys.polys
    return [poly_str(f) for f in polys]


@pytest.fixture(scope="session")
def gf11() -> QuotientStructure:
    return quotient_from_text(GF11_TEXT)


@pytest.fixture(scope="session")
def gf2q() -> QuotientStructure:
    return quotient_from_text(GF2_TEXT)


@pytest.fixture(scope="session")
def trusted12() -> QuotientStructure:
    """Bivariate D = 12 structure whose input basis is taken on trust.

    The three generators are consumed as a reduced DRL basis without
    completion; only the staircase and multiplication matrices they induce
    matter to the sweep.
    """
    F = PrimeField(65521)

    def P(d):
        return MultiPoly(2, {t: F.norm(c) for t, c in d.items()})

    g_a = P({(0, 4): 1, (3, 1): 2, (0, 3): 21, (1, 2): 11, (2, 1): 4, (3, 0): 22,
             (0, 2): 9, (1, 1): 17, (2, 0): 19, (0, 1): 2, (1, 0): 19, (0, 0): 5})
    g_b = P({(2, 2): 1, (0, 3): 10, (2, 1): 12, (3, 0): 20, (0, 0): 21})
    g_c = P({(4, 0): 1, (2, 0): 15, (1, 0): 19, (0, 0): 3})
    return QuotientStructure(GroebnerBasis([g_c, g_b, g_a], "drl", reduced=True), F)


@pytest.fixture(scope="session")
def monomial6() -> QuotientStructure:
    """<x1^3, x1^2*x2, x1*x2^2, x2^3> over GF(65521); D = 6, not cyclic."""
    F = PrimeField(65521)
    gens = [
        MultiPoly(2, {(3, 0): 1}),
        MultiPoly(2, {(2, 1): 1}),
        MultiPoly(2, {(1, 2): 1}),
        MultiPoly(2, {(0, 3): 1}),
    ]
    return QuotientStructure(GroebnerBasis(gens, "drl", reduced=True), F)

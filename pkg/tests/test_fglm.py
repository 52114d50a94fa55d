from sparsefglm.buchberger import buchberger, gen_random_system
from sparsefglm.field import PrimeField
from sparsefglm.fglm import ConversionResult, classic_fglm, toplevel
from sparsefglm.quotient import QuotientStructure
from sparsefglm.sysio import parse_system

from conftest import basis_strs

GF11_LEX = ["x1^4 + 8*x1 + 9", "6*x1^2 + x2 + 10", "x3 + 9"]
GF2_LEX = ["x1^7 + x1^6 + x1 + 1", "x1^4 + x1^3 + x2 + 1"]


def test_classic_fglm_gf11(gf11):
    out = classic_fglm(gf11, "lex")
    assert out.ordering == "lex"
    assert basis_strs(out) == GF11_LEX


def test_classic_fglm_gf2(gf2q):
    assert basis_strs(classic_fglm(gf2q, "lex")) == GF2_LEX


def test_classic_fglm_monomial(monomial6):
    assert basis_strs(classic_fglm(monomial6, "lex")) == [
        "x1^3",
        "x1^2*x2",
        "x1*x2^2",
        "x2^3",
    ]


def test_classic_fglm_same_ordering_is_identity(gf11):
    out = classic_fglm(gf11, "drl")
    assert basis_strs(out) == basis_strs(gf11.G1)


def test_round_trip_drl_lex_drl():
    # DRL -> LEX -> DRL restores the original reduced basis
    p = 65521
    F = PrimeField(p)
    for seed in range(20):
        n = 2 + seed % 2
        gb1 = buchberger(gen_random_system(n, 2, p, seed), "drl", F)
        lex = classic_fglm(QuotientStructure(gb1, F), "lex")
        back = buchberger(lex.polys, "drl", F)
        assert back == gb1


def test_toplevel_gf11_takes_probabilistic_path(gf11):
    res = toplevel(gf11.G1, gf11.F, seed=0, quotient=gf11)
    assert isinstance(res, ConversionResult)
    assert res.method_used == "shape-prob"
    assert res.of_what == "I"
    assert res.bms_passes is None
    assert res.quotient is gf11
    assert basis_strs(res.basis) == GF11_LEX


def test_toplevel_gf2_generic_seed(gf2q):
    res = toplevel(gf2q.G1, gf2q.F, seed=0, quotient=gf2q)
    assert res.method_used == "shape-prob"
    assert res.of_what == "I"
    assert basis_strs(res.basis) == GF2_LEX


def test_toplevel_gf2_unlucky_probes_fall_to_deterministic(gf2q):
    # seed 10 draws three probes that all see proper factors of the
    # degree-7 minimal polynomial, so the unit-probe stage answers with
    # the radical instead
    res = toplevel(gf2q.G1, gf2q.F, seed=10, quotient=gf2q)
    assert res.method_used == "shape-det"
    assert res.of_what == "radical(I)"
    assert basis_strs(res.basis) == ["x1^3 + 1", "x2 + x1"]


def test_toplevel_radical_not_ok_keeps_exact_ideal(gf2q):
    res = toplevel(gf2q.G1, gf2q.F, seed=10, want_radical_ok=False, quotient=gf2q)
    assert res.method_used == "fglm"
    assert res.of_what == "I"
    assert res.bms_passes == 13
    assert basis_strs(res.basis) == GF2_LEX


def test_toplevel_monomial_falls_through_to_fglm(monomial6):
    trace = []
    res = toplevel(monomial6.G1, monomial6.F, seed=0, quotient=monomial6, bms_trace=trace)
    assert res.method_used == "fglm"
    assert res.of_what == "I"
    assert res.bms_passes == 14
    assert len(trace) == 14
    assert basis_strs(res.basis) == basis_strs(monomial6.G1)


def test_toplevel_builds_quotient_when_not_given():
    F, polys = parse_system("p 11\nvars 2\nx1^2 + 1\nx2 + x1\n")
    gb = buchberger(polys, "drl", F)
    res = toplevel(gb, F, seed=0)
    assert res.quotient.D == 2
    assert basis_strs(res.basis) == ["x1^2 + 1", "x2 + x1"]

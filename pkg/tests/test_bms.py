from sparsefglm.bms import (
    ArrayE,
    _corners,
    _staircase_size,
    bms_change,
    eval_E,
    initial_state,
    is_gb,
    reduce_set,
)
from sparsefglm.buchberger import buchberger, gen_random_system
from sparsefglm.field import PrimeField
from sparsefglm.fglm import classic_fglm
from sparsefglm.poly import Fail, GroebnerBasis, MultiPoly
from sparsefglm.quotient import QuotientStructure

from conftest import basis_strs

F = PrimeField(65521)


def test_array_values_match_probe_sequence(gf11):
    A = ArrayE([8, 4, 8, 6])
    got = [eval_E(A, gf11, (k, 0, 0)) for k in range(8)]
    assert got == [8, 4, 0, 7, 6, 8, 10, 10]
    assert A.values[(3, 0, 0)] == 7  # cached


def test_initial_state():
    st = initial_state(2)
    assert basis_strs(st.F) == ["1"]
    assert st.delta == set()
    assert st.u is None
    assert not st.failed


def test_corners():
    assert _corners(set(), 2) == [(0, 0)]
    assert _corners({(0, 0)}, 2) == [(1, 0), (0, 1)]
    assert _corners({(0, 0), (1, 0)}, 2) == [(2, 0), (0, 1)]
    assert _corners({(0, 0), (1, 0), (0, 1)}, 2) == [(2, 0), (1, 1), (0, 2)]


def test_staircase_size():
    mono = [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert _staircase_size(mono, 2, 6) == 6
    assert _staircase_size(mono, 2, 5) is None  # over the limit
    assert _staircase_size([(3, 0), (0, 3)], 2, 100) == 9
    assert _staircase_size([(3, 0)], 2, 100) is None  # infinite staircase
    assert _staircase_size([(1, 0), (0, 1)], 2, 10) == 1


def test_is_gb_accepts_true_bases(gf11, monomial6):
    assert is_gb(monomial6.G1.polys, monomial6)
    lex = classic_fglm(gf11, "lex")
    assert is_gb(lex.polys, gf11)


def test_is_gb_rejects_wrong_staircase(monomial6):
    partial = [MultiPoly(2, {(3, 0): 1}), MultiPoly(2, {(0, 3): 1})]
    assert not is_gb(partial, monomial6)  # staircase has 9 monomials, D = 6


def test_is_gb_rejects_non_members(monomial6):
    # right staircase, but x1^3 + 1 is not in the ideal
    polys = [MultiPoly(2, {(3, 0): 1, (0, 0): 1})] + monomial6.G1.polys[1:]
    assert not is_gb(polys, monomial6)


def test_is_gb_degenerate_inputs(monomial6):
    assert not is_gb([], monomial6)
    assert not is_gb([MultiPoly.zero(2)], monomial6)


def test_reduce_set():
    f = MultiPoly(2, {(1, 0): 2, (0, 0): 2})
    g = MultiPoly(2, {(2, 0): 1, (1, 0): 1})
    out = reduce_set([f, g], PrimeField(11))
    assert [h.coeffs for h in out] == [{(1, 0): 1, (0, 0): 1}]


def test_bms_univariate_degenerates_to_bm():
    Q = QuotientStructure(
        GroebnerBasis([MultiPoly(1, {(3,): 1, (1,): 5, (0,): 2})], "drl"), F
    )
    res = bms_change(Q, seed=0)
    assert not isinstance(res, Fail)
    assert basis_strs(res) == ["x1^3 + 5*x1 + 2"]


def test_bms_dimension_one():
    Q = QuotientStructure(
        GroebnerBasis(
            [MultiPoly(2, {(1, 0): 1, (0, 0): 1}), MultiPoly(2, {(0, 1): 1, (0, 0): 2})],
            "drl",
        ),
        F,
    )
    res = bms_change(Q, seed=0)
    assert basis_strs(res) == ["x1 + 1", "x2 + 2"]


def test_bms_matches_classic_fglm_on_random_quadrics():
    for seed in (0, 1):
        gb = buchberger(gen_random_system(2, 2, 65521, seed), "drl", F)
        Q = QuotientStructure(gb, F)
        trace = []
        res = bms_change(Q, seed=seed, trace=trace)
        assert not isinstance(res, Fail)
        assert res == classic_fglm(Q, "lex")
        assert len(trace) <= 2 * 2 * Q.D


def test_bms_trace_delta_growth():
    gb = buchberger(gen_random_system(2, 2, 65521, 0), "drl", F)
    Q = QuotientStructure(gb, F)
    trace = []
    bms_change(Q, seed=0, trace=trace)
    sizes = [len(d) for _, _, d in trace]
    assert sizes == sorted(sizes)
    # every recorded delta set is downward closed
    for _, _, d in trace:
        for t in d:
            for i in range(2):
                if t[i]:
                    assert t[:i] + (t[i] - 1,) + t[i + 1 :] in d
    assert sizes[-1] == Q.D


def test_bms_declines_monomial_ideal(monomial6):
    for seed in (0, 1):
        trace = []
        res = bms_change(monomial6, seed=seed, trace=trace)
        assert isinstance(res, Fail)
        assert "without a verified Groebner basis" in res.reason
        assert len(trace) <= 2 * 2 * 6
    # the visible recurrences stall at four delta elements out of six
    assert sorted(trace[-1][2]) == [(0, 0), (0, 1), (1, 0), (2, 0)]

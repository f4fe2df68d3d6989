import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dayancrt.dayan import (
    ALL_MINUS,
    ALL_PLUS,
    BUILTIN_STRATEGIES,
    LEAST_ABSOLUTE,
    ExtInverseStatus,
    NoSolutionError,
    SignStrategy,
    StrategyExhaustedError,
    StrategyKind,
    Termination,
    convergent_inverse_check,
    ext_inverse_sum_f,
    ext_inverse_sum_fraction,
    ext_mod_inverse,
    extended_reciprocity,
    inverse_series_first_type,
    inverse_series_first_type_condensed,
    inverse_series_second_type,
    remainder_chain,
    run_trace,
    series_first_type_raw,
)
from dayancrt.modmath import NotCoprimeError, inv

TABLE2 = SignStrategy.explicit([-1, -1, -1, 1])


def solve_by_scan(b, a, m):
    for x in range(m):
        if (a * x - b) % m == 0:
            return x
    return None


def coprime_pairs(limit):
    for p in range(3, limit + 1):
        for q in range(2, p):
            if math.gcd(p, q) == 1:
                yield p, q


def check_trace_invariants(trace):
    steps = trace.steps
    assert steps[0].i == -1 and steps[0].r == trace.p
    assert steps[1].r == trace.q and steps[1].gamma == trace.a % trace.p
    for k in range(2, len(steps)):
        prev, cur, nxt = steps[k - 2], steps[k - 1], steps[k]
        # r[i-1] = c[i+1] r[i] + s[i+1] r[i+1]; past the sum part only r and s are kept
        c = nxt.c if nxt.c is not None else nxt.s * ((nxt.s * prev.r) // cur.r)
        assert prev.r == c * cur.r + nxt.s * nxt.r
        assert 0 <= nxt.r < cur.r
        if nxt.gamma is not None:
            assert 0 <= nxt.gamma < cur.r
            if cur.beta is not None:
                assert cur.gamma == cur.beta * cur.r - nxt.s * nxt.gamma
    fs = [st.f for st in steps if st.f is not None]
    assert fs[:2] == [0, 1]
    # f[i] = c[i] f[i-1] + s[i-1] f[i-2], s_0 taken as +1; fs[k] is f at i = k - 1
    for k in range(2, len(fs)):
        s_prev = steps[k - 1].s if steps[k - 1].s is not None else 1
        assert fs[k] == steps[k].c * fs[k - 1] + s_prev * fs[k - 2]
    # r[-1] = f[i] r[i-1] + s[i] f[i-1] r[i] wherever f is known
    for k in range(2, len(fs)):
        st = steps[k]
        assert trace.p == st.f * steps[k - 1].r + st.s * steps[k - 1].f * st.r


class TestStrategy:
    def test_parse_roundtrip(self):
        for text in ("plus", "minus", "least-abs", "explicit:-1,-1,-1,+1"):
            assert str(SignStrategy.parse(text)) == text
        assert SignStrategy.parse("explicit:-1,-1,-1,+1") == TABLE2

    @pytest.mark.parametrize("text", ["sideways", "explicit:", "explicit:2", "explicit:1,x"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            SignStrategy.parse(text)

    def test_no_signs_for_fixed_kinds(self):
        with pytest.raises(ValueError):
            SignStrategy(StrategyKind.ALL_PLUS, (1,))

    def test_least_absolute_choice(self):
        # 189 = 2*106 - 23 beats 189 = 1*106 + 83
        assert LEAST_ABSOLUTE.sign(1, 189, 106) == -1
        assert LEAST_ABSOLUTE.sign(1, 10, 4) == 1  # tie 2 vs 2 -> +1
        assert LEAST_ABSOLUTE.sign(1, 12, 4) == 1

    def test_explicit_exhausted(self):
        with pytest.raises(StrategyExhaustedError):
            run_trace(189, 106, 1, SignStrategy.explicit([-1, -1]))

    def test_least_absolute_minimizes_remainders(self):
        for p, q in coprime_pairs(60):
            trace = run_trace(p, q, 1, LEAST_ABSOLUTE)
            for k in range(2, len(trace.steps)):
                prev, cur = trace.steps[k - 2].r, trace.steps[k - 1].r
                assert trace.steps[k].r == min(prev % cur, -prev % cur)


class TestTrace:
    def test_table1_columns(self):
        t = run_trace(189, 106, 1, ALL_PLUS)
        assert t.column("c")[2:] == [1, 1, 3, 1, 1, 1, 1]
        assert t.termination is Termination.REMAINDER_ONE
        assert t.gcd == 1 and t.sum_index == 7

    def test_table2_is_shorter(self):
        t = run_trace(189, 106, 1, TABLE2)
        assert t.column("r") == [189, 106, 23, 9, 4, 1]
        assert t.column("s")[2:] == [-1, -1, -1, 1]
        assert ext_inverse_sum_f(t) == ext_inverse_sum_fraction(t) == 148

    def test_table4_gcd_continuation(self):
        t = run_trace(945, 530, 230)
        assert t.termination is Termination.GAMMA_ZERO
        assert t.gcd == 5 and t.sum_index == 2
        assert all(st.gamma is None for st in t.steps[5:])
        assert all(st.r % 5 == 0 for st in t.steps)

    def test_without_gcd_stops_at_gamma_zero(self):
        t = run_trace(189, 106, 46, find_gcd=False)
        assert t.column("r") == [189, 106, 83, 23, 14]
        assert t.gcd is None and t.divisions == t.sum_divisions == 3

    def test_zero_numerator(self):
        t = run_trace(189, 106, 0)
        assert t.sum_index == -1
        assert ext_inverse_sum_f(t) == ext_inverse_sum_fraction(t) == 0
        assert run_trace(189, 106, 0, find_gcd=False).divisions == 0

    def test_q_equal_one(self):
        t = run_trace(17, 1, 9)
        assert ext_inverse_sum_f(t) == 9 and t.divisions == 1

    @pytest.mark.parametrize("p, q, a", [(5, 5, 1), (5, 0, 1), (5, 3, 5), (5, 3, -1)])
    def test_rejects_bad_args(self, p, q, a):
        with pytest.raises(ValueError):
            run_trace(p, q, a)

    def test_division_counts(self):
        assert run_trace(189, 106, 1).divisions == 8
        assert run_trace(189, 106, 46).sum_divisions == 3
        assert run_trace(945, 530, 230).divisions == 8

    def test_invariants_all_strategies(self):
        for p in range(3, 41):
            for q in range(1, p):
                for a in range(p):
                    for strat in BUILTIN_STRATEGIES:
                        check_trace_invariants(run_trace(p, q, a, strat))

    def test_step_accessor(self):
        t = run_trace(189, 106, 1)
        assert t.step(-1).r == 189 and t.step(7).f == 41


class TestSums:
    def test_worked_values(self):
        assert ext_inverse_sum_f(run_trace(189, 106, 1)) == 148
        assert ext_inverse_sum_fraction(run_trace(189, 106, 1)) == 148
        assert ext_inverse_sum_f(run_trace(189, 106, 46)) == 4
        assert ext_inverse_sum_fraction(run_trace(945, 530, 230)) == 4

    def test_sums_agree_everywhere(self):
        for p in range(3, 61):
            for q in range(1, p):
                for a in range(p):
                    for strat in BUILTIN_STRATEGIES:
                        t = run_trace(p, q, a, strat)
                        if t.solvable:
                            assert ext_inverse_sum_f(t) == ext_inverse_sum_fraction(t)

    def test_no_solution_raises(self):
        t = run_trace(10, 4, 5)
        assert t.termination is Termination.REMAINDER_ZERO and t.gcd == 2
        with pytest.raises(NoSolutionError) as exc:
            ext_inverse_sum_f(t)
        assert exc.value.gcd == 2
        with pytest.raises(NoSolutionError):
            ext_inverse_sum_fraction(t)


class TestExtModInverse:
    def test_worked_examples(self):
        out = ext_mod_inverse(46, 106, 189)
        assert (out.value, out.reduced_modulus, out.gcd) == (4, 189, 1)
        out = ext_mod_inverse(230, 530, 945)
        assert (out.value, out.reduced_modulus, out.gcd) == (4, 189, 5)
        assert ext_mod_inverse(106, 106, 189).value == 1
        assert ext_mod_inverse(1, 106, 189).value == 148

    def test_no_solution(self):
        out = ext_mod_inverse(5, 4, 10)
        assert out.status is ExtInverseStatus.NO_SOLUTION and out.gcd == 2

    def test_reduces_inputs(self):
        assert ext_mod_inverse(46 + 189, 106 - 189, 189).value == 4
        assert ext_mod_inverse(-143, 106, 189).value == 4

    def test_modulus_divides_a(self):
        out = ext_mod_inverse(12, 6, 6)
        assert out.defined and out.value == 0 and out.reduced_modulus == 1
        assert not ext_mod_inverse(5, 12, 6).defined

    @pytest.mark.parametrize("b, a, m", [(1, 1, 1), (1, 0, 7), (1, 2, -7)])
    def test_bad_args(self, b, a, m):
        with pytest.raises(ValueError):
            ext_mod_inverse(b, a, m)

    def test_with_trace(self):
        out = ext_mod_inverse(46, 106, 189, with_trace=True)
        assert out.trace.column("gamma")[1:5] == [46, 60, 23, 0]
        assert out == ext_mod_inverse(46, 106, 189)

    def test_against_scan_small(self):
        for m in range(2, 41):
            for a in range(1, m + 3):
                for b in range(m):
                    expected = solve_by_scan(b, a, m)
                    for strat in BUILTIN_STRATEGIES:
                        out = ext_mod_inverse(b, a, m, strat)
                        d = math.gcd(a, m)
                        assert out.gcd == d
                        if expected is None:
                            assert not out.defined
                        else:
                            assert out.value == expected
                            assert out.reduced_modulus == m // d

    def test_eq10_all_solutions(self):
        for m in range(2, 50):
            for a in range(1, m):
                d = math.gcd(a, m)
                if d == 1:
                    continue
                for b in range(0, m, d):
                    base = ext_mod_inverse(b, a, m).value
                    sols = [base + i * (m // d) for i in range(d)]
                    assert all((a * x - b) % m == 0 for x in sols)
                    assert sorted(sols) == [x for x in range(m) if (a * x - b) % m == 0]

    def test_eq11_cancellation(self):
        for m in range(2, 40):
            for a in range(1, 40):
                if math.gcd(a, m) != 1:
                    continue
                for b in range(1, 40):
                    g = math.gcd(a, b)
                    assert ext_mod_inverse(b, a, m).value == ext_mod_inverse(b // g, a // g, m).value

    @staticmethod
    def check_against_pow(m, a, b, strategies):
        a %= m
        if a == 0:
            return
        d = math.gcd(a, m)
        outs = [ext_mod_inverse(b, a, m, strat) for strat in strategies]
        if b % d:
            assert not any(o.defined for o in outs)
            return
        expected = (b // d) * pow(a // d, -1, m // d) % (m // d)
        assert {o.value for o in outs} == {expected}

    # the all-minus chain can need ~q steps (q = p - 1 drops by one each step),
    # so only the logarithmic strategies get the huge inputs
    @settings(max_examples=200)
    @given(
        st.integers(min_value=2, max_value=2**200),
        st.integers(min_value=1, max_value=2**200),
        st.integers(min_value=-(2**200), max_value=2**200),
    )
    def test_big_numbers(self, m, a, b):
        self.check_against_pow(m, a, b, (ALL_PLUS, LEAST_ABSOLUTE))

    @settings(max_examples=200)
    @given(
        st.integers(min_value=2, max_value=10**4),
        st.integers(min_value=1, max_value=10**4),
        st.integers(min_value=-(10**6), max_value=10**6),
    )
    def test_all_minus_moderate(self, m, a, b):
        self.check_against_pow(m, a, b, (ALL_MINUS,))

    def test_all_minus_worst_case_is_linear(self):
        t = run_trace(1000, 999, 1, ALL_MINUS)
        assert t.divisions == 999 and ext_inverse_sum_f(t) == inv(999, 1000)
        assert run_trace(1000, 999, 1, LEAST_ABSOLUTE).divisions <= 2


class TestEarlyTermination:
    def test_multiple_of_q(self):
        for p in range(3, 80):
            for q in range(2, p):
                if math.gcd(p, q) != 1:
                    continue
                for k in range(1, (p - 1) // q + 1):
                    t = run_trace(p, q, k * q, find_gcd=False)
                    assert t.sum_divisions == 1 and ext_inverse_sum_f(t) == k

    def test_two_step_form(self):
        for p in range(3, 80):
            for q in range(2, p):
                if math.gcd(p, q) != 1:
                    continue
                r1 = p % q
                for k2 in range(1, (q - 1) // r1 + 1):
                    for k1 in range(1, p // q + 2):
                        a = k1 * q - k2 * r1
                        if not 0 <= a < p:
                            continue
                        t = run_trace(p, q, a, find_gcd=False)
                        assert t.sum_divisions == 2
                        assert ext_inverse_sum_f(t) == a * inv(q, p) % p


class TestNonCoprimeChain:
    def test_non_coprime_traces(self):
        for p in range(3, 70):
            for q in range(2, p):
                d = math.gcd(p, q)
                if d == 1:
                    continue
                for a in range(p):
                    for strat in BUILTIN_STRATEGIES:
                        t = run_trace(p, q, a, strat)
                        assert t.gcd == d
                        assert t.steps[-1].r == 0 and t.steps[-2].r == d
                        assert all(st.r % d == 0 for st in t.steps)
                        assert t.solvable == (a % d == 0)
                        # gamma[i] = ((-1)^i s_1...s_i gamma_0) mod d
                        sign = 1
                        for st in t.steps[1:]:
                            if st.gamma is None:
                                break
                            if st.s is not None:
                                sign *= -st.s
                            assert st.gamma % d == (sign * a) % d


class TestSeries:
    def test_first_type_example(self):
        assert series_first_type_raw(189, 106) == (-41, 7)
        assert inverse_series_first_type(189, 106) == 148

    @pytest.mark.parametrize("p, q, expected", [(13, 5, 8), (5, 2, 3), (189, 106, 148), (7, 6, 6)])
    def test_values(self, p, q, expected):
        assert expected == solve_by_scan(1, q, p)
        assert inverse_series_first_type(p, q) == expected
        assert inverse_series_first_type_condensed(p, q) == expected
        assert inverse_series_second_type(p, q) == expected
        assert inverse_series_second_type(p, q, condensed=True) == expected

    def test_p_minus_one(self):
        for p in range(3, 60):
            assert inverse_series_first_type(p, p - 1) == p - 1

    def test_second_type_five_two(self):
        assert remainder_chain(5, 2, -1)[0] == [5, 2, 1]
        assert 5 * (Fraction(1, 10) + Fraction(1, 2)) == 3

    def test_raw_negative_iff_odd(self):
        for p, q in coprime_pairs(120):
            raw, n = series_first_type_raw(p, q)
            assert (raw < 0) == (n % 2 == 1)

    def test_all_forms_grid(self):
        for p, q in coprime_pairs(200):
            expected = inv(q, p)
            assert inverse_series_first_type(p, q) == expected
            assert inverse_series_first_type_condensed(p, q) == expected
            assert inverse_series_second_type(p, q) == expected
            assert inverse_series_second_type(p, q, True) == expected

    @pytest.mark.parametrize("fn", [inverse_series_first_type, inverse_series_first_type_condensed, inverse_series_second_type])
    def test_rejects(self, fn):
        with pytest.raises(NotCoprimeError):
            fn(10, 4)
        with pytest.raises(ValueError):
            fn(5, 1)


class TestConvergents:
    def test_example(self):
        pairs = convergent_inverse_check(189, 106)
        assert pairs[0] == (106, 1) and pairs[1] == (23, 2)
        assert pairs[-1] == (1, 148)
        assert 3 * 23 * 148 % 189 == 3 * 2 % 189 == 6

    def test_identity(self):
        for p, q in coprime_pairs(80):
            x = inv(q, p)
            for r, f in convergent_inverse_check(p, q):
                assert r * x % p == f
                for k in (-3, 2, 7):
                    assert k * r * x % p == k * f % p


class TestExtendedReciprocity:
    def test_example(self):
        first, second = extended_reciprocity(189, 106, 46, 1)
        assert first == second == 4

    def test_q_one(self):
        assert extended_reciprocity(9, 1, 5, -1) == (5, 5)

    def test_grid(self):
        for p, q in coprime_pairs(30):
            x = inv(q, p)
            for a in range(p):
                for s in (1, -1):
                    assert extended_reciprocity(p, q, a, s) == (a * x % p, a * x % p)

    def test_rejects(self):
        with pytest.raises(NotCoprimeError):
            extended_reciprocity(10, 4, 1, 1)
        with pytest.raises(ValueError):
            extended_reciprocity(10, 3, 1, 0)

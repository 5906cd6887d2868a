"""Exact solver, lower bounds, disassembly, and the boolean-model export."""

import random

import pytest

from barpack.errors import JmaxTooSmall, NotBigInstance
from barpack.exact import (
    disassemble,
    export_blp,
    lower_bound,
    solve_exact,
)
from barpack.generators import gen_big, gen_big_nonincreasing, gen_tight_family
from barpack.model import (
    BarChart,
    Instance,
    Packing,
    is_feasible,
    length,
    validate_instance,
)
from barpack.packers import pack_first_fit, pack_matching, pack_weighted_matching


def naive_opt(inst):
    """Fully independent optimum: try every start assignment up to 2n."""
    n = inst.n
    best = 2 * n
    starts = [0] * n

    def rec(i):
        nonlocal best
        if i == n:
            p = Packing(tuple(starts))
            if is_feasible(inst, p):
                best = min(best, length(inst, p))
            return
        for s in range(1, 2 * n):
            starts[i] = s
            rec(i + 1)

    rec(0)
    return best


class TestLowerBound:
    def test_big_count_dominates(self):
        inst = validate_instance([(0.6, 0.24)] * 5, 100)  # mass 4.2, all big
        assert lower_bound(inst) == 5

    def test_area_bound(self):
        inst = validate_instance([(0.5, 0.23)] * 10, 100)  # mass 7.3, none big
        assert lower_bound(inst) == 8

    def test_single_chart_floor(self):
        inst = validate_instance([(0.1, 0.1)], 10)
        assert lower_bound(inst) == 2


class TestSolveExact:
    def test_single_chart(self):
        res = solve_exact(validate_instance([(0.3, 0.4)], 10))
        assert res.opt_length == 2 and res.proven

    def test_two_union_pair(self):
        res = solve_exact(validate_instance([(0.4, 0.6), (0.6, 0.4)], 10))
        assert res.opt_length == 2 and res.proven

    def test_tight_family_k1(self):
        res = solve_exact(gen_tight_family(1, 100))
        assert res.opt_length == 5 and res.proven
        assert length(gen_tight_family(1, 100), res.packing) == 5

    def test_matches_naive_enumeration(self):
        rng = random.Random(31)
        for _ in range(25):
            n = rng.randint(1, 4)
            denom = rng.choice([10, 100])
            inst = Instance(tuple(BarChart(i, rng.randint(1, denom),
                                           rng.randint(1, denom))
                                  for i in range(n)), denom)
            res = solve_exact(inst)
            assert res.proven
            assert res.opt_length == naive_opt(inst), inst

    def test_witness_is_feasible_and_compact(self):
        for seed in range(8):
            inst = gen_big(6, seed)
            res = solve_exact(inst)
            assert is_feasible(inst, res.packing)
            assert length(inst, res.packing) == res.opt_length

    def test_never_below_lower_bound_or_above_heuristics(self):
        for seed in range(10):
            inst = gen_big(7, seed)
            res = solve_exact(inst)
            assert res.proven
            assert res.opt_length >= lower_bound(inst)
            for packer in (pack_matching, pack_weighted_matching, pack_first_fit):
                assert res.opt_length <= packer(inst).length

    def test_upper_below_lower_bound_rejected(self):
        inst = gen_tight_family(1, 100)
        with pytest.raises(ValueError):
            solve_exact(inst, upper=3)

    def test_upper_caps_the_search_without_losing_optimum(self):
        inst = gen_tight_family(1, 100)
        res = solve_exact(inst, upper=5)
        assert res.proven and res.opt_length == 5

    def test_budget_exhaustion_is_soft(self):
        inst = gen_tight_family(2, 100)  # heuristic sits above the optimum
        full = solve_exact(inst)
        starved = solve_exact(inst, budget=1)
        assert not starved.proven
        assert starved.opt_length >= full.opt_length  # still a valid upper bound
        assert is_feasible(inst, starved.packing)

    def test_property_one_bound(self):
        # n charts occupying Y cells never repack below Y - (n - 1)
        rng = random.Random(44)
        for _ in range(15):
            n = rng.randint(2, 6)
            inst = gen_big(n, rng.randint(0, 10 ** 6))
            result = pack_first_fit(inst, order=rng.sample(range(n), n))
            y = result.length
            res = solve_exact(inst)
            assert res.proven
            assert res.opt_length >= y - (n - 1)


def rounds_cardinalities(rounds):
    return [r.cardinality for r in rounds]


class TestDisassemble:
    def test_chain_of_three(self):
        inst = validate_instance([(0.6, 0.4)] * 3, 10)
        rounds = disassemble(inst, Packing((1, 2, 3)))
        assert rounds_cardinalities(rounds) == [1, 1]
        first = rounds[0]
        assert first.pairs == (((0,), (1,), 1),)  # chart 2 left alone

    def test_disjoint_charts(self):
        inst = validate_instance([(0.6, 0.6)] * 3, 10)
        assert disassemble(inst, Packing((1, 3, 5))) == ()

    def test_tight_family_optimal_chain(self):
        inst = gen_tight_family(1, 100)
        rounds = disassemble(inst, Packing((1, 2, 3, 4)))
        assert rounds_cardinalities(rounds) == [2, 1]
        total = sum(r.weight for r in rounds)
        assert 2 * inst.n - total == 5

    def test_rejects_non_big(self):
        inst = validate_instance([(0.5, 0.5)], 10)
        with pytest.raises(NotBigInstance):
            disassemble(inst, Packing((1,)))

    def test_telescoping_on_random_big_packings(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(1, 8)
            inst = gen_big(n, rng.randint(0, 10 ** 6))
            result = pack_first_fit(inst, order=rng.sample(range(n), n))
            rounds = disassemble(inst, result.packing)
            assert 2 * n - sum(r.weight for r in rounds) == result.length

    def test_first_matching_dominates_rest(self):
        # disassembled optimum: later rounds never outnumber the first,
        # and the first never beats the algorithm's first matching
        checked = 0
        for seed in range(15):
            inst = gen_big_nonincreasing(7, seed)
            res = solve_exact(inst)
            assert res.proven
            rounds = disassemble(inst, res.packing)
            m1_star = rounds[0].cardinality if rounds else 0
            rest = sum(r.cardinality for r in rounds[1:])
            run = pack_matching(inst)
            m1 = run.trace.rounds[0].cardinality if run.trace.rounds else 0
            assert rest <= m1_star <= m1
            checked += 1
        assert checked == 15


class TestExportBlp:
    def test_single_chart_model(self):
        inst = validate_instance([(0.7, 0.3)], 10)
        text = export_blp(inst, 2)
        assert text == (
            "\\ two-bar chart strip packing, boolean model\n"
            "\\ charts: 1  cells: 2  denominator: 10\n"
            "Minimize\n"
            " obj: y_1 + y_2\n"
            "Subject To\n"
            " assign_1: x_1_1 = 1\n"
            " cap_1: 0.7 x_1_1 - 1 y_1 <= 0\n"
            " cap_2: 0.3 x_1_1 - 1 y_2 <= 0\n"
            "Binary\n"
            " x_1_1 y_1 y_2\n"
            "End\n"
        )

    def test_jmax_too_small(self):
        inst = validate_instance([(0.7, 0.3)], 10)
        with pytest.raises(JmaxTooSmall):
            export_blp(inst, 1)

    def test_row_and_variable_counts(self):
        inst = gen_tight_family(1, 100)
        jmax = 8
        text = export_blp(inst, jmax)
        assert text.count("assign_") == inst.n
        assert text.count("cap_") == jmax
        for i in range(1, inst.n + 1):
            for j in range(1, jmax):
                assert f"x_{i}_{j}" in text
        assert f"x_1_{jmax}" not in text

    def test_non_decimal_denominator_uses_integer_rows(self):
        inst = Instance((BarChart(0, 1, 2),), 3)
        text = export_blp(inst, 2)
        assert " cap_1: 1 x_1_1 - 3 y_1 <= 0" in text
        assert " cap_2: 2 x_1_1 - 3 y_2 <= 0" in text

    def test_exact_decimals_for_default_denominator(self):
        inst = validate_instance([(0.123456, 0.3)], 1_000_000)
        text = export_blp(inst, 2)
        assert "0.123456 x_1_1" in text
        assert "0.300000 x_1_1" in text

"""Instance generators: determinism, family predicates, the tight family."""

import pytest

from barpack.errors import KTooSmall
from barpack.generators import (
    GenSpec,
    gen_big,
    gen_big_nonincreasing,
    gen_general,
    gen_tight_family,
    generate,
    tight_family_forced_pairs,
)
from barpack.model import instance_to_json
from barpack.unions import build_graph, chart_from_bars


class TestDeterminism:
    @pytest.mark.parametrize("family,size", [
        ("big-nonincreasing", 6), ("big", 6), ("general", 6), ("tight", 2),
    ])
    def test_same_spec_same_bytes(self, family, size):
        spec = GenSpec(family, size, seed=11, denominator=1000)
        assert instance_to_json(generate(spec)) == instance_to_json(generate(spec))

    def test_different_seeds_differ(self):
        a = gen_big(8, 1)
        b = gen_big(8, 2)
        assert a != b

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            generate(GenSpec("small", 3))


class TestFamilyPredicates:
    def test_big_nonincreasing(self):
        for seed in range(10):
            inst = gen_big_nonincreasing(9, seed)
            assert inst.n == 9
            for c in inst.charts:
                assert 2 * c.a > inst.denominator
                assert c.a >= c.b >= 1

    def test_big(self):
        for seed in range(10):
            inst = gen_big(9, seed)
            assert inst.all_big()
            for c in inst.charts:
                assert 1 <= c.a <= inst.denominator
                assert 1 <= c.b <= inst.denominator

    def test_general_in_range(self):
        inst = gen_general(50, 3)
        for c in inst.charts:
            assert 1 <= c.a <= inst.denominator
            assert 1 <= c.b <= inst.denominator

    def test_zero_charts_rejected(self):
        for gen in (gen_big_nonincreasing, gen_big, gen_general):
            with pytest.raises(ValueError):
                gen(0, 1)

    def test_big_orientation_split(self):
        # among charts with exactly one bar above 1/2, the big side should
        # be the first bar about half the time
        inst = gen_big(1000, 17)
        half = inst.denominator
        a_big = sum(1 for c in inst.charts
                    if 2 * c.a > half and 2 * c.b <= half)
        b_big = sum(1 for c in inst.charts
                    if 2 * c.b > half and 2 * c.a <= half)
        share = a_big / (a_big + b_big)
        assert 0.45 <= share <= 0.55


class TestTightFamily:
    def test_k1_heights(self):
        inst = gen_tight_family(1, 100)
        assert [(c.a, c.b) for c in inst.charts] == [(70, 30), (70, 30),
                                                     (35, 65), (35, 65)]

    def test_k_too_small(self):
        with pytest.raises(KTooSmall):
            gen_tight_family(0, 100)

    def test_denominator_must_divide(self):
        with pytest.raises(ValueError):
            gen_tight_family(1, 30)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_union_pattern(self, k):
        # greens chain, reds chain, green-before-red; no 2-unions anywhere
        inst = gen_tight_family(k, 100)
        graph = build_graph([chart_from_bars(c) for c in inst.charts],
                            inst.denominator, weighted=True)
        greens = set(range(2 * k))
        assert all(e.weight == 1 for e in graph.edges)
        for e in graph.edges:
            if e.u in greens and e.v not in greens:
                assert e.u_first  # red before green is never feasible
        expected = {(u, v) for u in greens for v in range(2 * k, 4 * k)}
        expected |= {(u, v) for u in greens for v in greens if u < v}
        reds = set(range(2 * k, 4 * k))
        expected |= {(u, v) for u in reds for v in reds if u < v}
        assert {(e.u, e.v) for e in graph.edges} == expected

    def test_forced_pairs_shape(self):
        inst = gen_tight_family(2, 100)
        assert tight_family_forced_pairs(inst) == [(0, 4), (1, 5), (2, 6), (3, 7)]

    def test_every_chart_big(self):
        assert gen_tight_family(3, 100).all_big()

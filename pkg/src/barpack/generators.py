"""Seeded instance generators for tests and experiments.

All sampling happens on the 1/D grid so downstream arithmetic stays exact,
and every generator is deterministic for a given (family, size, seed, D).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import KTooSmall
from .model import DEFAULT_DENOMINATOR, BarChart, Instance


@dataclass(frozen=True)
class GenSpec:
    """A reproducible recipe for one instance.

    family is one of "big-nonincreasing", "big", "general", "tight";
    size means n for the random families and k for the tight family.
    """

    family: str
    size: int
    seed: int = 0
    denominator: int = DEFAULT_DENOMINATOR


def generate(spec: GenSpec) -> Instance:
    if spec.family == "big-nonincreasing":
        return gen_big_nonincreasing(spec.size, spec.seed, spec.denominator)
    if spec.family == "big":
        return gen_big(spec.size, spec.seed, spec.denominator)
    if spec.family == "general":
        return gen_general(spec.size, spec.seed, spec.denominator)
    if spec.family == "tight":
        return gen_tight_family(spec.size, spec.denominator)
    raise ValueError(f"unknown family {spec.family!r}")


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("need at least one chart")


def gen_big_nonincreasing(n: int, seed: int = 0,
                          denominator: int = DEFAULT_DENOMINATOR) -> Instance:
    """Charts with a drawn uniformly from (1/2, 1] and b from (0, a]."""
    _check_n(n)
    rng = random.Random(seed)
    half = denominator // 2
    charts = []
    for i in range(n):
        a = rng.randint(half + 1, denominator)
        b = rng.randint(1, a)
        charts.append(BarChart(i, a, b))
    return Instance(tuple(charts), denominator)


def gen_big(n: int, seed: int = 0,
            denominator: int = DEFAULT_DENOMINATOR) -> Instance:
    """Charts with one designated bar above 1/2; which side is big is a
    coin flip, the other bar is uniform over (0, 1]."""
    _check_n(n)
    rng = random.Random(seed)
    half = denominator // 2
    charts = []
    for i in range(n):
        big = rng.randint(half + 1, denominator)
        other = rng.randint(1, denominator)
        a_is_big = rng.randint(0, 1) == 1
        a, b = (big, other) if a_is_big else (other, big)
        charts.append(BarChart(i, a, b))
    return Instance(tuple(charts), denominator)


def gen_general(n: int, seed: int = 0,
                denominator: int = DEFAULT_DENOMINATOR) -> Instance:
    """Both bars uniform over (0, 1] on the grid."""
    _check_n(n)
    rng = random.Random(seed)
    charts = []
    for i in range(n):
        a = rng.randint(1, denominator)
        b = rng.randint(1, denominator)
        charts.append(BarChart(i, a, b))
    return Instance(tuple(charts), denominator)


def gen_tight_family(k: int, denominator: int = DEFAULT_DENOMINATOR) -> Instance:
    """The worst-case family: 2k "green" charts (0.70, 0.30) followed by
    2k "red" charts (0.35, 0.65).

    The heights are engineered so the only feasible unions are
    green-before-green, red-before-red and green-before-red, all saving a
    single cell: the single chain of all greens then all reds has length
    4k+1 (optimal), while pairing every green with a red leaves 2k charts
    (0.70, 0.65, 0.65) that admit no further union, for length 6k.
    """
    if k < 1:
        raise KTooSmall("tight family needs k >= 1")
    if denominator % 100 != 0:
        raise ValueError("tight family heights need a denominator divisible by 100")
    unit = denominator // 100
    green = (70 * unit, 30 * unit)
    red = (35 * unit, 65 * unit)
    charts = []
    for i in range(2 * k):
        charts.append(BarChart(i, *green))
    for i in range(2 * k, 4 * k):
        charts.append(BarChart(i, *red))
    return Instance(tuple(charts), denominator)


def tight_family_forced_pairs(inst: Instance) -> list[tuple[int, int]]:
    """The adversarial all-green-red pairing for a tight-family instance:
    green i is paired with red i + n/2."""
    if inst.n % 2 != 0:
        raise ValueError("tight family instances have even n")
    half = inst.n // 2
    return [(i, i + half) for i in range(half)]

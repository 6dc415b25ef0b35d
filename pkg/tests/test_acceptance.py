"""Acceptance criteria, one test each.

Every test prints a single ``PASS`` or ``FAIL`` line naming its criterion, so
``pytest -v -s tests/test_acceptance.py`` (or the tee'd full run) doubles as a
checklist.
"""

import functools
import json
import math
import random
import statistics
import time

import pytest

from pmin_inherit.checkers import decide_inheritance
from pmin_inherit.cli import main
from pmin_inherit.conditions import adjacent_maxima_counterexample, enumerate_condition
from pmin_inherit.corpus import exhaustive_weighted, random_connected, random_corpus
from pmin_inherit.oracle import (
    inheritance_oracle,
    partition_criterion,
    refinement_counterexample,
    unanimity_superadditivity,
)
from pmin_inherit.verify import reverify

ENUMERATED = (
    "star", "path", "weak_cycle", "intermediary_cycle", "cycle", "weak_pan",
    "pan", "adjacent_cycles_part1", "adjacent_cycles_part2", "weak_second_part",
)


@pytest.fixture
def verdict(capsys):
    """Print one PASS/FAIL line for the criterion, then let failures propagate."""

    def run(number, label, body):
        try:
            detail = body()
        except BaseException:
            with capsys.disabled():
                print(f"\nFAIL criterion {number}: {label}")
            raise
        with capsys.disabled():
            print(f"\nPASS criterion {number}: {label}" + (f" ({detail})" if detail else ""))

    return run


@functools.lru_cache(maxsize=None)
def exhaustive_small():
    return tuple(exhaustive_weighted(5, (1, 2)))


@functools.lru_cache(maxsize=None)
def random_small():
    return tuple(random_corpus(2024, 500, (3, 7), (1, 2, 3)))


def corpus():
    return exhaustive_small() + random_small()


def test_criterion_1_checker_matches_oracle(verdict):
    def body():
        start = time.perf_counter()
        graphs = corpus()
        bad = [g for g in graphs if decide_inheritance(g).inherits != (inheritance_oracle(g) is None)]
        elapsed = time.perf_counter() - start
        assert not bad, f"{len(bad)} disagreements, first:\n{bad[0]}"
        assert len(exhaustive_small()) == 3246 and len(random_small()) == 500
        assert elapsed < 600
        return f"{len(graphs)} graphs in {elapsed:.0f} s"

    verdict(1, "checker agrees with the exhaustive oracle", body)


def test_criterion_2_partition_criterion_matches_oracle(verdict):
    def body():
        for g in corpus():
            assert (partition_criterion(g) is None) == (inheritance_oracle(g) is None), g
        return f"{len(corpus())} graphs"

    verdict(2, "partition criterion agrees with the oracle", body)


def test_criterion_3_unanimity_games_stay_superadditive(verdict):
    def body():
        for g in corpus():
            assert unanimity_superadditivity(g) is None, g

    verdict(3, "restricted unanimity games are superadditive", body)


def test_criterion_4_pmin_refines_along_inclusion(verdict):
    def body():
        graphs = exhaustive_small() + tuple(random_corpus(77, 200, (6, 6), (1, 2, 3)))
        for g in graphs:
            assert refinement_counterexample(g) is None, g
        return f"{len(graphs)} graphs, n <= 6"

    verdict(4, "P_min(B) never splits a block of P_min(A) for A <= B", body)


def test_criterion_5_implied_conditions(verdict):
    def fails(g, which):
        return enumerate_condition(g, which) is not None

    def body():
        premises = 0
        for g in corpus():
            if fails(g, "star") or fails(g, "path"):
                continue
            premises += 1
            assert not fails(g, "intermediary_cycle"), g
            assert not fails(g, "weak_pan"), g
            if fails(g, "weak_second_part"):
                continue
            assert not fails(g, "cycle"), g
            if not fails(g, "pan"):
                assert not fails(g, "adjacent_cycles_part2"), g
        assert premises > 0
        return f"{premises} Star+Path graphs"

    verdict(5, "Star and Path imply the weaker cycle conditions", body)


def test_criterion_6_adjacent_cycle_maxima_coincide(verdict):
    def body():
        graphs = [
            g for g in corpus()
            if enumerate_condition(g, "star") is None and enumerate_condition(g, "path") is None
        ]
        for g in graphs:
            assert adjacent_maxima_counterexample(g) is None, g
        return f"{len(graphs)} graphs"

    verdict(6, "adjacent cycles share their maximum weight under Star and Path", body)


def test_criterion_7_violations_reverify(verdict):
    def body():
        count = 0
        for g in corpus():
            v = decide_inheritance(g).violation
            if v is not None:
                count += 1
                assert reverify(g, json.loads(json.dumps(v.to_dict()))), (g, v)
        for g in random_small():
            for which in ENUMERATED:
                v = enumerate_condition(g, which)
                if v is not None:
                    count += 1
                    assert reverify(g, v), (which, g, v)
        return f"{count} certificates"

    verdict(7, "every reported violation reverifies independently", body)


def _median_seconds(g, repeats=5):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        decide_inheritance(g)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def test_criterion_8_large_graphs_are_fast(verdict):
    def body():
        rng = random.Random(8)
        big = [random_connected(rng, 40, 200, (1,)), random_connected(rng, 40, 200, range(1, 11))]
        for g in big:
            start = time.perf_counter()
            decide_inheritance(g)
            assert time.perf_counter() - start < 60

        # all-equal weights pass every stage, so they exercise the whole pipeline
        sizes = (10, 20, 40)
        times = [
            _median_seconds(random_connected(random.Random(n), n, min(5 * n, n * (n - 1) // 2), (1,)))
            for n in sizes
        ]
        xs = [math.log(n) for n in sizes]
        ys = [math.log(max(t, 1e-6)) for t in times]
        slope = statistics.linear_regression(xs, ys).slope
        assert slope <= 6
        return f"log-log slope {slope:.2f}"

    verdict(8, "n = 40, m = 200 decided well within a minute", body)


def test_criterion_9_reports_are_deterministic(verdict, capsys, tmp_path):
    def body():
        for g in random_small()[:100]:
            assert decide_inheritance(g).to_dict() == decide_inheritance(g).to_dict()
        path = tmp_path / "g.txt"
        path.write_text("5 5\n1 2 2\n2 3 2\n3 4 2\n4 1 2\n4 5 1\n")
        outputs = []
        for _ in range(2):
            main(["check", "--input", str(path), "--format", "json"])
            main(["diff", "--seed", "3", "--trials", "20", "--format", "json"])
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]

    verdict(9, "JSON reports are byte-identical across runs", body)

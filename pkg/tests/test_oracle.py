from math import comb

import pytest

from conftest import part, sets, universe
from roughmatroid import CapExceeded, Partition, SetFamily, Universe, cross_validate, enumerate_subsets
from roughmatroid import oracle
from roughmatroid.oracle import (
    BruteForce,
    all_partitions,
    brute_force_supports,
    restricted_growth_strings,
    sweep_all_partitions,
)

U4 = universe(4)
P22 = part("1 2 | 3 4", U4)


def bell(n):
    row = [1]
    for k in range(n):
        row.append(sum(comb(k, j) * row[j] for j in range(k + 1)))
    return row[n]


class TestEnumerateSubsets:
    def test_two_points(self):
        assert [str(s) for s in enumerate_subsets(universe(2))] == ["{}", "{1}", "{2}", "{1,2}"]

    def test_empty_universe_is_invalid(self):
        with pytest.raises(ValueError):
            Universe([])

    def test_four_points(self):
        subsets = list(enumerate_subsets(U4))
        assert len(subsets) == 16 == len(set(subsets))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            list(enumerate_subsets(U4, cap=3))


class TestPartitionGeneration:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_bell_counts_distinct_and_canonical(self, n):
        U = universe(n)
        found = list(all_partitions(U))
        assert len(found) == bell(n)
        assert len(set(found)) == len(found)
        for P in found:
            lows = [b & -b for b in P.block_masks]
            assert lows == sorted(lows)

    def test_growth_rule(self):
        for word in restricted_growth_strings(5):
            assert word[0] == 0
            for i in range(1, 5):
                assert word[i] <= max(word[:i]) + 1


class TestBruteForceSupports:
    def test_two_blocks(self):
        S = brute_force_supports(P22)
        assert len(S) == 9 == (2 ** 2 - 1) ** 2

    def test_discrete(self):
        assert brute_force_supports(Partition.discrete(U4)) == SetFamily(U4, [U4.full_mask])

    def test_indiscrete(self):
        assert brute_force_supports(Partition.indiscrete(U4)) == SetFamily(U4, range(1, 16))

    def test_evaluates_element_by_element(self):
        bf = BruteForce(P22)
        assert bf.rn("3") == frozenset({"3", "4"})
        assert bf.upper(frozenset({"1"})) == frozenset({"1", "2"})
        assert bf.lower(frozenset({"1", "3", "4"})) == frozenset({"3", "4"})


class TestCrossValidate:
    def test_two_blocks(self):
        diffs = cross_validate(P22)
        assert [d.name for d in diffs] == ["S", "B", "I", "rank", "H", "L", "closed-iff"]
        assert all(d.passed for d in diffs)

    def test_discrete_five(self):
        assert all(d.passed for d in cross_validate(Partition.discrete(universe(5))))

    def test_all_partitions_of_five(self):
        assert all(d.passed for P in all_partitions(universe(5)) for d in cross_validate(P))

    def test_detects_a_broken_closed_form(self, monkeypatch):
        real = oracle.induced_bases
        monkeypatch.setattr(
            oracle, "induced_bases",
            lambda P, cap=20: SetFamily(P.universe, real(P, cap=cap).masks[1:]),
        )
        diff = {d.name: d for d in cross_validate(P22)}["B"]
        assert not diff.passed
        assert diff.routes == ("closed-form",)
        assert diff.only_in_oracle == sets(U4, "1 3")
        assert diff.render() == (
            "DIFF B FAIL routes=closed-form only-in-fast={} only-in-oracle={{1,3}}"
        )

    def test_detects_a_broken_rank(self, monkeypatch):
        monkeypatch.setattr(oracle, "induced_rank", lambda P, X: len(X))
        diff = {d.name: d for d in cross_validate(P22)}["rank"]
        assert diff.routes == ("closed-form",)
        assert sets(U4, "1 2") <= diff.only_in_fast

    def test_survives_a_broken_support_family(self, monkeypatch):
        monkeypatch.setattr(oracle, "support_family", lambda P, cap=20: sets(P.universe, "1"))
        diffs = {d.name: d for d in cross_validate(P22)}
        assert not diffs["S"].passed
        assert not diffs["closed-iff"].passed


class TestSweep:
    @pytest.mark.parametrize("n, count", [(1, 1), (4, 15), (6, 203)])
    def test_counts_and_no_failures(self, n, count):
        summary = sweep_all_partitions(n)
        assert (summary.partitions, summary.failures) == (count, 0)
        assert summary.render() == f"SWEEP n={n} partitions={count} failures=0"

    @pytest.mark.parametrize("n", [0, 8, -1])
    def test_range(self, n):
        with pytest.raises(ValueError):
            sweep_all_partitions(n)

    def test_parallel_matches_serial(self):
        assert sweep_all_partitions(4, workers=2) == sweep_all_partitions(4)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import S, part, partitions, universe
from roughmatroid import (
    CapExceeded,
    ElementNotInUniverse,
    InvalidPartition,
    Partition,
    Subset,
    Universe,
    UniverseMismatch,
    block_of,
    check_approx_properties,
    is_precise,
    is_rough,
    lower_approx,
    refine,
    upper_approx,
)
from roughmatroid.rough import PROPERTY_NAMES

U4 = universe(4)
P22 = part("1 2 | 3 4", U4)


class TestUniverseAndSubset:
    def test_labels_are_stringified_and_indexed(self):
        U = Universe([1, "b", 3])
        assert U.labels == ("1", "b", "3")
        assert U.position("b") == 1

    @pytest.mark.parametrize("labels", [[], ["a", "a"], ["a{"], ["-"], ["x y"]])
    def test_rejects_bad_universes(self, labels):
        with pytest.raises(ValueError):
            Universe(labels)

    def test_set_algebra(self):
        X, Y = S(U4, "1 2"), S(U4, "2 3")
        assert X | Y == S(U4, "1 2 3")
        assert X & Y == S(U4, "2")
        assert X - Y == S(U4, "1")
        assert ~X == S(U4, "3 4")
        assert S(U4, "2") <= X and not Y <= X
        assert S(U4, "2") < X and not X < X
        assert len(X | Y) == 3
        assert "2" in X and "4" not in X

    def test_mask_bits_beyond_universe_rejected(self):
        with pytest.raises(ValueError):
            Subset(U4, 1 << 4)

    def test_mismatched_universes(self):
        other = Universe("1 2 3 5".split())
        with pytest.raises(UniverseMismatch):
            S(U4, "1") | other.subset(["1"])

    def test_rendering(self):
        assert str(S(U4, "3 1")) == "{1,3}"
        assert str(U4.empty) == "{}"


class TestPartition:
    def test_canonical_block_order(self):
        P = Partition(U4, [["4", "3"], ["2"], ["1"]])
        assert [str(b) for b in P.blocks] == ["{1}", "{2}", "{3,4}"]

    def test_equality_ignores_input_order(self):
        assert Partition(U4, [["3", "4"], ["1", "2"]]) == P22

    @pytest.mark.parametrize("blocks", [
        [["1", "2"], ["2", "3", "4"]],
        [["1", "2"], ["3"]],
        [["1", "2", "3", "4"], []],
    ])
    def test_rejects_non_partitions(self, blocks):
        with pytest.raises(InvalidPartition):
            Partition(U4, blocks)


class TestBlockOf:
    def test_two_blocks(self):
        assert block_of(P22, 1) == S(U4, "1 2")

    def test_discrete(self):
        assert block_of(Partition.discrete(U4), 3) == S(U4, "3")

    def test_indiscrete(self):
        assert block_of(Partition.indiscrete(U4), 2) == U4.full

    def test_unknown_element(self):
        with pytest.raises(ElementNotInUniverse):
            block_of(P22, 7)


class TestApproximations:
    def test_lower(self):
        assert lower_approx(P22, S(U4, "1 3 4")) == S(U4, "3 4")

    def test_lower_edges(self):
        assert lower_approx(P22, U4.full) == U4.full
        assert lower_approx(P22, U4.empty) == U4.empty

    def test_upper(self):
        assert upper_approx(P22, S(U4, "1")) == S(U4, "1 2")

    def test_upper_edges(self):
        assert upper_approx(P22, U4.empty) == U4.empty
        assert upper_approx(P22, U4.full) == U4.full

    def test_universe_mismatch(self):
        other = Universe("a b c d".split())
        with pytest.raises(UniverseMismatch):
            lower_approx(P22, other.full)
        with pytest.raises(UniverseMismatch):
            upper_approx(P22, other.full)
        with pytest.raises(UniverseMismatch):
            is_precise(P22, other.full)

    @pytest.mark.parametrize("text, precise", [("1 2", True), ("1", False), ("", True)])
    def test_is_precise(self, text, precise):
        assert is_precise(P22, S(U4, text)) is precise
        assert is_rough(P22, S(U4, text)) is not precise


class TestRefine:
    def test_crossed(self):
        assert refine(P22, part("1 3 | 2 4", U4)) == Partition.discrete(U4)

    def test_idempotent(self):
        assert refine(P22, P22) == P22

    def test_discrete_is_bottom(self):
        D = Partition.discrete(U4)
        assert refine(P22, D) == D

    def test_mismatch(self):
        with pytest.raises(UniverseMismatch):
            refine(P22, part("1 3 | 2 4"))

    @given(partitions(), st.data())
    def test_coarsest_common_refinement(self, P1, data):
        P2 = data.draw(partitions(min_size=len(P1.universe), max_size=len(P1.universe)))
        R = refine(P1, P2)
        for b in R.block_masks:
            assert sum(1 for a in P1.block_masks if b & ~a == 0) == 1
            assert sum(1 for a in P2.block_masks if b & ~a == 0) == 1
        # coarsest: elements equivalent under both relations share a refined block
        for i in range(len(R.universe)):
            for j in range(len(R.universe)):
                together = P1.block_mask_of(i) == P1.block_mask_of(j) and P2.block_mask_of(i) == P2.block_mask_of(j)
                assert together == (R.block_mask_of(i) == R.block_mask_of(j))


def _all_subsets(U):
    return [U.from_mask(m) for m in range(1 << len(U))]


class TestOperatorLaws:
    @settings(max_examples=60)
    @given(partitions(max_size=7), st.data())
    def test_single_set_laws(self, P, data):
        U = P.universe
        X = U.from_mask(data.draw(st.integers(0, U.full_mask)))
        lo, up = lower_approx(P, X), upper_approx(P, X)
        assert lo <= X <= up
        assert lo == ~upper_approx(P, ~X)
        assert up == ~lower_approx(P, ~X)
        assert lower_approx(P, ~lo) == ~lo
        assert upper_approx(P, ~up) == ~up

    @settings(max_examples=60)
    @given(partitions(max_size=7), st.data())
    def test_pair_laws(self, P, data):
        U = P.universe
        X = U.from_mask(data.draw(st.integers(0, U.full_mask)))
        Y = U.from_mask(data.draw(st.integers(0, U.full_mask)))
        assert upper_approx(P, X | Y) == upper_approx(P, X) | upper_approx(P, Y)
        assert lower_approx(P, X & Y) == lower_approx(P, X) & lower_approx(P, Y)
        assert upper_approx(P, X & Y) <= upper_approx(P, X)

    @pytest.mark.parametrize("text", [
        "1 2 3 4 5 6 7 8 9 10 11 12",
        "1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10 | 11 | 12",
        "1 5 9 | 2 6 10 | 3 7 11 | 4 8 12",
        "1 2 | 3 | 4 5 6 7 | 8 9 10 11 12",
    ])
    def test_duality_exhaustive_at_twelve(self, text):
        P = part(text, universe(12))
        full = P.universe.full_mask
        for x in range(full + 1):
            assert P.lower_mask(x) == full & ~P.upper_mask(full & ~x)
            assert P.upper_mask(x) == full & ~P.lower_mask(full & ~x)

    @given(partitions())
    def test_precise_iff_union_of_blocks(self, P):
        for X in _all_subsets(P.universe):
            union = all(b & X.mask in (0, b) for b in P.block_masks)
            assert is_precise(P, X) == union


class TestCheckApproxProperties:
    @pytest.mark.parametrize("P", [
        P22, Partition.discrete(U4), Partition.indiscrete(U4),
    ], ids=["2x2", "discrete", "indiscrete"])
    def test_all_pass_exhaustively(self, P):
        report = check_approx_properties(P, exhaustive=True)
        assert [r.name for r in report.results] == list(PROPERTY_NAMES)
        assert report.passed
        assert report.pairs == 256

    def test_discrete_operators_are_identity(self):
        D = Partition.discrete(U4)
        for X in _all_subsets(U4):
            assert lower_approx(D, X) == X == upper_approx(D, X)

    def test_indiscrete_upper_of_nonempty_is_universe(self):
        P = Partition.indiscrete(U4)
        for X in _all_subsets(U4):
            assert upper_approx(P, X) == (U4.full if X else U4.empty)

    def test_sampled_mode_records_seed_and_is_deterministic(self):
        a = check_approx_properties(P22, exhaustive=False, samples=500, seed=7)
        b = check_approx_properties(P22, exhaustive=False, samples=500, seed=7)
        assert a == b and a.passed and a.seed == 7 and not a.exhaustive
        assert "seed=7" in a.render()

    def test_cap_exceeded(self):
        with pytest.raises(CapExceeded):
            check_approx_properties(part("1 2 | 3 4 5"), exhaustive=True, cap=4)

    def test_failure_reports_counterexample(self, monkeypatch):
        # with upper as the identity the two operators stop being dual
        monkeypatch.setattr(Partition, "upper_mask", lambda self, x: x)
        report = check_approx_properties(P22)
        assert not report.passed
        failed = report["4L"]
        assert not failed.passed and failed.x is not None
        assert failed.render().startswith("PROPERTY 4L FAIL X=")

    def test_render_grammar(self):
        lines = check_approx_properties(P22).render().splitlines()
        assert lines[0] == "PROPERTIES mode=exhaustive pairs=256"
        assert lines[1:] == [f"PROPERTY {name} PASS" for name in PROPERTY_NAMES]

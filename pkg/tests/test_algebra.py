import random

import pytest
from hypothesis import given, settings, strategies as st

from coverlattice import (
    CoverError,
    InconsistencyError,
    LabeledBipartiteGraph,
    as_graph,
    build_matrices,
    cover_vector,
    dimension_report,
    enumerate_minimal_covers,
    format_report,
    graph_from_lattice,
    growth_oracle,
    hilbert_counts,
    lattice_from_covers,
    monomial_string,
    random_sublattice,
    rank_exact,
    rank_mod,
    x_parts,
)

from oracles import rank_by_minors

K22 = LabeledBipartiteGraph(2, frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}))
MATCH2 = LabeledBipartiteGraph(2, frozenset({(1, 1), (2, 2)}))
EDGE1 = LabeledBipartiteGraph(1, frozenset({(1, 1)}))


def _pipeline(lg):
    covers = enumerate_minimal_covers(as_graph(lg))
    lat = lattice_from_covers(x_parts(lg, covers), lg.n)
    return covers, lat


class TestCoverVector:
    def test_all_x(self):
        assert cover_vector(frozenset({1, 2}), K22) == (1, 1, 0, 0)

    def test_all_y(self):
        assert cover_vector(frozenset({3, 4}), K22) == (0, 0, 1, 1)

    def test_mixed(self):
        assert cover_vector(frozenset({1, 4}), MATCH2) == (1, 0, 0, 1)

    def test_complementarity_enforced(self):
        with pytest.raises(CoverError, match="pair"):
            cover_vector(frozenset({1, 3}), K22)  # x1 and y1 together
        with pytest.raises(CoverError, match="pair"):
            cover_vector(frozenset({1}), K22)  # pair 2 absent entirely

    def test_out_of_range(self):
        with pytest.raises(CoverError, match="range"):
            cover_vector(frozenset({1, 5}), K22)


class TestMonomialString:
    def test_examples(self):
        assert monomial_string((1, 1, 0, 0)) == "x1*x2"
        assert monomial_string((0, 0, 1, 1)) == "y1*y2"
        assert monomial_string((1, 0, 0, 1)) == "x1*y2"

    def test_rejects_non_binary(self):
        with pytest.raises(ValueError):
            monomial_string((2, 0))


class TestBuildMatrices:
    def test_complete_bipartite(self):
        covers, _ = _pipeline(K22)
        full, trunc = build_matrices(covers, K22)
        assert full.rows == ((1, 1, 0, 0), (0, 0, 1, 1))
        assert trunc.rows == ((1, 1), (0, 0))

    def test_matching_row_order(self):
        covers, _ = _pipeline(MATCH2)
        full, trunc = build_matrices(covers, MATCH2)
        assert full.rows == (
            (1, 1, 0, 0),
            (1, 0, 0, 1),
            (0, 1, 1, 0),
            (0, 0, 1, 1),
        )
        assert trunc.rows == ((1, 1), (1, 0), (0, 1), (0, 0))

    def test_single_edge(self):
        covers, _ = _pipeline(EDGE1)
        full, _ = build_matrices(covers, EDGE1)
        assert full.rows == ((1, 0), (0, 1))

    def test_first_and_last_rows_are_the_boundary_covers(self):
        rng = random.Random(11)
        for _ in range(25):
            lg = graph_from_lattice(
                random_sublattice(rng.randint(1, 5), rng.randint(0, 8), rng.getrandbits(32))
            )
            covers, _ = _pipeline(lg)
            full, _ = build_matrices(covers, lg)
            n = lg.n
            assert full.rows[0][:n] == (1,) * n
            assert full.rows[-1][:n] == (0,) * n

    def test_column_identity(self):
        """Each y column is the all-ones column minus the matching x column."""
        rng = random.Random(12)
        for _ in range(25):
            lg = graph_from_lattice(
                random_sublattice(rng.randint(1, 5), rng.randint(0, 8), rng.getrandbits(32))
            )
            covers, _ = _pipeline(lg)
            full, _ = build_matrices(covers, lg)
            n = lg.n
            for j in range(n):
                for row in full.rows:
                    assert row[n + j] == 1 - row[j]


class TestRankExact:
    def test_block_matrix(self):
        assert rank_exact([[1, 1, 0, 0], [0, 0, 1, 1]]) == 2

    def test_identity(self):
        for n in (1, 3, 5):
            eye = [[int(i == j) for j in range(n)] for i in range(n)]
            assert rank_exact(eye) == n

    def test_matching_matrix_rank(self):
        covers, _ = _pipeline(MATCH2)
        full, _ = build_matrices(covers, MATCH2)
        assert rank_exact(full.rows) == 3
        assert rank_by_minors(full.rows) == 3

    def test_zero_matrix(self):
        assert rank_exact([[0, 0], [0, 0]]) == 0

    def test_needs_pivoting_and_stays_exact(self):
        m = [
            [0, 2, 1, 3],
            [2, 4, 0, 1],
            [4, 8, 0, 2],
            [2, 6, 1, 4],
        ]
        assert rank_exact(m) == rank_by_minors(m)

    @given(st.integers(0, 10_000))
    @settings(deadline=None)
    def test_matches_minor_oracle_random_01(self, seed):
        rng = random.Random(seed)
        rows, cols = rng.randint(1, 6), rng.randint(1, 8)
        m = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        assert rank_exact(m) == rank_by_minors(m)

    @given(st.integers(0, 10_000))
    @settings(deadline=None)
    def test_matches_minor_oracle_random_small_ints(self, seed):
        rng = random.Random(seed)
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        assert rank_exact(m) == rank_by_minors(m)

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            rank_exact([[1, 2], [3]])


class TestRankMod:
    def test_mod2_can_drop(self):
        # full rank over Q, singular over GF(2)
        m = [[1, 1], [1, -1]]
        assert rank_exact(m) == 2
        assert rank_mod(m, 2) == 1
        assert rank_mod(m, 3) == 2

    def test_matches_char0_on_01_identity(self):
        eye = [[int(i == j) for j in range(4)] for i in range(4)]
        assert rank_mod(eye, 2) == 4


class TestDimensionReport:
    def test_complete_bipartite(self):
        covers, lat = _pipeline(K22)
        rep = dimension_report(K22, covers, lat)
        assert (
            rep.cover_count,
            rep.rank_full,
            rep.rank_truncated,
            rep.lattice_rank,
            rep.dimension,
        ) == (2, 2, 1, 1, 2)
        assert rep.dim_matches_lattice_rank and not rep.cohen_macaulay

    def test_matching(self):
        covers, lat = _pipeline(MATCH2)
        rep = dimension_report(MATCH2, covers, lat)
        assert (rep.cover_count, rep.rank_full, rep.rank_truncated) == (4, 3, 2)
        assert (rep.lattice_rank, rep.dimension) == (2, 3)
        assert rep.cohen_macaulay

    def test_single_edge(self):
        covers, lat = _pipeline(EDGE1)
        rep = dimension_report(EDGE1, covers, lat)
        assert (rep.cover_count, rep.dimension) == (2, 2)
        assert rep.cohen_macaulay  # n=1, dimension = n+1 = 2

    def test_inconsistency_alarm_carries_instance(self):
        covers, _ = _pipeline(MATCH2)
        wrong_lat = lattice_from_covers(
            [frozenset(), frozenset({1, 2})], 2
        )  # lattice of a different graph
        with pytest.raises(InconsistencyError) as info:
            dimension_report(MATCH2, covers, wrong_lat)
        assert "lattice_rank" in str(info.value)
        assert info.value.details["n"] == 2
        assert info.value.details["covers"]

    def test_format_report(self):
        covers, lat = _pipeline(K22)
        text = format_report(dimension_report(K22, covers, lat))
        assert "dimension=2" in text
        assert "lattice_rank=1" in text
        assert "cohen_macaulay=no" in text


class TestGrowth:
    def test_linear_counts_for_complete_bipartite(self):
        covers, _ = _pipeline(K22)
        full, _ = build_matrices(covers, K22)
        assert hilbert_counts(full.rows, 8) == [t + 1 for t in range(1, 9)]
        assert growth_oracle(full, 10) == 2

    def test_quadratic_counts_for_matching(self):
        covers, _ = _pipeline(MATCH2)
        full, _ = build_matrices(covers, MATCH2)
        assert hilbert_counts(full.rows, 8) == [(t + 1) ** 2 for t in range(1, 9)]
        assert growth_oracle(full, 10) == 3

    def test_single_edge(self):
        covers, _ = _pipeline(EDGE1)
        full, _ = build_matrices(covers, EDGE1)
        assert hilbert_counts(full.rows, 6) == [t + 1 for t in range(1, 7)]
        assert growth_oracle(full, 10) == 2

    def test_inconclusive_when_too_few_degrees(self):
        covers, _ = _pipeline(MATCH2)
        full, _ = build_matrices(covers, MATCH2)
        # degree-2 growth cannot stabilize three third-level differences in 4 steps
        assert growth_oracle(full, 4) is None

    def test_state_space_guard(self):
        from coverlattice import CoverLattice

        boolean4 = CoverLattice(
            4,
            tuple(
                frozenset(i + 1 for i in range(4) if mask >> i & 1)
                for mask in range(16)
            ),
        )
        big = graph_from_lattice(boolean4)
        covers = enumerate_minimal_covers(as_graph(big))
        full, _ = build_matrices(covers, big)
        assert len(full.rows) == 16
        with pytest.raises(ValueError, match="guard"):
            growth_oracle(full, 10)
        covers2, _ = _pipeline(K22)
        m2, _ = build_matrices(covers2, K22)
        with pytest.raises(ValueError, match="guard"):
            growth_oracle(m2, 13)

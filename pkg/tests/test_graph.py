import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lapspec.errors import BadIndex, DuplicateArc, InvalidWeight, SelfLoop
from lapspec.explorer.sampling import sample_digraph, trial_rng
from lapspec.graph import (
    complement,
    complete_digraph,
    condensation,
    cycle_digraph,
    digraph_from_laplacian,
    empty_digraph,
    in_forest_dimension,
    is_hamiltonian_cycle,
    new_digraph,
    strongly_connected_components,
)
from lapspec.laplacian import circulant_q, standardize
from lapspec.linalg import rank


def brute_force_in_forest(g):
    """Fewest trees in a spanning converging forest, by trying every choice
    of at most one out-arc per vertex and rejecting cycles."""
    n = g.n
    options = [[None] + g.successors(v) for v in range(n)]
    best = n
    for choice in itertools.product(*options):
        roots = sum(1 for c in choice if c is None)
        if roots >= best:
            continue
        ok = True
        for start in range(n):
            v, steps = start, 0
            while choice[v] is not None and steps <= n:
                v = choice[v]
                steps += 1
            if steps > n:
                ok = False
                break
        if ok:
            best = roots
    return best


@st.composite
def digraphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    weights = draw(st.lists(st.integers(1, 4), min_size=len(chosen), max_size=len(chosen)))
    return new_digraph(n, [(i, j, Fraction(w, 4)) for (i, j), w in zip(chosen, weights)], 1)


class TestNewDigraph:
    def test_single_vertex(self):
        g = new_digraph(1, [], 1)
        assert g.n == 1 and g.arcs == ()

    def test_weight_above_bound(self):
        with pytest.raises(InvalidWeight):
            new_digraph(2, [(0, 1, 2.0)], 1)

    def test_nonpositive_weight(self):
        with pytest.raises(InvalidWeight):
            new_digraph(2, [(0, 1, 0)], 1)
        with pytest.raises(InvalidWeight):
            new_digraph(2, [(0, 1, -0.5)], 1)

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            new_digraph(2, [(1, 1, 1)], 1)

    def test_duplicate(self):
        with pytest.raises(DuplicateArc):
            new_digraph(3, [(0, 1, 1), (0, 1, 0.5)], 1)

    def test_bad_index(self):
        with pytest.raises(BadIndex):
            new_digraph(3, [(0, 3, 1)], 1)
        with pytest.raises(IndexError):
            new_digraph(3, [(-1, 0, 1)], 1)

    def test_three_cycle(self):
        g = new_digraph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)], 1)
        assert is_hamiltonian_cycle(g)

    def test_arcs_sorted(self):
        g = new_digraph(3, [(2, 0, 1), (0, 2, 1), (0, 1, 1)], 1)
        assert [a[:2] for a in g.arcs] == [(0, 1), (0, 2), (2, 0)]


class TestComplement:
    def test_complete_gives_empty(self):
        assert complement(complete_digraph(4, 1)).arcs == ()

    def test_empty_gives_complete(self):
        c = complement(empty_digraph(3, 1))
        assert len(c.arcs) == 6 and all(w == 1 for *_, w in c.arcs)

    def test_partial_weights(self):
        g = new_digraph(2, [(0, 1, Fraction(1, 4))], 1)
        c = complement(g)
        assert c.weight(0, 1) == Fraction(3, 4) and c.weight(1, 0) == 1

    @given(digraphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestCondensation:
    def test_cycle(self):
        c = condensation(cycle_digraph(3))
        assert c.count == 1 and c.sink_count == 1

    def test_out_star(self):
        c = condensation(new_digraph(3, [(0, 1, 1), (0, 2, 1)]))
        assert c.members == ((0,), (1,), (2,))
        assert c.sinks == (1, 2)

    def test_empty(self):
        c = condensation(empty_digraph(4))
        assert c.count == 4 and c.sink_count == 4

    def test_deep_path_no_recursion_limit(self):
        n = 5000
        g = new_digraph(n, [(i, i + 1, 1) for i in range(n - 1)])
        assert condensation(g).count == n and in_forest_dimension(g) == 1

    @given(digraphs())
    def test_dag_acyclic_and_sinks(self, g):
        c = condensation(g)
        comps = strongly_connected_components(c.count, [list(o) for o in c.dag])
        assert all(len(x) == 1 for x in comps)
        for k in range(c.count):
            assert (k in c.sinks) == (len(c.dag[k]) == 0)
        assert c.sink_count >= 1


class TestInForestDimension:
    def test_complete(self):
        for n in range(1, 7):
            assert in_forest_dimension(complete_digraph(n)) == 1

    def test_isolated(self):
        assert in_forest_dimension(empty_digraph(5)) == 5

    def test_path(self):
        g = new_digraph(3, [(0, 1, 1), (1, 2, 1)])
        assert in_forest_dimension(g) == 1 == brute_force_in_forest(g)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_brute_force_oracle(self, n):
        for t in range(6):
            g = sample_digraph(n, trial_rng(n, t), density=0.35, levels=4)
            assert in_forest_dimension(g) == brute_force_in_forest(g)

    @given(digraphs())
    def test_rank_identity(self, g):
        d = in_forest_dimension(g)
        assert 1 <= d <= g.n
        assert d == g.n - rank(standardize(g).exact)
        assert (d == g.n) == (len(g.arcs) == 0)


class TestHamiltonian:
    def test_complete_is_not(self):
        assert not is_hamiltonian_cycle(complete_digraph(3))

    def test_chord(self):
        g = new_digraph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (0, 2, 1)])
        assert not is_hamiltonian_cycle(g)

    def test_two_short_cycles(self):
        g = new_digraph(4, [(0, 1, 1), (1, 0, 1), (2, 3, 1), (3, 2, 1)])
        assert not is_hamiltonian_cycle(g)

    def test_unequal_weights(self):
        g = new_digraph(3, [(0, 1, 0.2), (1, 2, 1), (2, 0, 0.7)])
        assert is_hamiltonian_cycle(g)


class TestCycleDigraph:
    def test_two(self):
        assert [a[:2] for a in cycle_digraph(2).arcs] == [(0, 1), (1, 0)]

    def test_three(self):
        assert is_hamiltonian_cycle(cycle_digraph(3))

    def test_standardized(self):
        lap = standardize(cycle_digraph(4, 1))
        np.testing.assert_array_equal(lap.matrix, (np.eye(4) - circulant_q(4)) / 4)

    def test_rejects(self):
        with pytest.raises(InvalidWeight):
            cycle_digraph(3, 2, b=1)


def test_digraph_from_laplacian_roundtrip():
    g = new_digraph(3, [(0, 1, Fraction(1, 2)), (2, 0, 1)], 1)
    h = digraph_from_laplacian(standardize(g).exact)
    assert [a[:2] for a in h.arcs] == [(0, 1), (2, 0)]
    assert h.b == Fraction(1, 3)
    assert standardize(h).exact.tolist() == standardize(g).exact.tolist()

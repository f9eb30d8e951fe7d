"""Weighted digraphs of class G_b, complementation and in-forest dimension.

Arc weights are stored exactly as supplied (``int``, ``float`` or
``fractions.Fraction``); nothing is renormalized, so a weight equal to the
class bound ``b`` is recognized by plain ``==``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Iterable

from .errors import BadIndex, DuplicateArc, InvalidWeight, SelfLoop

Arc = tuple[int, int, Real]


@dataclass(frozen=True)
class WeightedDigraph:
    """Digraph on vertices ``0..n-1`` with positive arc weights ``<= b``.

    Build instances with :func:`new_digraph`, which validates the arcs and
    sorts them by ``(source, target)``.
    """

    n: int
    arcs: tuple[Arc, ...]
    b: Real = 1
    _weights: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_weights", {(i, j): w for i, j, w in self.arcs})

    def weight(self, i: int, j: int):
        """Weight of arc ``(i, j)`` or ``None`` when absent."""
        return self._weights.get((i, j))

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self._weights

    def successors(self, i: int) -> list[int]:
        return [j for (s, j, _) in self.arcs if s == i]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j, _ in self.arcs:
            adj[i].append(j)
        return adj

    @property
    def is_exact(self) -> bool:
        """True when ``b`` and every weight are rationals (int or Fraction)."""
        def rational(x):
            return isinstance(x, (int, Fraction)) and not isinstance(x, bool)
        return rational(self.b) and all(rational(w) for _, _, w in self.arcs)


def new_digraph(n: int, arcs: Iterable[Arc] = (), b: Real = 1) -> WeightedDigraph:
    """Validate ``arcs`` and return a :class:`WeightedDigraph`.

    Raises
    ------
    BadIndex
        Vertex index outside ``[0, n)`` or ``n < 1``.
    SelfLoop, DuplicateArc, InvalidWeight
        On the corresponding violation; weights must satisfy ``0 < w <= b``.
    """
    if not isinstance(n, int) or n < 1:
        raise BadIndex(f"vertex count must be a positive integer, got {n!r}")
    if not b > 0:
        raise InvalidWeight(f"class bound b must be positive, got {b!r}")
    seen = set()
    clean = []
    for arc in arcs:
        i, j, w = arc
        if not (0 <= i < n and 0 <= j < n):
            raise BadIndex(f"arc ({i}, {j}) has an index outside [0, {n})")
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i}")
        if (i, j) in seen:
            raise DuplicateArc(f"arc ({i}, {j}) given twice")
        if not (0 < w <= b):
            raise InvalidWeight(f"arc ({i}, {j}) weight {w!r} not in (0, {b!r}]")
        seen.add((i, j))
        clean.append((int(i), int(j), w))
    clean.sort(key=lambda a: (a[0], a[1]))
    return WeightedDigraph(n, tuple(clean), b)


def complement(g: WeightedDigraph) -> WeightedDigraph:
    """Complementary digraph: weight ``b - w_ij``, arc dropped when ``w_ij == b``,
    weight ``b`` where ``g`` has no arc."""
    arcs = []
    for i in range(g.n):
        for j in range(g.n):
            if i == j:
                continue
            w = g.weight(i, j)
            if w is None:
                arcs.append((i, j, g.b))
            elif w != g.b:
                arcs.append((i, j, g.b - w))
    return WeightedDigraph(g.n, tuple(arcs), g.b)


def complete_digraph(n: int, b: Real = 1) -> WeightedDigraph:
    return new_digraph(n, [(i, j, b) for i in range(n) for j in range(n) if i != j], b)


def empty_digraph(n: int, b: Real = 1) -> WeightedDigraph:
    return new_digraph(n, (), b)


def cycle_digraph(n: int, w: Real = 1, b: Real | None = None) -> WeightedDigraph:
    """Directed cycle ``i -> i+1 (mod n)`` with every weight ``w``.

    The class bound defaults to ``w`` so that the standardized Laplacian is
    ``(I - Q) / n``.
    """
    if n < 2:
        raise BadIndex(f"a cycle needs n >= 2, got {n}")
    if b is None:
        b = w
    if n == 2:
        return new_digraph(2, [(0, 1, w), (1, 0, w)], b)
    return new_digraph(n, [(i, (i + 1) % n, w) for i in range(n)], b)


def is_hamiltonian_cycle(g: WeightedDigraph) -> bool:
    """True iff the arc set is exactly one directed cycle through all vertices."""
    n = g.n
    if n < 2 or len(g.arcs) != n:
        return False
    succ = [-1] * n
    for i, j, _ in g.arcs:
        if succ[i] != -1:
            return False
        succ[i] = j
    if -1 in succ:
        return False
    v, steps = 0, 0
    while True:
        v = succ[v]
        steps += 1
        if v == 0:
            return steps == n


@dataclass(frozen=True)
class Condensation:
    """Strong components of a digraph and the DAG between them.

    ``component[v]`` is the id of the component holding vertex ``v``; ids are
    assigned in increasing order of each component's smallest vertex.
    """

    component: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    dag: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def sinks(self) -> tuple[int, ...]:
        return tuple(c for c, out in enumerate(self.dag) if not out)

    @property
    def sink_count(self) -> int:
        return len(self.sinks)


def strongly_connected_components(n: int, adj: list[list[int]]) -> list[list[int]]:
    """Tarjan's algorithm with an explicit call stack (no recursion)."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            nbrs = adj[v]
            if pos < len(nbrs):
                work[-1] = (v, pos + 1)
                w = nbrs[pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def condensation(g: WeightedDigraph) -> Condensation:
    comps = [sorted(c) for c in strongly_connected_components(g.n, g.adjacency())]
    comps.sort(key=lambda c: c[0])
    component = [0] * g.n
    for cid, members in enumerate(comps):
        for v in members:
            component[v] = cid
    out: list[set[int]] = [set() for _ in comps]
    for i, j, _ in g.arcs:
        ci, cj = component[i], component[j]
        if ci != cj:
            out[ci].add(cj)
    return Condensation(
        tuple(component),
        tuple(tuple(c) for c in comps),
        tuple(tuple(sorted(o)) for o in out),
    )


def in_forest_dimension(g: WeightedDigraph) -> int:
    """Minimum number of trees in a spanning converging forest of ``g``.

    Every sink strong component needs a root of its own, and one root per
    sink component suffices, so the answer is the sink count.
    """
    return condensation(g).sink_count


def digraph_from_laplacian(matrix, b=None) -> WeightedDigraph:
    """Digraph whose Laplacian is ``matrix`` (arc weight ``-l_ij``).

    With the default ``b = 1/n`` a standardized Laplacian ``L`` is recovered
    as ``standardize(digraph_from_laplacian(L))``.  Exact (object) matrices
    keep their Fraction entries.
    """
    n = len(matrix)
    if b is None:
        entry = matrix[0][0]
        b = Fraction(1, n) if isinstance(entry, (int, Fraction)) else 1.0 / n
    arcs = []
    for i in range(n):
        for j in range(n):
            if i != j and matrix[i][j] != 0:
                arcs.append((i, j, -matrix[i][j]))
    return new_digraph(n, arcs, b)

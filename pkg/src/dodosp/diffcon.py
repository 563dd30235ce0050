"""Difference-constraint graphs with weights affine in the worker count.

An edge ``tail -> head`` with weight ``w`` encodes ``pi[head] - pi[tail] <= w``.
Bellman-Ford from a virtual source (zero edges to every vertex) either yields
an integral feasible potential or a negative cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# graphs with more edges than this relax with vectorised passes
VECTOR_THRESHOLD = 512
_INT64_SAFE = 2**62


class Affine(NamedTuple):
    """``a * N + b``."""

    a: int
    b: int

    def __call__(self, n: int) -> int:
        return self.a * n + self.b

    def __add__(self, other):
        return Affine(self.a + other[0], self.b + other[1])

    def __str__(self):
        if self.a == 0:
            return str(self.b)
        lead = {1: "N", -1: "-N"}.get(self.a, f"{self.a}N")
        if self.b == 0:
            return lead
        return f"{lead} {'+' if self.b > 0 else '-'} {abs(self.b)}"


class Edge(NamedTuple):
    tail: int
    head: int
    weight: Affine
    label: str = ""


class DiffConGraph:
    """Vertices ``0..n_vertices-1`` with optional display names.

    Edges are kept as parallel lists so that building the many small graphs
    of an exhaustive sweep stays cheap; :attr:`edges` materialises them.
    """

    def __init__(self, n_vertices: int, names=None):
        self.n_vertices = n_vertices
        self._names = names
        # one (tail, head, a, b, label, day) tuple per edge
        self.rows: list[tuple] = []

    @property
    def names(self) -> list[str]:
        if self._names is None:
            self._names = [f"v{i}" for i in range(self.n_vertices)]
        elif callable(self._names):
            self._names = [self._names(i) for i in range(self.n_vertices)]
        return self._names

    def add(self, tail: int, head: int, a: int, b: int, label: str = "", day: int | None = None) -> None:
        """Add the constraint ``pi[head] - pi[tail] <= a*N + b``; ``day`` is appended to the label."""
        if not (0 <= tail < self.n_vertices and 0 <= head < self.n_vertices):
            raise IndexError(f"edge ({tail}, {head}) outside graph of {self.n_vertices} vertices")
        self.rows.append((tail, head, a, b, label, day))

    @property
    def tails(self) -> list[int]:
        return [r[0] for r in self.rows]

    @property
    def heads(self) -> list[int]:
        return [r[1] for r in self.rows]

    def label(self, i: int) -> str:
        _, _, _, _, label, day = self.rows[i]
        return label if day is None else f"{label} (d={day})"

    def edge(self, i: int) -> Edge:
        t, h, a, b, _, _ = self.rows[i]
        return Edge(t, h, Affine(a, b), self.label(i))

    @property
    def edges(self) -> list[Edge]:
        return [self.edge(i) for i in range(len(self.rows))]

    def weights(self, n: int) -> list[int]:
        return [r[2] * n + r[3] for r in self.rows]

    def constraint_text(self, edge: Edge) -> str:
        return f"{self.names[edge.head]} - {self.names[edge.tail]} <= {edge.weight}"

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class Potential:
    values: tuple[int, ...]
    n: int

    def __getitem__(self, v):
        return self.values[v]


@dataclass(frozen=True)
class NegativeCycle:
    edges: tuple[Edge, ...]
    n: int

    @property
    def total(self) -> Affine:
        t = Affine(0, 0)
        for e in self.edges:
            t = t + e.weight
        return t

    def describe(self, graph: DiffConGraph) -> list[str]:
        lines = []
        for e in self.edges:
            tag = f"  [{e.label}]" if e.label else ""
            lines.append(f"{graph.constraint_text(e)}{tag}")
        total = self.total
        lines.append(f"summing the chain: 0 <= {total} = {total(self.n)} at N={self.n}")
        return lines


def _pred_cycle(pred, tails, weights):
    """Edge indices of a negative cycle in the predecessor graph, or None."""
    V = len(pred)
    mark = [0] * V
    for start in range(V):
        if mark[start]:
            continue
        walk_id = start + 1
        u = start
        while u >= 0 and not mark[u]:
            mark[u] = walk_id
            i = pred[u]
            u = tails[i] if i >= 0 else -1
        if u < 0 or mark[u] != walk_id:
            continue
        cycle = []
        v = u
        while True:
            i = pred[v]
            cycle.append(i)
            v = tails[i]
            if v == u:
                break
        if sum(weights[i] for i in cycle) < 0:
            cycle.reverse()
            return cycle
    return None


def _should_check(passes, V):
    # a negative cycle usually shows up in the predecessor graph long before
    # pass V; probing at powers of two costs O(V log V) in total
    return passes >= V or (passes >= 8 and passes & (passes - 1) == 0)


def _relax_python(V, tails, heads, weights):
    dist = [0] * V
    pred = [-1] * V
    idx = range(len(tails))
    passes = 0
    while True:
        changed = False
        for i in idx:
            nd = dist[tails[i]] + weights[i]
            h = heads[i]
            if nd < dist[h]:
                dist[h] = nd
                pred[h] = i
                changed = True
        passes += 1
        if not changed:
            return dist, None
        if passes > 1:
            # the walk costs O(V), no more than the pass that preceded it
            cycle = _pred_cycle(pred, tails, weights)
            if cycle is not None:
                return dist, cycle
            if passes > 4 * V + 16:
                raise RuntimeError("Bellman-Ford failed to isolate a negative cycle")


def _relax_numpy(V, tails, heads, weights):
    order = np.argsort(np.asarray(heads, dtype=np.int64), kind="stable")
    T = np.asarray(tails, dtype=np.int64)[order]
    H = np.asarray(heads, dtype=np.int64)[order]
    W = np.asarray(weights, dtype=np.int64)[order]
    starts = np.flatnonzero(np.r_[True, H[1:] != H[:-1]])
    seg_heads = H[starts]
    seg_len = np.diff(np.r_[starts, len(H)])
    pos = np.arange(len(H))
    dist = np.zeros(V, dtype=np.int64)
    pred = np.full(V, -1, dtype=np.int64)
    passes = 0
    while True:
        cand = dist[T] + W
        best = np.minimum.reduceat(cand, starts)
        improved = best < dist[seg_heads]
        passes += 1
        if not improved.any():
            return dist.tolist(), None
        hit = np.where(cand == np.repeat(best, seg_len), pos, len(H))
        first = np.minimum.reduceat(hit, starts)
        dist[seg_heads[improved]] = best[improved]
        pred[seg_heads[improved]] = order[first[improved]]
        if _should_check(passes, V):
            cycle = _pred_cycle(pred.tolist(), tails, weights)
            if cycle is not None:
                return dist.tolist(), cycle
            if passes > 4 * V + 16:
                raise RuntimeError("Bellman-Ford failed to isolate a negative cycle")


def solve_potential(graph: DiffConGraph, n: int, anchor: int = 0) -> Potential | NegativeCycle:
    """Feasible potential with ``pi[anchor] == 0``, or a simple negative cycle at worker count ``n``."""
    V = graph.n_vertices
    if V == 0:
        return Potential((), n)
    tails, heads = graph.tails, graph.heads
    weights = graph.weights(n)
    vectorise = len(tails) > VECTOR_THRESHOLD
    if vectorise and sum(abs(w) for w in weights) >= _INT64_SAFE:
        # path lengths could leave int64; stay with unbounded Python ints
        vectorise = False
    relax = _relax_numpy if vectorise else _relax_python
    dist, cycle = relax(V, tails, heads, weights)
    if cycle is None:
        shift = dist[anchor]
        return Potential(tuple(x - shift for x in dist), n)
    return NegativeCycle(tuple(graph.edge(i) for i in cycle), n)


def is_feasible_potential(graph: DiffConGraph, values, n: int) -> bool:
    return all(values[r[1]] - values[r[0]] <= r[2] * n + r[3] for r in graph.rows)

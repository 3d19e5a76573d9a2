"""Strict digraphs, wreath products, and hamiltonian cycle covers.

Vertex (i, j) of G wr H (i in V(G), j in V(H)) is encoded as ``i*m + j``
with m = |V(H)|.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .twined import FactorTuple

Arc = tuple[int, int]


class DigraphError(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if self.vertex_count < 0:
            raise DigraphError("negative vertex count")
        for u, v in arcs:
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise DigraphError(f"arc ({u}, {v}) out of range")

    @classmethod
    def from_arcs(cls, vertex_count: int, arcs: Iterable[Sequence[int]]) -> "Digraph":
        arcs = [tuple(a) for a in arcs]
        if len(set(arcs)) != len(arcs):
            raise DigraphError("repeated arc")
        return cls(vertex_count, frozenset(arcs))

    def out_neighbors(self, u: int) -> list[int]:
        return sorted(v for x, v in self.arcs if x == u)

    def out_degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, _ in self.arcs:
            deg[u] += 1
        return deg

    def in_degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for _, v in self.arcs:
            deg[v] += 1
        return deg

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "arcs": [list(a) for a in self.sorted_arcs()]}

    @classmethod
    def from_json(cls, data: dict) -> "Digraph":
        return cls.from_arcs(int(data["vertices"]), data["arcs"])

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.sorted_arcs())

    @classmethod
    def from_edge_list(cls, text: str, vertex_count: int | None = None) -> "Digraph":
        arcs = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                u, v = line.split()
                arcs.append((int(u), int(v)))
        if vertex_count is None:
            vertex_count = 1 + max((max(a) for a in arcs), default=-1)
        return cls.from_arcs(vertex_count, arcs)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {v};" for v in range(self.vertex_count)]
        lines += [f"  {u} -> {v};" for u, v in self.sorted_arcs()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def dicycle(n: int) -> Digraph:
    if n < 2:
        raise DigraphError("a directed cycle needs at least 2 vertices")
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def empty(m: int) -> Digraph:
    return Digraph(m, frozenset())


def circulant(m: int, steps: Iterable[int]) -> Digraph:
    steps = list(steps)
    if not steps:
        raise DigraphError("circulant needs at least one step")
    if len(set(steps)) != len(steps):
        raise DigraphError("circulant steps must be distinct")
    for s in steps:
        if not 1 <= s <= m - 1:
            raise DigraphError(f"invalid circulant step {s} for m={m}")
    return Digraph(m, frozenset((j, (j + s) % m) for s in steps for j in range(m)))


def wreath_product(g: Digraph, h: Digraph) -> Digraph:
    m = h.vertex_count
    arcs = set()
    for a, b in g.arcs:
        for j1 in range(m):
            for j2 in range(m):
                arcs.add((a * m + j1, b * m + j2))
    for i in range(g.vertex_count):
        for u, v in h.arcs:
            arcs.add((i * m + u, i * m + v))
    return Digraph(g.vertex_count * m, frozenset(arcs))


def tuple_arcs(f: FactorTuple) -> set[tuple[tuple[int, int], tuple[int, int]]]:
    """Arcs (i_j -> (i+1)_{j^sigma_i}) of C_n wr K̄_m for the tuple f."""
    n, m = f.n, f.m
    return {((i, j), ((i + 1) % n, f.perms[i](j))) for i in range(n) for j in range(m)}


@dataclass(frozen=True)
class HamCycleCover:
    """A digraph together with hamiltonian cycles, each given as a vertex order."""

    digraph: Digraph
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(int(v) for v in c) for c in self.cycles))

    def __len__(self) -> int:
        return len(self.cycles)

    def arc_sets(self) -> list[frozenset[Arc]]:
        return [frozenset(zip(c, c[1:] + c[:1])) for c in self.cycles]

    def successor(self, k: int, v: int) -> int:
        cyc = self.cycles[k]
        return cyc[(cyc.index(v) + 1) % len(cyc)]

    def to_json(self) -> dict:
        return {"digraph": self.digraph.to_json(), "cover": [list(c) for c in self.cycles]}

    @classmethod
    def from_json(cls, data: dict) -> "HamCycleCover":
        digraph = Digraph.from_json(data["digraph"])
        cycles = [_as_vertex_order(c) for c in data["cover"]]
        return cls(digraph, tuple(cycles))


def _as_vertex_order(cycle: Sequence) -> tuple[int, ...]:
    """Accept a cycle as a vertex list or as a list of [u, v] arcs."""
    if cycle and isinstance(cycle[0], (list, tuple)):
        succ = {int(u): int(v) for u, v in cycle}
        if len(succ) != len(cycle):
            raise DigraphError("cover cycle repeats a tail vertex")
        start = min(succ)
        order = [start]
        while succ.get(order[-1], start) != start:
            order.append(succ[order[-1]])
            if len(order) > len(succ):
                raise DigraphError("cover arcs do not form a cycle")
        if len(order) != len(succ):
            raise DigraphError("cover arcs do not form a single cycle")
        return tuple(order)
    return tuple(int(v) for v in cycle)


def rotation_cover(m: int, steps: Sequence[int]) -> HamCycleCover:
    """circulant(m, steps) with one cycle per step; every step must be a unit mod m."""
    cycles = []
    for s in steps:
        if gcd(s, m) != 1:
            raise DigraphError(f"step {s} is not coprime to {m}")
        cycles.append(tuple((s * r) % m for r in range(m)))
    return HamCycleCover(circulant(m, steps), tuple(cycles))


class SearchBudgetExceeded(RuntimeError):
    pass


def _disjoint_ham_cycles(m: int, c: int, budget: int) -> list[tuple[int, ...]]:
    """Backtracking search for c arc-disjoint hamiltonian cycles in the
    complete symmetric digraph on m vertices."""
    used: set[Arc] = set()
    cycles: list[tuple[int, ...]] = []
    nodes = 0

    def extend(path: list[int], on_path: list[bool]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"no {c} disjoint hamiltonian cycles within {budget} nodes")
        u = path[-1]
        if len(path) == m:
            if (u, path[0]) in used:
                return False
            arcs = list(zip(path, path[1:] + path[:1]))
            used.update(arcs)
            cycles.append(tuple(path))
            if len(cycles) == c or extend([0], [True] + [False] * (m - 1)):
                return True
            cycles.pop()
            used.difference_update(arcs)
            return False
        for v in range(m):
            if on_path[v] or (u, v) in used:
                continue
            path.append(v)
            on_path[v] = True
            if extend(path, on_path):
                return True
            on_path[v] = False
            path.pop()
        return False

    if c == 0:
        return []
    if not extend([0], [True] + [False] * (m - 1)):
        raise DigraphError(f"no {c} arc-disjoint hamiltonian cycles on {m} vertices")
    return cycles


def make_test_h(m: int, c: int, budget: int = 2_000_000) -> tuple[Digraph, HamCycleCover]:
    """A digraph on m vertices with a c-cycle hamiltonian decomposition."""
    if not 0 <= c <= m - 2:
        raise DigraphError(f"c={c} outside [0, m-2]")
    if c == 0:
        cover = HamCycleCover(empty(m), ())
        return cover.digraph, cover
    units = [s for s in range(1, m) if gcd(s, m) == 1]
    if len(units) >= c:
        cover = rotation_cover(m, units[:c])
        return cover.digraph, cover
    cycles = _disjoint_ham_cycles(m, c, budget)
    arcs = {a for cyc in cycles for a in zip(cyc, cyc[1:] + cyc[:1])}
    digraph = Digraph(m, frozenset(arcs))
    return digraph, HamCycleCover(digraph, tuple(cycles))


def load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)

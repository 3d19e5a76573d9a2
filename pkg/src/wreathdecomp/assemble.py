"""
Hamiltonian decompositions of C_n wr H and G wr H from twined factorizations.

Construction works in "design" slot labels, where m-1 is the apex; each
level is then relabeled into H's own labels so that the apex becomes
vertex 0 of H and the apex successors line up with H's cover cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import verify
from .twined import (
    FactorTuple,
    OpenCaseError,
    OutOfScopeError,
    TwinedError,
    construct_base,
    is_truncated_hamiltonian,
    pad,
    zero_twined,
)
from .wreath import Digraph, HamCycleCover, dicycle, tuple_arcs, wreath_product

Vertex = tuple[int, int]
WArc = tuple[Vertex, Vertex]

APEX_H = 0


class AssemblyError(RuntimeError):
    """Internal failure: a construction did not certify."""


class InvalidCoverError(ValueError):
    pass


def gamma_split(f: FactorTuple, level_cycles: Sequence[Sequence[int]]) -> tuple[set[WArc], set[WArc]]:
    """Split the 2-factor of a truncated tuple plus one m-cycle per level into
    two hamiltonian cycles.

    ``level_cycles[i]`` is a vertex order of slots in design labels; it must
    use the arc from the apex m-1 to ``(m-1)^{f[i-1]}``.
    """
    if not is_truncated_hamiltonian(f):
        raise TwinedError("gamma_split needs a truncated hamiltonian tuple")
    n, m = f.n, f.m
    apex = m - 1
    c0: set[WArc] = set()
    c1: set[WArc] = set()
    links = set()
    for i in range(n):
        target = f.perms[(i - 1) % n](apex)
        order = list(level_cycles[i])
        if sorted(order) != list(range(m)):
            raise TwinedError(f"level {i} cycle is not an m-cycle")
        arcs = list(zip(order, order[1:] + order[:1]))
        if (apex, target) not in arcs:
            raise TwinedError(f"level {i} cycle lacks the arc ({apex}, {target})")
        for u, v in arcs:
            arc = ((i, u), (i, v))
            (c1 if (u, v) == (apex, target) else c0).add(arc)
        links.add((((i - 1) % n, apex), (i, target)))
    c0 |= links
    c1 |= tuple_arcs(f) - links
    return c0, c1


@dataclass(frozen=True)
class LevelRelabeling:
    """phi[i][slot] = H vertex used for design slot ``slot`` on level i."""

    phi: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for row in self.phi:
            if sorted(row) != list(range(len(row))):
                raise AssemblyError("level relabeling is not a bijection")

    def arc(self, a: WArc) -> WArc:
        (i1, j1), (i2, j2) = a
        return (i1, self.phi[i1][j1]), (i2, self.phi[i2][j2])

    def pull_back(self, i: int, order: Sequence[int]) -> list[int]:
        inv = {h: s for s, h in enumerate(self.phi[i])}
        return [inv[v] for v in order]


def level_relabeling(n: int, m: int, truncated: Sequence[FactorTuple], successors: Sequence[int]) -> LevelRelabeling:
    """Send the apex to H vertex 0 and each truncated tuple's apex image to
    the matching cover successor; the rest go in increasing order."""
    apex = m - 1
    rows = []
    for i in range(n):
        fixed = {apex: APEX_H}
        for f, h in zip(truncated, successors):
            s = f.perms[(i - 1) % n](apex)
            if s in fixed or h in fixed.values():
                raise AssemblyError(f"apex targets collide on level {i}")
            fixed[s] = h
        free_slots = [s for s in range(m) if s not in fixed]
        free_targets = [h for h in range(m) if h not in fixed.values()]
        row = [0] * m
        for s, h in fixed.items():
            row[s] = h
        for s, h in zip(free_slots, free_targets):
            row[s] = h
        rows.append(tuple(row))
    return LevelRelabeling(tuple(rows))


@dataclass
class WreathDecomposition:
    n: int
    m: int
    g: int
    c: int
    digraph: Digraph
    cycles: list[list[WArc]]
    tags: list[str] = field(default_factory=list)

    def encoded_cycles(self) -> list[list[tuple[int, int]]]:
        m = self.m
        return [[(a[0] * m + a[1], b[0] * m + b[1]) for a, b in cyc] for cyc in self.cycles]

    def certify(self) -> "verify.Certificate":
        return verify.is_ham_decomposition(self.digraph, self.encoded_cycles())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "g": self.g,
            "c": self.c,
            "cycles": [[[list(a), list(b)] for a, b in cyc] for cyc in self.cycles],
            "tags": list(self.tags),
        }

    @classmethod
    def from_json(cls, data: dict, digraph: Digraph) -> "WreathDecomposition":
        cycles = [[(tuple(a), tuple(b)) for a, b in cyc] for cyc in data["cycles"]]
        return cls(int(data["n"]), int(data["m"]), int(data["g"]), int(data["c"]), digraph, cycles, list(data.get("tags", [])))

    def to_edges(self) -> str:
        out = []
        for k, cyc in enumerate(self.cycles):
            out.append(f"# cycle {k} {self.tags[k] if k < len(self.tags) else ''}".rstrip())
            out += [f"{a[0]} {a[1]}  ->  {b[0]} {b[1]}" for a, b in cyc]
        return "\n".join(out) + "\n"

    def to_dot(self) -> str:
        lines = ["digraph decomposition {"]
        for k, cyc in enumerate(self.cycles):
            hue = k / max(1, len(self.cycles))
            lines.append(f"  // cycle {k}")
            for a, b in cyc:
                lines.append(f'  "{a[0]}_{a[1]}" -> "{b[0]}_{b[1]}" [color="{hue:.3f} 0.8 0.8"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _walk(arcs: set[WArc]) -> list[WArc]:
    """Order a single cycle's arcs, starting at the smallest tail."""
    succ = dict(arcs)
    if len(succ) != len(arcs):
        raise AssemblyError("arc set is not a 1-factor")
    start = min(succ)
    order = []
    v = start
    for _ in range(len(arcs)):
        order.append((v, succ[v]))
        v = succ[v]
        if v == start:
            break
    if len(order) != len(arcs):
        raise AssemblyError("arc set splits into several cycles")
    return order


def _check_scope(m: int, c: int) -> None:
    if m % 2 == 0 and c % 2:
        raise OpenCaseError(f"open case, not constructible: m={m} even and c={c} odd")
    if c == 1:
        raise OutOfScopeError("c=1 forces H to be a directed m-cycle; not covered")


def _check_cover(h: Digraph, cover: HamCycleCover) -> None:
    cert = verify.is_ham_decomposition(h, [list(a) for a in cover.arc_sets()])
    if not cert.passed:
        raise InvalidCoverError(f"H cover is not a hamiltonian decomposition: {cert.witness}")


def _cn_wr_h_cycles(n: int, h: Digraph, cover: HamCycleCover) -> tuple[list[list[WArc]], list[str]]:
    m = h.vertex_count
    c = len(cover)
    tf = pad(construct_base(m, c), n)
    successors = [cover.successor(k, APEX_H) for k in range(c)]
    phi = level_relabeling(n, m, tf.d_t, successors)
    cycles, tags = [], []
    for k, f in enumerate(tf.d_t):
        level_orders = []
        for i in range(n):
            # rotate H's cycle k to start at the apex, then pull back to design labels
            order = list(cover.cycles[k])
            at = order.index(APEX_H)
            level_orders.append(phi.pull_back(i, order[at:] + order[:at]))
        c0, c1 = gamma_split(f, level_orders)
        for half, arcs in (("C0", c0), ("C1", c1)):
            cycles.append(_walk({phi.arc(a) for a in arcs}))
            tags.append(f"gamma-split {k} {half}")
    for k, f in enumerate(tf.d_h):
        cycles.append(_walk({phi.arc(a) for a in tuple_arcs(f)}))
        tags.append(f"hamiltonian tuple {k}")
    return cycles, tags


def _finish(dec: WreathDecomposition) -> WreathDecomposition:
    cert = dec.certify()
    if not cert.passed:
        raise AssemblyError(f"assembled cycles failed certification: {cert.witness}")
    return dec


def assemble_cn_wr_h(n: int, h: Digraph, cover: HamCycleCover) -> WreathDecomposition:
    """Hamiltonian decomposition of C_n wr H into m + c cycles."""
    if n < 2 or n % 2:
        raise OutOfScopeError(f"n={n} must be even")
    m, c = h.vertex_count, len(cover)
    _check_scope(m, c)
    _check_cover(h, cover)
    cycles, tags = _cn_wr_h_cycles(n, h, cover)
    return _finish(WreathDecomposition(n, m, 1, c, wreath_product(dicycle(n), h), cycles, tags))


def assemble_g_wr_h(g_cover: HamCycleCover, h: Digraph, h_cover: HamCycleCover) -> WreathDecomposition:
    """Hamiltonian decomposition of G wr H into g*m + c cycles."""
    g_graph = g_cover.digraph
    n = g_graph.vertex_count
    if n % 2:
        raise OutOfScopeError("odd |V(G)| out of scope")
    if len(g_cover) < 1:
        raise InvalidCoverError("G cover has no cycles")
    m, c = h.vertex_count, len(h_cover)
    if m % 2 == 0 and c % 2 and len(g_cover) >= 2:
        raise OutOfScopeError("requires external C_n wr C_m construction")
    _check_scope(m, c)
    cert = verify.is_ham_decomposition(g_graph, [list(a) for a in g_cover.arc_sets()])
    if not cert.passed:
        raise InvalidCoverError(f"G cover is not a hamiltonian decomposition: {cert.witness}")
    _check_cover(h, h_cover)

    first_cycles, first_tags = _cn_wr_h_cycles(n, h, h_cover)
    cycles, tags = [], []
    # level l of the C_n construction sits on the l-th vertex of G's first cycle
    order = g_cover.cycles[0]
    for cyc, tag in zip(first_cycles, first_tags):
        cycles.append([((order[a[0]], a[1]), (order[b[0]], b[1])) for a, b in cyc])
        tags.append("G-cycle 0 " + tag)
    zero = zero_twined(m, n)
    for q, order in enumerate(g_cover.cycles[1:], start=1):
        for k, f in enumerate(zero.d_h):
            arcs = {((order[a[0]], a[1]), (order[b[0]], b[1])) for a, b in tuple_arcs(f)}
            cycles.append(_walk(arcs))
            tags.append(f"G-cycle {q} zero-twined tuple {k}")
    dec = WreathDecomposition(n, m, len(g_cover), c, wreath_product(g_graph, h), cycles, tags)
    return _finish(dec)

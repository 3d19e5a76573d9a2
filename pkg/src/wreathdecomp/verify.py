"""
Independent certification and small brute-force oracles.

Nothing here reuses the construction code's cycle walking or permutation
algebra: permutations are handled as raw image lists, and cycle structure
is found by a separate orbit traversal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence


@dataclass
class Certificate:
    passed: bool
    witness: dict[str, Any] | None = None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "witness": self.witness}

    def __bool__(self) -> bool:
        return self.passed


def _fail(kind: str, **info) -> Certificate:
    return Certificate(False, {"kind": kind, **info})


# ------------------------------------------------------------- decompositions


def _single_cycle_through_all(arcs: list[tuple[int, int]], n_vertices: int) -> dict | None:
    """None if ``arcs`` is one directed cycle on all vertices, else a witness."""
    nxt: dict[int, int] = {}
    indeg: dict[int, int] = {}
    for u, v in arcs:
        if u in nxt:
            return {"kind": "broken_cycle", "vertex": u, "reason": "out-degree above 1"}
        nxt[u] = v
        indeg[v] = indeg.get(v, 0) + 1
        if indeg[v] > 1:
            return {"kind": "broken_cycle", "vertex": v, "reason": "in-degree above 1"}
    for v in range(n_vertices):
        if v not in nxt:
            return {"kind": "broken_cycle", "vertex": v, "reason": "vertex not visited"}
    if len(arcs) != n_vertices:
        return {"kind": "broken_cycle", "vertex": None, "reason": "wrong arc count"}
    steps, v = 0, 0
    while True:
        v = nxt[v]
        steps += 1
        if v == 0:
            break
    if steps != n_vertices:
        return {"kind": "broken_cycle", "vertex": 0, "reason": f"closes after {steps} of {n_vertices} vertices"}
    return None


def is_ham_decomposition(d, cycles: Iterable[Iterable[Sequence[int]]]) -> Certificate:
    """Pass iff the cycles partition the arcs of ``d`` into hamiltonian cycles.

    ``d`` needs ``vertex_count`` and ``arcs``; each cycle is an iterable of
    (tail, head) integer pairs.
    """
    all_arcs = {(int(u), int(v)) for u, v in d.arcs}
    owner: dict[tuple[int, int], int] = {}
    cyc_lists = []
    for k, cyc in enumerate(cycles):
        arcs = [(int(u), int(v)) for u, v in cyc]
        cyc_lists.append(arcs)
        for a in arcs:
            if a in owner:
                return _fail("duplicated_arc", arc=list(a), cycles=[owner[a], k])
            if a not in all_arcs:
                return _fail("foreign_arc", arc=list(a), cycle=k)
            owner[a] = k
    missing = sorted(all_arcs - owner.keys())
    if missing:
        return _fail("uncovered_arc", arc=list(missing[0]), count=len(missing))
    for k, arcs in enumerate(cyc_lists):
        problem = _single_cycle_through_all(arcs, d.vertex_count)
        if problem:
            problem["cycle"] = k
            return Certificate(False, problem)
    return Certificate(True)


# --------------------------------------------------------- twined factorizations


def _images(p) -> list[int]:
    return list(p.images) if hasattr(p, "images") else list(p["images"])


def _mul(a: list[int], b: list[int]) -> list[int]:
    return [b[x] for x in a]


def _orbit_count(p: list[int]) -> int:
    seen = bytearray(len(p))
    count = 0
    for s in range(len(p)):
        if seen[s]:
            continue
        count += 1
        x = s
        while not seen[x]:
            seen[x] = 1
            x = p[x]
    return count


def _hat(p: list[int]) -> list[int]:
    top = len(p) - 1
    out = p[:]
    target = p[top]
    src = p.index(top)
    out[src] = target
    out[top] = top
    return out


def _kind_witness(perms: list[list[int]], want_truncated: bool) -> str | None:
    prod = perms[0]
    for q in perms[1:]:
        prod = _mul(prod, q)
    if not want_truncated:
        t = _orbit_count(prod)
        return None if t == 1 else f"product has {t} cycles, expected 1"
    top = len(perms[0]) - 1
    if any(q[top] == top for q in perms):
        return "coordinate fixes the apex"
    hat = _hat(perms[0])
    for q in perms[1:]:
        hat = _mul(hat, _hat(q))
    t = _orbit_count(hat)
    return None if t == 2 else f"truncated product has {t} cycles, expected 2"


def is_c_twined(tf) -> Certificate:
    """Accepts a TwinedFactorization or its JSON dict."""
    data = tf.to_json() if hasattr(tf, "to_json") else tf
    n, m, c = int(data["n"]), int(data["m"]), int(data["c"])
    d_t = [[_images(p) for p in f["perms"]] for f in data["D_T"]]
    d_h = [[_images(p) for p in f["perms"]] for f in data["D_H"]]
    if not 0 <= c <= m - 2:
        return _fail("range", c=c, m=m)
    if len(d_t) != c or len(d_h) != m - c:
        return _fail("counts", truncated=len(d_t), hamiltonian=len(d_h), c=c, m=m)
    rows = d_t + d_h
    for idx, f in enumerate(rows):
        if len(f) != n or any(sorted(p) != list(range(m)) for p in f):
            return _fail("shape", tuple=idx)
    for pos in range(n):
        for j in range(m):
            hits: dict[int, int] = {}
            for idx, f in enumerate(rows):
                x = f[pos][j]
                if x in hits:
                    return _fail("not_regular", position=pos, point=j, tuples=[hits[x], idx])
                hits[x] = idx
    for idx, f in enumerate(d_t):
        why = _kind_witness(f, True)
        if why:
            return _fail("wrong_kind", set="D_T", tuple=idx, reason=why)
    for idx, f in enumerate(d_h):
        why = _kind_witness(f, False)
        if why:
            return _fail("wrong_kind", set="D_H", tuple=idx, reason=why)
    return Certificate(True)


def is_regular_set(perms: Sequence) -> Certificate:
    rows = [_images(p) for p in perms]
    m = len(rows[0]) if rows else 0
    if len(rows) != m:
        return _fail("size", members=len(rows), m=m)
    for j in range(m):
        hits: dict[int, int] = {}
        for k, p in enumerate(rows):
            if p[j] in hits:
                return _fail("not_regular", point=j, members=[hits[p[j]], k])
            hits[p[j]] = k
    return Certificate(True)


# ---------------------------------------------------------------- searches

FOUND = "found"
PROVEN_NONE = "proven-none"
INCONCLUSIVE = "none-within-budget"


@dataclass
class SearchResult:
    status: str
    nodes: int
    cover: list[list[tuple[int, int]]] | None = None
    factorization: Any = None
    note: str = ""
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"status": self.status, "nodes": self.nodes, "note": self.note}
        if self.cover is not None:
            out["cover"] = [[list(a) for a in cyc] for cyc in self.cover]
        if self.factorization is not None:
            out["factorization"] = self.factorization.to_json()
        return out


class _Budget(Exception):
    pass


def search_ham_decomposition(d, budget: int | None = 5_000_000) -> SearchResult:
    """Exhaustive search for a hamiltonian decomposition of ``d``.

    Each vertex sends one out-arc to each of r color classes (r = uniform
    out-degree).  Colors are interchangeable, so the out-arcs of vertex 0 get
    colors 0..r-1 in head order; after that every bijection is tried.  A
    color may only close a cycle once it spans every vertex.
    """
    nv = d.vertex_count
    outs = [sorted(v for u, v in d.arcs if u == x) for x in range(nv)]
    ins = [0] * nv
    for _, v in d.arcs:
        ins[v] += 1
    r = len(outs[0]) if nv else 0
    if nv == 0 or r == 0:
        return SearchResult(PROVEN_NONE, 0, note="no arcs")
    if any(len(o) != r for o in outs) or any(x != r for x in ins):
        return SearchResult(PROVEN_NONE, 0, note="degrees are not uniform")

    succ = [[-1] * nv for _ in range(r)]
    pred = [[-1] * nv for _ in range(r)]
    nodes = 0

    def closes_short(col: int, u: int, w: int) -> bool:
        # follow col from w; reaching u means u -> w closes a cycle
        length, x = 1, w
        while x != -1:
            if x == u:
                return length < nv
            x = succ[col][x]
            length += 1
        return False

    def place(v: int) -> bool:
        nonlocal nodes
        if v == nv:
            return True
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        orders = [tuple(range(r))] if v == 0 else itertools.permutations(range(r))
        for colors in orders:
            placed = []
            ok = True
            for w, col in zip(outs[v], colors):
                if pred[col][w] != -1 or closes_short(col, v, w):
                    ok = False
                    break
                succ[col][v] = w
                pred[col][w] = v
                placed.append((col, w))
            if ok and place(v + 1):
                return True
            for col, w in placed:
                succ[col][v] = -1
                pred[col][w] = -1
        return False

    try:
        found = place(0)
    except _Budget:
        return SearchResult(INCONCLUSIVE, nodes, note=f"budget of {budget} nodes exhausted")
    if not found:
        return SearchResult(PROVEN_NONE, nodes, note="search tree exhausted")
    cover = [[(u, succ[col][u]) for u in range(nv)] for col in range(r)]
    return SearchResult(FOUND, nodes, cover=cover)


RESTRICTED_NOTE = (
    "restricted family only: R1 = alpha * B1, R2 = B2 with B1, B2 drawn from the cyclic "
    "group Pi_m and (odd m >= 5) the set F_m, alpha over S_m (alpha(0) = 0 when B1 = Pi_m), "
    "all bijections R1 -> R2; no claim outside this family"
)


def search_twined(m: int, c: int, budget: int | None = 2_000_000) -> SearchResult:
    """Search 2-factorizations of C_2 wr K̄_m with exactly c truncated
    hamiltonian pairs inside a restricted family of regular-set pairs."""
    from .perm import Permutation, f_set
    from .twined import FactorTuple, TwinedFactorization

    if m < 3 or not 0 <= c <= m - 2:
        return SearchResult(PROVEN_NONE, 0, note=f"c={c} outside [0, m-2]")
    bases = [("Pi", [[(j + i) % m for j in range(m)] for i in range(m)])]
    if m % 2 and m >= 5:
        bases.append(("F", [list(p.images) for p in f_set(m)]))
    nodes = 0

    def classify(a, b):
        return _kind_witness([a, b], False) is None, _kind_witness([a, b], True) is None

    def match(flags, row, used, need_t, chosen):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        if row == m:
            return need_t == 0
        for col in range(m):
            if used[col]:
                continue
            h, t = flags[row][col]
            for as_t in (True, False):
                if (as_t and not t) or (not as_t and not h):
                    continue
                nt = need_t - as_t
                if not 0 <= nt <= m - row - 1:
                    continue
                used[col] = True
                chosen.append((col, as_t))
                if match(flags, row + 1, used, nt, chosen):
                    return True
                chosen.pop()
                used[col] = False
        return False

    try:
        for name1, b1 in bases:
            for name2, b2 in bases:
                alphas = (
                    ([0, *tail] for tail in itertools.permutations(range(1, m)))
                    if name1 == "Pi"
                    else (list(p) for p in itertools.permutations(range(m)))
                )
                for alpha in alphas:
                    r1 = [_mul(alpha, p) for p in b1]
                    flags = [[classify(a, b) for b in b2] for a in r1]
                    chosen: list = []
                    if not match(flags, 0, [False] * m, c, chosen):
                        continue
                    d_t, d_h = [], []
                    for row, (col, as_t) in enumerate(chosen):
                        f = FactorTuple((Permutation(tuple(r1[row])), Permutation(tuple(b2[col]))))
                        (d_t if as_t else d_h).append(f)
                    tf = TwinedFactorization(2, m, c, d_t, d_h)
                    return SearchResult(FOUND, nodes, factorization=tf, note=RESTRICTED_NOTE,
                                        extra={"alpha": alpha, "bases": [name1, name2]})
    except _Budget:
        return SearchResult(INCONCLUSIVE, nodes, note=RESTRICTED_NOTE)
    return SearchResult(PROVEN_NONE, nodes, note=RESTRICTED_NOTE)

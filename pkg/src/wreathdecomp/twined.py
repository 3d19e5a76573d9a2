"""
c-twined 2-factorizations of C_n wr K̄_m.

A factorization is a list of m n-tuples of permutations of Z_m.  Position p
of every tuple, read down the list, is a regular set; c tuples are
truncated hamiltonian and the other m - c are hamiltonian.

Base factorizations (n = 2) come from closed-form pair recipes over two
regular sets R1, R2.  Several recipes list fewer than m pairs; the gaps are
filled by :func:`complete_partial`, which searches bijections between the
unused members and keeps the first one that certifies.
"""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .perm import (
    Permutation,
    compose,
    cycle_count,
    f_set,
    from_cycles,
    gamma,
    pi,
    product,
    transposition,
    truncate,
)
from .regset import RegularSet, cyclic_set, is_regular, left_mul

log = logging.getLogger(__name__)

MAX_UNUSED = 6


class TwinedError(ValueError):
    pass


class OpenCaseError(TwinedError):
    """Raised for (m even, c odd), for which no construction is known."""


class OutOfScopeError(TwinedError):
    """Raised for inputs handled by constructions this package does not carry."""


@dataclass(frozen=True)
class FactorTuple:
    perms: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(self.perms))
        if len(self.perms) < 2:
            raise TwinedError("a factor tuple needs at least 2 permutations")
        if len({p.m for p in self.perms}) != 1:
            raise TwinedError("factor tuple mixes permutation orders")

    @property
    def n(self) -> int:
        return len(self.perms)

    @property
    def m(self) -> int:
        return self.perms[0].m

    def product(self) -> Permutation:
        return product(self.perms)

    def truncated_product(self) -> Permutation:
        return product(truncate(p) for p in self.perms)

    def to_json(self) -> dict:
        return {"perms": [p.to_json() for p in self.perms]}

    @classmethod
    def from_json(cls, data: dict) -> "FactorTuple":
        return cls(tuple(Permutation.from_json(p) for p in data["perms"]))


class TupleKind(enum.Enum):
    HAMILTONIAN = "Hamiltonian"
    TRUNCATED_HAMILTONIAN = "TruncatedHamiltonian"
    OTHER = "Other"


def is_hamiltonian(f: FactorTuple) -> bool:
    return cycle_count(f.product()) == 1


def is_truncated_hamiltonian(f: FactorTuple) -> bool:
    if any(p.is_stabilizer() for p in f.perms):
        return False
    return cycle_count(f.truncated_product()) == 2


def tuple_kind(f: FactorTuple) -> TupleKind:
    # only odd-length tuples can pass both tests; hamiltonian is reported first
    if is_hamiltonian(f):
        return TupleKind.HAMILTONIAN
    if is_truncated_hamiltonian(f):
        return TupleKind.TRUNCATED_HAMILTONIAN
    return TupleKind.OTHER


@dataclass(frozen=True)
class TwinedFactorization:
    n: int
    m: int
    c: int
    d_t: tuple[FactorTuple, ...]
    d_h: tuple[FactorTuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "d_t", tuple(self.d_t))
        object.__setattr__(self, "d_h", tuple(self.d_h))

    @property
    def tuples(self) -> tuple[FactorTuple, ...]:
        return self.d_t + self.d_h

    def column(self, p: int) -> list[Permutation]:
        return [f.perms[p] for f in self.tuples]

    def problems(self) -> list[str]:
        """Every violated invariant, as readable strings (empty when valid)."""
        out = []
        if not 0 <= self.c <= self.m - 2:
            out.append(f"c={self.c} outside [0, m-2]")
        if len(self.d_t) != self.c:
            out.append(f"{len(self.d_t)} truncated tuples, expected {self.c}")
        if len(self.d_h) != self.m - self.c:
            out.append(f"{len(self.d_h)} hamiltonian tuples, expected {self.m - self.c}")
        for f in self.tuples:
            if f.n != self.n or f.m != self.m:
                out.append("tuple shape does not match (n, m)")
                return out
        for p in range(self.n):
            ok, witness = is_regular(self.column(p))
            if not ok:
                out.append(f"column {p} not regular (witness {witness})")
        for idx, f in enumerate(self.d_t):
            if not is_truncated_hamiltonian(f):
                out.append(f"D_T[{idx}] is not truncated hamiltonian")
        for idx, f in enumerate(self.d_h):
            if not is_hamiltonian(f):
                out.append(f"D_H[{idx}] is not hamiltonian")
        return out

    def check(self) -> "TwinedFactorization":
        bad = self.problems()
        if bad:
            raise TwinedError("; ".join(bad))
        return self

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "c": self.c,
            "D_T": [f.to_json() for f in self.d_t],
            "D_H": [f.to_json() for f in self.d_h],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TwinedFactorization":
        return cls(
            n=int(data["n"]),
            m=int(data["m"]),
            c=int(data["c"]),
            d_t=tuple(FactorTuple.from_json(f) for f in data["D_T"]),
            d_h=tuple(FactorTuple.from_json(f) for f in data["D_H"]),
        )


@dataclass(frozen=True)
class RecipeContext:
    m: int
    c: int
    t: int
    index_set: tuple[int, ...]
    chosen: tuple[int, ...]
    name: str
    k: int | None = None

    def __post_init__(self):
        if len(self.chosen) != self.t or not set(self.chosen) <= set(self.index_set):
            raise TwinedError(f"inconsistent recipe context: t={self.t}, M_t={self.chosen}")


@dataclass
class Recipe:
    """Index pairs (a, b) meaning the tuple (r1[a], r2[b])."""

    r1: RegularSet
    r2: RegularSet
    d_t: list[tuple[int, int]]
    d_h: list[tuple[int, int]]
    context: RecipeContext
    notes: list[str] = field(default_factory=list)

    def labeled_pairs(self) -> list[tuple[int, int, TupleKind]]:
        return [(a, b, TupleKind.TRUNCATED_HAMILTONIAN) for a, b in self.d_t] + [
            (a, b, TupleKind.HAMILTONIAN) for a, b in self.d_h
        ]


def _norm(m: int, pairs: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(a % m, b % m) for a, b in pairs]


def _first(index_set: Sequence[int], t: int) -> tuple[int, ...]:
    return tuple(index_set[: min(t, len(index_set))])


def _context(m, c, t, index_set, name, odd=True) -> RecipeContext:
    index_set = tuple(index_set)
    chosen = _first(index_set, t)
    return RecipeContext(
        m=m, c=c, t=len(chosen), index_set=index_set, chosen=chosen, name=name,
        k=(m - 1) // 2 if odd else None,
    )


def _left_set(prefix: Permutation, base: RegularSet) -> RegularSet:
    return left_mul(prefix, base)


# ---------------------------------------------------------------- even m


def recipe_even_even(m: int, c: int) -> Recipe:
    if m < 4 or m % 2 or c % 2 or not 2 <= c <= m - 2:
        raise TwinedError(f"even-m recipe needs even m >= 4 and even c in [2, m-2], got m={m}, c={c}")
    cyc = cyclic_set(m)
    if c == m - 2:
        r1 = _left_set(transposition(m, 0, m - 1), cyc)
        d_t = [(i, m - i - 1) for i in range(m) if i not in (0, m - 2, m - 1)] + [(0, 1)]
        d_h = [(m - 1, m - 1), (m - 2, 0)]
        ctx = _context(m, c, 0, (), "even m, c = m-2", odd=False)
        return Recipe(r1, cyc, _norm(m, d_t), _norm(m, d_h), ctx)
    r1 = _left_set(transposition(m, 1, m - 2), cyc)
    t = c // 2
    index_set = list(range(3, m - 2, 2))
    ctx = _context(m, c, t, index_set, "even m, 2 <= c <= m-4", odd=False)
    d_t, d_h = [], []
    for i in index_set:
        if i in ctx.chosen:
            d_t += [(i, m - i + 1), (i + 1, m - i - 2)]
        else:
            d_h += [(i, m - i - 2), (i + 1, m - i + 1)]
    d_h += [(0, 2), (m - 1, m - 1)]
    return Recipe(r1, cyc, _norm(m, d_t), _norm(m, d_h), ctx)


# ----------------------------------------------------------- odd m, even c


def _shifted_pair_sets(m: int) -> tuple[RegularSet, RegularSet]:
    base = RegularSet(f_set(m))
    return _left_set(gamma(m, 1), base), _left_set(gamma(m, -1), base)


def _mod4_blocks(chosen, index_set, a_t, b_t, a_h, b_h):
    """Shared pair pattern over I = {i = 1, 2 mod 4}: chosen indices give
    truncated pairs, the rest hamiltonian pairs."""
    d_t, d_h = [], []
    for i in index_set:
        target = d_t if i in chosen else d_h
        pats = (a_t, b_t) if i in chosen else (a_h, b_h)
        target += pats[0 if i % 4 == 1 else 1](i)
    return d_t, d_h


def recipe_odd_even(m: int, c: int) -> Recipe:
    if m < 5 or m % 2 == 0 or c % 2 or not 2 <= c <= m - 3:
        raise TwinedError(f"odd-m even-c recipe needs odd m >= 5 and even c in [2, m-3], got m={m}, c={c}")
    if m % 4 == 1:
        base = RegularSet(f_set(m))
        t = (c - 2) // 2
        index_set = [i for i in range(1, m - 6) if i % 4 in (1, 2)]
        ctx = _context(m, c, t, index_set, "m = 1 mod 4, even c")
        d_t, d_h = _mod4_blocks(
            ctx.chosen, index_set,
            lambda i: [(i, m - i - 2), (i + 3, m - i - 3)],
            lambda i: [(i, m - i), (i + 1, m - i - 3)],
            lambda i: [(i, m - i - 3), (i + 3, m - i - 2)],
            lambda i: [(i, m - i - 3), (i + 1, m - i)],
        )
        d_t = [(m - 2, 2), (m - 3, 3)] + d_t
        d_h = [(0, m - 1), (m - 1, 0), (m - 4, 1)] + d_h
        return Recipe(base, base, _norm(m, d_t), _norm(m, d_h), ctx)
    r1, r2 = _shifted_pair_sets(m)
    if m % 12 in (7, 11):
        t = c // 2
        index_set = [i for i in range(1, m - 2) if i % 4 in (1, 2)]
        ctx = _context(m, c, t, index_set, "m = 7, 11 mod 12, even c")
        d_t, d_h = _mod4_blocks(
            ctx.chosen, index_set,
            lambda i: [(i, m - i - 2), (i + 3, m - i - 3)],
            lambda i: [(i, m - i), (i + 1, m - i - 3)],
            lambda i: [(i, m - i - 3), (i + 3, m - i - 2)],
            lambda i: [(i, m - i - 3), (i + 1, m - i)],
        )
        d_h = [(0, 1), (m - 2, 0), (m - 1, m - 1)] + d_h
        return Recipe(r1, r2, _norm(m, d_t), _norm(m, d_h), ctx)
    # m = 3 mod 12
    if m < 15:
        raise TwinedError(f"no even-c recipe for m={m}")
    t = (c - 2) // 2
    index_set = list(range(3, m - 3, 2))
    ctx = _context(m, c, t, index_set, "m = 3 mod 12, even c")
    d_t = [(1, 2), (2, 1)]
    for i in ctx.chosen:
        d_t += [(i, m - i), (i + 1, m - i + 1)]
    d_h = [(0, m - 1), (m - 1, 0)]
    d_h += [(i, m - i + 1) for i in range(3, m - 1) if i not in ctx.chosen and i - 1 not in ctx.chosen]
    return Recipe(r1, r2, _norm(m, d_t), _norm(m, d_h), ctx)


# ------------------------------------------------------------ odd m, odd c


def _odd_low_range(m: int) -> tuple[int, int] | None:
    """c-range of the low-range odd-c recipe for m, if any."""
    if m % 4 == 1:
        return 3, (m + 1) // 2
    if m % 8 == 3:
        return 3, (m - 5) // 2
    return 3, (m - 1) // 2


def _odd_high_range(m: int) -> tuple[int, int] | None:
    if m % 6 == 1:
        return (m + 2) // 3, m - 2
    if m % 6 == 3:
        return (m // 3 + 4, m - 2) if m >= 9 else None
    return ((m + 1) // 3 + 5, m - 2) if m >= 11 else None


def _odd_low(m: int, c: int) -> Recipe:
    base = RegularSet(f_set(m))
    t = (c - 3) // 2
    if m % 4 == 1:
        r1 = _left_set(transposition(m, 1, m - 1), base)
        index_set = [i for i in range(3, m - 5) if i % 4 == 3]
        ctx = _context(m, c, t, index_set, "m = 1 mod 4, low odd c")
        chosen = set(ctx.chosen)
        d_t = [(0, 1), (m - 2, m - 2), (m - 1, m - 1)]
        for i in ctx.chosen:
            d_t += [(i, m - i - 3), (i + 3, m - i - 2)]
        d_h = [(2, 0)]
        d_h += [(i, m - i - 2) for i in range(1, m - 3, 2) if i not in chosen]
        d_h += [(i, m - i) for i in range(4, m - 2, 2) if i not in chosen and i - 3 not in chosen]
        return Recipe(r1, base, _norm(m, d_t), _norm(m, d_h), ctx)
    r1 = _left_set(transposition(m, 0, m - 1), base)
    top = m - 13 if m % 8 == 3 else m - 7
    index_set = [i for i in range(5, top + 1) if i % 8 in (5, 6)]
    ctx = _context(m, c, t, index_set, f"m = {m % 8} mod 8, low odd c")
    chosen = set(ctx.chosen)
    d_t = [(m - 2, m - 2), (m - 1, m - 1), (0, 1)]
    for i in ctx.chosen:
        if i % 8 == 5:
            d_t += [(i, m - i - 5), (i + 5, m - i - 2)]
        else:
            d_t += [(i, m - i - 5), (i + 3, m - i)]
    d_h = [(2, 0)]
    d_h += [(i, m - i - 2) for i in range(1, m - 3, 2) if i not in chosen and i - 3 not in chosen]
    d_h += [(i, m - i) for i in range(4, m - 2, 2) if i not in chosen and i - 5 not in chosen]
    return Recipe(r1, base, _norm(m, d_t), _norm(m, d_h), ctx)


def _odd_high(m: int, c: int) -> Recipe:
    base = RegularSet(f_set(m))
    if m % 6 == 1:
        r1 = _left_set(from_cycles(m, [(m - 1, 1, 2, 3)]), base)
        t = (c - (m + 2) // 3) // 2
        index_set = [i for i in range(4, m - 2) if i % 6 in (0, 4)]
        ctx = _context(m, c, t, index_set, "m = 1 mod 6, high odd c")
        chosen = set(ctx.chosen)
        d_t = [(m - 1, m - 1), (0, 1)]
        for i in ctx.chosen:
            d_t += [(i, m - i + 1), (i + 1, m - i)]
        d_t += [(i, m - i + 1) for i in range(3, m - 3) if i % 6 in (2, 3)]
        d_h = [(1, 2), (2, 0)]
        d_h += [(i, m - i) for i in index_set if i not in chosen]
        d_h += [(i, m - i + 2) for i in range(5, m - 1) if i % 6 in (1, 5) and i - 1 not in chosen]
        return Recipe(r1, base, _norm(m, d_t), _norm(m, d_h), ctx)
    r1 = _left_set(from_cycles(m, [(1, 2, 3, 4)]), base)
    if m % 6 == 3:
        t = (c - (m // 3 + 4)) // 2
        index_set = [i for i in range(3, m - 9) if i % 6 in (3, 5)]
        name = "m = 3 mod 6, high odd c"
        h_residues, h_lo, h_hi = (0, 3, 4, 5), 3, m - 9
    else:
        t = (c - ((m + 1) // 3 + 5)) // 2
        index_set = [i for i in range(4, m - 12) if i % 6 in (0, 4)]
        name = "m = 5 mod 6, high odd c"
        h_residues, h_lo, h_hi = (0, 1, 4, 5), 1, m - 11
    ctx = _context(m, c, t, index_set, name)
    chosen = set(ctx.chosen)
    if m % 6 == 3:
        # forced blocks start at odd i = 1 mod 6 up to m-14, then m-8 and m-6
        starts = [i for i in range(1, m - 13) if i % 6 == 1] + [m - 8, m - 6]
    else:
        starts = [i for i in range(2, m - 14) if i % 6 == 2] + [m - 10, m - 8, m - 6]
    starts = [i for i in starts if i >= 1]
    starts += list(ctx.chosen)
    d_t = [(m - 4, m - 4), (m - 2, m - 1), (m - 1, m - 2)]
    for i in starts:
        d_t += [(i, m - i - 5), (i + 1, m - i - 4)]
    d_h = [(m - 3, 0), (0, m - 3)]
    d_h += [
        (i, m - i - 4)
        for i in range(h_lo, h_hi + 1)
        if i % 6 in h_residues and i not in chosen and i - 1 not in chosen
    ]
    return Recipe(r1, base, _norm(m, d_t), _norm(m, d_h), ctx)


def _eleven(c: int) -> Recipe:
    m = 11
    base = RegularSet(f_set(m))
    if c == 5:
        r2 = _left_set(transposition(m, 0, 10), base)
        d_t = [(1, 0), (5, 1), (8, 6), (9, 9), (10, 10)]
        d_h = [(2, 7), (3, 8), (4, 5), (6, 3), (7, 4), (0, 2)]
        ctx = _context(m, c, 0, (), "m = 11, c = 5 table")
        return Recipe(base, r2, d_t, d_h, ctx)
    r1 = _left_set(from_cycles(m, [(10, 1, 2, 3, 4, 5)]), base)
    d_t = [(2, 6), (3, 1), (5, 9), (6, 8), (7, 7), (9, 5), (10, 10)]
    d_h = [(1, 4), (4, 0), (8, 3), (0, 2)]
    ctx = _context(m, c, 0, (), "m = 11, c = 7 table")
    return Recipe(r1, base, d_t, d_h, ctx)


def recipe_odd_odd(m: int, c: int) -> Recipe:
    if m < 5 or m % 2 == 0 or c % 2 == 0 or not 3 <= c <= m - 2:
        raise TwinedError(f"odd-m odd-c recipe needs odd m >= 5 and odd c in [3, m-2], got m={m}, c={c}")
    if m == 11 and c in (5, 7):
        return _eleven(c)
    low = _odd_low_range(m)
    if low and low[0] <= c <= low[1]:
        return _odd_low(m, c)
    high = _odd_high_range(m)
    if high and high[0] <= c <= high[1]:
        return _odd_high(m, c)
    raise TwinedError(f"internal error: no odd-c recipe covers m={m}, c={c}")


# --------------------------------------------------------------- completion


def _split_labels(flags, want_truncated):
    """Label completion tuples so exactly ``want_truncated`` are truncated.

    ``flags`` holds (is_hamiltonian, is_truncated) per tuple; returns a list of
    booleans (True = truncated) or None when no labeling exists.
    """
    if any(not h and not t for h, t in flags):
        return None
    only_t = [k for k, (h, t) in enumerate(flags) if t and not h]
    both = [k for k, (h, t) in enumerate(flags) if h and t]
    extra = want_truncated - len(only_t)
    if not 0 <= extra <= len(both):
        return None
    truncated = set(only_t) | set(both[:extra])
    return [k in truncated for k in range(len(flags))]


def complete_partial(
    pairs: Sequence[tuple[int, int]] | Sequence[tuple[int, int, TupleKind]],
    r1: RegularSet,
    r2: RegularSet,
    c: int,
) -> TwinedFactorization:
    """Finish a partial pair list into a certified c-twined factorization.

    Each pair ``(a, b)`` stands for the tuple ``(r1[a], r2[b])`` and may carry
    a TupleKind label as a third entry; unlabeled pairs are classified.
    Unused members are matched by trying bijections in lexicographic order.
    """
    m = r1.m
    labeled = [(e[0] % m, e[1] % m, e[2] if len(e) > 2 else None) for e in pairs]
    firsts = [a for a, _, _ in labeled]
    seconds = [b for _, b, _ in labeled]
    unused1 = [a for a in range(m) if a not in set(firsts)]
    unused2 = [b for b in range(m) if b not in set(seconds)]
    if len(unused1) != len(unused2):
        raise TwinedError("recipe completion failed: unequal unused counts")
    if len(set(firsts)) != len(firsts) or len(set(seconds)) != len(seconds):
        raise TwinedError("recipe completion failed: pair list reuses a member")
    if len(unused1) > MAX_UNUSED:
        raise TwinedError(
            f"recipe completion failed: {len(unused1)} unused members exceeds {MAX_UNUSED}"
        )

    d_t, d_h, free = [], [], []
    for a, b, kind in labeled:
        f = FactorTuple((r1[a], r2[b]))
        if kind is TupleKind.TRUNCATED_HAMILTONIAN and is_truncated_hamiltonian(f):
            d_t.append(f)
        elif kind is TupleKind.HAMILTONIAN and is_hamiltonian(f):
            d_h.append(f)
        elif kind is None:
            free.append(f)
        else:
            raise TwinedError(f"recipe completion failed: pair ({a}, {b}) is not {kind.value}")
    if len(d_t) > c or len(d_h) > m - c:
        raise TwinedError("recipe completion failed: listed pairs exceed the target counts")

    if unused1:
        log.info("completing %d unused members for m=%d, c=%d", len(unused1), m, c)
    for perm in itertools.permutations(unused2):
        tuples = free + [FactorTuple((r1[a], r2[b])) for a, b in zip(unused1, perm)]
        flags = [(is_hamiltonian(f), is_truncated_hamiltonian(f)) for f in tuples]
        labels = _split_labels(flags, c - len(d_t))
        if labels is None:
            continue
        if unused1:
            log.info("completion pairs for m=%d, c=%d: %s", m, c, list(zip(unused1, perm)))
        extra_t = [f for f, is_t in zip(tuples, labels) if is_t]
        extra_h = [f for f, is_t in zip(tuples, labels) if not is_t]
        return TwinedFactorization(2, m, c, d_t + extra_t, d_h + extra_h).check()
    raise TwinedError(f"recipe completion failed for m={m}, c={c}: unused {unused1} x {unused2}")


def _sanitize(recipe: Recipe) -> list[tuple[int, int, TupleKind]]:
    """Drop listed pairs that reuse a member or fail their own label."""
    kept, seen1, seen2 = [], set(), set()
    for a, b, kind in recipe.labeled_pairs():
        f = FactorTuple((recipe.r1[a], recipe.r2[b]))
        good = is_truncated_hamiltonian(f) if kind is TupleKind.TRUNCATED_HAMILTONIAN else is_hamiltonian(f)
        if a in seen1 or b in seen2 or not good:
            log.info("dropping defective recipe pair (%d, %d) for %s", a, b, recipe.context.name)
            continue
        seen1.add(a)
        seen2.add(b)
        kept.append((a, b, kind))
    return kept


def repair_and_complete(recipe: Recipe, c: int) -> TwinedFactorization:
    """Complete a recipe, releasing a few listed pairs when its counts are off.

    Release candidates avoid pairs with an (m-1)-stabilizer, which can only
    ever be hamiltonian.  Smaller releases are tried first, so the result is
    deterministic.
    """
    m = recipe.r1.m
    kept = _sanitize(recipe)
    n_t = sum(k is TupleKind.TRUNCATED_HAMILTONIAN for _, _, k in kept)
    n_h = len(kept) - n_t
    must_t, must_h = max(0, n_t - c), max(0, n_h - (m - c))
    unused = m - len(kept)

    def movable(e):
        return not (recipe.r1[e[0]].is_stabilizer() or recipe.r2[e[1]].is_stabilizer())

    t_pool = [e for e in kept if e[2] is TupleKind.TRUNCATED_HAMILTONIAN and movable(e)]
    h_pool = [e for e in kept if e[2] is TupleKind.HAMILTONIAN and movable(e)]
    last_error = None
    for extra in range(0, MAX_UNUSED - unused - must_t - must_h + 1):
        for extra_t in range(extra + 1):
            extra_h = extra - extra_t
            for rel_t in itertools.combinations(t_pool, must_t + extra_t):
                for rel_h in itertools.combinations(h_pool, must_h + extra_h):
                    released = set(rel_t) | set(rel_h)
                    pairs = [e for e in kept if e not in released]
                    try:
                        tf = complete_partial(pairs, recipe.r1, recipe.r2, c)
                    except TwinedError as exc:
                        last_error = exc
                        continue
                    if released:
                        log.info("released %s before completion for m=%d, c=%d", sorted(released), m, c)
                    return tf
    raise TwinedError(f"recipe completion failed for m={m}, c={c}: {last_error}")


# ----------------------------------------------------------------- dispatch


def select_recipe(m: int, c: int) -> Recipe:
    if not 0 <= c <= m - 2:
        raise TwinedError(f"c={c} outside [0, m-2] for m={m}")
    if m % 2 == 0:
        if c % 2:
            raise OpenCaseError(f"open case, not constructible: m={m} even and c={c} odd")
        return recipe_even_even(m, c)
    if c % 2 == 0:
        return recipe_odd_even(m, c)
    return recipe_odd_odd(m, c)


def construct_base(m: int, c: int) -> TwinedFactorization:
    """A certified c-twined 2-factorization of C_2 wr K̄_m."""
    if m < 4:
        raise TwinedError(f"m={m} too small, need m >= 4")
    if not 0 <= c <= m - 2:
        raise TwinedError(f"c={c} outside [0, m-2] for m={m}")
    if m % 2 == 0 and c % 2:
        raise OpenCaseError(f"open case, not constructible: m={m} even and c={c} odd")
    if c == 0:
        return zero_twined(m, 2)
    if c == 1:
        raise OutOfScopeError("c=1 forces H to be a directed m-cycle; not covered by the twined recipes")
    return repair_and_complete(select_recipe(m, c), c)


def pad(d2: TwinedFactorization, n: int) -> TwinedFactorization:
    """Lengthen a 2-factorization to even n by prefixing identity-product pairs."""
    if d2.n != 2:
        raise TwinedError("pad expects a factorization with n = 2")
    if n % 2 or n < 2:
        raise TwinedError(f"n={n} must be even")
    if n == 2:
        return d2
    m = d2.m
    reps = (n - 2) // 2

    def lengthen(i: int, f: FactorTuple) -> FactorTuple:
        prefix = (pi(m, i + 1), pi(m, -i - 1)) * reps
        return FactorTuple(prefix + f.perms)

    tuples = d2.tuples
    padded = [lengthen(i, f) for i, f in enumerate(tuples)]
    c = len(d2.d_t)
    return TwinedFactorization(n, m, d2.c, padded[:c], padded[c:]).check()


def zero_twined(m: int, n: int) -> TwinedFactorization:
    """A 0-twined factorization: every tuple multiplies out to pi_1."""
    if m < 2:
        raise TwinedError("m must be at least 2")
    if n % 2:
        raise TwinedError("odd-n construction out of scope")
    if n < 2:
        raise TwinedError("n must be at least 2")
    tuples = []
    for i in range(m):
        perms = [pi(m, i), pi(m, -i)] * ((n - 2) // 2) + [pi(m, i), pi(m, 1 - i)]
        tuples.append(FactorTuple(tuple(perms)))
    return TwinedFactorization(n, m, 0, (), tuples).check()

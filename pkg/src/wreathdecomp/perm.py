"""
Permutations of Z_m and the three families used by the constructions.

Permutations act on the right: ``j^(ab) = (j^a)^b``, so ``a * b`` means
"apply ``a`` first, then ``b``".  Cycles are written with commas,
``(0,3,4,1,2)``.

Families:

* ``pi(m, i)``      -- powers of the full cycle (0,1,...,m-1)
* ``gamma(m, i)``   -- powers of (0,1,...,m-2)(m-1), fixing m-1 (odd m)
* ``f_set(m)``      -- a regular set of m permutations for odd m >= 5
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class PermutationError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        m = len(images)
        if m < 2:
            raise PermutationError("permutation order must be at least 2")
        if sorted(images) != list(range(m)):
            raise PermutationError(f"not a bijection of Z_{m}: {list(images)}")

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = identity(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for j, x in enumerate(self.images):
            inv[x] = j
        return Permutation(tuple(inv))

    def fixes(self, j: int) -> bool:
        return self.images[j] == j

    def is_stabilizer(self) -> bool:
        """True when the permutation fixes the apex symbol m-1."""
        return self.fixes(self.m - 1)

    def cycles(self) -> list[list[int]]:
        return cycle_form(self)

    def cycle_count(self) -> int:
        return cycle_count(self)

    def to_json(self) -> dict:
        return {"m": self.m, "images": list(self.images)}

    @classmethod
    def from_json(cls, data: dict) -> "Permutation":
        perm = cls(tuple(data["images"]))
        if "m" in data and int(data["m"]) != perm.m:
            raise PermutationError(f"declared m={data['m']} but images have length {perm.m}")
        return perm

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)}, m={self.m})"


def identity(m: int) -> Permutation:
    return Permutation(tuple(range(m)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: the result sends j to (j^a)^b."""
    if a.m != b.m:
        raise PermutationError(f"incompatible orders: {a.m} and {b.m}")
    bi = b.images
    return Permutation(tuple(bi[x] for x in a.images))


def product(perms: Iterable[Permutation]) -> Permutation:
    perms = list(perms)
    if not perms:
        raise PermutationError("empty product")
    result = perms[0]
    for p in perms[1:]:
        result = compose(result, p)
    return result


def from_cycles(m: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation from disjoint cycles; unmentioned points are fixed."""
    images = list(range(m))
    seen: set[int] = set()
    for cyc in cycles:
        cyc = [int(x) for x in cyc]
        for x in cyc:
            if not 0 <= x < m:
                raise PermutationError(f"element {x} out of range for m={m}")
            if x in seen:
                raise PermutationError(f"element {x} repeated")
            seen.add(x)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a] = b
    return Permutation(tuple(images))


def transposition(m: int, a: int, b: int) -> Permutation:
    if a == b:
        return identity(m)
    return from_cycles(m, [(a, b)])


def cycle_form(a: Permutation) -> list[list[int]]:
    """Disjoint cycles, each starting at its minimum; moving cycles ordered by
    minimum, fixed points last."""
    seen = [False] * a.m
    moving, fixed = [], []
    for start in range(a.m):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = a.images[j]
        (fixed if len(cyc) == 1 else moving).append(cyc)
    return moving + fixed


def cycle_count(a: Permutation) -> int:
    """Number of cycles in disjoint cycle notation, fixed points included."""
    return len(cycle_form(a))


def format_cycles(a: Permutation) -> str:
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycle_form(a))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, m: int) -> Permutation:
    """Parse comma cycle notation such as ``(0,3,4,1,2)(5)``."""
    stripped = re.sub(r"\s+", "", text)
    if _CYCLE_RE.sub("", stripped):
        raise PermutationError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        try:
            cycles.append([int(x) for x in body.split(",")])
        except ValueError:
            raise PermutationError(f"malformed cycle {body!r}") from None
    return from_cycles(m, cycles)


def truncate(a: Permutation) -> Permutation:
    """``a`` followed by the transposition (m-1, (m-1)^a); fixes m-1."""
    apex = a.m - 1
    target = a(apex)
    if target == apex:
        raise PermutationError("truncation undefined for (m-1)-stabilizer")
    images = list(a.images)
    # the preimage of the apex now lands where the apex used to go
    images[a.inverse()(apex)] = target
    images[apex] = apex
    return Permutation(tuple(images))


def pi(m: int, i: int) -> Permutation:
    """The i-th power of the full cycle (0,1,...,m-1): j -> j+i mod m."""
    if m < 2:
        raise PermutationError("pi requires m >= 2")
    i %= m
    return Permutation(tuple((j + i) % m for j in range(m)))


def _check_odd(m: int) -> None:
    if m < 5 or m % 2 == 0:
        raise PermutationError("G_{m-1} defined for odd m >= 5")


def gamma(m: int, i: int) -> Permutation:
    """The i-th power of (0,1,...,m-2)(m-1) on Z_m, for odd m >= 5."""
    _check_odd(m)
    i %= m - 1
    return Permutation(tuple((s + i) % (m - 1) for s in range(m - 1)) + (m - 1,))


@lru_cache(maxsize=None)
def f_set(m: int) -> tuple[Permutation, ...]:
    """The m-element regular set sigma_0..sigma_{m-1} for odd m >= 5."""
    _check_odd(m)
    k = (m - 1) // 2
    apex = m - 1
    sigmas: list[Permutation] = []
    for i in range(m):
        if i == 0:
            sigmas.append(identity(m))
        elif i == m - 1:
            sigmas.append(_sigma_last(m))
        else:
            if i == m - 3:
                partner = 0
            elif i % 2 == 1:
                partner = (i - 1) // 2 + 2
            else:
                partner = k + i // 2 + 1
            sigmas.append(gamma(m, i) * transposition(m, apex, partner))
    return tuple(sigmas)


def _sigma_last(m: int) -> Permutation:
    k = (m - 1) // 2
    images = [0] * m
    for a in range(m):
        if 3 <= a <= k:
            images[a] = m - a + 1
        elif k + 2 <= a <= m - 2:
            images[a] = m - a + 2
        elif a == 0:
            images[a] = 3
        elif a == 1:
            images[a] = 2
        elif a == 2:
            images[a] = 0
        elif a == k + 1:
            images[a] = m - 1
        else:
            images[a] = 1
    return Permutation(tuple(images))


SHIFTS = (2, 1, 0, -2, -3, -4)

# t -> (gamma exponent offset, partner for odd i, partner for even i);
# partners are functions of (m, k, j)
_SHIFT_TABLE = {
    2: (3, lambda m, k, j: m - j + 1, lambda m, k, j: k - j + 3),
    1: (2, lambda m, k, j: k - j + 2, lambda m, k, j: m - j + 1),
    0: (1, lambda m, k, j: m - j, lambda m, k, j: k - j + 2),
    -2: (-1, lambda m, k, j: m - j - 1, lambda m, k, j: k - j + 1),
    -3: (-2, lambda m, k, j: k - j, lambda m, k, j: m - j - 1),
    -4: (-3, lambda m, k, j: m - j - 2, lambda m, k, j: k - j),
}


def shift_admissible(m: int, i: int, t: int) -> bool:
    target = m - i + t
    return 1 <= i <= m - 2 and t in _SHIFT_TABLE and 1 <= target <= m - 2 and target != m - 3


def sigma_shift(m: int, i: int, t: int) -> Permutation:
    """Closed form for sigma_{m-i+t} as gamma_{-i+t+1} times an apex transposition."""
    _check_odd(m)
    if t not in _SHIFT_TABLE:
        raise PermutationError(f"shift t={t} not in {SHIFTS}")
    if not shift_admissible(m, i, t):
        raise PermutationError("index excluded by shift precondition")
    k = (m - 1) // 2
    offset, odd_partner, even_partner = _SHIFT_TABLE[t]
    if i % 2:
        partner = odd_partner(m, k, (i - 1) // 2)
    else:
        partner = even_partner(m, k, i // 2)
    return gamma(m, -i + offset) * transposition(m, m - 1, partner)

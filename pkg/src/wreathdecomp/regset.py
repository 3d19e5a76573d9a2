"""Regular permutation sets: m permutations whose images of each point differ."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Permutation, PermutationError, compose, f_set, pi


class RegularSetError(ValueError):
    pass


def is_regular(members: Sequence[Permutation]) -> tuple[bool, tuple[int, int, int] | None]:
    """Check regularity; on failure return a witness ``(j, k1, k2)`` with
    ``j^members[k1] == j^members[k2]``."""
    members = list(members)
    if not members:
        raise RegularSetError("empty permutation set")
    m = members[0].m
    if any(p.m != m for p in members):
        raise RegularSetError("mixed orders in permutation set")
    if len(members) != m:
        return False, None
    for j in range(m):
        owner: dict[int, int] = {}
        for k, p in enumerate(members):
            x = p(j)
            if x in owner:
                return False, (j, owner[x], k)
            owner[x] = k
    return True, None


@dataclass(frozen=True)
class RegularSet:
    members: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        ok, witness = is_regular(self.members)
        if not ok:
            raise RegularSetError(f"not a regular permutation set (witness {witness})")

    @classmethod
    def _unchecked(cls, members: Iterable[Permutation]) -> "RegularSet":
        obj = object.__new__(cls)
        object.__setattr__(obj, "members", tuple(members))
        return obj

    @property
    def m(self) -> int:
        return self.members[0].m

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, k: int) -> Permutation:
        return self.members[k % len(self.members)]

    def __iter__(self):
        return iter(self.members)

    def index(self, p: Permutation) -> int:
        return self.members.index(p)

    def to_json(self) -> dict:
        return {"m": self.m, "members": [p.to_json() for p in self.members]}

    @classmethod
    def from_json(cls, data: dict) -> "RegularSet":
        return cls(tuple(Permutation.from_json(p) for p in data["members"]))


def left_mul(mu: Permutation, s: RegularSet) -> RegularSet:
    """The set {mu * sigma : sigma in s}; regular whenever s is."""
    if mu.m != s.m:
        raise PermutationError(f"incompatible orders: {mu.m} and {s.m}")
    return RegularSet(tuple(compose(mu, p) for p in s.members))


def stabilizer_indices(s: RegularSet) -> set[int]:
    return {k for k, p in enumerate(s.members) if p.is_stabilizer()}


def cyclic_set(m: int) -> RegularSet:
    """The cyclic group generated by (0,1,...,m-1), indexed by exponent."""
    return RegularSet(tuple(pi(m, i) for i in range(m)))


def odd_set(m: int) -> RegularSet:
    """The regular set sigma_0..sigma_{m-1} for odd m >= 5."""
    return RegularSet(f_set(m))

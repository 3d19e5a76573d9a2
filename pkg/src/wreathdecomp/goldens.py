"""Published listings used as regression data, with checkers.

Listings are stored as printed (cycles may start anywhere, e.g. at the
apex), so comparisons are made on permutations, and separately the
canonical printing is checked to round-trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .perm import (
    compose,
    cycle_count,
    f_set,
    format_cycles,
    from_cycles,
    gamma,
    parse_cycles,
    pi,
    transposition,
    truncate,
)
from .twined import construct_base

F15_LISTING = {
    0: "",
    1: "(14,2,3,4,5,6,7,8,9,10,11,12,13,0,1)",
    2: "(14,9,11,13,1,3,5,7)(2,4,6,8,10,12,0)",
    3: "(14,3,6,9,12,1,4,7,10,13,2,5,8,11,0)",
    4: "(14,10,0,4,8,12,2,6)(1,5,9,13,3,7,11)",
    5: "(14,4,9,0,5,10,1,6,11,2,7,12,3,8,13)",
    6: "(14,11,3,9,1,7,13,5)(2,8,0,6,12,4,10)",
    7: "(14,5,12)(1,8)(2,9)(3,10)(4,11)(6,13)(0,7)",
    8: "(14,12,6,0,8,2,10,4)(1,9,3,11,5,13,7)",
    9: "(14,6,1,10,5,0,9,4,13,8,3,12,7,2,11)",
    10: "(14,13,9,5,1,11,7,3)(2,12,8,4,0,10,6)",
    11: "(14,7,4,1,12,9,6,3,0,11,8,5,2,13,10)",
    12: "(14,0,12,10,8,6,4,2)(1,13,11,9,7,5,3)",
    13: "(14,8,7,6,5,4,3,2,1,0,13,12,11,10,9)",
    14: "(0,3,13,4,12,5,11,6,10,7,9,8,14,1,2)",
}

# apex partner of sigma_i = gamma_i (14, partner), as listed
F15_PARTNERS = {1: 2, 2: 9, 3: 3, 4: 10, 5: 4, 6: 11, 7: 5, 8: 12, 9: 6, 10: 13, 11: 7, 12: 0, 13: 8}

# gamma_9 is printed with "61" where "6, 1" is meant
GAMMA15_LISTING = {
    0: "",
    1: "(0,1,2,3,4,5,6,7,8,9,10,11,12,13)(14)",
    2: "(0,2,4,6,8,10,12)(1,3,5,7,9,11,13)(14)",
    3: "(0,3,6,9,12,1,4,7,10,13,2,5,8,11)(14)",
    4: "(0,4,8,12,2,6,10)(1,5,9,13,3,7,11)(14)",
    5: "(0,5,10,1,6,11,2,7,12,3,8,13,4,9)(14)",
    6: "(0,6,12,4,10,2,8)(1,7,13,5,11,3,9)(14)",
    7: "(0,7)(1,8)(2,9)(3,10)(4,11)(5,12)(6,13)(14)",
    8: "(0,8,2,10,4,12,6)(1,9,3,11,5,13,7)(14)",
    9: "(0,9,4,13,8,3,12,7,2,11,6,1,10,5)(14)",
    10: "(0,10,6,2,12,8,4)(1,11,7,3,13,9,5)(14)",
    11: "(0,11,8,5,2,13,10,7,4,1,12,9,6,3)(14)",
    12: "(0,12,10,8,6,4,2)(1,13,11,9,7,5,3)(14)",
    13: "(0,13,12,11,10,9,8,7,6,5,4,3,2,1)(14)",
}


@dataclass(frozen=True)
class ElevenTable:
    c: int
    d_t: tuple[tuple[int, int], ...]
    d_h: tuple[tuple[int, int], ...]
    truncated_products: tuple[str, ...]
    hamiltonian_products: tuple[str, ...]


ELEVEN = {
    5: ElevenTable(
        5,
        ((1, 0), (5, 1), (8, 6), (9, 9), (10, 10)),
        ((2, 7), (3, 8), (4, 5), (6, 3), (7, 4), (0, 2)),
        (
            "(1,2,3,4,5,6,7,8,9,0)(10)",
            "(1,7,3,9,5,2,8,4,0,6)(10)",
            "(1,5,6,0,4,8,2,9,3,7)(10)",
            "(1,6,4,2,0,8,9,7,5,3)(10)",
            "(1,0,9,8,7,3,4,5,6,2)(10)",
        ),
        (
            "(10,4,3,2,1,0,9,8,5,7,6)",
            "(10,1,2,3,4,5,6,7,0,8,9)",
            "(10,3,2,1,0,9,8,7,6,4,5)",
            "(10,2,1,0,9,8,7,6,5,4,3)",
            "(10,9,0,1,2,3,8,4,5,6,7)",
            "(10,2,4,6,8,0,7,9,1,3,5)",
        ),
    ),
    7: ElevenTable(
        7,
        ((2, 6), (3, 1), (5, 9), (6, 8), (7, 7), (9, 5), (10, 10)),
        ((1, 4), (4, 0), (8, 3), (0, 2)),
        (
            "(1,0,8,6,4,9,7,5,3,2)(10)",
            "(1,6,0,5,4,9,3,8,2,7)(10)",
            "(1,6,0,4,9,5,3,8,2,7)(10)",
            "(1,6,0,4,9,3,8,2,5,7)(10)",
            "(1,6,0,4,9,3,8,5,2,7)(10)",
            "(1,6,0,4,9,3,8,2,7,5)(10)",
            "(1,3,5,2,4,6,0,9,8,7)(10)",
        ),
        (
            "(10,8,3,9,4,0,5,6,1,7,2)",
            "(10,5,8,2,7,1,6,0,4,9,3)",
            "(10,2,4,6,7,8,9,0,1,3,5)",
            "(10,3,6,8,0,2,5,7,9,1,4)",
        ),
    ),
}


def eleven_sets(c: int):
    """(R1, R2) for the m = 11 tables."""
    base = f_set(11)
    if c == 5:
        return base, tuple(compose(transposition(11, 0, 10), s) for s in base)
    lead = from_cycles(11, [(10, 1, 2, 3, 4, 5)])
    return tuple(compose(lead, s) for s in base), base


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def check_f15() -> list[Check]:
    out = []
    sigmas = f_set(15)
    for i, text in F15_LISTING.items():
        want = parse_cycles(text, 15)
        got = sigmas[i]
        ok = got == want and parse_cycles(format_cycles(got), 15) == got
        if i in F15_PARTNERS:
            ok = ok and got == compose(gamma(15, i), transposition(15, 14, F15_PARTNERS[i]))
        out.append(Check(f"F_15 sigma_{i}", ok, format_cycles(got)))
    return out


def check_gamma15() -> list[Check]:
    return [
        Check(f"G_14 gamma_{i}", gamma(15, i) == parse_cycles(text, 15), format_cycles(gamma(15, i)))
        for i, text in GAMMA15_LISTING.items()
    ]


def check_eleven(c: int) -> list[Check]:
    table = ELEVEN[c]
    r1, r2 = eleven_sets(c)
    out = []
    for k, ((a, b), text) in enumerate(zip(table.d_t, table.truncated_products)):
        got = compose(truncate(r1[a]), truncate(r2[b]))
        out.append(Check(f"m=11 c={c} truncated product {k} ({a},{b})", got == parse_cycles(text, 11),
                         format_cycles(got)))
    for k, ((a, b), text) in enumerate(zip(table.d_h, table.hamiltonian_products)):
        got = compose(r1[a], r2[b])
        ok = got == parse_cycles(text, 11) and cycle_count(got) == 1
        out.append(Check(f"m=11 c={c} hamiltonian product {k} ({a},{b})", ok, format_cycles(got)))
    tf = construct_base(11, c)
    want_t = [(r1[a], r2[b]) for a, b in table.d_t]
    want_h = [(r1[a], r2[b]) for a, b in table.d_h]
    same = [f.perms for f in tf.d_t] == want_t and [f.perms for f in tf.d_h] == want_h
    out.append(Check(f"m=11 c={c} construct_base reproduces the pair table", same))
    return out


def _cycle_text(seq) -> str:
    return "(" + ",".join(str(x) for x in seq) + ")"


def _mod12_sets(m: int):
    g1, g_1 = gamma(m, 1), gamma(m, -1)
    return [compose(g1, s) for s in f_set(m)], [compose(g_1, s) for s in f_set(m)]


def _identity_mu0_tau1(m: int):
    mu, tau = _mod12_sets(m)
    return compose(mu[0], tau[1]), _cycle_text([0, 1, m - 1, *range(2, m - 1)])


def _identity_mu_tau0(m: int):
    k = (m - 1) // 2
    mu, tau = _mod12_sets(m)
    return compose(mu[m - 2], tau[0]), _cycle_text([0, *range(m - 2, k, -1), m - 1, *range(k, 0, -1)])


def _identity_mu_tau_last(m: int):
    k = (m - 1) // 2
    mu, tau = _mod12_sets(m)
    if m % 12 == 7:
        seq = [0, *range(2, k, 3), m - 1, *range(3, k + 1, 3), *range(1, k + 2, 3), *range(k + 2, m - 1)]
    else:
        seq = [0, *range(2, k + 1, 3), *range(1, k, 3), m - 1, *range(3, k + 2, 3), *range(k + 2, m - 1)]
    return compose(mu[m - 1], tau[m - 1]), _cycle_text(seq)


def _identity_even_mu0_pi2(m: int):
    mu0 = compose(transposition(m, 1, m - 2), pi(m, 0))
    return compose(mu0, pi(m, 2)), _cycle_text([*range(0, m - 1, 2), *range(3, m, 2), 1])


# name -> (sample orders, function returning (computed, expected text))
SYMBOLIC: dict[str, tuple[tuple[int, ...], Callable]] = {
    "mod 12 recipe: mu_0 tau_1": ((7, 11, 19, 23), _identity_mu0_tau1),
    "mod 12 recipe: mu_{m-2} tau_0": ((7, 11, 19, 23), _identity_mu_tau0),
    "mod 12 recipe: mu_{m-1} tau_{m-1}": ((7, 11, 19, 23, 31, 35), _identity_mu_tau_last),
    "even recipe: mu_0 pi_2": ((4, 6, 8, 10, 20, 40), _identity_even_mu0_pi2),
}


def check_symbolic() -> list[Check]:
    out = []
    for name, (orders, fn) in SYMBOLIC.items():
        for m in orders:
            got, text = fn(m)
            out.append(Check(f"{name} at m={m}", got == parse_cycles(text, m), format_cycles(got)))
    return out


def check_all(scope: str = "all") -> list[Check]:
    """``appendix``: F_15 and G_14 listings; ``goldens``: the m = 11 tables
    and symbolic product identities; ``all``: both."""
    checks: list[Check] = []
    if scope in ("appendix", "all"):
        checks += check_f15() + check_gamma15()
    if scope in ("goldens", "all"):
        checks += check_eleven(5) + check_eleven(7) + check_symbolic()
    if scope not in ("appendix", "goldens", "all"):
        raise ValueError(f"unknown scope {scope!r}")
    return checks


__all__ = [
    "Check",
    "ELEVEN",
    "F15_LISTING",
    "GAMMA15_LISTING",
    "check_all",
    "check_eleven",
    "check_f15",
    "check_gamma15",
    "check_symbolic",
    "eleven_sets",
]

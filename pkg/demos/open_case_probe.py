"""Probe cases the constructions do not reach.

Odd c with even m is open, so construction refuses it. A bounded search
over a restricted family of tuples looks for a witness anyway; a negative
answer there says nothing about the full problem.
"""

from wreathdecomp import verify
from wreathdecomp.twined import OpenCaseError, construct_base

for m, c in ((4, 1), (6, 3)):
    try:
        construct_base(m, c)
    except OpenCaseError as exc:
        print(f"m={m}, c={c}: {exc}")
    result = verify.search_twined(m, c, budget=200_000)
    print(f"  search: {result.status} after {result.nodes} nodes; {result.note}")

"""Exhaustive search shows that C_2 wr C_3 and C_2 wr C_2 have no hamiltonian decomposition."""

import time

from wreathdecomp import verify
from wreathdecomp.wreath import dicycle, wreath_product

for m in (3, 2):
    d = wreath_product(dicycle(2), dicycle(m))
    start = time.perf_counter()
    result = verify.search_ham_decomposition(d, budget=None)
    print(f"C_2 wr C_{m}: {result.status} after {result.nodes} nodes "
          f"({time.perf_counter() - start:.2f}s)")

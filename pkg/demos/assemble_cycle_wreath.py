"""Decompose C_4 wr H, where H is the circulant on 5 vertices with steps 1 and 2.

H has a cover by 2 hamiltonian cycles, so the wreath product should split
into 5 + 2 = 7 hamiltonian cycles of length 20.
"""

from wreathdecomp.assemble import assemble_cn_wr_h
from wreathdecomp.wreath import rotation_cover

cover = rotation_cover(5, [1, 2])
dec = assemble_cn_wr_h(4, cover.digraph, cover)
print(f"{len(dec.cycles)} cycles, lengths {sorted({len(c) for c in dec.cycles})}")
print(f"{len(dec.digraph.arcs)} arcs in C_4 wr H")
print("certified:", dec.certify().passed)
print(dec.to_edges().splitlines()[0], "...")
print("\n".join(dec.to_edges().splitlines()[1:6]))

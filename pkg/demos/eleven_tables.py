"""Build the m=11 factorizations for c=5 and c=7 and print each tuple.

Every tuple is printed with its kind and the cycle form of its product,
then the whole factorization is certified by the independent checker.
"""

from wreathdecomp import verify
from wreathdecomp.perm import cycle_count, format_cycles, truncate, product
from wreathdecomp.twined import construct_base

for c in (5, 7):
    tf = construct_base(11, c)
    print(f"m=11, c={c}: {len(tf.d_t)} truncated hamiltonian, {len(tf.d_h)} hamiltonian")
    for label, tuples in (("T", tf.d_t), ("H", tf.d_h)):
        for f in tuples:
            if label == "T":
                prod = product(truncate(p) for p in f.perms)
            else:
                prod = f.product()
            print(f"  {label} {cycle_count(prod)} cycle(s): {format_cycles(prod)}")
    print("  certificate:", verify.is_c_twined(tf).to_json()["verdict"])

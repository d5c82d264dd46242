"""Splitting integers into factors: a naturally confluent system.

Objects are multisets of integers >= 2 and a move replaces some m = a*b by
a and b.  Different first moves always rejoin, so every start has a single
root: its prime factorization.
"""

from uniroot import check_EE, unique_root, verify_theorem
from uniroot.generate import gen_factor_system

sys = gen_factor_system(60)
print(len(sys), "multisets reachable from 60,", len(sys.edges), "moves")
print("first moves:", [e.dst for e in sys.out_edges("60")])
print("EE:", check_EE(sys).holds, "root:", unique_root(sys, "60"))

rep = verify_theorem(sys)
deepest = max(rep.cf.complexity.items(), key=lambda kv: kv[1])
print("longest chain of splits starts at", deepest[0], "with", deepest[1], "moves")

sizes = {n: len(gen_factor_system(n)) for n in (64, 360, 720, 1024)}
print("system sizes:", sizes)

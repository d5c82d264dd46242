"""When do two first moves lead to the same root?"""

from uniroot import check_EE, edge_equivalence, find_counterexample, verify_theorem
from uniroot.generate import ee_failure, gen_random_dag
from uniroot.report import format_report

# pair -> allowed -> root-a and pair -> forbidden -> root-b never meet again.
sys = ee_failure()
print(format_report(sys, verify_theorem(sys)))

# The deepest object with two roots is where equivalence breaks first.
v, rs = find_counterexample(sys)
print("least counterexample:", v, sorted(rs.roots))
print("edge classes there:", edge_equivalence(sys, v).classes)

# Random systems: whenever every vertex has a single class of out-edges, all
# roots are unique.  On finite acyclic systems the converse holds as well:
# two inequivalent edges reach disjoint, non-empty root sets.
counts = {"EE": 0, "no EE": 0}
for seed in range(2000):
    rep = verify_theorem(gen_random_dag(8, 0.3, seed))
    assert rep.theorem_holds
    assert rep.ee.holds == rep.all_unique
    counts["EE" if rep.ee.holds else "no EE"] += 1
print(counts)
print("EE on a complete DAG:", check_EE(gen_random_dag(6, 1.0, 0)).holds)

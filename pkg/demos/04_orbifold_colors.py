"""Which colour profiles may a reducing sphere meet?"""

import itertools

from uniroot import profile_admissible

print("clean sphere:", profile_admissible([]))
print("single point (5,):", profile_admissible([5]))
for pair in [(3, 3), (2, 3)]:
    print(pair, profile_admissible(pair))

allowed = sorted(
    t for t in itertools.combinations_with_replacement(range(2, 9), 3) if profile_admissible(t)
)
print("allowed triples with colours up to 8:")
for t in allowed:
    print("  ", t)

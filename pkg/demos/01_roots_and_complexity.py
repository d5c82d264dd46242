"""Roots of a small reduction system and the complexity that orders it."""

from uniroot import build_system, check_complexity, roots, synthesize_complexity, unique_root

# Four objects; a can be simplified two ways, both end at d.
diamond = build_system("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])

# Longest remaining chain of moves from each object. Zero marks the objects
# that admit no further move.
c = synthesize_complexity(diamond)
print("complexity:", c)
print("strictly decreasing along edges:", check_complexity(diamond, c).valid)

# Any tuple-valued map works too, compared lexicographically.
print("pair-valued map valid:", check_complexity(diamond, {"a": (1, 0), "b": (0, 7), "c": (0, 3), "d": (0, 0)}).valid)

for v in diamond.vertices:
    print(f"roots of {v}: {sorted(roots(diamond, v).roots)}")
print("unique root of a:", unique_root(diamond, "a"))

# A cycle has no complexity function at all.
loop = build_system("ab", [("a", "b"), ("b", "a")])
try:
    synthesize_complexity(loop)
except Exception as exc:
    print("cycle:", exc)

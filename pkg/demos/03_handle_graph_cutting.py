"""Cutting green vertices of a red/green handle graph."""

from uniroot import canonical_form, check_EE, cut, edge_classes_at, full_cut, to_reduction_system, unique_root
from uniroot.generate import handle_demo_graph
from uniroot.handles import cut_moves, format_handle_graph

# x links to r1, r2 and twice to r3; y and z hang off r1 and r2.
g = handle_demo_graph()
print(format_handle_graph(g))

# Links at x are grouped by the component of G - x holding their red end.
print("classes at x:", edge_classes_at(g, "x"))

# Each way of sending whole classes to two sides is a legal cut.
for m in cut_moves(g):
    h = cut(g, m)
    print(sorted(map(sorted, m.split)), "->", h.component_count(), "components")

# Every maximal sequence of cuts ends at the same graph.
final = full_cut(g)
print(format_handle_graph(final))
print("code:", canonical_form(final).decode())

# The same question as a reduction system: vertices are graphs up to
# isomorphism, edges are single cuts.
sys = to_reduction_system(g)
print(len(sys), "graphs,", len(sys.edges), "cuts, EE holds:", check_EE(sys).holds)
print("root is the full cut:", unique_root(sys, canonical_form(g)) == canonical_form(final))

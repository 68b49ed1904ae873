"""Planted planar trees with corks.

Trees are written as nested parentheses: ``l`` is a leaf, ``b`` a black
cork, ``w`` a white cork.  Run with ``python3 demos/01_trees_and_grafting.py``.
"""
from uassoc import trees as tr

# grafting a corolla onto the second leaf
t = tr.graft(tr.parse_tree("(l (l b l))"), 2, tr.parse_tree("(l l l)"))
print("grafted:", tr.serialize_tree(t))

s = tr.stats(t)
print("leaves", s.n_leaves, "corks", s.n_corks, "height", s.height)
print("inner edges (paths of their top vertices):", s.inner_edges)

# contracting the second inner edge merges a corolla into its parent
print("T/e2:", tr.serialize_tree(tr.contract_edge(t, 2)))

# the vertices of K_4: binary trees with four leaves, in canonical order
for v in tr.enumerate_binary(4, 0):
    print("  ", tr.serialize_tree(v))

# binary trees with n leaves and m corks: C(n+m, m) * Catalan(n+m-1)
for n, m in [(2, 1), (1, 2), (3, 2)]:
    print(f"n={n} m={m}:", tr.count_binary(n, m), "binary trees")

# cells of K^u_{1,1}: white corks pin a cube coordinate at 1
print("cells of K^u_{1,1}:", [tr.serialize_tree(c) for c in tr.enumerate_cell_trees(1, 1)])

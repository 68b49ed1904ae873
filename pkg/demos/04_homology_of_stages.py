"""Cellular chains of the cork-filtration stages and their homology.

Every stage K^u_{n,m} checked here has the homology of a point.
"""
from uassoc import chain as ch
from uassoc import homology as hm

conv = ch.validated_convention()
print(f"{'(n,m)':>7}  {'f-vector':<28} euler  betti")
for n, m in [(4, 0), (5, 0), (0, 2), (0, 3), (1, 1), (1, 2), (2, 2), (3, 1)]:
    c = hm.build_complex(n, m, conv)
    h = hm.homology_summary(c)
    print(f"{str((n, m)):>7}  {str(c.dims()):<28} {hm.euler_characteristic(c):>5}  {h.betti}")

# the pentagon K_4 as a face graph in DOT form
print(hm.graph_to_dot(hm.build_complex(4, 0, conv)))

# Smith normal form of a small matrix
print("SNF of [[2,0],[0,3]]:", hm.smith_normal_form([[2, 0], [0, 3]]))

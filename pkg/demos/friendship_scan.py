"""
The friendship theorem at desk scale
====================================

Every labelled graph on up to 7 vertices, filtered by "each pair has exactly
one common neighbour".
"""

import time

from srglab import SrgParams, feasibility, verify_friendship_theorem
from srglab.constructions import windmill
from srglab.graph import c4_size_bound

t0 = time.time()
scan = verify_friendship_theorem(7)
print(f"{scan.graphs_scanned} graphs in {time.time() - t0:.2f} s")
print("survivors per order:", scan.per_order)
print("all windmills:", scan.all_windmills)

# regular friendship graphs would be srg(k^2-k+1, k, 1, 1); arithmetic rules them out
for k in range(3, 8):
    r = feasibility(SrgParams(k * k - k + 1, k, 1, 1))
    print(k, r.feasible, r.failed())

# windmills sit well inside the C4-free edge bound
for b in (2, 5, 10):
    w = windmill(b)
    print(w.order, w.num_edges, c4_size_bound(w.order))

"""
Energy, interlacing and spanning subgraphs
==========================================

Energy can only drop on induced subgraphs, but deleting edges may raise it.
"""

import numpy as np

from srglab import SrgParams, check_interlacing, eigenvalues, energy, srg_energy
from srglab.constructions import cycle, path, shrikhande
from srglab.spectral import max_energy_bound, max_energy_params

g = shrikhande()
print("Shrikhande spectrum:", eigenvalues(g).pairs)
print("energy, numeric vs closed form:", energy(g), srg_energy(SrgParams(16, 6, 2, 2)))

# induced subgraph on the first 9 vertices
h = g.induced_subgraph(range(9))
print("interlaces:", check_interlacing(eigenvalues(g), eigenvalues(h)), " E(h) =", round(energy(h), 4))

# P4 is obtained from C4 by deleting one edge
print("E(C4) =", energy(cycle(4)), " E(P4) =", energy(path(4)), " 2*sqrt(5) =", 2 * np.sqrt(5))

# the family meeting n(sqrt(n)+1)/2
for n in (16, 36, 64, 100):
    p = max_energy_params(n)
    print(n, p, srg_energy(p), max_energy_bound(n))

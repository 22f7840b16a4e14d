"""
Ruling out subgraphs
====================

Necessary conditions only: a verdict is either Excluded or Inconclusive.
"""

from srglab import SrgParams, find_induced_cycles, induced_theta_energy, spanning_simple, spanning_theta
from srglab import triangular_host_test
from srglab.constructions import shrikhande
from srglab.subgraphs import cycle_theta_energy

g, h = SrgParams(45, 28, 15, 21), SrgParams(45, 22, 10, 11)
print("simple test:", spanning_simple(g, h).verdict.value)
rep = spanning_theta(g, h)
print("theta test :", rep.verdict.value, " ratio =", rep.checks[0].lhs)

# which induced cycles does the Shrikhande graph have?
shri = SrgParams(16, 6, 2, 2)
print("induced cycle lengths:", sorted(find_induced_cycles(shrikhande(), 16)))
for ell in range(5, 11):
    theta_c, energy_c = cycle_theta_energy(ell)
    rep = induced_theta_energy(shri, theta_c, energy_c)
    note = " (equality)" if rep.checks[0].tight else ""
    print(f"  C{ell}: theta {theta_c:.4f} -> {rep.verdict.value}{note}")

# smallest triangular graph that might hold the Gewirtz graph as an induced subgraph
gewirtz = SrgParams(56, 10, 0, 2)
first = next(ell for ell in range(4, 100) if not triangular_host_test(gewirtz, ell).excluded)
print("Gewirtz in T_l: excluded below l =", first)

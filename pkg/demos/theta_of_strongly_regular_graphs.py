"""
Theta of strongly regular graphs
================================

Closed forms against the interior-point solver, on a few small families.
"""

import math

from srglab import SrgParams, complement, detect_srg, theta_sdp, theta_srg, theta_srg_complement
from srglab.constructions import petersen, rook, shrikhande, symplectic_polar, triangular

graphs = {
    "Petersen": petersen(),
    "Shrikhande": shrikhande(),
    "rook K4xK4": rook(4),
    "T6 = L(K6)": triangular(6),
    "complement of Sp(6,2)": complement(symplectic_polar(3, 2)),
}

print(f"{'graph':<24}{'params':<22}{'closed':>10}{'sdp':>14}{'closed bar':>12}")
for name, g in graphs.items():
    p = detect_srg(g)
    sdp = theta_sdp(g).value
    print(f"{name:<24}{str(p):<22}{theta_srg(p):>10.6f}{sdp:>14.9f}{theta_srg_complement(p):>12.6f}")

# theta(G) * theta(complement) = n holds for every SRG, even with irrational t
p = SrgParams(45, 22, 10, 11)
print(p, theta_srg(p) * theta_srg_complement(p))

# the pentagon is the smallest case with an irrational value
print("C5:", theta_srg(SrgParams(5, 2, 0, 1)), math.sqrt(5))

"""Lovász theta, energy and subgraph conditions for strongly regular graphs."""

from .errors import SrglabError
from .feasibility import FeasibilityReport, complement_params, feasibility
from .friendship import (
    common_neighbor_constant,
    has_friendship_property,
    is_windmill,
    verify_friendship_theorem,
)
from .graph import (
    Graph,
    SrgParams,
    c4_size_bound,
    common_neighbors,
    complement,
    detect_srg,
    is_c4_free,
    line_graph,
    triangle_count,
)
from .invariants import (
    chromatic_number,
    clique_number,
    ell_friendship_bounds,
    independence_number,
    srg_invariant_bounds,
    tightness,
)
from .io import parse_graph, parse_graph6, read_graph, to_edgelist, to_graph6
from .spectral import (
    Spectrum,
    check_interlacing,
    eigenvalues,
    energy,
    max_energy_bound,
    max_energy_params,
    srg_energy,
    srg_spectrum,
)
from .subgraphs import (
    ConditionReport,
    Verdict,
    find_induced_cycles,
    induced_srg_pair,
    induced_theta_energy,
    spanning_regular,
    spanning_simple,
    spanning_theta,
    triangular_host_test,
)
from .theta import (
    ThetaBounds,
    ThetaMethod,
    product_identity_check,
    theta_cycle,
    theta_regular_bounds,
    theta_sdp,
    theta_srg,
    theta_srg_complement,
)

__version__ = "0.1.0"

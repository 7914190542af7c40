"""Hypercube-like networks, Cayley graphs on D8^k x Z2^l, and g-extra connectivity."""

from .extra import (CutsetCertificate, SearchRefused, all_rg_cutsets, connected_sets, exact_extra_connectivity,
                    f_value, is_rg_cutset, min_star_neighborhood, upper_bound_by_small_side)
from .graph import CompactGraph, VertexSet, classify_induced, common_neighbors, components, girth, neighborhood
from .report import VerificationReport
from .topology import TopologySpec, compose_hl, delta, g84, gamma, hypercube, parse_spec, random_hl, vq_by_rule, vq_recursive

__version__ = "0.1.0"

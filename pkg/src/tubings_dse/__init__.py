"""Binary tubings of rooted trees and the series solutions of Dyson-Schwinger equations they produce."""

from .rings import LPoly, Poly
from .trees import Decoration, PlaneTree, RootedTree, canonicalize, enumerate_trees, parse_tree
from .mellin import MellinTable
from .tubings import Tubing, count_tubings, enumerate_tubings
from .feynman import tree_amplitude, tubing_feynman_rules
from .dse import (DSESpec, GreenSeries, anomalous_dimension, solve_exp_star, solve_fixed_point,
                  solve_system, solve_tubing)
from .chords import ChordDiagram, chord_expansion, mu, nu, theta
from .linegraph import l_inverse, l_map, line_graph, maximal_atubings

__version__ = "0.1.0"

__all__ = [
    "LPoly", "Poly", "Decoration", "PlaneTree", "RootedTree", "canonicalize", "enumerate_trees",
    "parse_tree", "MellinTable", "Tubing", "count_tubings", "enumerate_tubings", "tree_amplitude",
    "tubing_feynman_rules", "DSESpec", "GreenSeries", "anomalous_dimension", "solve_exp_star",
    "solve_fixed_point", "solve_system", "solve_tubing", "ChordDiagram", "chord_expansion", "mu",
    "nu", "theta", "l_inverse", "l_map", "line_graph", "maximal_atubings",
]

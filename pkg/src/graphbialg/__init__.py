"""Exact Lie bialgebra computations on 2-step nilpotent algebras built from graphs."""
from .linalg import Mat, SolutionSpace, nullspace, parse_rational, format_rational, rank, rref, solve
from .graph import (Graph, GraphParseError, IsolatedVertexError, complete_graph, cycle_graph,
                    graphs_without_isolated_vertices, min_degree_at_least_two, parse_graph,
                    path_graph, single_edge)
from .algebra import TwoStepAlgebra, Element, bracket, check_algebra, from_graph, heisenberg
from .exterior import ExtVector, ad_on_ext, graded_projectors, wedge
from .invariants import invariant_subspace, invariants_equal_lambda2z, invariants_report
from .tst import assemble_tst, is_tst_type, solve_tst, tst_report
from .cobracket import (Cobracket, ConstructionData, HypothesisWarning, build_from_data,
                        check_cocycle, check_cojacobi, check_construction_data, delta1,
                        is_bialgebra, is_nearly_coboundary, verify)
from .classify import (DiagonalFamily, F3Family, classify_diagonal, commuting_d_check,
                       diagonal_build, f3_build, f3_residuals, lambda_system,
                       omega_constraints, parameter_table, path_parity_zero)

__version__ = "0.1.0"

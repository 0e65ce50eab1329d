"""Solution-free subsets of integers.

Exact and approximate solvers/counters for the L-free subset problem
family, the hypergraph reductions behind them, and constructive density
bounds; everything cross-checkable against brute-force oracles.
"""

from .bounds import (EquationBounds, construct_large_lfree, epsilon_instance,
                     extend_disjoint, extend_geometric, lambda_of,
                     lfree_interval)
from .count import (ApproxParams, CountResult, brute_force_multicolour_cliques,
                    count_exact, count_fptras, count_multicolour,
                    count_multicolour_cliques, required_sample_count)
from .equation import (LinearEquation, enumerate_nontrivial_solutions,
                       is_L_free, is_solution, is_trivial, parse_equation)
from .gadget import (GadgetEncoding, build_gadget, lfree_of_independent_set,
                     normalize_to_contain_edge_numbers, np_instance,
                     ptas_alpha, ptas_f, ptas_g)
from .hypergraph import (Hypergraph, InstanceMap, count_hitting_sets,
                         decide_hitting_set, enumerate_hitting_sets,
                         solution_supports, to_hitting_set_instance)
from .setcore import (IntegerSet, brute_force_count_lfree,
                      brute_force_max_lfree, size_bits)
from .solve import (SolveOutcome, decide, decide_epsilon, decide_extension,
                    decide_fpt_by_k, decide_two_variable, extension_fpt_by_k,
                    max_lfree)

__all__ = [
    "ApproxParams", "CountResult", "EquationBounds", "GadgetEncoding",
    "Hypergraph", "InstanceMap", "IntegerSet", "LinearEquation",
    "SolveOutcome", "brute_force_count_lfree", "brute_force_max_lfree",
    "brute_force_multicolour_cliques", "build_gadget", "construct_large_lfree",
    "count_exact", "count_fptras", "count_hitting_sets", "count_multicolour",
    "count_multicolour_cliques", "decide", "decide_epsilon",
    "decide_extension", "decide_fpt_by_k", "decide_hitting_set",
    "decide_two_variable", "enumerate_hitting_sets",
    "enumerate_nontrivial_solutions", "epsilon_instance", "extend_disjoint",
    "extend_geometric", "extension_fpt_by_k", "is_L_free", "is_solution",
    "is_trivial", "lambda_of", "lfree_interval", "lfree_of_independent_set",
    "max_lfree", "normalize_to_contain_edge_numbers", "np_instance",
    "parse_equation", "ptas_alpha", "ptas_f", "ptas_g",
    "required_sample_count", "size_bits", "solution_supports",
    "to_hitting_set_instance",
]

__version__ = "0.1.0"

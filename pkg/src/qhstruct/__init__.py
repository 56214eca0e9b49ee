"""Quasi-hereditary structures on path algebras of finite acyclic quivers."""

from .counting import catalan, count_D1, count_D2, count_star
from .deconcat import (Deconcatenation, deconcatenate, iterated_typeA, maximal_deconcatenation,
                       phi, psi, tree_tilting_supports)
from .errors import (CycleError, NotCut, NotSinkSourceError, NotTreeOrder, NotTypeAError,
                     ParallelArrowError, PreconditionError, QhError, SizeError, UnsupportedError)
from .lift import lift_order
from .obstructions import has_Dtilde_subquiver, has_Zn_full_subposet
from .order import (PartialOrder, intersect, is_adapted, is_refinement, restrict, total_orders,
                    transitive_closure)
from .quiver import (Quiver, ReachPoset, count_paths, diamond_free, from_name, is_path_unique,
                     is_tree, reachability, sinks, sources)
from .standard import (DecInc, StandardSystem, dec_inc, equivalent, minimal_adapted,
                       standard_system, tilting_supports)
from .structures import (QhPoset, QhStructure, enumerate_structures, join_formula, meet_formula,
                         opposite_check, poset_isomorphic_via)
from .type_a import (Node, enumerate_trees, order_to_tree, tamari_poset, tree_to_order,
                     tree_to_tilting)

__version__ = "0.1.0"

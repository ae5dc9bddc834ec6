"""Exact-arithmetic toolkit for Dressians Dr(k, n).

Tropical Pluecker vectors, regular matroidal subdivisions of hypersimplices,
metric tree arrangements, and Pluecker-fan cone adjacency, all over exact
rational arithmetic.
"""

from .arrangements import (AbstractArrangement, ArrangementComparison,
                           TreeArrangement, arrangement_cherries,
                           arrangement_from_weight, check_compatibility,
                           generalized_whitehead_diff,
                           is_abstract_arrangement,
                           metrize_abstract_arrangement,
                           recursive_contraction_arrangement,
                           weight_from_arrangement)
from .cones import (FacetCrossing, PlueckerCone, adjacent_cones,
                    cone_polyhedron, is_maximal_signature)
from .documents import (FanFile, dump_document, emit_arrangement, emit_fan,
                        emit_subdivision, emit_weight, load_document,
                        parse_arrangement, parse_fan, parse_subdivision,
                        parse_weight)
from .errors import (CompatibilityError, DressianError, EmptyConeError,
                     FormatError, MembershipError, NonMaximalConeError,
                     ParameterError, ReconstructionError)
from .relations import (ConeSignature, ThreeTermRelation, cone_signature,
                        enumerate_relations, is_in_dressian, relation_values)
from .subdivision import (Cell, Hypersimplex, HypersimplexSplit,
                          MatroidalSubdivision, cells_from_tree,
                          common_refinement, contraction_restriction,
                          deletion_restriction, is_matroid_cell,
                          is_matroidal, regular_subdivision,
                          split_subdivision, splits_compatible)
from .subsets import (KSubset, WeightVector, enumerate_ksubsets,
                      lineality_shift, normalize)
from .trees import (MetricTree, Split, caterpillar, cherries_of_tree,
                    delete_leaf, enumerate_all_topologies,
                    enumerate_trivalent_topologies, four_point_violation,
                    is_refinement_of, is_tree_metric, is_whitehead_related,
                    labelled_isomorphic, parse_newick, reconstruct_tree,
                    splits_of_tree, star_tree, to_newick, tree_from_splits,
                    tree_metric, whitehead_move)

__version__ = "0.1.0"

from .recurrence import (EvalError, ErrorKind, GeneralParams, GolombParams, InitialConditions,
                         SequenceBuffer, Source, analyze, complete_frequencies, eval_general,
                         eval_golomb, eval_naive, frequency_of, frequency_table)
from .treemodel import (TreeVariant, NodeKind, LabeledTree, PrefixView, build_labeled_tree,
                        build_skeleton, assign_labels, initial_conditions, leaf_records,
                        leaf_weight_sequence, prefix_view, prefix_view_from_tree)
from .pruning import prune, prune_to_base, verify_prune_identity
from .closedforms import (FormulaInconsistency, F_of, g_1s1_closed, g_closed_lambda1,
                          g_via_reduction, golomb_closed, reduce_params)
from .grid import ParameterGrid
from .verify import Verifier

from ._version import __version__

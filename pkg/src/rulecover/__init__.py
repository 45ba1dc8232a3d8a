"""Rule mining and rule-pruning laboratory for nominal tabular data.

Mines association rules with a tidset-based Apriori, evaluates a catalog
of interestingness measures over rule contingency tables, clusters rules
by consequent, extracts greedy cover-based representative rules, and
quantifies how measure-based top-k pruning preserves the representative
sets relative to the unpruned baseline.
"""

from ._kernels import KERNEL_BACKEND
from .cover import (Cluster, ClusterMode, RepresentativeSet, cluster_cover,
                    cluster_rules, select_representatives)
from .dataset import (Dataset, IngestConfig, IngestionError, Item, dump_items,
                      generate_synthetic, item_catalog, load_table, tidset_of_item,
                      write_csv)
from .experiment import (BaselineResult, ComparisonRow, ExperimentReport, PrunedResult,
                         baseline_representatives, compare, emit_report,
                         experiment_from_rules, load_appendix, pruned_representatives,
                         run_experiment)
from .measures import (ALL_MEASURES, ContingencyTable, contingency, evaluate,
                       evaluate_all, rank, top_k)
from .mining import (AssociationRule, FrequentItemset, MinedRules, MiningConfig,
                     frequent_itemsets, generate_rules, mine, percent, rule_stats)
from .rules_io import RuleFileError, read_rules, write_rules
from .tidset import TidSet

__version__ = "0.1.0"

__all__ = [
    "ALL_MEASURES",
    "AssociationRule",
    "BaselineResult",
    "Cluster",
    "ClusterMode",
    "ComparisonRow",
    "ContingencyTable",
    "Dataset",
    "ExperimentReport",
    "FrequentItemset",
    "IngestConfig",
    "IngestionError",
    "Item",
    "KERNEL_BACKEND",
    "MinedRules",
    "MiningConfig",
    "PrunedResult",
    "RepresentativeSet",
    "RuleFileError",
    "TidSet",
    "baseline_representatives",
    "cluster_cover",
    "cluster_rules",
    "compare",
    "contingency",
    "dump_items",
    "emit_report",
    "evaluate",
    "evaluate_all",
    "experiment_from_rules",
    "frequent_itemsets",
    "generate_rules",
    "generate_synthetic",
    "item_catalog",
    "load_appendix",
    "load_table",
    "mine",
    "percent",
    "pruned_representatives",
    "rank",
    "read_rules",
    "rule_stats",
    "run_experiment",
    "select_representatives",
    "tidset_of_item",
    "top_k",
    "write_csv",
    "write_rules",
]

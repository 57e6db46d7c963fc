from .affine import AffineCheck, is_affine_invariant
from .bounds import HTSearchCaps, bch_bound, hartmann_tzeng_bound, hartmann_tzeng_search
from .designs import DesignCertificate, extract_design
from .distance import DistanceResult, min_distance
from .enumeration import BudgetExceeded, weight_histogram
from .enumeration import weight_histogram as weight_distribution
from .macwilliams import macwilliams_transform
from .report import analyze, index_set_relation, open_problem_evidence, pgrm_dual_relation, verify_paper_tables

__all__ = [
    "AffineCheck",
    "BudgetExceeded",
    "DesignCertificate",
    "DistanceResult",
    "HTSearchCaps",
    "analyze",
    "bch_bound",
    "extract_design",
    "hartmann_tzeng_bound",
    "hartmann_tzeng_search",
    "is_affine_invariant",
    "macwilliams_transform",
    "min_distance",
    "index_set_relation",
    "open_problem_evidence",
    "pgrm_dual_relation",
    "verify_paper_tables",
    "weight_distribution",
    "weight_histogram",
]

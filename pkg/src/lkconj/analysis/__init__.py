from .claims import ClaimVerdict, verify_paper_claims
from .qsets import QSetId, qset_member
from .reduce import conjugate_reduce
from .search import SearchConfig, kernel_search

__all__ = ["ClaimVerdict", "verify_paper_claims", "QSetId", "qset_member", "conjugate_reduce", "SearchConfig", "kernel_search"]

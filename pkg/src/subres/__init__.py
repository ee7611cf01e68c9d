"""Exact univariate subresultants computed five independent ways."""

from subres.algebra import (
    NEG_INF,
    NonExactDivision,
    Poly,
    RootList,
    binomial,
    parse_rational,
    poly_eval,
    poly_from_roots,
    r_pair,
    r_poly,
)
from subres.linalg import (
    DMatrix,
    bracket,
    build_mf,
    build_mg,
    build_mtx,
    build_sd,
    det_bareiss,
    det_laplace,
    vandermonde_det,
)
from subres.subresultants import (
    InadmissibleDegree,
    SubsetSplit,
    admissible,
    check_admissible,
    double_sum,
    lemma3_rhs,
    poisson_resultant,
    sg_sublist,
    single_sum,
    sres_chain,
    sres_def,
    sres_hong,
    sres_sd,
    sres_sylvester,
    subsets,
)

__all__ = [
    "NEG_INF",
    "NonExactDivision",
    "Poly",
    "RootList",
    "binomial",
    "parse_rational",
    "poly_eval",
    "poly_from_roots",
    "r_pair",
    "r_poly",
    "DMatrix",
    "bracket",
    "build_mf",
    "build_mg",
    "build_mtx",
    "build_sd",
    "det_bareiss",
    "det_laplace",
    "vandermonde_det",
    "InadmissibleDegree",
    "SubsetSplit",
    "admissible",
    "check_admissible",
    "double_sum",
    "lemma3_rhs",
    "poisson_resultant",
    "sg_sublist",
    "single_sum",
    "sres_chain",
    "sres_def",
    "sres_hong",
    "sres_sd",
    "sres_sylvester",
    "subsets",
]

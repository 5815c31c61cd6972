"""Exact spanning-tree counts for Cayley graphs on dihedral groups."""

from .arith import ArithDecomposition, decompose, squarefree_part, xi_delta
from .asym import MahlerEstimate, asymptotic_ratio, mahler_quadrature, mahler_roots
from .genfun import RationalGF, fit_recurrence, generating_function, rational_gf, verify_symmetry
from .genset import GenSet, Graph, ValidationReport, build_graph, is_connected, laplacian, validate
from .polyalg import (
    IntPoly,
    SymmetricLaurentPoly,
    associated_poly,
    cheb_T,
    chebyshev_transform,
    eval_unit_circle,
    ff_solve,
    q_constant,
    resultant,
)
from .treecount import (
    SpectrumPair,
    TreeCountReport,
    spectrum,
    spectrum_values,
    tau_chebyshev,
    tau_exact,
    tau_oracle,
    tau_spectral,
    tree_count_report,
)

__version__ = "0.1.0"

"""Multiplicative convolutions of noncommutative probability on exact moment data,
and the rooted graph products whose walk counts realize them."""

from .convolve import (
    ConvResult,
    boolean_mult,
    dilate,
    free_mult,
    monotone_mult,
    orthogonal_iterate,
    orthogonal_mult,
    s_a_transform,
    sfree_mult,
)
from .graph import ColoredRootedGraph, Edge, adjacency_split, ball_product, finite_product, product
from .jacobi import NotQuasiDefiniteError, eta_from_jacobi, jacobi_from_eta, jacobi_from_moments, s_a_jacobi
from .series import (
    Dist,
    FormalSeries,
    JacobiParams,
    SeriesError,
    compose,
    compositional_inverse,
    eta_from_moments,
    moments_from_eta,
    psi_from_moments,
    rho_from_eta,
    s_transform,
)
from .verify import VerifyReport, verify_product
from .walks import (
    WalkTable,
    dwalk_counts_bruteforce,
    dwalk_counts_matrix,
    even_fwalk_check,
    first_return_moments,
    spectral_moments,
    walk_table,
)

__version__ = "0.1.0"

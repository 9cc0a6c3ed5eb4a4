"""Exact q,t-Fuss-Catalan numbers of complex reflection groups."""

__version__ = "0.1.0"

from .arith import (Cyclotomic, LaurentQPoly, Monomial, MultiPoly, QTPoly, Rational, q_binomial, q_factorial,
                    q_integer, qt_bracket, rank, row_reduce, specialize)
from .coinvariants import (GeneratorTable, HilbertEngine, bivariate_vandermonde, determinantal_basis,
                           dihedral_delta_generators, full_coinvariant_hilbert, generator_tables, hilbert_series,
                           invariant_spanners, minimal_generator_dims, product_space_component,
                           vandermonde_generators)
from .combinatorics import (area_genfun, chain_to_dyck, coheight_genfun_chains, cyclic_qt, dihedral_qt, dyck_paths,
                            filtered_chains, fuss_catalan, fuss_catalan_q, order_ideals, root_poset)
from .errors import DomainError, IncompleteResultError, QTFCError, ResourceError
from .groups import GroupElement, GroupSpec, build_group, count_reflections_and_hyperplanes, det_project, \
    enumerate_elements, parse_group
from .shi import ShiArrangement, all_regions_count, coheight_genfun, fm_feasible, g2_truncated, positive_regions, \
    shi_arrangement
from .verification import CheckReport, GoldenEntry, golden_tables, run_tier

__all__ = [name for name in dir() if not name.startswith("_")]

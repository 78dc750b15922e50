"""Exact Jeffrey-Kirwan residues for vector-partition functions.

Volumes, lattice-point counts, chamber polynomials and Ehrhart polynomials
of partition polytopes, toric intersection numbers, and brute-force
oracles to check them against.
"""
from .arrangement import (Chamber, LinearSystem, Membership, chamber_of, cone_contains,
                          enumerate_bases, in_cone, is_regular, is_unimodular, new_system,
                          resolve_chamber)
from .errors import (BudgetExceeded, Infeasible, JKError, NonUnimodular, NotPointed,
                     NotRegular, NotSpanning, OutsideCone, ValidationError, ZeroForm)
from .exact import det, solve_in_basis, todd_coefficients
from .models import (kostant_system, margins_to_xi, network_system,
                     transportation_system)
from .oracle import dp_count, oracle_volume
from .polynomial import MPoly, TruncSeries
from .residue import (ArrFraction, iterated_residue, jk_residue, partial_fractions,
                      todd_product_truncation)
from .toolkit import (ChamberPolynomial, EhrhartPolynomial, PartitionPolytope, count,
                      count_polynomial, ehrhart, toric_integral, volume, volume_polynomial)

__version__ = "0.1.0"

"""inclab: exact incidence and energy computations on point-line configurations.

Counts incidences between Cartesian-product point sets and line sets, computes
additive/multiplicative/bipartite/line energies by exact collision counting,
generates the lattice constructions that realize near-extremal incidence
counts, and runs structural pipelines (parallel/concurrent family detection,
dyadic profiling, energy-product reports).  All arithmetic is exact rational.
"""

from .constructions import (Configuration, TotientTable, build_elekes,
                            build_family, build_geometric, normalize_line_count,
                            slope_set, totient_sum_report, totient_table)
from .core import (IDENTICAL, CapExceededError, DomainError, InputError, Line,
                   Point, Rational, format_rational, line_compose, line_eval,
                   line_intersection, line_inverse, line_quotient,
                   make_rational, parse_rational)
from .energies import (EnergyReport, additive_energy, as_line_set,
                       as_scalar_set, bipartite_additive_energy,
                       cartesian_line_energy_bound, line_energy,
                       multiplicative_energy, prnrw_bound_report,
                       quadruple_oracle, rs_incidence_bound_report)
from .incidence import (IncidenceProfile, VerticalLine, count_incidences_oracle,
                        count_incidences_product, enumerate_rich_lines,
                        prune_richness_band)
from .kernels import BACKEND as kernel_backend
from .structure import (DyadicProfile, FamilyInventory, concurrent_families,
                        dyadic_profile, elekes_report, iterative_decomposition,
                        parallel_families, structure_report)
from .sweep import ExponentFit, SweepSpec, exponent_fit, run_sweep

__version__ = "0.1.0"

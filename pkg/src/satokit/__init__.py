"""Exact computational models for lattices in Laurent-series spaces,
dimensional and determinantal torsors, and multiplicative torsors on
finite simplicial sets."""

from .abgroup import AbelianGroup, GroupElem, GroupHom, ZZ, format_group, \
    parse_group
from .exactlin import (F2, F3, F5, QQ, Field, IntMatrix, Matrix, Subspace,
                       kernel, rref_basis, smith_normal_form,
                       subspace_meet_join)
from .exactcat import (FdSpace, Grid3x3, LinMap, SES, SESInvalid, check_ses,
                       complete_grid_3x3, diagnose_ses, epi_mono_factorize,
                       pullback_admissible_monos, pushout_admissible_epis)
from .laurent import LaurentMatrix, LaurentPoly, RatFunc
from .tate import (Lattice, TateSES, TateSESInvalid, TateSpace,
                   check_tate_ses, lattice_contains, lattice_grid,
                   lattice_join, lattice_meet, lattice_normalize,
                   lift_lattice, project_lattice, relative_index,
                   split_tate_ses, standard_lattice)
from .dimtorsor import (DimTheory, RelDimTheory, eval_reldim, mu_combine,
                        pushout_along, torsor_difference)
from .detline import (DetTheory, GradedLine, LineIso, RelDetTheory,
                      check_symmetry, delta_relative, det_line, graded_det,
                      hom_torsor_class, koszul_swap, lambda_ses, mu_det,
                      ungraded_det)
from .simptors import (Cochain, GerbeRep, MultTorsorRep, SimplicialSet,
                       check_mult_torsor, classify_torsor, cohomology,
                       evaluate_even_odd, gerbe_to_torsor, iso_decide,
                       street_boundaries, validate_simplicial_set)
from .swald import (SObject, SSkeleton, build_s_object, enumerate_s_skeleton,
                    s_degeneracy, s_face, verify_theory_as_torsor)

__version__ = "0.1.0"

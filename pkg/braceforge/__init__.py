from braceforge.cli import run
from braceforge.finite_group import FiniteGroup, GroupMap, Subgroup, build_group
from braceforge.gamma import GammaFunction, SkewBrace, gamma_from_inner_rep, verify_gamma, verify_skew_brace
from braceforge.rota_baxter import RotaBaxterOperator, enumerate_rb, verify_rb
from braceforge.cohomology import TwoCocycle, decide_rota_baxter, extract_kappa, solve_coboundary
from braceforge.extensions import build_central_extension, derived_intersection_obstruction, find_complement

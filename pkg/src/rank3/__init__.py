"""Orbit, parameter, and partition computations for odd-dimensional
orthogonal groups over GF(3), with a reproduction suite of pinned
numeric expectations."""

from .fields import GF3, field_create
from .geometry import (QuadraticSpace, standard_space, count_norm_vectors,
                       point_type, nonsingular_points,
                       measured_rank3_parameters)
from .groups import MatrixGroup, omega_generators, cd_parameters, orbit
from .higman import odd_orthogonal_params, srg_verify, CdPair
from .constructions import build_case, CASE_BUILDERS, orbit_partition
from .partitions import mullineux_map, mullineux_symbol, is_mullineux_fixed
from .meataxe import GModule, composition_factors, invariant_bilinear_form
from .genfile import parse_generator_file, write_generator_file
from .expected import run_reproduction_suite

__version__ = "1.0.0"

__all__ = [
    "GF3", "field_create", "QuadraticSpace", "standard_space",
    "count_norm_vectors", "point_type", "nonsingular_points",
    "measured_rank3_parameters", "MatrixGroup", "omega_generators",
    "cd_parameters", "orbit", "odd_orthogonal_params", "srg_verify",
    "CdPair", "build_case", "CASE_BUILDERS", "orbit_partition",
    "mullineux_map", "mullineux_symbol", "is_mullineux_fixed", "GModule",
    "composition_factors", "invariant_bilinear_form",
    "parse_generator_file", "write_generator_file",
    "run_reproduction_suite",
]

"""Italian domination, bondage and reinforcement numbers of digraphs."""

__version__ = "0.1.0"

from ._backend import COMPILED
from .digraph import Digraph, format_edge_list, new_digraph, parse_edge_list
from .errors import BondageUndefinedError, GuardError, ItaldomError, ParseError
from .families import FamilySpec, build_family, parse_family
from .idf import (
    GammaResult,
    Labeling,
    brute_force_gamma_italian,
    enumerate_min_idfs,
    gamma_domination,
    gamma_italian,
    verify_idf,
)
from .perturbation import (
    PerturbationResult,
    check_rI_one_characterization,
    classical_reinforcement,
    italian_bondage,
    italian_reinforcement,
)

__all__ = [
    "COMPILED",
    "BondageUndefinedError",
    "Digraph",
    "FamilySpec",
    "GammaResult",
    "GuardError",
    "ItaldomError",
    "Labeling",
    "ParseError",
    "PerturbationResult",
    "brute_force_gamma_italian",
    "build_family",
    "check_rI_one_characterization",
    "classical_reinforcement",
    "enumerate_min_idfs",
    "format_edge_list",
    "gamma_domination",
    "gamma_italian",
    "italian_bondage",
    "italian_reinforcement",
    "new_digraph",
    "parse_edge_list",
    "parse_family",
    "verify_idf",
]

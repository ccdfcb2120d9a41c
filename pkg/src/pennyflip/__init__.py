"""Exact dihedral-group analysis of the quantum penny flip game."""

from .angles import Angle, CanonicalRange
from .dihedral import (FLIP, HADAMARD, IDENTITY, DihedralElement, Kind,
                       PlanarIsometry, closure, contains_isometry, elements,
                       isometries, represent, verify_presentation)
from .errors import (EmptyFixedSet, ExactArithmeticOverflow, FNotInGroup,
                     LengthMismatch, MismatchedGroup, NotUnitary,
                     PennyflipError, SearchBudgetExceeded)
from .games import (PICARD_POOL, PQG, Decision, GameSpec, Strategy,
                    StrategyClass, brute_force_extended_check,
                    classify_strategies, decide_extended_game,
                    enumerate_winning_strategies, is_dominant,
                    is_winning_strategy, play_out, state_path,
                    synthesize_by_intermediate_states,
                    verify_characteristic_properties)
from .orbits import fixed_set, orbit, orbit_of_basis, stabilizer
from .states import (BASIS, KET_MINUS, KET_ONE, KET_PLUS, KET_ZERO, CoinState,
                     act, win_probability)

__version__ = "0.1.0"

__all__ = [
    "Angle", "CanonicalRange",
    "FLIP", "HADAMARD", "IDENTITY", "DihedralElement", "Kind",
    "PlanarIsometry", "closure", "contains_isometry", "elements",
    "isometries", "represent", "verify_presentation",
    "EmptyFixedSet", "ExactArithmeticOverflow", "FNotInGroup",
    "LengthMismatch", "MismatchedGroup", "NotUnitary",
    "PennyflipError", "SearchBudgetExceeded",
    "PICARD_POOL", "PQG", "Decision", "GameSpec", "Strategy",
    "StrategyClass", "brute_force_extended_check", "classify_strategies",
    "decide_extended_game", "enumerate_winning_strategies", "is_dominant",
    "is_winning_strategy", "play_out", "state_path",
    "synthesize_by_intermediate_states", "verify_characteristic_properties",
    "fixed_set", "orbit", "orbit_of_basis", "stabilizer",
    "BASIS", "KET_MINUS", "KET_ONE", "KET_PLUS", "KET_ZERO", "CoinState",
    "act", "win_probability",
    "__version__",
]

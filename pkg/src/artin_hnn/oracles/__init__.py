from .britton import BrittonForm, BrittonOracle, base_oracle, britton_normal_form
from .cosets import CosetTable, coset_enumerate
from .distinguish import DISTINCT, INCONCLUSIVE, ArtinDistinguisher, distinguish_in_artin_target
from .raag import RAAGOracle, raag_normal_form
from .tits import ReductionBudget, TitsOracle, tits_reduce

__all__ = [
    "ArtinDistinguisher",
    "BrittonForm",
    "BrittonOracle",
    "CosetTable",
    "DISTINCT",
    "INCONCLUSIVE",
    "RAAGOracle",
    "ReductionBudget",
    "TitsOracle",
    "base_oracle",
    "britton_normal_form",
    "coset_enumerate",
    "distinguish_in_artin_target",
    "raag_normal_form",
    "tits_reduce",
]

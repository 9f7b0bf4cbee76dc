"""relmod: word problems, Fox calculus and presentation complexes.

Normal forms for Baumslag-Solitar groups, cyclic amalgams and chains of
amalgams; integral group rings and their skew Laurent view; Fox derivatives
and Cayley-graph cycles; Tietze transformations and doubled presentation
complexes.
"""

from .cayley import (
    CayleyBall,
    EdgeChain,
    build_ball,
    chain_to_fox,
    cycle_to_relators,
    fox_to_chain,
    growth,
    lift_word,
    path_word,
    to_dot,
)
from .complexes import (
    TwoComplex,
    chi_level_formula,
    double_presentation,
    doubled_bs_presentation,
    trefoil_genset,
    trefoil_ki,
    trefoil_witnesses,
    verify_doubled_quotient,
    verify_trefoil_genset,
)
from .config import Settings, get_settings
from .errors import RelmodError
from .fox import FoxVector, chain_rule_rhs, fox_derive, fox_vector, jacobian, relation_module_element
from .groupring import (
    GroupRingElt,
    SkewLaurent,
    augmentation,
    format_element,
    format_skew,
    from_skew,
    length,
    to_skew,
)
from .oracles import (
    BSOracle,
    ChainAmalgamOracle,
    CyclicAmalgamOracle,
    FreeOracle,
    NormalForm,
    Oracle,
    equal,
    in_cyclic_subgroup,
    is_trivial,
    nf,
    parse_oracle,
    witness_generation,
)
from .presentations import (
    GroupHom,
    Presentation,
    abelianization_matrix,
    bs,
    bs_with_z_presentation,
    check_hom,
    euler_char,
    format_presentation,
    gbar,
    hbar_window,
    in_integer_row_space,
    parse_presentation,
    staggered_cyclic_chain,
    staggered_window,
    tietze_add_gen,
    tietze_remove_gen,
    tietze_replace_subword,
    trefoil,
    u_substitution_chain,
)
from .scenarios import ScenarioContext, ScenarioReport, run_all, run_scenario
from .words import (
    Gen,
    Word,
    comm,
    conj,
    cyclic_reduce,
    exponent_sum,
    format_word,
    inv,
    mul,
    parse_word,
    power,
    shift_indices,
    substitute,
)

__version__ = "0.1.0"

__all__ = [
    "BSOracle",
    "CayleyBall",
    "ChainAmalgamOracle",
    "CyclicAmalgamOracle",
    "EdgeChain",
    "FoxVector",
    "FreeOracle",
    "Gen",
    "GroupHom",
    "GroupRingElt",
    "NormalForm",
    "Oracle",
    "Presentation",
    "RelmodError",
    "ScenarioContext",
    "ScenarioReport",
    "Settings",
    "SkewLaurent",
    "TwoComplex",
    "Word",
    "abelianization_matrix",
    "augmentation",
    "bs",
    "bs_with_z_presentation",
    "build_ball",
    "chain_rule_rhs",
    "chain_to_fox",
    "check_hom",
    "chi_level_formula",
    "comm",
    "conj",
    "cycle_to_relators",
    "cyclic_reduce",
    "double_presentation",
    "doubled_bs_presentation",
    "equal",
    "euler_char",
    "exponent_sum",
    "format_element",
    "format_presentation",
    "format_skew",
    "format_word",
    "fox_derive",
    "fox_to_chain",
    "fox_vector",
    "from_skew",
    "gbar",
    "get_settings",
    "growth",
    "hbar_window",
    "in_cyclic_subgroup",
    "in_integer_row_space",
    "inv",
    "is_trivial",
    "jacobian",
    "length",
    "lift_word",
    "mul",
    "nf",
    "parse_oracle",
    "parse_presentation",
    "parse_word",
    "path_word",
    "power",
    "relation_module_element",
    "run_all",
    "run_scenario",
    "shift_indices",
    "staggered_cyclic_chain",
    "staggered_window",
    "substitute",
    "tietze_add_gen",
    "tietze_remove_gen",
    "tietze_replace_subword",
    "to_dot",
    "to_skew",
    "trefoil",
    "trefoil_genset",
    "trefoil_ki",
    "trefoil_witnesses",
    "u_substitution_chain",
    "verify_doubled_quotient",
    "verify_trefoil_genset",
    "witness_generation",
]

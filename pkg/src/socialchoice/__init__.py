"""Finite-model checker for simplified Arrow-Sen social choice axioms.

Evaluates first-order axioms about individual and social preferences on
concrete (profile, social order) instances, decides entailment and
(in)consistency claims by exhaustive search over small finite spaces, and
emits reproducible, re-checkable certificates, including a full machine
check of the dictatorship question at the three-alternative, two-voter
base case.
"""

__version__ = "0.1.0"

from .axioms import (
    SD,
    SL,
    SLP,
    SP,
    SSD,
    SSP,
    SV,
    SWD,
    Axiom,
    Instance,
    RightsAssignment,
    admissible_social_set,
    evaluate,
    negate,
    parse_axiom,
    parse_axiom_set,
    parse_rights,
)
from .engine import (
    DecisivenessTrace,
    dictator_certificate,
    find_dictator,
    instance_entails,
    rights_consistent,
    rights_sweep,
    schema_consistent,
    schema_entails_iia,
    theorem_suite,
    verify_certificate,
)
from .certificates import Certificate, parse_certificate
from .prefs import (
    Relation,
    WeakOrder,
    choice_set,
    enumerate_linear_orders,
    enumerate_weak_orders,
    indiff_of,
    parse_ranking,
    strict_of,
    weak_of,
)
from .profiles import (
    PairRestriction,
    Profile,
    ProfileSpace,
    profiles_agree_on_pair,
    restrict_to_pair,
)
from .rules import (
    AggregationRule,
    borda_rule,
    classify,
    constant_rule,
    dictatorship_rule,
    load_rule,
    pairwise_majority_raw,
    parse_rule,
    rule_to_text,
    satisfies_iia,
    satisfies_schema,
    save_rule,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""De Morgan algebras enriched with a perfection operator: finite algebras,
logical matrices, Set-Set/Set-Fmla consequence, and analytic proof search."""

from .algebra import (
    AXIOM_CLASSES,
    AlgebraError,
    BUILTIN_ALGEBRAS,
    Equation,
    FiniteAlgebra,
    builtin_algebra,
    check_axiom_class,
    check_equation,
    derive_nabla,
    derive_perfection,
    evaluate,
    expand_with_nabla,
    expand_with_perfection,
    find_isomorphism,
    load_algebra,
    parse_equation,
    reduct,
    subalgebra,
    translate_to_is,
    translate_to_pp,
    unary_definable_functions,
)
from .calculus import (
    Calculus,
    CalculusError,
    DerivationNode,
    ProofResult,
    Rule,
    RuleInstance,
    builtin_calculus,
    countermodel_from_open,
    lift,
    load_calculus,
    prove_analytic,
    render_tree,
    rule_instances,
    rule_soundness,
    sfmla_prove,
    soundness_report,
    tree_to_doc,
    validate_closed_tree,
)
from .matrices import (
    ConsequenceResult,
    Countermodel,
    Matrix,
    MatrixError,
    builtin_matrix,
    check_logic_properties,
    check_monadicity,
    dat_check,
    expand_matrix,
    find_matrix_isomorphism,
    lattice_filters,
    leibniz_congruence,
    load_matrix,
    order_preserving_consequence,
    reduce_matrix,
    sfmla_consequence,
    sset_consequence,
)
from .syntax import (
    Formula,
    FormulaError,
    SIG_BL,
    SIG_DM,
    SIG_IS,
    SIG_PP,
    Signature,
    apply_substitution,
    canonical_sorted,
    generalized_subformulas,
    parse_formula,
    parse_formula_set,
    props,
    render_formula,
    subformulas,
)

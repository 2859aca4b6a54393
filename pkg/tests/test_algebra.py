import itertools
import random

import pytest

from ppalg.algebra import (
    AlgebraError,
    FiniteAlgebra,
    IS_IDENTITY_EQUATIONS,
    PP_IDENTITY_EQUATIONS,
    builtin_algebra,
    check_axiom_class,
    check_equation,
    derive_nabla,
    derive_perfection,
    evaluate,
    expand_with_nabla,
    expand_with_perfection,
    find_isomorphism,
    parse_equation,
    reduct,
    subalgebra,
    translate_to_is,
    translate_to_pp,
    unary_definable_functions,
)
from ppalg.sampling import random_formula
from ppalg.syntax import SIG_BL, SIG_DM, SIG_IS, SIG_PP, parse_formula, render_formula

DM4 = builtin_algebra("DM4")
K3 = builtin_algebra("K3")
B2 = builtin_algebra("B2")
IS6 = builtin_algebra("IS6")
PP6 = builtin_algebra("PP6")


def test_builtin_tables_match_the_defining_cases():
    # negation on the four-valued lattice: swaps bounds, fixes n and b
    neg = {e: evaluate(parse_formula("~x", SIG_DM), DM4, {"x": e}) for e in DM4.elements}
    assert neg == {"f": "t", "t": "f", "n": "n", "b": "b"}
    # bounds
    assert evaluate(parse_formula("1", SIG_DM), DM4, {}) == "t"
    assert evaluate(parse_formula("0", SIG_DM), PP6, {}) == "F^"
    assert evaluate(parse_formula("1", SIG_DM), PP6, {}) == "T^"
    # perfection marks exactly the two new points
    for e in PP6.elements:
        expected = "T^" if e in ("F^", "T^") else "F^"
        assert evaluate(parse_formula("*x"), PP6, {"x": e}) == expected
    # nabla collapses everything but the bottom to the top
    for e in IS6.elements:
        expected = "F^" if e == "F^" else "T^"
        assert evaluate(parse_formula("!x", SIG_IS), IS6, {"x": e}) == expected
    # the incomparable middle pair
    assert evaluate(parse_formula("x & y", SIG_DM), DM4, {"x": "n", "y": "b"}) == "f"
    assert evaluate(parse_formula("x | y", SIG_DM), DM4, {"x": "n", "y": "b"}) == "t"


def test_evaluate_spec_examples():
    assert evaluate(parse_formula("~p", SIG_DM), DM4, {"p": "n"}) == "n"
    assert evaluate(parse_formula("*p"), PP6, {"p": "b"}) == "F^"
    assert evaluate(parse_formula("!p", SIG_IS), IS6, {"p": "F^"}) == "F^"


def test_evaluate_errors():
    with pytest.raises(AlgebraError):
        evaluate(parse_formula("p", SIG_DM), DM4, {})
    with pytest.raises(AlgebraError):
        evaluate(parse_formula("p", SIG_DM), DM4, {"p": "zz"})
    from ppalg.syntax import FormulaError

    with pytest.raises(FormulaError):
        evaluate(parse_formula("*p"), DM4, {"p": "n"})


def test_check_equation_examples():
    assert check_equation(DM4, parse_equation("~~x = x", SIG_DM)).holds
    result = check_equation(DM4, parse_equation("x | ~x = 1", SIG_DM))
    assert not result.holds
    assert result.witness == {"x": "n"}
    assert check_equation(PP6, parse_equation("**x = 1")).holds


def test_axiom_classes_hold_on_builtins():
    for name in ("B2", "K3", "DM4"):
        assert check_axiom_class(builtin_algebra(name), "DM").holds
    for i in range(2, 7):
        assert check_axiom_class(builtin_algebra(f"IS{i}"), "IS").holds
        assert check_axiom_class(builtin_algebra(f"PP{i}"), "PP").holds


def test_axiom_class_failure_carries_witness():
    broken = FiniteAlgebra(
        "DM4-id-neg",
        SIG_DM,
        DM4.elements,
        {**DM4.tables, "~": tuple(range(4))},
    )
    report = check_axiom_class(broken, "DM")
    assert not report.holds
    names = [name for name, _, _ in report.failures]
    assert "DM2" in names
    for _, _, witness in report.failures:
        assert witness  # a concrete refuting assignment


def test_axiom_class_signature_guard():
    with pytest.raises(AlgebraError):
        check_axiom_class(DM4, "PP")
    with pytest.raises(AlgebraError):
        check_axiom_class(DM4, "nope")


def test_expansions_match_builtins_exactly():
    assert expand_with_perfection(DM4) == PP6
    assert expand_with_perfection(K3) == builtin_algebra("PP5")
    assert expand_with_perfection(B2) == builtin_algebra("PP4")
    assert expand_with_nabla(DM4) == IS6
    assert expand_with_nabla(K3) == builtin_algebra("IS5")
    assert expand_with_nabla(B2) == builtin_algebra("IS4")


def test_expansion_output_is_a_pp_algebra():
    for name in ("B2", "K3", "DM4"):
        assert check_axiom_class(expand_with_perfection(builtin_algebra(name)), "PP").holds
        assert check_axiom_class(expand_with_nabla(builtin_algebra(name)), "IS").holds


def test_expansion_requires_a_de_morgan_algebra():
    broken = FiniteAlgebra(
        "broken", SIG_DM, DM4.elements, {**DM4.tables, "~": (0, 1, 2, 3)}
    )
    with pytest.raises(AlgebraError):
        expand_with_perfection(broken)
    with pytest.raises(AlgebraError):
        expand_with_perfection(PP6)  # wrong signature


def test_expansion_resolves_name_collisions():
    renamed = FiniteAlgebra(
        "odd", SIG_DM, ("F^", "T^"), {**B2.tables}
    )
    expanded = expand_with_perfection(renamed)
    assert expanded.elements == ("F^'", "F^", "T^", "T^'")
    assert check_axiom_class(expanded, "PP").holds


def test_derivations_round_trip_on_the_catalog():
    for i in range(2, 7):
        is_i = builtin_algebra(f"IS{i}")
        pp_i = builtin_algebra(f"PP{i}")
        assert derive_perfection(is_i) == pp_i
        assert derive_nabla(pp_i) == is_i
        assert derive_nabla(derive_perfection(is_i)) == is_i
        assert derive_perfection(derive_nabla(pp_i)) == pp_i


def test_derivation_preconditions():
    with pytest.raises(AlgebraError):
        derive_perfection(PP6)  # not an IS signature
    with pytest.raises(AlgebraError):
        derive_nabla(IS6)


def test_identity_lemma_equations():
    for i in range(2, 7):
        is_i = builtin_algebra(f"IS{i}")
        pp_i = builtin_algebra(f"PP{i}")
        for eq in IS_IDENTITY_EQUATIONS:
            assert check_equation(is_i, eq).holds, f"IS{i}: {eq}"
        for eq in PP_IDENTITY_EQUATIONS:
            assert check_equation(pp_i, eq).holds, f"PP{i}: {eq}"


def test_translation_examples():
    assert render_formula(translate_to_pp(parse_formula("!p", SIG_IS))) == "~*p | p"
    assert render_formula(translate_to_is(parse_formula("*p"))) == "~!(p & ~p)"
    assert translate_to_pp(parse_formula("p", SIG_IS)) == parse_formula("p")
    assert translate_to_is(parse_formula("1")) == parse_formula("1")
    nested = translate_to_pp(parse_formula("!!p", SIG_IS))
    assert render_formula(nested) == "~*(~*p | p) | (~*p | p)"


def test_translation_round_trip_is_semantically_invisible():
    rng = random.Random(23)
    variables = ("p", "q", "r")
    for _ in range(40):
        phi = random_formula(rng, SIG_IS, variables, max_depth=4)
        back = translate_to_is(translate_to_pp(phi))
        for values in itertools.product(IS6.elements, repeat=3):
            h = dict(zip(variables, values))
            assert evaluate(back, IS6, h) == evaluate(phi, IS6, h)
    for _ in range(40):
        phi = random_formula(rng, SIG_PP, variables, max_depth=4)
        back = translate_to_pp(translate_to_is(phi))
        for values in itertools.product(PP6.elements, repeat=3):
            h = dict(zip(variables, values))
            assert evaluate(back, PP6, h) == evaluate(phi, PP6, h)


def test_reduct():
    assert reduct(PP6, SIG_DM) == reduct(IS6, SIG_DM)
    assert reduct(PP6, PP6.signature) == PP6
    assert reduct(expand_with_perfection(DM4), SIG_DM) == reduct(PP6, SIG_DM)
    with pytest.raises(AlgebraError):
        reduct(DM4, SIG_PP)
    assert set(reduct(PP6, SIG_BL).signature.connectives) == {"&", "|", "1", "0"}


def test_subalgebra_closure_check():
    with pytest.raises(AlgebraError):
        subalgebra(DM4, ("n", "b"))  # not closed under meet


def test_unary_clone_of_pp2_is_everything():
    fns = unary_definable_functions(builtin_algebra("PP2"))
    assert len(fns) == 4  # all unary maps on a two-element carrier
    assert ("F^", "T^") in fns and render_formula(fns[("F^", "T^")]) == "p"


def test_unary_clone_identity_always_seeded():
    fns = unary_definable_functions(DM4)
    assert render_formula(fns[tuple(DM4.elements)]) == "p"


def test_unary_clone_guard():
    big = FiniteAlgebra(
        "big9",
        SIG_BL,
        tuple(f"e{i}" for i in range(9)),
        {
            "&": tuple(tuple(min(i, j) for j in range(9)) for i in range(9)),
            "|": tuple(tuple(max(i, j) for j in range(9)) for i in range(9)),
            "1": 8,
            "0": 0,
        },
    )
    with pytest.raises(AlgebraError):
        unary_definable_functions(big)


def test_no_boolean_complement_is_definable_in_pp6():
    clone = unary_definable_functions(PP6)
    top, bottom = "T^", "F^"
    join = parse_formula("x | y")
    meet = parse_formula("x & y")
    for image in clone:
        complements = all(
            evaluate(join, PP6, {"x": a, "y": g}) == top
            and evaluate(meet, PP6, {"x": a, "y": g}) == bottom
            for a, g in zip(PP6.elements, image)
        )
        assert not complements


def test_algebra_document_round_trip():
    doc = PP6.to_doc()
    clone = FiniteAlgebra.from_doc(doc)
    assert clone == PP6
    assert clone.name == "PP6"
    with pytest.raises(AlgebraError):
        FiniteAlgebra.from_doc({"name": "x"})


def test_algebra_equality_ignores_display_name():
    renamed = FiniteAlgebra("other", PP6.signature, PP6.elements, PP6.tables)
    assert renamed == PP6


def test_isomorphism_search():
    iso = find_isomorphism(DM4, DM4)
    assert iso is not None
    assert find_isomorphism(DM4, K3) is None
    assert find_isomorphism(B2, builtin_algebra("PP2")) is None  # signatures differ
    # the DM-reducts of PP2 and B2 are isomorphic
    assert find_isomorphism(reduct(builtin_algebra("PP2"), SIG_DM), B2) == {
        "F^": "f",
        "T^": "t",
    }

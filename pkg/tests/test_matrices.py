import random

import pytest

from ppalg.algebra import builtin_algebra, reduct
from ppalg.matrices import (
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
    order_preserving_consequence,
    reduce_matrix,
    sfmla_consequence,
    sset_consequence,
)
from ppalg.sampling import random_statement
from ppalg.syntax import SIG_DM, SIG_PP, parse_formula, parse_formula_set

DM4_B = builtin_matrix("DM4:up_b")
PP6_B = builtin_matrix("PP6:up_b")
PP6 = builtin_algebra("PP6")


def dm(text):
    return parse_formula(text, SIG_DM)


def test_builtin_matrix_addressing():
    assert DM4_B.designated == ("b", "t")
    assert PP6_B.designated == ("b", "t", "T^")
    assert builtin_matrix("PP3:only_T^").designated == ("T^",)
    assert builtin_matrix("K3:up_n").designated == ("n", "t")
    with pytest.raises(MatrixError):
        builtin_matrix("PP6")
    with pytest.raises(MatrixError):
        builtin_matrix("PP6:up_zz")
    with pytest.raises(MatrixError):
        builtin_matrix("PP6:down_b")


def test_trivial_flag():
    assert Matrix(builtin_algebra("B2"), ("f", "t")).is_trivial
    assert not DM4_B.is_trivial


def test_consequence_figure_two_equivalence():
    left, right = dm("~(p & q)"), dm("~p | ~q")
    assert sset_consequence([DM4_B], [left], [right]).holds
    assert sset_consequence([DM4_B], [right], [left]).holds
    disj = dm("p | 0")
    assert sset_consequence([DM4_B], [disj], [dm("p"), dm("q")]).holds
    assert sset_consequence([DM4_B], [dm("p"), dm("q")], [disj]).holds


def test_consequence_countermodels_are_lexicographically_first():
    result = sset_consequence([DM4_B], [dm("p"), dm("~p")], [dm("q")])
    assert not result.holds
    assert result.countermodel.assignment == {"p": "b", "q": "f"}

    result = sfmla_consequence([PP6_B], [], parse_formula("p | ~p"))
    assert not result.holds
    assert result.countermodel.assignment == {"p": "n"}


def test_consequence_figure_three_statements():
    assert sset_consequence([PP6_B], [], parse_formula_set("p, ~p, ~*p")).holds
    second = sset_consequence([PP6_B], [], parse_formula_set("p, ~*p"))
    assert not second.holds
    assert second.countermodel.assignment == {"p": "F^"}
    third = sset_consequence([PP6_B], [], parse_formula_set("p, *p & ~p"))
    assert not third.holds


def test_sfmla_examples():
    assert sfmla_consequence([PP6_B], [parse_formula("p & q")], parse_formula("p")).holds
    pp2 = builtin_matrix("PP2:only_T^")
    assert sfmla_consequence([pp2], [], parse_formula("p | ~p")).holds


def test_consequence_errors():
    with pytest.raises(MatrixError):
        sset_consequence([], [dm("p")], [dm("q")])
    from ppalg.syntax import FormulaError

    with pytest.raises(FormulaError):
        sset_consequence([DM4_B], [parse_formula("*p")], [])


def test_empty_statement_edges():
    # no variables at all: the unique empty valuation decides
    assert sset_consequence([PP6_B], [], [parse_formula("1")]).holds
    assert not sset_consequence([PP6_B], [], [parse_formula("0")]).holds
    assert sset_consequence([PP6_B], [parse_formula("0")], []).holds
    assert not sset_consequence([PP6_B], [parse_formula("1")], []).holds


def test_lattice_filters_of_pp6():
    filters = lattice_filters(PP6)
    assert len(filters) == 6
    assert ("T^",) in filters
    assert ("b", "t", "T^") in filters
    assert tuple(PP6.elements) in filters
    prime = lattice_filters(PP6, prime_only=True)
    assert sorted(prime) == sorted(
        [("T^",), ("b", "t", "T^"), ("n", "t", "T^"), ("f", "n", "b", "t", "T^")]
    )
    assert lattice_filters(builtin_algebra("B2"), prime_only=True) == [("t",)]


def test_order_preserving_examples():
    assert order_preserving_consequence(PP6, [parse_formula("p")], [parse_formula("p | q")]).holds
    assert order_preserving_consequence(PP6, [], [parse_formula("1")]).holds
    failing = order_preserving_consequence(PP6, parse_formula_set("p, ~p"), [parse_formula("q")])
    assert not failing.holds
    assert failing.witness is not None


def test_order_preserving_agrees_with_filter_semantics_on_samples():
    filter_matrices = [Matrix(PP6, d) for d in lattice_filters(PP6)]
    rng = random.Random(41)
    for _ in range(60):
        prem, conc = random_statement(rng, SIG_PP, max_depth=3, nonempty_succedent=True)
        assert (
            order_preserving_consequence(PP6, prem, conc).holds
            == sset_consequence(filter_matrices, prem, conc).holds
        )


def test_one_assertional_logic_is_three_valued_on_samples():
    # over the designated-top matrices, the six-element algebra adds nothing
    pp3 = builtin_matrix("PP3:only_T^")
    pp6_top = builtin_matrix("PP6:only_T^")
    rng = random.Random(31)
    for _ in range(100):
        prem, conc = random_statement(rng, SIG_PP, max_depth=3)
        assert (
            sset_consequence([pp3], prem, conc).holds
            == sset_consequence([pp6_top], prem, conc).holds
        )


def test_expand_matrix_identities():
    assert expand_matrix(builtin_matrix("DM4:up_b")) == builtin_matrix("PP6:up_b")
    assert expand_matrix(builtin_matrix("K3:up_n")) == builtin_matrix("PP5:up_n")
    assert expand_matrix(builtin_matrix("K3:only_t")) == builtin_matrix("PP5:up_t")
    assert expand_matrix(builtin_matrix("B2:only_t")) == builtin_matrix("PP4:up_t")


def test_leibniz_congruence():
    assert leibniz_congruence(DM4_B).is_identity
    trivial = Matrix(builtin_algebra("B2"), ("f", "t"))
    assert leibniz_congruence(trivial).blocks == (("f", "t"),)
    # compatibility: no block mixes designated and undesignated values
    reduct_matrix = Matrix(reduct(PP6, SIG_DM, "PP6-dm"), ("b", "t", "T^"))
    partition = leibniz_congruence(reduct_matrix)
    for block in partition.blocks:
        flags = {reduct_matrix.designates(e) for e in block}
        assert len(flags) == 1
    # the hats collapse onto the old bounds once perfection is forgotten
    assert partition.block_of("T^") == ("t", "T^")
    assert partition.block_of("F^") == ("F^", "f")


def test_leibniz_output_is_a_congruence():
    # independent re-check straight from the tables
    import itertools as it

    for spec in ("DM4:up_b", "PP5:up_t", "K3:up_n"):
        matrix = builtin_matrix(spec)
        algebra = matrix.algebra
        partition = leibniz_congruence(matrix)
        block_of = {e: i for i, block in enumerate(partition.blocks) for e in block}
        for conn, arity in algebra.signature.connectives.items():
            for args_a in it.product(algebra.elements, repeat=arity):
                for args_b in it.product(algebra.elements, repeat=arity):
                    if all(block_of[x] == block_of[y] for x, y in zip(args_a, args_b)):
                        va = algebra.elements[
                            algebra.op(conn, *(algebra.index[x] for x in args_a))
                        ]
                        vb = algebra.elements[
                            algebra.op(conn, *(algebra.index[y] for y in args_b))
                        ]
                        assert block_of[va] == block_of[vb]


def test_reduce_matrix():
    trivial = Matrix(builtin_algebra("B2"), ("f", "t"))
    assert len(reduce_matrix(trivial).algebra) == 1
    assert reduce_matrix(DM4_B) == DM4_B

    reduct_matrix = Matrix(reduct(PP6, SIG_DM, "PP6-dm"), ("b", "t", "T^"))
    reduced = reduce_matrix(reduct_matrix)
    assert len(reduced.algebra) == 4
    iso = find_matrix_isomorphism(reduced, reduce_matrix(DM4_B))
    assert iso is not None

    # consequence is preserved under reduction, on samples
    rng = random.Random(8)
    for _ in range(60):
        prem, conc = random_statement(rng, SIG_DM, max_depth=3)
        assert (
            sset_consequence([reduct_matrix], prem, conc).holds
            == sset_consequence([reduced], prem, conc).holds
        )


def test_leibniz_guard():
    big = Matrix(
        reduct(PP6, SIG_DM, "six"), ("T^",)
    )  # six elements is fine; fabricate nine to trip the guard
    assert leibniz_congruence(big) is not None
    from ppalg.algebra import FiniteAlgebra
    from ppalg.syntax import SIG_BL

    nine = FiniteAlgebra(
        "nine",
        SIG_BL,
        tuple(f"e{i}" for i in range(9)),
        {
            "&": tuple(tuple(min(i, j) for j in range(9)) for i in range(9)),
            "|": tuple(tuple(max(i, j) for j in range(9)) for i in range(9)),
            "1": 8,
            "0": 0,
        },
    )
    with pytest.raises(MatrixError):
        leibniz_congruence(Matrix(nine, ("e8",)))


def test_logic_properties():
    report = check_logic_properties(PP6_B)
    assert report.paraconsistent and report.paracomplete
    assert report.gently_explosive and report.gently_implosive
    assert report.lfi and report.lfu and report.paradefinite

    fde = check_logic_properties(DM4_B)
    assert fde.paradefinite
    assert fde.gently_explosive is None and fde.lfi is None

    classical = check_logic_properties(builtin_matrix("PP2:only_T^"))
    assert not classical.paraconsistent and not classical.paracomplete


def test_dat_examples():
    report = dat_check(parse_formula_set("p & ~p", SIG_DM), parse_formula_set("q", SIG_DM))
    assert report.classical.holds and report.enriched.holds and report.agree
    report = dat_check([], parse_formula_set("p | ~p", SIG_DM))
    assert report.classical.holds and report.enriched.holds and report.agree
    report = dat_check(parse_formula_set("p", SIG_DM), parse_formula_set("q", SIG_DM))
    assert not report.classical.holds and not report.enriched.holds and report.agree
    assert [str(f) for f in report.perfection_premises] == ["*p", "*q"]


def test_monadicity():
    assert check_monadicity(DM4_B, parse_formula_set("p, ~p", SIG_DM)).holds
    assert check_monadicity(PP6_B, parse_formula_set("p, *p, ~p")).holds
    failing = check_monadicity(PP6_B, parse_formula_set("p"))
    assert not failing.holds
    assert failing.undiscriminated == ("F^", "f")
    with pytest.raises(MatrixError):
        check_monadicity(PP6_B, [parse_formula("p & q")])


def test_matrix_document_round_trip(tmp_path):
    doc = PP6_B.to_doc()
    assert doc["algebra"] == "PP6"
    clone = Matrix.from_doc(doc)
    assert clone == PP6_B
    inline = Matrix.from_doc(PP6_B.to_doc(inline=True))
    assert inline == PP6_B

    path = tmp_path / "m.json"
    import json

    path.write_text(json.dumps(PP6_B.to_doc(inline=True)))
    from ppalg.matrices import load_matrix

    assert load_matrix(str(path)) == PP6_B


def test_countermodel_description_block():
    result = sset_consequence([DM4_B], [dm("p"), dm("~p")], [dm("q")])
    text = result.countermodel.describe([dm("p"), dm("~p")], [dm("q")])
    assert "p = b" in text
    assert "q = f" in text
    assert "designated" in text and "undesignated" in text

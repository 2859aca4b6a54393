"""Logical matrices and their Set-Set / Set-Fmla consequence relations.

Also: lattice-filter enumeration, the order-preserving (equation-based)
consequence, the matrix expansion M -> M°, Leibniz congruences and matrix
reduction, logic-property reports (paraconsistency, gentle explosion, ...),
the classical-recovery check, and monadicity.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .algebra import (
    AlgebraError,
    Equation,
    FiniteAlgebra,
    _eval_indexed,
    check_equation,
    expand_with_perfection,
    load_algebra,
)
from .syntax import (
    AND,
    CIRC,
    NEG,
    OR,
    Formula,
    big_conjunction,
    big_disjunction,
    canonical_sorted,
    check_in_signature,
    circ,
    neg,
    props_of_set,
    render_formula,
    var,
)


class MatrixError(Exception):
    pass


class Matrix:
    """A finite algebra with a designated subset of its carrier."""

    def __init__(self, algebra: FiniteAlgebra, designated, name: str = ""):
        self.algebra = algebra
        unknown = [d for d in designated if d not in algebra.index]
        if unknown:
            raise MatrixError(f"designated values {unknown} are not elements")
        self.designated = tuple(e for e in algebra.elements if e in set(designated))
        self.designated_indices = frozenset(algebra.index[e] for e in self.designated)
        self.name = name or algebra.name

    @property
    def is_trivial(self) -> bool:
        return len(self.designated) == len(self.algebra.elements)

    def designates(self, element: str) -> bool:
        return element in set(self.designated)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and self.algebra == other.algebra
            and self.designated == other.designated
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.designated))

    def __repr__(self) -> str:
        return f"Matrix({self.name}, designated={self.designated})"

    def to_doc(self, inline: bool = False) -> dict:
        from .algebra import BUILTIN_ALGEBRAS

        by_name = not inline and self.algebra.name in BUILTIN_ALGEBRAS
        algebra = self.algebra.name if by_name else self.algebra.to_doc()
        return {"algebra": algebra, "designated": list(self.designated)}

    @staticmethod
    def from_doc(doc: dict) -> "Matrix":
        try:
            spec = doc["algebra"]
            algebra = FiniteAlgebra.from_doc(spec) if isinstance(spec, dict) else load_algebra(spec)
            return Matrix(algebra, doc["designated"])
        except (KeyError, TypeError) as exc:
            raise MatrixError(f"malformed matrix document: {exc}") from exc

    @staticmethod
    def from_json(text: str) -> "Matrix":
        return Matrix.from_doc(json.loads(text))


def builtin_matrix(spec: str) -> Matrix:
    """Resolve ``NAME:up_X`` (principal upset) or ``NAME:only_X`` (singleton)."""
    if ":" not in spec:
        raise MatrixError(f"matrix spec {spec!r} must look like NAME:up_X or NAME:only_X")
    algebra_name, designation = spec.split(":", 1)
    algebra = load_algebra(algebra_name)
    if designation.startswith("up_"):
        element = designation[3:]
        if element not in algebra.index:
            raise MatrixError(f"{element!r} is not an element of {algebra_name}")
        return Matrix(algebra, algebra.upset(element), spec)
    if designation.startswith("only_"):
        element = designation[5:]
        if element not in algebra.index:
            raise MatrixError(f"{element!r} is not an element of {algebra_name}")
        return Matrix(algebra, (element,), spec)
    raise MatrixError(f"bad designation {designation!r} (use up_X or only_X)")


def load_matrix(spec: str) -> Matrix:
    """A ``NAME:up_X`` / ``NAME:only_X`` spec, or a path to a matrix document."""
    try:
        return builtin_matrix(spec)
    except (MatrixError, AlgebraError) as exc:
        builtin_error = exc
    try:
        with open(spec, "r", encoding="utf-8") as handle:
            return Matrix.from_json(handle.read())
    except OSError:
        raise MatrixError(f"cannot resolve matrix {spec!r}: {builtin_error}") from None


# ---------------------------------------------------------------------------
# Consequence

@dataclass(frozen=True)
class Countermodel:
    matrix: Matrix
    assignment: dict[str, str]

    def value(self, phi: Formula) -> str:
        env = {v: self.matrix.algebra.index[e] for v, e in self.assignment.items()}
        return self.matrix.algebra.elements[_eval_indexed(phi, self.matrix.algebra, env)]

    def describe(self, premises, conclusions) -> str:
        lines = [f"countermodel in {self.matrix.name}:"]
        for v in sorted(self.assignment):
            lines.append(f"  {v} = {self.assignment[v]}")
        lines.append("  formula values:")
        for phi in canonical_sorted(premises):
            value = self.value(phi)
            flag = "designated" if self.matrix.designates(value) else "undesignated"
            lines.append(f"    premise    {render_formula(phi)} = {value}  ({flag})")
        for phi in canonical_sorted(conclusions):
            value = self.value(phi)
            flag = "designated" if self.matrix.designates(value) else "undesignated"
            lines.append(f"    conclusion {render_formula(phi)} = {value}  ({flag})")
        return "\n".join(lines)


@dataclass(frozen=True)
class ConsequenceResult:
    holds: bool
    countermodel: Countermodel | None = None

    def __bool__(self) -> bool:
        return self.holds


def _check_signatures(matrix: Matrix, formulas) -> None:
    for phi in formulas:
        check_in_signature(phi, matrix.algebra.signature)


def sset_consequence(matrices, premises, conclusions) -> ConsequenceResult:
    """Does every valuation of every matrix designating all premises designate
    some conclusion?  On failure: the first countermodel in (matrix order,
    lexicographic valuation order)."""
    matrices = list(matrices)
    if not matrices:
        raise MatrixError("at least one matrix is required")
    premises = canonical_sorted(premises)
    conclusions = canonical_sorted(conclusions)
    variables = sorted(props_of_set(premises + conclusions))
    for matrix in matrices:
        _check_signatures(matrix, premises + conclusions)
        algebra = matrix.algebra
        designated = matrix.designated_indices
        order = _dependency_order(premises + conclusions)
        for values in itertools.product(range(len(algebra)), repeat=len(variables)):
            cache: dict[Formula, int] = {}
            env = dict(zip(variables, values))
            for phi in order:
                if phi.is_variable:
                    cache[phi] = env[phi.head]
                else:
                    cache[phi] = algebra.op(phi.head, *(cache[a] for a in phi.args))
            if all(cache[p] in designated for p in premises) and all(
                cache[c] not in designated for c in conclusions
            ):
                assignment = {v: algebra.elements[i] for v, i in env.items()}
                return ConsequenceResult(False, Countermodel(matrix, assignment))
    return ConsequenceResult(True)


def _dependency_order(formulas) -> list[Formula]:
    """Subformulas before superformulas, each exactly once."""
    seen: set[Formula] = set()
    out: list[Formula] = []

    def visit(phi: Formula) -> None:
        if phi in seen:
            return
        for a in phi.args:
            visit(a)
        seen.add(phi)
        out.append(phi)

    for phi in formulas:
        visit(phi)
    return out


def sfmla_consequence(matrices, premises, conclusion: Formula) -> ConsequenceResult:
    return sset_consequence(matrices, premises, [conclusion])


# ---------------------------------------------------------------------------
# Filters and the order-preserving consequence

def lattice_filters(algebra: FiniteAlgebra, prime_only: bool = False) -> list[tuple[str, ...]]:
    """All non-empty lattice filters (up-closed, meet-closed); with the flag,
    only the proper prime ones.  Ordered by (size, element positions)."""
    algebra.check_lattice()
    n = len(algebra)
    filters = []
    for bits in itertools.product((False, True), repeat=n):
        subset = frozenset(i for i in range(n) if bits[i])
        if not subset:
            continue
        if any(
            algebra.leq(i, j) and i in subset and j not in subset
            for i in range(n)
            for j in range(n)
        ):
            continue
        if any(algebra.op(AND, i, j) not in subset for i in subset for j in subset):
            continue
        if prime_only:
            if len(subset) == n:
                continue
            if any(
                algebra.op(OR, i, j) in subset and i not in subset and j not in subset
                for i in range(n)
                for j in range(n)
            ):
                continue
        filters.append(subset)
    filters.sort(key=lambda s: (len(s), sorted(s)))
    return [tuple(algebra.elements[i] for i in sorted(s)) for s in filters]


def order_preserving_consequence(algebra: FiniteAlgebra, premises, conclusions) -> EquationCheck:
    """Validity of  /\\premises = /\\premises & \\/conclusions  on ``algebra``
    (with the empty meet = 1 and the empty join = 0).

    ``algebra`` is assumed to generate its variety, so checking the equation on
    it alone decides validity variety-wide; the full premise and conclusion
    sets are used because enlarging them only moves the two sides monotonically.
    """
    algebra.check_lattice()
    lhs = big_conjunction(premises)
    rhs = Formula(AND, (lhs, big_disjunction(conclusions)))
    result = check_equation(algebra, Equation(lhs, rhs))
    return EquationCheck(result.holds, result.witness)


@dataclass(frozen=True)
class EquationCheck:
    holds: bool
    witness: dict[str, str] | None

    def __bool__(self) -> bool:
        return self.holds


# ---------------------------------------------------------------------------
# Matrix expansion

def expand_matrix(matrix: Matrix, name: str = "") -> Matrix:
    """The perfection expansion: algebra A°, designated set D plus the new top."""
    algebra = expand_with_perfection(matrix.algebra)
    new_top = algebra.elements[-1]
    return Matrix(algebra, tuple(matrix.designated) + (new_top,),
                  name or (matrix.name and f"{matrix.name}^o"))


# ---------------------------------------------------------------------------
# Leibniz congruence and reduction

LEIBNIZ_GUARD = 8


@dataclass(frozen=True)
class CongruencePartition:
    blocks: tuple[tuple[str, ...], ...]

    def block_of(self, element: str) -> tuple[str, ...]:
        for block in self.blocks:
            if element in block:
                return block
        raise KeyError(element)

    @property
    def is_identity(self) -> bool:
        return all(len(block) == 1 for block in self.blocks)


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def _is_congruence(algebra: FiniteAlgebra, block_of: list[int]) -> bool:
    for conn, arity in algebra.signature.connectives.items():
        if arity == 0:
            continue
        images: dict[tuple[int, ...], int] = {}
        for args in itertools.product(range(len(algebra)), repeat=arity):
            key = tuple(block_of[a] for a in args)
            image = block_of[algebra.op(conn, *args)]
            if images.setdefault(key, image) != image:
                return False
    return True


def leibniz_congruence(matrix: Matrix) -> CongruencePartition:
    """The greatest congruence compatible with the designated set, found by
    enumerating all partitions of the carrier (guarded to small algebras)."""
    algebra = matrix.algebra
    n = len(algebra)
    if n > LEIBNIZ_GUARD:
        raise MatrixError(f"carrier too large for partition enumeration (|A| > {LEIBNIZ_GUARD})")
    designated = matrix.designated_indices
    compatible: list[list[list[int]]] = []
    for partition in _set_partitions(list(range(n))):
        block_of = [0] * n
        for b, block in enumerate(partition):
            for i in block:
                block_of[i] = b
        if any(
            (i in designated) != (j in designated)
            for block in partition
            for i in block
            for j in block
        ):
            continue
        if _is_congruence(algebra, block_of):
            compatible.append(partition)

    def as_relation(partition) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for block in partition for i in block for j in block)

    relations = [as_relation(p) for p in compatible]
    greatest = [p for p, r in zip(compatible, relations) if all(s <= r for s in relations)]
    assert len(greatest) == 1, "the compatible congruences must have a unique greatest element"
    blocks = sorted(
        (tuple(algebra.elements[i] for i in sorted(block)) for block in greatest[0]),
        key=lambda block: algebra.index[block[0]],
    )
    return CongruencePartition(tuple(blocks))


def reduce_matrix(matrix: Matrix) -> Matrix:
    """Quotient by the Leibniz congruence; blocks are named by their first member."""
    partition = leibniz_congruence(matrix)
    algebra = matrix.algebra
    block_index: dict[str, int] = {}
    for b, block in enumerate(partition.blocks):
        for e in block:
            block_index[e] = b
    names = tuple(block[0] for block in partition.blocks)
    reps = [algebra.index[name] for name in names]

    def quotient(conn: str, arity: int):
        def walk(level: int, prefix: tuple[int, ...]):
            if level == 0:
                return block_index[algebra.elements[algebra.op(conn, *prefix)]]
            return tuple(walk(level - 1, prefix + (r,)) for r in reps)

        return walk(arity, ())

    tables = {
        conn: quotient(conn, algebra.signature.arity(conn))
        for conn in algebra.signature.connectives
    }
    quotient_algebra = FiniteAlgebra(
        matrix.algebra.name and f"{matrix.algebra.name}*", algebra.signature, names, tables
    )
    designated = tuple(
        name for name in names if algebra.index[name] in matrix.designated_indices
    )
    return Matrix(quotient_algebra, designated, matrix.name and f"Reduce({matrix.name})")


def find_matrix_isomorphism(a: Matrix, b: Matrix) -> dict[str, str] | None:
    """A table- and designation-preserving bijection, or None."""
    from .algebra import find_isomorphism

    mapping = find_isomorphism(a.algebra, b.algebra)
    if mapping is None:
        return None
    if {mapping[d] for d in a.designated} == set(b.designated):
        return mapping
    # The first algebra isomorphism may miss the designated sets; try them all.
    n = len(a.algebra)
    for perm in itertools.permutations(range(n)):
        image = {a.algebra.elements[i]: b.algebra.elements[perm[i]] for i in range(n)}
        if {image[d] for d in a.designated} != set(b.designated):
            continue
        ok = True
        for conn, arity in a.algebra.signature.connectives.items():
            for args in itertools.product(range(n), repeat=arity):
                if perm[a.algebra.op(conn, *args)] != b.algebra.op(conn, *(perm[x] for x in args)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return image
    return None


# ---------------------------------------------------------------------------
# Logic properties

@dataclass(frozen=True)
class LogicProperties:
    paraconsistent: bool
    paracomplete: bool
    gently_explosive: bool | None
    gently_implosive: bool | None

    @property
    def paradefinite(self) -> bool:
        return self.paraconsistent and self.paracomplete

    @property
    def lfi(self) -> bool | None:
        if self.gently_explosive is None:
            return None
        return self.paraconsistent and self.gently_explosive

    @property
    def lfu(self) -> bool | None:
        if self.gently_implosive is None:
            return None
        return self.paracomplete and self.gently_implosive


def check_logic_properties(matrix: Matrix) -> LogicProperties:
    """Paraconsistency/paracompleteness, and (when the perfection connective is
    available) gentle explosion via {*p} and gentle implosion via {~*p}."""
    if NEG not in matrix.algebra.signature:
        raise MatrixError("logic-property checks need the negation connective")
    p, q = var("p"), var("q")
    ms = [matrix]
    paraconsistent = not sset_consequence(ms, [p, neg(p)], [q]).holds
    paracomplete = not sset_consequence(ms, [q], [p, neg(p)]).holds
    if CIRC not in matrix.algebra.signature:
        return LogicProperties(paraconsistent, paracomplete, None, None)
    explosive = (
        not sset_consequence(ms, [circ(p), p], []).holds
        and not sset_consequence(ms, [circ(p), neg(p)], []).holds
        and sset_consequence(ms, [circ(p), p, neg(p)], []).holds
    )
    implosive = (
        not sset_consequence(ms, [], [p, neg(circ(p))]).holds
        and not sset_consequence(ms, [], [neg(p), neg(circ(p))]).holds
        and sset_consequence(ms, [], [p, neg(p), neg(circ(p))]).holds
    )
    return LogicProperties(paraconsistent, paracomplete, explosive, implosive)


# ---------------------------------------------------------------------------
# Recovery of classical reasoning

@dataclass(frozen=True)
class RecoveryReport:
    classical: ConsequenceResult
    enriched: ConsequenceResult
    perfection_premises: tuple[Formula, ...]

    @property
    def agree(self) -> bool:
        return self.classical.holds == self.enriched.holds


def classical_matrix() -> Matrix:
    from .algebra import builtin_algebra

    return Matrix(builtin_algebra("B2"), ("t",), "CL")


def dat_check(premises, conclusions, matrix_pp: Matrix | None = None) -> RecoveryReport:
    """Classical consequence versus consequence with *p added for every variable
    of the statement, over a PP-expanded matrix (default: PP6 with upset of b)."""
    for phi in list(premises) + list(conclusions):
        check_in_signature(phi, classical_matrix().algebra.signature)
    if matrix_pp is None:
        matrix_pp = builtin_matrix("PP6:up_b")
    classical = sset_consequence([classical_matrix()], premises, conclusions)
    perfection = tuple(circ(var(v)) for v in sorted(props_of_set(list(premises) + list(conclusions))))
    enriched = sset_consequence([matrix_pp], list(premises) + list(perfection), conclusions)
    return RecoveryReport(classical, enriched, perfection)


# ---------------------------------------------------------------------------
# Monadicity

@dataclass(frozen=True)
class MonadicityResult:
    holds: bool
    undiscriminated: tuple[str, str] | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_monadicity(matrix: Matrix, separators) -> MonadicityResult:
    """Is every pair of distinct elements told apart by the designation of some
    one-variable separator?  On failure: the first pair in element order."""
    algebra = matrix.algebra
    profiles = []
    for i in range(len(algebra)):
        profile = []
        for s in separators:
            s_vars = sorted(props_of_set([s]))
            if len(s_vars) > 1:
                raise MatrixError(f"separator {render_formula(s)} has more than one variable")
            env = {s_vars[0]: i} if s_vars else {}
            profile.append(_eval_indexed(s, algebra, env) in matrix.designated_indices)
        profiles.append(tuple(profile))
    for i, j in itertools.combinations(range(len(algebra)), 2):
        if profiles[i] == profiles[j]:
            return MonadicityResult(False, (algebra.elements[i], algebra.elements[j]))
    return MonadicityResult(True)

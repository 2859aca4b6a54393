"""Finite algebras over the bL/DM/IS/PP signatures.

Includes the built-in catalog (B2, K3, DM4, IS2..IS6, PP2..PP6), equation and
axiom-class checking, the perfection/nabla expansions of De Morgan algebras,
the term-induced perfection/nabla derivations, and the IS<->PP translations.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .syntax import (
    AND,
    BOT,
    CIRC,
    NABLA,
    NEG,
    OR,
    SIG_BL,
    SIG_DM,
    SIG_IS,
    SIG_PP,
    TOP,
    Formula,
    Signature,
    check_in_signature,
    circ,
    conj,
    disj,
    nabla,
    neg,
    parse_formula,
    props,
    render_formula,
    var,
)


class AlgebraError(Exception):
    pass


@dataclass(frozen=True)
class Equation:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return f"{render_formula(self.lhs)} = {render_formula(self.rhs)}"


def parse_equation(text: str, sig: Signature = SIG_PP) -> Equation:
    parts = text.split("=")
    if len(parts) != 2:
        raise AlgebraError(f"an equation must have exactly one '=': {text!r}")
    return Equation(parse_formula(parts[0], sig), parse_formula(parts[1], sig))


@dataclass(frozen=True)
class EquationResult:
    holds: bool
    witness: dict[str, str] | None = None

    def __bool__(self) -> bool:
        return self.holds


class FiniteAlgebra:
    """Carrier (ordered element names) plus one total table per connective.

    Tables store element indices: nullary tables are ints, a k-ary table is a
    nested tuple indexed by the argument positions.
    """

    def __init__(self, name: str, signature: Signature, elements, tables: dict):
        self.name = name
        self.signature = signature
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise AlgebraError(f"duplicate element names in {name!r}")
        if not self.elements:
            raise AlgebraError("the carrier must be non-empty")
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.tables = {conn: self._freeze(conn, table) for conn, table in tables.items()}
        missing = set(signature.connectives) - set(self.tables)
        extra = set(self.tables) - set(signature.connectives)
        if missing or extra:
            raise AlgebraError(
                f"tables do not match signature (missing {sorted(missing)}, extra {sorted(extra)})"
            )

    def _freeze(self, conn: str, table):
        arity = self.signature.arity(conn) if conn in self.signature else None
        if arity is None:
            raise AlgebraError(f"table for unknown connective {conn!r}")
        n = len(self.elements)

        def freeze(level: int, sub):
            if level == 0:
                if not isinstance(sub, int) or not 0 <= sub < n:
                    raise AlgebraError(f"bad table entry for {conn!r}: {sub!r}")
                return sub
            if len(sub) != n:
                raise AlgebraError(f"table for {conn!r} is not total")
            return tuple(freeze(level - 1, s) for s in sub)

        return freeze(arity, table)

    # -- basic access -------------------------------------------------------

    def op(self, conn: str, *args: int) -> int:
        table = self.tables[conn]
        for a in args:
            table = table[a]
        return table

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        # Element-list plus table equality; the display name is a label only.
        return (
            isinstance(other, FiniteAlgebra)
            and self.signature == other.signature
            and self.elements == other.elements
            and self.tables == other.tables
        )

    def __hash__(self) -> int:
        return hash((self.signature, self.elements))

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.name or self.elements})"

    # -- lattice structure ---------------------------------------------------

    def has_lattice_signature(self) -> bool:
        return SIG_BL <= self.signature

    def leq(self, i: int, j: int) -> bool:
        """The induced order: x <= y iff x & y = x."""
        return self.op(AND, i, j) == i

    def check_lattice(self) -> None:
        """Raise unless ``&``/``|`` form a bounded lattice with ``1``/``0`` as bounds."""
        if not self.has_lattice_signature():
            raise AlgebraError(f"{self.name or 'algebra'} has no lattice signature")
        for eq in _LATTICE_EQUATIONS:
            result = check_equation(self, eq)
            if not result.holds:
                raise AlgebraError(f"lattice law fails in {self.name!r}: {eq} at {result.witness}")

    def upset(self, element: str) -> tuple[str, ...]:
        self.check_lattice()
        i = self.index[element]
        return tuple(e for j, e in enumerate(self.elements) if self.leq(i, j))

    # -- documents ------------------------------------------------------------

    def to_doc(self) -> dict:
        def name_table(level: int, table):
            if level == 0:
                return self.elements[table]
            return [name_table(level - 1, t) for t in table]

        return {
            "name": self.name,
            "signature": dict(self.signature.connectives),
            "elements": list(self.elements),
            "tables": {
                conn: name_table(self.signature.arity(conn), table)
                for conn, table in self.tables.items()
            },
        }

    @staticmethod
    def from_doc(doc: dict) -> "FiniteAlgebra":
        try:
            signature = Signature(dict(doc["signature"]))
            elements = list(doc["elements"])
            index = {e: i for i, e in enumerate(elements)}

            def index_table(level: int, table):
                if level == 0:
                    return index[table]
                return tuple(index_table(level - 1, t) for t in table)

            tables = {
                conn: index_table(signature.arity(conn), table)
                for conn, table in doc["tables"].items()
            }
            return FiniteAlgebra(doc.get("name", ""), signature, elements, tables)
        except (KeyError, TypeError) as exc:
            raise AlgebraError(f"malformed algebra document: {exc}") from exc

    @staticmethod
    def from_json(text: str) -> "FiniteAlgebra":
        return FiniteAlgebra.from_doc(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), indent=2)


# ---------------------------------------------------------------------------
# Evaluation and equation checking

def evaluate(phi: Formula, algebra: FiniteAlgebra, assignment: dict[str, str]) -> str:
    """Value of ``phi`` under the homomorphic extension of ``assignment``."""
    check_in_signature(phi, algebra.signature)
    for v in props(phi):
        if v not in assignment:
            raise AlgebraError(f"unassigned variable {v!r}")
        if assignment[v] not in algebra.index:
            raise AlgebraError(f"{assignment[v]!r} is not an element of {algebra.name!r}")
    env = {v: algebra.index[assignment[v]] for v in props(phi)}
    return algebra.elements[_eval_indexed(phi, algebra, env)]


def _eval_indexed(phi: Formula, algebra: FiniteAlgebra, env: dict[str, int]) -> int:
    if phi.is_variable:
        return env[phi.head]
    args = tuple(_eval_indexed(a, algebra, env) for a in phi.args)
    return algebra.op(phi.head, *args)


def check_equation(algebra: FiniteAlgebra, eq: Equation) -> EquationResult:
    """Exhaustive sweep; on failure, the lexicographically first refuting assignment."""
    check_in_signature(eq.lhs, algebra.signature)
    check_in_signature(eq.rhs, algebra.signature)
    variables = sorted(props(eq.lhs) | props(eq.rhs))
    for values in itertools.product(range(len(algebra)), repeat=len(variables)):
        env = dict(zip(variables, values))
        if _eval_indexed(eq.lhs, algebra, env) != _eval_indexed(eq.rhs, algebra, env):
            witness = {v: algebra.elements[i] for v, i in env.items()}
            return EquationResult(False, witness)
    return EquationResult(True)


def _parse_axioms(sig: Signature, named: list[tuple[str, str]]) -> tuple[tuple[str, Equation], ...]:
    return tuple((name, parse_equation(text, sig)) for name, text in named)


_LATTICE_AXIOMS = [
    ("and-idempotent", "x & x = x"),
    ("or-idempotent", "x | x = x"),
    ("and-commutative", "x & y = y & x"),
    ("or-commutative", "x | y = y | x"),
    ("and-associative", "x & (y & z) = (x & y) & z"),
    ("or-associative", "x | (y | z) = (x | y) | z"),
    ("absorption-1", "x & (x | y) = x"),
    ("absorption-2", "x | (x & y) = x"),
    ("distributive-1", "x & (y | z) = (x & y) | (x & z)"),
    ("distributive-2", "x | (y & z) = (x | y) & (x | z)"),
    ("top-bound", "x & 1 = x"),
    ("bottom-bound", "x | 0 = x"),
]

_DM_AXIOMS = [
    ("DM1", "~~x = x"),
    ("DM2", "~(x & y) = ~x | ~y"),
]

_IS_AXIOMS = [
    ("IS1", "!0 = 0"),
    ("IS2", "x & !x = x"),
    ("IS3", "!(x & y) = !x & !y"),
    ("IS4", "~!x & !x = 0"),
]

_PP_AXIOMS = [
    ("PP1", "**x = 1"),
    ("PP2", "*x = *~x"),
    ("PP3", "*1 = 1"),
    ("PP4", "x & ~x & *x = 0"),
    ("PP5", "*(x & y) = (*x | *y) & (*x | ~y) & (*y | ~x)"),
]

_LATTICE_EQUATIONS = tuple(eq for _, eq in _parse_axioms(SIG_BL, _LATTICE_AXIOMS))

AXIOM_CLASSES: dict[str, tuple[tuple[str, Equation], ...]] = {
    "DM": _parse_axioms(SIG_DM, _LATTICE_AXIOMS + _DM_AXIOMS),
    "IS": _parse_axioms(SIG_IS, _LATTICE_AXIOMS + _DM_AXIOMS + _IS_AXIOMS),
    "PP": _parse_axioms(SIG_PP, _LATTICE_AXIOMS + _DM_AXIOMS + _PP_AXIOMS),
}

CLASS_SIGNATURES = {"DM": SIG_DM, "IS": SIG_IS, "PP": SIG_PP}


@dataclass(frozen=True)
class ClassReport:
    tag: str
    failures: tuple[tuple[str, Equation, dict[str, str]], ...]

    @property
    def holds(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.holds


def check_axiom_class(algebra: FiniteAlgebra, tag: str) -> ClassReport:
    if tag not in AXIOM_CLASSES:
        raise AlgebraError(f"unknown axiom class {tag!r}")
    if not CLASS_SIGNATURES[tag] <= algebra.signature:
        raise AlgebraError(f"{algebra.name or 'algebra'} lacks the {tag} signature")
    failures = []
    for name, eq in AXIOM_CLASSES[tag]:
        result = check_equation(algebra, eq)
        if not result.holds:
            failures.append((name, eq, result.witness))
    return ClassReport(tag, tuple(failures))


def _require_class(algebra: FiniteAlgebra, tag: str, operation: str) -> None:
    report = check_axiom_class(algebra, tag)
    if not report.holds:
        failed = ", ".join(name for name, _, _ in report.failures)
        raise AlgebraError(f"{operation} needs a {tag}-algebra; {algebra.name!r} fails {failed}")


# ---------------------------------------------------------------------------
# Reducts, subalgebras, expansions, derived operations

def reduct(algebra: FiniteAlgebra, sig: Signature, name: str = "") -> FiniteAlgebra:
    if not sig <= algebra.signature:
        raise AlgebraError("the requested signature is not contained in the algebra's")
    tables = {conn: algebra.tables[conn] for conn in sig.connectives}
    return FiniteAlgebra(name or algebra.name, sig, algebra.elements, tables)


def subalgebra(algebra: FiniteAlgebra, carrier, name: str = "") -> FiniteAlgebra:
    """Restriction to ``carrier`` (kept in the parent's element order)."""
    keep = [e for e in algebra.elements if e in set(carrier)]
    old = [algebra.index[e] for e in keep]
    new_of_old = {o: n for n, o in enumerate(old)}

    def restrict(conn: str, arity: int):
        def walk(level: int, prefix: tuple[int, ...]):
            if level == 0:
                value = algebra.op(conn, *prefix)
                if value not in new_of_old:
                    raise AlgebraError(f"{keep} is not closed under {conn!r}")
                return new_of_old[value]
            return tuple(walk(level - 1, prefix + (o,)) for o in old)

        return walk(arity, ())

    tables = {
        conn: restrict(conn, algebra.signature.arity(conn))
        for conn in algebra.signature.connectives
    }
    return FiniteAlgebra(name, algebra.signature, keep, tables)


NEW_BOTTOM = "F^"
NEW_TOP = "T^"


def _fresh_pair(elements) -> tuple[str, str]:
    used = set(elements)
    fhat, that = NEW_BOTTOM, NEW_TOP
    while fhat in used:
        fhat += "'"
    while that in used:
        that += "'"
    return fhat, that


def _expand(algebra: FiniteAlgebra, extra_conn: str, name: str) -> FiniteAlgebra:
    """Common part of the perfection/nabla expansion: new bottom and top around
    the original carrier, with the De Morgan tables extended case-wise."""
    if algebra.signature != SIG_DM:
        raise AlgebraError("expansion takes an algebra over exactly the DM signature")
    _require_class(algebra, "DM", "expansion")
    fhat, that = _fresh_pair(algebra.elements)
    elements = (fhat,) + algebra.elements + (that,)
    n = len(elements)
    bot_i, top_i = 0, n - 1

    def meet(i: int, j: int) -> int:
        if i == bot_i or j == bot_i:
            return bot_i
        if i == top_i:
            return j
        if j == top_i:
            return i
        return algebra.op(AND, i - 1, j - 1) + 1

    def join(i: int, j: int) -> int:
        if i == top_i or j == top_i:
            return top_i
        if i == bot_i:
            return j
        if j == bot_i:
            return i
        return algebra.op(OR, i - 1, j - 1) + 1

    def negate(i: int) -> int:
        if i == bot_i:
            return top_i
        if i == top_i:
            return bot_i
        return algebra.op(NEG, i - 1) + 1

    tables = {
        AND: tuple(tuple(meet(i, j) for j in range(n)) for i in range(n)),
        OR: tuple(tuple(join(i, j) for j in range(n)) for i in range(n)),
        NEG: tuple(negate(i) for i in range(n)),
        TOP: top_i,
        BOT: bot_i,
    }
    if extra_conn == CIRC:
        tables[CIRC] = tuple(top_i if i in (bot_i, top_i) else bot_i for i in range(n))
        sig = SIG_PP
    else:
        tables[NABLA] = tuple(bot_i if i == bot_i else top_i for i in range(n))
        sig = SIG_IS
    return FiniteAlgebra(name, sig, elements, tables)


def expand_with_perfection(algebra: FiniteAlgebra, name: str = "") -> FiniteAlgebra:
    return _expand(algebra, CIRC, name or (algebra.name and f"{algebra.name}^o"))


def expand_with_nabla(algebra: FiniteAlgebra, name: str = "") -> FiniteAlgebra:
    return _expand(algebra, NABLA, name or (algebra.name and f"{algebra.name}^v"))


_X = var("x")
CIRC_FROM_NABLA = neg(nabla(conj(_X, neg(_X))))  # ~!(x & ~x)
NABLA_FROM_CIRC = disj(neg(circ(_X)), _X)  # ~*x | x


def _derive(algebra: FiniteAlgebra, from_tag: str, defining: Formula, new_conn: str,
            new_sig: Signature, name: str) -> FiniteAlgebra:
    _require_class(algebra, from_tag, "derivation")
    dm_part = {conn: algebra.tables[conn] for conn in SIG_DM.connectives}
    new_table = tuple(
        algebra.index[evaluate(defining, algebra, {"x": e})] for e in algebra.elements
    )
    tables = {**dm_part, new_conn: new_table}
    return FiniteAlgebra(name, new_sig, algebra.elements, tables)


def derive_perfection(algebra: FiniteAlgebra, name: str = "") -> FiniteAlgebra:
    """From an IS-algebra, the PP-algebra whose perfection is induced by ~!(x & ~x)."""
    return _derive(algebra, "IS", CIRC_FROM_NABLA, CIRC, SIG_PP,
                   name or (algebra.name and f"{algebra.name}^o"))


def derive_nabla(algebra: FiniteAlgebra, name: str = "") -> FiniteAlgebra:
    """From a PP-algebra, the IS-algebra whose nabla is induced by ~*x | x."""
    return _derive(algebra, "PP", NABLA_FROM_CIRC, NABLA, SIG_IS,
                   name or (algebra.name and f"{algebra.name}^v"))


def translate_to_pp(phi: Formula) -> Formula:
    """IS-formula to PP-formula: homomorphic except !psi -> ~*psi' | psi'."""
    check_in_signature(phi, SIG_IS)
    return _translate(phi, NABLA, lambda a: disj(neg(circ(a)), a))


def translate_to_is(phi: Formula) -> Formula:
    """PP-formula to IS-formula: homomorphic except *psi -> ~!(psi' & ~psi')."""
    check_in_signature(phi, SIG_PP)
    return _translate(phi, CIRC, lambda a: neg(nabla(conj(a, neg(a)))))


def _translate(phi: Formula, hook: str, image) -> Formula:
    if not phi.args:
        return phi
    args = tuple(_translate(a, hook, image) for a in phi.args)
    if phi.head == hook:
        return image(args[0])
    return Formula(phi.head, args)


# ---------------------------------------------------------------------------
# Unary term-definable functions

UNARY_CLONE_GUARD = 8


def unary_definable_functions(algebra: FiniteAlgebra) -> dict[tuple[str, ...], Formula]:
    """All unary functions induced by one-variable terms, with one witnessing
    term each: the closure of {identity, bounds} under the connective tables."""
    n = len(algebra)
    if n > UNARY_CLONE_GUARD:
        raise AlgebraError(f"carrier too large for closure (|A| = {n} > {UNARY_CLONE_GUARD})")
    p = var("p")
    found: dict[tuple[int, ...], Formula] = {tuple(range(n)): p}
    for conn in (TOP, BOT):
        if conn in algebra.signature:
            value = algebra.op(conn)
            found.setdefault(tuple([value] * n), Formula(conn))
    connectives = sorted(algebra.signature.connectives)
    grew = True
    while grew:
        grew = False
        known = list(found.items())
        for conn in connectives:
            arity = algebra.signature.arity(conn)
            if arity == 0:
                continue
            for combo in itertools.product(known, repeat=arity):
                image = tuple(
                    algebra.op(conn, *(f[i] for f, _ in combo)) for i in range(n)
                )
                if image not in found:
                    found[image] = Formula(conn, tuple(term for _, term in combo))
                    grew = True
    return {
        tuple(algebra.elements[i] for i in image): term
        for image, term in sorted(found.items())
    }


# ---------------------------------------------------------------------------
# Isomorphism (brute force, small carriers only)

ISO_GUARD = 8


def find_isomorphism(a: FiniteAlgebra, b: FiniteAlgebra) -> dict[str, str] | None:
    """A table-preserving bijection between carriers, or None."""
    if a.signature != b.signature or len(a) != len(b):
        return None
    if len(a) > ISO_GUARD:
        raise AlgebraError(f"carrier too large for isomorphism search (|A| > {ISO_GUARD})")
    n = len(a)
    arities = sorted(a.signature.connectives.items())
    for perm in itertools.permutations(range(n)):
        ok = True
        for conn, arity in arities:
            for args in itertools.product(range(n), repeat=arity):
                if perm[a.op(conn, *args)] != b.op(conn, *(perm[x] for x in args)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return {a.elements[i]: b.elements[perm[i]] for i in range(n)}
    return None


# ---------------------------------------------------------------------------
# Built-in catalog

def _lattice_tables(order_pairs: set[tuple[int, int]], n: int) -> tuple:
    """Meet/join tables from a full order relation (reflexive-transitive)."""

    def leq(i, j):
        return (i, j) in order_pairs

    def meet(i, j):
        lower = [k for k in range(n) if leq(k, i) and leq(k, j)]
        best = [k for k in lower if all(leq(m, k) for m in lower)]
        assert len(best) == 1, "not a lattice"
        return best[0]

    def join(i, j):
        upper = [k for k in range(n) if leq(i, k) and leq(j, k)]
        best = [k for k in upper if all(leq(k, m) for m in upper)]
        assert len(best) == 1, "not a lattice"
        return best[0]

    meets = tuple(tuple(meet(i, j) for j in range(n)) for i in range(n))
    joins = tuple(tuple(join(i, j) for j in range(n)) for i in range(n))
    return meets, joins


def _closure(covers: list[tuple[int, int]], n: int) -> set[tuple[int, int]]:
    rel = {(i, i) for i in range(n)} | set(covers)
    changed = True
    while changed:
        changed = False
        for (i, j), (k, m) in itertools.product(list(rel), repeat=2):
            if j == k and (i, m) not in rel:
                rel.add((i, m))
                changed = True
    return rel


def _make_builtin_catalog() -> dict[str, FiniteAlgebra]:
    catalog: dict[str, FiniteAlgebra] = {}

    # B2: f < t
    meets, joins = _lattice_tables(_closure([(0, 1)], 2), 2)
    catalog["B2"] = FiniteAlgebra(
        "B2", SIG_DM, ("f", "t"),
        {AND: meets, OR: joins, NEG: (1, 0), TOP: 1, BOT: 0},
    )

    # K3: f < n < t, with n a fixpoint of ~
    meets, joins = _lattice_tables(_closure([(0, 1), (1, 2)], 3), 3)
    catalog["K3"] = FiniteAlgebra(
        "K3", SIG_DM, ("f", "n", "t"),
        {AND: meets, OR: joins, NEG: (2, 1, 0), TOP: 2, BOT: 0},
    )

    # DM4: the four-valued De Morgan lattice, f < n,b < t, ~ fixing n and b
    meets, joins = _lattice_tables(_closure([(0, 1), (0, 2), (1, 3), (2, 3)], 4), 4)
    catalog["DM4"] = FiniteAlgebra(
        "DM4", SIG_DM, ("f", "n", "b", "t"),
        {AND: meets, OR: joins, NEG: (3, 1, 2, 0), TOP: 3, BOT: 0},
    )

    # IS6 / PP6: new bottom F^ and top T^ around DM4; nabla collapses all but
    # the new bottom to the new top, perfection marks only the two new points.
    order6 = _closure([(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)], 6)
    meets, joins = _lattice_tables(order6, 6)
    elements6 = (NEW_BOTTOM, "f", "n", "b", "t", NEW_TOP)
    neg6 = (5, 4, 2, 3, 1, 0)
    catalog["IS6"] = FiniteAlgebra(
        "IS6", SIG_IS, elements6,
        {AND: meets, OR: joins, NEG: neg6, TOP: 5, BOT: 0,
         NABLA: (0, 5, 5, 5, 5, 5)},
    )
    catalog["PP6"] = FiniteAlgebra(
        "PP6", SIG_PP, elements6,
        {AND: meets, OR: joins, NEG: neg6, TOP: 5, BOT: 0,
         CIRC: (5, 0, 0, 0, 0, 5)},
    )

    carriers = {
        5: (NEW_BOTTOM, "f", "n", "t", NEW_TOP),
        4: (NEW_BOTTOM, "f", "t", NEW_TOP),
        3: (NEW_BOTTOM, "n", NEW_TOP),
        2: (NEW_BOTTOM, NEW_TOP),
    }
    for size, carrier in carriers.items():
        catalog[f"IS{size}"] = subalgebra(catalog["IS6"], carrier, f"IS{size}")
        catalog[f"PP{size}"] = subalgebra(catalog["PP6"], carrier, f"PP{size}")
    return catalog


BUILTIN_ALGEBRAS = _make_builtin_catalog()


def builtin_algebra(name: str) -> FiniteAlgebra:
    try:
        return BUILTIN_ALGEBRAS[name]
    except KeyError:
        raise AlgebraError(
            f"unknown algebra {name!r} (built-ins: {', '.join(sorted(BUILTIN_ALGEBRAS))})"
        ) from None


def load_algebra(spec: str) -> FiniteAlgebra:
    """Resolve a built-in name or a path to an algebra document."""
    if spec in BUILTIN_ALGEBRAS:
        return BUILTIN_ALGEBRAS[spec]
    try:
        with open(spec, "r", encoding="utf-8") as handle:
            return FiniteAlgebra.from_json(handle.read())
    except OSError as exc:
        raise AlgebraError(f"no built-in algebra and no readable file: {spec!r} ({exc})") from exc


IS_IDENTITY_EQUATIONS = tuple(
    parse_equation(text, SIG_IS)
    for text in (
        "x | !~x = 1",
        "x & ~!x = 0",
        "~!(x & ~x) & ~x = ~!x",
        "!!x = !x",
        "!~!x = ~!x",
        "~!~(x & y) = ~!~x & ~!~y",
    )
)

PP_IDENTITY_EQUATIONS = tuple(
    parse_equation(text, SIG_PP)
    for text in (
        "~*x | (x | ~x) = 1",
        "*x & ~*x = 0",
        "*x = *x & (x | ~x)",
    )
)

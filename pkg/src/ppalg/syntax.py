"""Signatures, propositional formulas, parsing, printing and substitution.

The concrete grammar is ASCII: ``~`` (involutive negation), ``*`` (perfection),
``!`` (nabla), ``&``, ``|``, and the lattice bounds ``1`` / ``0``.  Unary
connectives bind tightest, ``&`` binds over ``|``, binary connectives associate
to the left.  Variables are identifiers (letter, then letters/digits/underscores).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

NEG = "~"
CIRC = "*"
NABLA = "!"
AND = "&"
OR = "|"
TOP = "1"
BOT = "0"

UNARY_SYMBOLS = (NEG, CIRC, NABLA)
BINARY_SYMBOLS = (AND, OR)
NULLARY_SYMBOLS = (TOP, BOT)

_VARIABLE_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class FormulaError(Exception):
    """Malformed formula text or a connective outside the ambient signature."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class Signature:
    """A finite map from connective names to arities."""

    def __init__(self, connectives: dict[str, int], name: str = ""):
        for conn, arity in connectives.items():
            if arity < 0:
                raise ValueError(f"negative arity for connective {conn!r}")
        self.connectives = dict(connectives)
        self.name = name

    def arity(self, conn: str) -> int:
        return self.connectives[conn]

    def __contains__(self, conn: str) -> bool:
        return conn in self.connectives

    def __le__(self, other: "Signature") -> bool:
        return all(other.connectives.get(c) == k for c, k in self.connectives.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Signature) and self.connectives == other.connectives

    def __hash__(self) -> int:
        return hash(frozenset(self.connectives.items()))

    def __repr__(self) -> str:
        label = self.name or ",".join(sorted(self.connectives))
        return f"Signature({label})"

    def extended(self, extra: dict[str, int], name: str = "") -> "Signature":
        clash = {c for c in extra if self.connectives.get(c, extra[c]) != extra[c]}
        if clash:
            raise ValueError(f"conflicting arities for {sorted(clash)}")
        return Signature({**self.connectives, **extra}, name)


SIG_BL = Signature({AND: 2, OR: 2, TOP: 0, BOT: 0}, "bL")
SIG_DM = SIG_BL.extended({NEG: 1}, "DM")
SIG_IS = SIG_DM.extended({NABLA: 1}, "IS")
SIG_PP = SIG_DM.extended({CIRC: 1}, "PP")

SIGNATURES = {"bL": SIG_BL, "DM": SIG_DM, "IS": SIG_IS, "PP": SIG_PP}


@dataclass(frozen=True)
class Formula:
    """A variable (empty ``args``) or a connective applied to subformulas."""

    head: str
    args: tuple["Formula", ...] = ()

    @property
    def is_variable(self) -> bool:
        return not self.args and _VARIABLE_RE.fullmatch(self.head) is not None

    def __str__(self) -> str:
        return render_formula(self)

    def __repr__(self) -> str:
        return f"Formula({render_formula(self)!r})"


def var(name: str) -> Formula:
    if not _VARIABLE_RE.fullmatch(name):
        raise FormulaError(f"illegal variable name {name!r}")
    return Formula(name)


def neg(a: Formula) -> Formula:
    return Formula(NEG, (a,))


def circ(a: Formula) -> Formula:
    return Formula(CIRC, (a,))


def nabla(a: Formula) -> Formula:
    return Formula(NABLA, (a,))


def conj(a: Formula, b: Formula) -> Formula:
    return Formula(AND, (a, b))


def disj(a: Formula, b: Formula) -> Formula:
    return Formula(OR, (a, b))


top = Formula(TOP)
bot = Formula(BOT)


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9_]*)|([~*!&|10()]))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad = pos + (len(text) - pos - len(stripped))
            raise FormulaError(f"unexpected character {stripped[0]!r}", position=bad)
        tokens.append((m.group(1) or m.group(2), m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.text = text
        self.sig = sig
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next_position(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def advance(self) -> str:
        tok = self.tokens[self.pos][0]
        self.pos += 1
        return tok

    def require_connective(self, conn: str) -> None:
        if conn not in self.sig:
            raise FormulaError(
                f"connective {conn!r} is not in the signature", position=self.next_position()
            )

    def parse(self) -> Formula:
        phi = self.parse_disjunction()
        if self.peek() is not None:
            raise FormulaError(
                f"unexpected token {self.peek()!r}", position=self.next_position()
            )
        return phi

    def parse_disjunction(self) -> Formula:
        phi = self.parse_conjunction()
        while self.peek() == OR:
            self.require_connective(OR)
            self.advance()
            phi = disj(phi, self.parse_conjunction())
        return phi

    def parse_conjunction(self) -> Formula:
        phi = self.parse_unary()
        while self.peek() == AND:
            self.require_connective(AND)
            self.advance()
            phi = conj(phi, self.parse_unary())
        return phi

    def parse_unary(self) -> Formula:
        tok = self.peek()
        if tok in UNARY_SYMBOLS:
            self.require_connective(tok)
            self.advance()
            return Formula(tok, (self.parse_unary(),))
        return self.parse_atom()

    def parse_atom(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise FormulaError("unexpected end of input", position=self.next_position())
        if tok == "(":
            self.advance()
            phi = self.parse_disjunction()
            if self.peek() != ")":
                raise FormulaError("expected ')'", position=self.next_position())
            self.advance()
            return phi
        if tok in NULLARY_SYMBOLS:
            self.require_connective(tok)
            self.advance()
            return Formula(tok)
        if _VARIABLE_RE.fullmatch(tok):
            self.advance()
            return Formula(tok)
        raise FormulaError(f"unexpected token {tok!r}", position=self.next_position())


def parse_formula(text: str, sig: Signature = SIG_PP) -> Formula:
    """Parse ``text`` in the ambient signature ``sig`` (default: the PP signature)."""
    return _Parser(text, sig).parse()


def parse_formula_set(text: str, sig: Signature = SIG_PP) -> list[Formula]:
    """Parse a comma-separated list of formulas; blank input denotes the empty set."""
    if not text.strip():
        return []
    return [parse_formula(part, sig) for part in text.split(",")]


# ---------------------------------------------------------------------------
# Printing

_PREC_OR = 1
_PREC_AND = 2
_PREC_UNARY = 3


@lru_cache(maxsize=None)
def _render(phi: Formula) -> tuple[str, int]:
    """Rendered text and the precedence level of the outermost connective."""
    if not phi.args:
        if phi.head in NULLARY_SYMBOLS or phi.is_variable:
            return phi.head, _PREC_UNARY + 1
        raise FormulaError(f"cannot render connective {phi.head!r}")
    if phi.head in UNARY_SYMBOLS:
        inner, prec = _render(phi.args[0])
        if prec < _PREC_UNARY:
            inner = f"({inner})"
        return phi.head + inner, _PREC_UNARY
    if phi.head in BINARY_SYMBOLS:
        own = _PREC_AND if phi.head == AND else _PREC_OR
        left, lprec = _render(phi.args[0])
        right, rprec = _render(phi.args[1])
        if lprec < own:
            left = f"({left})"
        if rprec <= own:  # left-associative: parenthesize right child at equal level
            right = f"({right})"
        return f"{left} {phi.head} {right}", own
    raise FormulaError(f"cannot render connective {phi.head!r}")


def render_formula(phi: Formula) -> str:
    return _render(phi)[0]


def render_formula_set(phis) -> str:
    return ", ".join(render_formula(p) for p in canonical_sorted(phis))


def canonical_key(phi: Formula) -> str:
    """Total structural order on formulas; rendered text is injective."""
    return render_formula(phi)


def canonical_sorted(phis) -> list[Formula]:
    return sorted(set(phis), key=canonical_key)


# ---------------------------------------------------------------------------
# Structural operations

@lru_cache(maxsize=None)
def formula_size(phi: Formula) -> int:
    return 1 + sum(formula_size(a) for a in phi.args)


@lru_cache(maxsize=None)
def formula_depth(phi: Formula) -> int:
    if not phi.args:
        return 1
    return 1 + max(formula_depth(a) for a in phi.args)


@lru_cache(maxsize=None)
def props(phi: Formula) -> frozenset[str]:
    if phi.is_variable:
        return frozenset({phi.head})
    return frozenset().union(*(props(a) for a in phi.args)) if phi.args else frozenset()


def props_of_set(phis) -> frozenset[str]:
    out: frozenset[str] = frozenset()
    for phi in phis:
        out |= props(phi)
    return out


def connectives_of(phi: Formula) -> frozenset[str]:
    if phi.is_variable:
        return frozenset()
    out = frozenset({phi.head})
    for a in phi.args:
        out |= connectives_of(a)
    return out


def check_in_signature(phi: Formula, sig: Signature) -> None:
    for conn in connectives_of(phi):
        if conn not in sig:
            raise FormulaError(f"connective {conn!r} is not in the signature")


def subformulas(phis) -> set[Formula]:
    """The least superset of ``phis`` closed under immediate subterms."""
    out: set[Formula] = set()
    stack = list(phis)
    while stack:
        phi = stack.pop()
        if phi not in out:
            out.add(phi)
            stack.extend(phi.args)
    return out


def generalized_subformulas(prem, concl, separators) -> set[Formula]:
    """``sub(prem ∪ concl)`` plus every instance of a separator formula whose
    variables are substituted by those subformulas."""
    base = subformulas(set(prem) | set(concl))
    out = set(base)
    base_list = canonical_sorted(base)
    for xi in separators:
        xi_vars = sorted(props(xi))
        for values in itertools.product(base_list, repeat=len(xi_vars)):
            out.add(apply_substitution(dict(zip(xi_vars, values)), xi))
    return out


def apply_substitution(sigma: dict[str, Formula], phi: Formula) -> Formula:
    """Homomorphic replacement of variables; identity off the domain of ``sigma``."""
    if phi.is_variable:
        return sigma.get(phi.head, phi)
    if not phi.args:
        return phi
    return Formula(phi.head, tuple(apply_substitution(sigma, a) for a in phi.args))


def fresh_variable(used: set[str]) -> str:
    """Smallest identifier of the form p0, p1, ... absent from ``used``."""
    for i in itertools.count():
        name = f"p{i}"
        if name not in used:
            return name
    raise AssertionError("unreachable")


def big_disjunction(phis) -> Formula:
    """Left-nested disjunction of a formula set in canonical order; ``0`` if empty."""
    ordered = canonical_sorted(phis)
    if not ordered:
        return bot
    out = ordered[0]
    for phi in ordered[1:]:
        out = disj(out, phi)
    return out


def big_conjunction(phis) -> Formula:
    """Left-nested conjunction of a formula set in canonical order; ``1`` if empty."""
    ordered = canonical_sorted(phis)
    if not ordered:
        return top
    out = ordered[0]
    for phi in ordered[1:]:
        out = conj(out, phi)
    return out

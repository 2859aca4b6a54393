"""Symmetrical (Set-Set) Hilbert calculi and the analytic proof search.

Built-in calculi: RB (the four-valued base system), Rcirc (the perfection
rules), their union, and the single-rule systems DS, EM, K1, Kleq.  The proof
search explores rule instances over the generalized subformulas of the query,
returning a closed derivation tree or the first saturated open branch, from
which a countermodel can be extracted.  Set-Fmla companions are produced by
the disjunction lifting, searched by bounded forward chaining.
"""

from __future__ import annotations

import itertools
import json
import sys
from dataclasses import dataclass
from functools import lru_cache

from .matrices import (
    ConsequenceResult,
    Countermodel,
    Matrix,
    _dependency_order,
    sset_consequence,
)
from .syntax import (
    BOT,
    TOP,
    SIG_DM,
    SIG_PP,
    Formula,
    Signature,
    apply_substitution,
    big_disjunction,
    canonical_key,
    canonical_sorted,
    disj,
    formula_depth,
    formula_size,
    fresh_variable,
    generalized_subformulas,
    parse_formula,
    props,
    props_of_set,
    render_formula,
    subformulas,
    var,
)


class CalculusError(Exception):
    pass


@dataclass(frozen=True)
class Rule:
    """A symmetrical inference rule: antecedent set over succedent set."""

    name: str
    antecedent: tuple[Formula, ...]
    succedent: tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(canonical_sorted(self.antecedent)))
        object.__setattr__(self, "succedent", tuple(canonical_sorted(self.succedent)))

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(props_of_set(self.antecedent + self.succedent)))

    @property
    def is_set_fmla(self) -> bool:
        return len(self.succedent) == 1

    def __str__(self) -> str:
        ant = ", ".join(render_formula(f) for f in self.antecedent)
        suc = ", ".join(render_formula(f) for f in self.succedent)
        return f"{self.name}: {ant} / {suc}"


@dataclass(frozen=True)
class Calculus:
    name: str
    rules: tuple[Rule, ...]
    analytic_over: tuple[Formula, ...] = ()

    def __post_init__(self):
        names = [r.name for r in self.rules]
        if len(set(names)) != len(names):
            raise CalculusError(f"duplicate rule names in calculus {self.name!r}")
        object.__setattr__(self, "analytic_over", tuple(canonical_sorted(self.analytic_over)))

    def rule(self, name: str) -> Rule:
        for r in self.rules:
            if r.name == name:
                return r
        raise CalculusError(f"no rule named {name!r} in {self.name}")

    def to_doc(self) -> dict:
        doc = {
            "name": self.name,
            "rules": [
                {
                    "name": r.name,
                    "antecedent": [render_formula(f) for f in r.antecedent],
                    "succedent": [render_formula(f) for f in r.succedent],
                }
                for r in self.rules
            ],
        }
        if self.analytic_over:
            doc["analytic_over"] = [render_formula(f) for f in self.analytic_over]
        return doc

    @staticmethod
    def from_doc(doc: dict, sig: Signature = SIG_PP) -> "Calculus":
        try:
            rules = tuple(
                Rule(
                    r["name"],
                    tuple(parse_formula(t, sig) for t in r["antecedent"]),
                    tuple(parse_formula(t, sig) for t in r["succedent"]),
                )
                for r in doc["rules"]
            )
            xi = tuple(parse_formula(t, sig) for t in doc.get("analytic_over", []))
            return Calculus(doc.get("name", ""), rules, xi)
        except (KeyError, TypeError) as exc:
            raise CalculusError(f"malformed calculus document: {exc}") from exc

    @staticmethod
    def from_json(text: str, sig: Signature = SIG_PP) -> "Calculus":
        return Calculus.from_doc(json.loads(text), sig)

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), indent=2)


# ---------------------------------------------------------------------------
# Built-in calculi

def _rules(sig: Signature, specs: list[tuple[str, str, str]]) -> tuple[Rule, ...]:
    out = []
    for name, ant, suc in specs:
        out.append(
            Rule(
                name,
                tuple(parse_formula(t, sig) for t in ant.split(";") if t.strip()),
                tuple(parse_formula(t, sig) for t in suc.split(";") if t.strip()),
            )
        )
    return tuple(out)


_RB_SPECS = [
    ("r1", "", "1"),
    ("r2", "~1", ""),
    ("r3", "", "~0"),
    ("r4", "0", ""),
    ("r5", "p", "~~p"),
    ("r6", "~~p", "p"),
    ("r7", "p & q", "p"),
    ("r8", "p & q", "q"),
    ("r9", "p; q", "p & q"),
    ("r10", "~p", "~(p & q)"),
    ("r11", "~q", "~(p & q)"),
    ("r12", "~(p & q)", "~p; ~q"),
    ("r13", "p", "p | q"),
    ("r14", "q", "p | q"),
    ("r15", "p | q", "p; q"),
    ("r16", "~p; ~q", "~(p | q)"),
    ("r17", "~(p | q)", "~p"),
    ("r18", "~(p | q)", "~q"),
]

_RCIRC_SPECS = [
    ("r1", "", "*0"),
    ("r2", "", "*1"),
    ("r3", "", "**p"),
    ("r4", "*p", "*~p"),
    ("r5", "*~p", "*p"),
    ("r6", "*p", "p; ~p"),
    ("r7", "*p; p; ~p", ""),
    ("r8", "*p", "*(p & q); p"),
    ("r9", "*q", "*(p & q); q"),
    ("r10", "*(p & q); q", "*p"),
    ("r11", "*(p & q); p", "*q"),
    ("r12", "*p; *q", "*(p & q)"),
    ("r13", "*(p & q)", "*p; *q"),
    ("r14", "*p; *q", "*(p | q)"),
    ("r15", "*(p | q)", "*p; *q"),
    ("r16", "*p; p", "*(p | q)"),
    ("r17", "*q; q", "*(p | q)"),
    ("r18", "*(p | q)", "*p; q"),
    ("r19", "*(p | q)", "*q; p"),
]

SEPARATORS_DM = tuple(parse_formula(t, SIG_DM) for t in ("p", "~p"))
SEPARATORS_PP = tuple(parse_formula(t, SIG_PP) for t in ("p", "~p", "*p", "~*p"))


@lru_cache(maxsize=None)
def builtin_calculus(name: str) -> Calculus:
    if name == "RB":
        return Calculus("RB", _rules(SIG_DM, _RB_SPECS), SEPARATORS_DM)
    if name == "Rcirc":
        return Calculus("Rcirc", _rules(SIG_PP, _RCIRC_SPECS))
    if name == "RB+Rcirc":
        rb = _rules(SIG_PP, [(f"RB.{n}", a, s) for n, a, s in _RB_SPECS])
        rc = _rules(SIG_PP, [(f"Rcirc.{n}", a, s) for n, a, s in _RCIRC_SPECS])
        return Calculus("RB+Rcirc", rb + rc, SEPARATORS_PP)
    if name == "DS":
        return Calculus("DS", _rules(SIG_DM, [("DS", "p & (~p | q)", "q")]))
    if name == "EM":
        return Calculus("EM", _rules(SIG_DM, [("EM", "", "p | ~p")]))
    if name == "K1":
        return Calculus("K1", _rules(SIG_DM, [("K1", "(p & ~p) | q", "q")]))
    if name == "Kleq":
        return Calculus("Kleq", _rules(SIG_DM, [("Kleq", "(p & ~p) | r", "(q | ~q) | r")]))
    raise CalculusError(
        "unknown calculus "
        f"{name!r} (built-ins: RB, Rcirc, RB+Rcirc, DS, EM, K1, Kleq)"
    )


def load_calculus(spec: str) -> Calculus:
    try:
        return builtin_calculus(spec)
    except CalculusError:
        pass
    try:
        with open(spec, "r", encoding="utf-8") as handle:
            return Calculus.from_json(handle.read())
    except OSError as exc:
        raise CalculusError(f"cannot resolve calculus {spec!r} ({exc})") from exc


# ---------------------------------------------------------------------------
# Rule instances over a finite formula universe

def _match(pattern: Formula, target: Formula, binding: dict[str, Formula]) -> dict[str, Formula] | None:
    if pattern.is_variable:
        bound = binding.get(pattern.head)
        if bound is None:
            extended = dict(binding)
            extended[pattern.head] = target
            return extended
        return binding if bound == target else None
    if pattern.head != target.head or len(pattern.args) != len(target.args):
        return None
    for p_arg, t_arg in zip(pattern.args, target.args):
        binding = _match(p_arg, t_arg, binding)
        if binding is None:
            return None
    return binding


@dataclass(frozen=True)
class RuleInstance:
    rule: Rule
    substitution: tuple[tuple[str, Formula], ...]
    antecedent: frozenset[Formula]
    succedent: tuple[Formula, ...]

    @property
    def substitution_dict(self) -> dict[str, Formula]:
        return dict(self.substitution)

    def __str__(self) -> str:
        sigma = ", ".join(f"{v}:={render_formula(f)}" for v, f in self.substitution)
        return f"{self.rule.name}[{sigma}]"


def rule_instances(rule: Rule, universe) -> list[RuleInstance]:
    """All instances of ``rule`` whose substitution values and instantiated
    antecedent/succedent all lie inside ``universe``."""
    universe_list = canonical_sorted(universe)
    universe_set = set(universe_list)
    position = {phi: i for i, phi in enumerate(universe_list)}
    formulas = sorted(
        rule.antecedent + rule.succedent,
        key=lambda f: (-len(props(f)), -formula_size(f)),
    )
    found: dict[tuple, dict[str, Formula]] = {}

    def extend(i: int, binding: dict[str, Formula]) -> None:
        if i == len(formulas):
            if all(value in universe_set for value in binding.values()):
                key = tuple(sorted((v, canonical_key(f)) for v, f in binding.items()))
                found.setdefault(key, binding)
            return
        phi = formulas[i]
        if props(phi) <= binding.keys():
            if apply_substitution(binding, phi) in universe_set:
                extend(i + 1, binding)
            return
        for target in universe_list:
            extended = _match(phi, target, binding)
            if extended is not None:
                extend(i + 1, extended)

    extend(0, {})
    instances = []
    for binding in found.values():
        sigma = tuple(sorted(binding.items()))
        instances.append(
            RuleInstance(
                rule,
                sigma,
                frozenset(apply_substitution(binding, f) for f in rule.antecedent),
                tuple(canonical_sorted(apply_substitution(binding, f) for f in rule.succedent)),
            )
        )
    instances.sort(key=lambda inst: tuple(position[f] for _, f in inst.substitution))
    return instances


# ---------------------------------------------------------------------------
# Analytic proof search

@dataclass(frozen=True)
class DerivationNode:
    """A node of a derivation tree: its full label (None for the mark ``*``),
    the instance used to expand it, and its children."""

    label: frozenset[Formula] | None
    rule: RuleInstance | None
    children: tuple["DerivationNode", ...]

    @property
    def is_star(self) -> bool:
        return self.label is None

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class ProofResult:
    closed: bool
    calculus: Calculus
    premises: tuple[Formula, ...]
    conclusions: tuple[Formula, ...]
    universe: tuple[Formula, ...]
    tree: DerivationNode | None = None
    open_branch: frozenset[Formula] | None = None

    def __bool__(self) -> bool:
        return self.closed


def prove_analytic(calculus: Calculus, xi, premises, conclusions) -> ProofResult:
    """Search for a proof of the statement over the generalized subformulas
    induced by the one-variable set ``xi``.

    Expansion order: branch-closing (empty-succedent) instances first, then
    instances with the smallest maximal succedent formula, then rule position,
    then substitution order.  Every branch either closes or saturates, so the
    search always terminates.
    """
    premises = tuple(canonical_sorted(premises))
    conclusions = tuple(canonical_sorted(conclusions))
    universe = canonical_sorted(generalized_subformulas(premises, conclusions, xi))
    bit = {phi: 1 << i for i, phi in enumerate(universe)}

    instances = []
    for rule_position, rule in enumerate(calculus.rules):
        for inst in rule_instances(rule, universe):
            if inst.succedent:
                priority = (1, max(formula_size(f) for f in inst.succedent))
            else:
                priority = (0, 0)
            instances.append((priority, rule_position, inst))
    instances.sort(key=lambda entry: entry[:2])
    compiled = [
        (
            sum(bit[f] for f in inst.antecedent),
            sum(bit[f] for f in inst.succedent),
            inst,
        )
        for _, _, inst in instances
    ]

    psi_mask = sum(bit[f] for f in conclusions)
    root_mask = sum(bit[f] for f in premises)
    memo: dict[int, tuple] = {}

    def decode(mask: int) -> frozenset[Formula]:
        return frozenset(phi for phi in universe if bit[phi] & mask)

    def search(label: int) -> tuple:
        cached = memo.get(label)
        if cached is not None:
            return cached
        if label & psi_mask:
            result = ("closed", DerivationNode(decode(label), None, ()))
        else:
            chosen = None
            for ant_mask, succ_mask, inst in compiled:
                if ant_mask & ~label:
                    continue
                if inst.succedent and succ_mask & label:
                    continue
                chosen = inst
                break
            if chosen is None:
                result = ("open", label)
            elif not chosen.succedent:
                star = DerivationNode(None, None, ())
                result = ("closed", DerivationNode(decode(label), chosen, (star,)))
            else:
                children = []
                result = None
                for phi in chosen.succedent:
                    verdict = search(label | bit[phi])
                    if verdict[0] == "open":
                        result = verdict
                        break
                    children.append(verdict[1])
                if result is None:
                    result = ("closed", DerivationNode(decode(label), chosen, tuple(children)))
        memo[label] = result
        return result

    limit = sys.getrecursionlimit()
    needed = 4 * len(universe) + 1000
    if needed > limit:
        sys.setrecursionlimit(needed)
    try:
        verdict = search(root_mask)
    finally:
        if needed > limit:
            sys.setrecursionlimit(limit)

    if verdict[0] == "closed":
        return ProofResult(True, calculus, premises, conclusions, tuple(universe), tree=verdict[1])
    return ProofResult(
        False, calculus, premises, conclusions, tuple(universe), open_branch=decode(verdict[1])
    )


def countermodel_from_open(result: ProofResult, matrix: Matrix) -> Countermodel | None:
    """The lexicographically first valuation designating the whole saturated
    branch while designating no conclusion; None if there is none."""
    if result.closed:
        raise CalculusError("countermodel extraction needs an open proof result")
    algebra = matrix.algebra
    variables = sorted(props_of_set(result.premises + result.conclusions))
    branch = canonical_sorted(result.open_branch)
    designated = matrix.designated_indices
    order = _dependency_order(branch + list(result.conclusions))
    for values in itertools.product(range(len(algebra)), repeat=len(variables)):
        env = dict(zip(variables, values))
        cache: dict[Formula, int] = {}
        for phi in order:
            if phi.is_variable:
                cache[phi] = env[phi.head]
            else:
                cache[phi] = algebra.op(phi.head, *(cache[a] for a in phi.args))
        if all(cache[f] in designated for f in branch) and all(
            cache[f] not in designated for f in result.conclusions
        ):
            return Countermodel(matrix, {v: algebra.elements[i] for v, i in env.items()})
    return None


def validate_closed_tree(result: ProofResult) -> None:
    """Check a closed tree locally: legal instances, labels grown one formula
    per child, and every leaf closed.  Raises on any violation."""
    if not result.closed:
        raise CalculusError("validation applies to closed results")
    universe = set(result.universe)
    psi = set(result.conclusions)
    rule_names = {r.name for r in result.calculus.rules}

    seen: set[int] = set()

    def visit(node: DerivationNode) -> None:
        if id(node) in seen:
            return
        seen.add(id(node))
        if node.is_star:
            if node.children:
                raise CalculusError("the mark * must be a leaf")
            return
        if node.is_leaf:
            if not node.label & psi:
                raise CalculusError(f"leaf not closed: {sorted(map(render_formula, node.label))}")
            return
        inst = node.rule
        if inst is None or inst.rule.name not in rule_names:
            raise CalculusError("expanded node lacks a calculus rule")
        sigma = inst.substitution_dict
        if frozenset(apply_substitution(sigma, f) for f in inst.rule.antecedent) != inst.antecedent:
            raise CalculusError("recorded antecedent does not match the substitution")
        if not inst.antecedent <= node.label:
            raise CalculusError("rule antecedent not contained in the node label")
        if not (inst.antecedent | set(inst.succedent)) <= universe:
            raise CalculusError("instance leaves the analytic universe")
        if not inst.succedent:
            if len(node.children) != 1 or not node.children[0].is_star:
                raise CalculusError("empty-succedent expansion must have a single * child")
        else:
            expected = {node.label | {phi} for phi in inst.succedent}
            got = {child.label for child in node.children}
            if got != expected:
                raise CalculusError("children must extend the label by one succedent formula each")
        for child in node.children:
            visit(child)

    root = result.tree
    if root.label != frozenset(result.premises):
        raise CalculusError("root label must be the premise set")
    visit(root)


# ---------------------------------------------------------------------------
# Soundness

def rule_soundness(rule: Rule, matrix: Matrix) -> ConsequenceResult:
    return sset_consequence([matrix], rule.antecedent, rule.succedent)


def soundness_report(calculus: Calculus, matrix: Matrix) -> list[tuple[Rule, ConsequenceResult]]:
    return [(rule, rule_soundness(rule, matrix)) for rule in calculus.rules]


# ---------------------------------------------------------------------------
# Disjunction lifting (Set-Set -> Set-Fmla)

LIFT_STRUCTURAL = ("or-intro", "or-commute", "or-associate")


def lift(calculus: Calculus) -> Calculus:
    """The Set-Fmla companion calculus: three structural disjunction rules plus
    one lifted rule per input rule, using a variable fresh for the calculus."""
    used = set()
    for rule in calculus.rules:
        used |= set(rule.variables)
    fresh = var(fresh_variable(used))

    p, q, r = var("p"), var("q"), var("r")
    structural = (
        Rule(LIFT_STRUCTURAL[0], (p,), (disj(p, q),)),
        Rule(LIFT_STRUCTURAL[1], (disj(p, q),), (disj(q, p),)),
        Rule(LIFT_STRUCTURAL[2], (disj(p, disj(q, r)),), (disj(disj(p, q), r),)),
    )
    lifted = []
    for rule in calculus.rules:
        name = f"{rule.name}^v"
        if not rule.antecedent and len(rule.succedent) == 1:
            lifted.append(Rule(name, (), rule.succedent))
        elif not rule.succedent:
            lifted.append(
                Rule(name, tuple(disj(f, fresh) for f in rule.antecedent), (fresh,))
            )
        else:
            lifted.append(
                Rule(
                    name,
                    tuple(disj(f, fresh) for f in rule.antecedent),
                    (disj(big_disjunction(rule.succedent), fresh),),
                )
            )
    return Calculus(f"{calculus.name}^v", structural + tuple(lifted))


# ---------------------------------------------------------------------------
# Bounded Set-Fmla forward chaining

@dataclass(frozen=True)
class ProofStep:
    index: int
    formula: Formula
    rule: str
    substitution: tuple[tuple[str, Formula], ...]
    premises: tuple[int, ...]


@dataclass(frozen=True)
class SFmlaResult:
    proved: bool
    steps: tuple[ProofStep, ...] = ()

    def __bool__(self) -> bool:
        return self.proved


MAX_DERIVED = 4000


def sfmla_prove(
    calculus: Calculus,
    premises,
    goal: Formula,
    depth_bound: int | None = None,
    max_derived: int = MAX_DERIVED,
) -> SFmlaResult:
    """Bounded forward-chaining saturation; ``proved`` is definitive, while a
    negative answer only means the bounds were exhausted.

    Substitution values are drawn from the subformulas of the statement (plus
    the lattice bounds when the calculus mentions them); derived formulas are
    kept only up to ``depth_bound``, and at most ``max_derived`` of them.
    """
    for rule in calculus.rules:
        if len(rule.succedent) != 1:
            raise CalculusError(f"rule {rule.name} is not single-conclusion")
    premises = canonical_sorted(premises)
    pool = set(subformulas(set(premises) | {goal}))
    rule_formulas = [f for rule in calculus.rules for f in rule.antecedent + rule.succedent]
    for conn in (TOP, BOT):
        if any(conn in _heads(f) for f in rule_formulas):
            pool.add(Formula(conn))
    pool = canonical_sorted(pool)
    if depth_bound is None:
        depth_bound = max((formula_depth(f) for f in premises + [goal]), default=1) + 1

    steps: list[ProofStep] = []
    known: dict[Formula, int] = {}

    def record(phi: Formula, rule_name: str, sigma: dict[str, Formula], used: tuple[int, ...]) -> None:
        if phi in known:
            return
        known[phi] = len(steps)
        steps.append(ProofStep(len(steps), phi, rule_name, tuple(sorted(sigma.items())), used))

    for phi in premises:
        record(phi, "premise", {}, ())

    grew = True
    while grew and goal not in known and len(known) < max_derived:
        grew = False
        for rule in calculus.rules:
            for sigma in _forward_bindings(rule, list(known), pool):
                conclusion = apply_substitution(sigma, rule.succedent[0])
                if formula_depth(conclusion) > depth_bound or conclusion in known:
                    continue
                used = tuple(
                    known[apply_substitution(sigma, f)] for f in rule.antecedent
                )
                record(conclusion, rule.name, sigma, used)
                grew = True
                if conclusion == goal or len(known) >= max_derived:
                    break
            if goal in known or len(known) >= max_derived:
                break

    if goal not in known:
        return SFmlaResult(False)

    needed: set[int] = set()

    def collect(index: int) -> None:
        if index in needed:
            return
        needed.add(index)
        for dep in steps[index].premises:
            collect(dep)

    collect(known[goal])
    ordered = [steps[i] for i in sorted(needed)]
    renumber = {step.index: i for i, step in enumerate(ordered)}
    trimmed = tuple(
        ProofStep(i, s.formula, s.rule, s.substitution, tuple(renumber[d] for d in s.premises))
        for i, s in enumerate(ordered)
    )
    return SFmlaResult(True, trimmed)


def _heads(phi: Formula) -> set[str]:
    out = {phi.head}
    for a in phi.args:
        out |= _heads(a)
    return out


def _forward_bindings(rule: Rule, derived: list[Formula], pool: list[Formula]):
    """Substitutions matching the rule antecedent inside ``derived``; variables
    appearing only in the succedent range over ``pool``."""
    derived_set = set(derived)
    antecedent = sorted(
        rule.antecedent, key=lambda f: (-len(props(f)), -formula_size(f))
    )
    succedent_vars = props_of_set(rule.succedent)

    def extend(i: int, binding: dict[str, Formula]):
        if i == len(antecedent):
            free = sorted(succedent_vars - binding.keys())
            for values in itertools.product(pool, repeat=len(free)):
                yield {**binding, **dict(zip(free, values))}
            return
        phi = antecedent[i]
        if props(phi) <= binding.keys():
            if apply_substitution(binding, phi) in derived_set:
                yield from extend(i + 1, binding)
            return
        for target in derived:
            extended = _match(phi, target, binding)
            if extended is not None:
                yield from extend(i + 1, extended)

    yield from extend(0, {})


# ---------------------------------------------------------------------------
# Rendering

def render_tree(result: ProofResult) -> str:
    """Indented text rendering of a proof result."""
    lines: list[str] = []
    psi = set(result.conclusions)

    def node_text(node: DerivationNode, added: Formula | None) -> str:
        if node.is_star:
            return "* (branch discontinued)"
        if added is None:
            label = ", ".join(render_formula(f) for f in canonical_sorted(node.label))
            text = f"root: {label}" if label else "root: (empty)"
        else:
            text = f"+ {render_formula(added)}"
        if node.is_leaf and node.label & psi:
            text += "   [closed: meets the conclusion set]"
        return text

    def walk(node: DerivationNode, added: Formula | None, depth: int) -> None:
        lines.append("  " * depth + node_text(node, added))
        if node.rule is not None:
            lines.append("  " * (depth + 1) + f"[{node.rule}]")
        for child in node.children:
            delta = None
            if not child.is_star and node.label is not None:
                extra = child.label - node.label
                delta = next(iter(extra)) if extra else None
            walk(child, delta, depth + 1)

    if result.closed:
        walk(result.tree, None, 0)
    else:
        lines.append("open saturated branch:")
        for phi in canonical_sorted(result.open_branch):
            lines.append(f"  {render_formula(phi)}")
    return "\n".join(lines)


def tree_to_doc(result: ProofResult) -> dict:
    counter = itertools.count()

    def walk(node: DerivationNode, added: Formula | None) -> dict:
        doc: dict = {"id": next(counter)}
        if node.is_star:
            doc["star"] = True
            return doc
        if added is None:
            doc["label"] = [render_formula(f) for f in canonical_sorted(node.label)]
        else:
            doc["added"] = render_formula(added)
        if node.rule is not None:
            doc["rule"] = node.rule.rule.name
            doc["substitution"] = {
                v: render_formula(f) for v, f in node.rule.substitution
            }
            children = []
            for child in node.children:
                delta = None
                if not child.is_star:
                    extra = child.label - node.label
                    delta = next(iter(extra)) if extra else None
                children.append(walk(child, delta))
            doc["children"] = children
        return doc

    out = {
        "verdict": "closed" if result.closed else "open",
        "premises": [render_formula(f) for f in result.premises],
        "conclusions": [render_formula(f) for f in result.conclusions],
    }
    if result.closed:
        out["tree"] = walk(result.tree, None)
    else:
        out["open_branch"] = [render_formula(f) for f in canonical_sorted(result.open_branch)]
    return out

"""Seeded random formulas and Set-Set statements for the desk-scale suites."""

from __future__ import annotations

import random

from .syntax import Formula, Signature, SIG_PP, var


DEFAULT_VARIABLES = ("p", "q", "r")


def random_formula(
    rng: random.Random,
    sig: Signature = SIG_PP,
    variables=DEFAULT_VARIABLES,
    max_depth: int = 4,
) -> Formula:
    """A random formula of depth at most ``max_depth`` over ``variables``."""
    leaves = [var(v) for v in variables]
    nullary = [Formula(c) for c, k in sig.connectives.items() if k == 0]
    compound = [(c, k) for c, k in sig.connectives.items() if k > 0]
    leaves = leaves + nullary

    def build(depth: int) -> Formula:
        if depth <= 1 or rng.random() < 0.25:
            return rng.choice(leaves)
        conn, arity = rng.choice(compound)
        return Formula(conn, tuple(build(depth - 1) for _ in range(arity)))

    return build(max_depth)


def random_statement(
    rng: random.Random,
    sig: Signature = SIG_PP,
    variables=DEFAULT_VARIABLES,
    max_depth: int = 4,
    max_side: int = 2,
    nonempty_succedent: bool = False,
) -> tuple[list[Formula], list[Formula]]:
    """A random (premises, conclusions) pair with up to ``max_side`` formulas
    on each side."""
    n_prem = rng.randint(0, max_side)
    low = 1 if nonempty_succedent else 0
    n_conc = rng.randint(low, max_side)
    premises = [random_formula(rng, sig, variables, max_depth) for _ in range(n_prem)]
    conclusions = [random_formula(rng, sig, variables, max_depth) for _ in range(n_conc)]
    return premises, conclusions

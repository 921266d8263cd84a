"""Random propositional systems for the construction property tests."""

import random

from antigeometry.axioms import PreconditionViolated, analyze_construction


def random_formula(rng: random.Random, n_vars: int, depth: int = 2):
    if depth == 0 or rng.random() < 0.3:
        v = ("var", rng.randrange(n_vars))
        return ("not", v) if rng.random() < 0.4 else v
    op = rng.choice(("not", "and", "or", "imp"))
    if op == "not":
        return ("not", random_formula(rng, n_vars, depth - 1))
    return (op, random_formula(rng, n_vars, depth - 1), random_formula(rng, n_vars, depth - 1))


def random_construction(rng: random.Random, max_a: int = 3, max_vars: int = 4, max_k: int = 3):
    """Draw systems until one meets the preconditions; returns (a_list, b, b', n_vars, k, report)."""
    while True:
        n_vars = rng.randint(1, max_vars)
        n_a = rng.randint(0, max_a)
        a_list = [random_formula(rng, n_vars) for _ in range(n_a)]
        b = random_formula(rng, n_vars)
        # b' must clash with b, so build it from the negation of b
        b_prime = ("not", b) if rng.random() < 0.5 else ("and", ("not", b), random_formula(rng, n_vars, 1))
        k = rng.randint(1, max_k)
        try:
            rep = analyze_construction(a_list, b, b_prime, k=k, n_vars=n_vars)
        except PreconditionViolated:
            continue
        return a_list, b, b_prime, n_vars, k, rep

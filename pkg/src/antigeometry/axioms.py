"""Propositional axiom systems: consistency, independence, and consequence sets
drawn only from consistent sub-systems (so an inconsistent system does not explode).

Formulas are written in prefix notation: ``!`` not, ``&`` and, ``|`` or,
``->`` implies, variables ``v0`` .. ``v19``; e.g. ``-> & v0 v1 ! v2``.
Truth tables are Python integers with one bit per valuation.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

MAX_VARS = 20

_TOKEN = re.compile(r"\s*(->|!|&|\||v\d+)")


class TooManyVariables(ValueError):
    pass


class FormulaSyntaxError(ValueError):
    pass


class PreconditionViolated(ValueError):
    def __init__(self, which: str, message: str):
        super().__init__(f"{which}: {message}")
        self.which = which


# formulas are nested tuples: ("var", i) | ("not", f) | ("and"|"or"|"imp", f, g)
_BINARY = {"&": "and", "|": "or", "->": "imp"}
_SYMBOL = {"and": "&", "or": "|", "imp": "->"}


def tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 5]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse(text: str):
    toks = tokenize(text)
    pos = 0

    def go():
        nonlocal pos
        if pos >= len(toks):
            raise FormulaSyntaxError(f"formula ends early: {text!r}")
        tok = toks[pos]
        pos += 1
        if tok == "!":
            return ("not", go())
        if tok in _BINARY:
            left = go()
            return (_BINARY[tok], left, go())
        i = int(tok[1:])
        if i >= MAX_VARS:
            raise TooManyVariables(f"variable {tok} is beyond v{MAX_VARS - 1}")
        return ("var", i)

    f = go()
    if pos != len(toks):
        raise FormulaSyntaxError(f"trailing tokens in {text!r}")
    return f


def to_text(f) -> str:
    op = f[0]
    if op == "var":
        return f"v{f[1]}"
    if op == "not":
        return "! " + to_text(f[1])
    return f"{_SYMBOL[op]} {to_text(f[1])} {to_text(f[2])}"


def variables(f) -> set[int]:
    if f[0] == "var":
        return {f[1]}
    return set().union(*(variables(g) for g in f[1:]))


def _as_formula(f):
    return parse(f) if isinstance(f, str) else f


def n_vars_of(formulas) -> int:
    vs = set()
    for f in formulas:
        vs |= variables(_as_formula(f))
    return max(vs) + 1 if vs else 0


# --- truth tables ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _var_mask(i: int, n: int) -> int:
    size = 1 << n
    half = 1 << i
    period = half << 1
    unit = ((1 << half) - 1) << half
    return unit * (((1 << size) - 1) // ((1 << period) - 1))


def table(f, n: int) -> int:
    """Bitmask of the valuations (over ``n`` variables) satisfying ``f``."""
    if n > MAX_VARS:
        raise TooManyVariables(f"{n} variables (limit {MAX_VARS})")
    f = _as_formula(f)
    full = (1 << (1 << n)) - 1
    return _table(f, n, full)


def _table(f, n, full):
    op = f[0]
    if op == "var":
        if f[1] >= n:
            raise ValueError(f"variable v{f[1]} outside the {n}-variable set")
        return _var_mask(f[1], n)
    if op == "not":
        return full ^ _table(f[1], n, full)
    a, b = _table(f[1], n, full), _table(f[2], n, full)
    if op == "and":
        return a & b
    if op == "or":
        return a | b
    return (full ^ a) | b


def _n(axioms, n_vars):
    n = n_vars_of(axioms) if n_vars is None else n_vars
    if n > MAX_VARS:
        raise TooManyVariables(f"{n} variables (limit {MAX_VARS})")
    return n


def _conj(tables, full):
    out = full
    for t in tables:
        out &= t
    return out


def is_consistent(axioms, n_vars: int | None = None) -> bool:
    n = _n(axioms, n_vars)
    full = (1 << (1 << n)) - 1
    return _conj((table(a, n) for a in axioms), full) != 0


def is_independent(axioms, n_vars: int | None = None) -> bool:
    """Each axiom can fail while all the others hold."""
    n = _n(axioms, n_vars)
    full = (1 << (1 << n)) - 1
    ts = [table(a, n) for a in axioms]
    for i, t in enumerate(ts):
        rest = _conj(ts[:i] + ts[i + 1:], full)
        if rest & (full ^ t) == 0:
            return False
    return True


def entails(premises, phi, n_vars: int | None = None) -> bool:
    n = _n(list(premises) + [phi], n_vars)
    full = (1 << (1 << n)) - 1
    return _conj((table(a, n) for a in premises), full) & (full ^ table(phi, n)) == 0


# --- universes and consequence sets --------------------------------------------------------


def literals(n: int) -> list:
    out = []
    for i in range(n):
        out += [("var", i), ("not", ("var", i))]
    return out


def default_universe(n: int, conjunctions: bool = True, disjunctions: bool = True) -> list:
    """Literals, then pairwise conjunctions, then pairwise disjunctions of distinct literals."""
    lits = literals(n)
    out = list(lits)
    pairs = list(combinations(lits, 2))
    if conjunctions:
        out += [("and", a, b) for a, b in pairs]
    if disjunctions:
        out += [("or", a, b) for a, b in pairs]
    return out


def consequences(axioms, universe, k: int, n_vars: int | None = None) -> list:
    """Members of ``universe`` entailed by some consistent subset of at most ``k`` axioms.

    Inconsistent subsets derive nothing; the empty subset yields the tautologies.
    The result keeps universe order.
    """
    axioms = [_as_formula(a) for a in axioms]
    universe = [_as_formula(f) for f in universe]
    n = _n(axioms + universe, n_vars)
    full = (1 << (1 << n)) - 1
    ts = [table(a, n) for a in axioms]
    uts = [table(f, n) for f in universe]
    hit = [False] * len(universe)
    for size in range(0, min(k, len(axioms)) + 1):
        for idx in combinations(range(len(axioms)), size):
            prem = _conj((ts[i] for i in idx), full)
            if prem == 0:
                continue
            for j, u in enumerate(uts):
                if not hit[j] and prem & (full ^ u) == 0:
                    hit[j] = True
    return [f for f, h in zip(universe, hit) if h]


def contradictory_pairs(formulas, n: int) -> list[tuple]:
    """Unordered pairs whose truth tables are complementary."""
    full = (1 << (1 << n)) - 1
    ts = [table(f, n) for f in formulas]
    return [
        (formulas[i], formulas[j])
        for i, j in combinations(range(len(formulas)), 2)
        if ts[i] == full ^ ts[j]
    ]


# --- the construction ---------------------------------------------------------------------


@dataclass
class ConsequenceReport:
    n_vars: int
    k: int
    universe: list
    cn_P: list
    cn_C: list
    cn_C_prime: list
    cn_I: list
    pairs: list = field(default_factory=list)
    t: int = 0
    identity_holds: bool = True

    def to_dict(self) -> dict:
        txt = lambda fs: [to_text(f) for f in fs]  # noqa: E731
        return {
            "vars": self.n_vars,
            "k": self.k,
            "universe_size": len(self.universe),
            "cn_P": txt(self.cn_P),
            "cn_C": txt(self.cn_C),
            "cn_C_prime": txt(self.cn_C_prime),
            "cn_I": txt(self.cn_I),
            "contradictory_pairs": [[to_text(a), to_text(b)] for a, b in self.pairs],
            "n_pairs": len(self.pairs),
            "t": self.t,
            "identity_holds": self.identity_holds,
        }


def analyze_construction(a_list, b, b_prime, universe=None, k: int = 2, n_vars: int | None = None) -> ConsequenceReport:
    """Build [P] = a's, [C] = a's + b, [C'] = a's + b', [I] = a's + b + b' and compare
    their consequence sets; ``t`` counts contradictory pairs of cn_I beyond (b, b')."""
    a_list = [_as_formula(a) for a in a_list]
    b, b_prime = _as_formula(b), _as_formula(b_prime)
    n = _n(a_list + [b, b_prime] + [_as_formula(f) for f in (universe or [])], n_vars)
    if not is_consistent(a_list + [b], n):
        raise PreconditionViolated("consistent_C", "the a's together with b are inconsistent")
    if not is_independent(a_list + [b], n):
        raise PreconditionViolated("independent_C", "the a's together with b are not independent")
    if not is_consistent(a_list + [b_prime], n):
        raise PreconditionViolated("consistent_C_prime", "the a's together with b' are inconsistent")
    if is_consistent([b, b_prime], n):
        raise PreconditionViolated("contradictory", "b and b' can hold together")
    uni = default_universe(n) if universe is None else [_as_formula(f) for f in universe]
    cn_p = consequences(a_list, uni, k, n)
    cn_c = consequences(a_list + [b], uni, k, n)
    cn_c2 = consequences(a_list + [b_prime], uni, k, n)
    cn_i = consequences(a_list + [b, b_prime], uni, k, n)
    union = [f for f in uni if f in cn_c or f in cn_c2]
    pairs = contradictory_pairs(cn_i, n)
    full = (1 << (1 << n)) - 1
    tb, tb2 = table(b, n), table(b_prime, n)
    base = sum(1 for x, y in pairs if {table(x, n), table(y, n)} == {tb, tb2} and tb == full ^ tb2)
    return ConsequenceReport(
        n_vars=n,
        k=k,
        universe=uni,
        cn_P=cn_p,
        cn_C=cn_c,
        cn_C_prime=cn_c2,
        cn_I=cn_i,
        pairs=pairs,
        t=len(pairs) - min(base, 1),
        identity_holds=cn_i == union,
    )


@dataclass
class AxiomSystem:
    n_vars: int
    axioms: list

    def __post_init__(self):
        if self.n_vars > MAX_VARS:
            raise TooManyVariables(f"{self.n_vars} variables (limit {MAX_VARS})")
        for a in self.axioms:
            extra = variables(a) - set(range(self.n_vars))
            if extra:
                raise ValueError(f"{to_text(a)} uses variables outside v0..v{self.n_vars - 1}")

    @classmethod
    def from_json(cls, d: dict) -> "AxiomSystem":
        if not isinstance(d, dict) or "vars" not in d or "axioms" not in d:
            raise ValueError('expected {"vars": n, "axioms": [...]}')
        return cls(int(d["vars"]), [parse(s) for s in d["axioms"]])

    @classmethod
    def load(cls, path) -> "AxiomSystem":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        return {"vars": self.n_vars, "axioms": [to_text(a) for a in self.axioms]}

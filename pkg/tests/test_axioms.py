import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antigeometry.axioms import (
    AxiomSystem,
    FormulaSyntaxError,
    PreconditionViolated,
    TooManyVariables,
    analyze_construction,
    consequences,
    contradictory_pairs,
    default_universe,
    entails,
    is_consistent,
    is_independent,
    literals,
    parse,
    table,
    to_text,
)

from axiom_gen import random_construction, random_formula

x, y = ("var", 0), ("var", 1)


def neg(f):
    return ("not", f)


def test_parse_round_trip():
    for text in ["v0", "! v1", "-> & v0 v1 ! v2", "| v3 & v0 ! v19"]:
        assert to_text(parse(text)) == text


@pytest.mark.parametrize("text", ["", "& v0", "v0 v1", "v0 + v1"])
def test_parse_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse(text)


def test_variable_limit():
    with pytest.raises(TooManyVariables):
        parse("v20")
    with pytest.raises(TooManyVariables):
        table("v0", 21)


def _brute_models(f, n):
    """Valuations satisfying f, by direct evaluation."""

    def ev(g, val):
        op = g[0]
        if op == "var":
            return val[g[1]]
        if op == "not":
            return not ev(g[1], val)
        a, b = ev(g[1], val), ev(g[2], val)
        return {"and": a and b, "or": a or b, "imp": (not a) or b}[op]

    return {i for i in range(1 << n) if ev(f, [(i >> v) & 1 == 1 for v in range(n)])}


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10_000))
def test_truth_tables_match_direct_evaluation(n, seed):
    f = random_formula(random.Random(seed), n, depth=3)
    t = table(f, n)
    assert {i for i in range(1 << n) if t >> i & 1} == _brute_models(f, n)


def test_consistency_examples():
    assert is_consistent([x])
    assert not is_consistent([y, neg(y)])
    assert not is_consistent([x, ("imp", x, y), neg(y)])


def test_independence_examples():
    assert is_independent([x, y])
    assert not is_independent([x, ("and", x, y)])
    assert not is_independent([x, y, ("or", x, y)])


def test_consequence_examples():
    assert consequences([x], literals(2), 1, 2) == [x]
    assert ("and", x, y) in consequences([x, y], default_universe(2), 2, 2)
    cn = consequences([x, y, neg(y)], default_universe(2), 2, 2)
    assert ("and", x, y) in cn and ("and", x, neg(y)) in cn
    assert ("and", y, neg(y)) not in cn


def test_no_axioms_give_tautologies_only():
    cn = consequences([], default_universe(2), 2, 2)
    assert cn == [("or", x, neg(x)), ("or", y, neg(y))]


def test_inconsistent_system_does_not_explode():
    cn = consequences([y, neg(y)], literals(2), 2, 2)
    assert cn == [y, neg(y)]
    assert not entails([x], y, 2)


def test_worked_example_n1():
    rep = analyze_construction([x], y, neg(y), k=2)
    assert {("and", x, y), ("and", x, neg(y))} <= set(rep.cn_I)
    assert any({a, b} == {y, neg(y)} for a, b in rep.pairs)
    assert rep.identity_holds
    assert rep.t >= 1


def test_worked_example_n1_conjunction_universe():
    # with literals and conjunctions only, x & y and x & !y are contraries but not complements
    uni = default_universe(2, disjunctions=False)
    rep = analyze_construction([x], y, neg(y), universe=uni, k=2)
    assert rep.identity_holds and rep.t == 0


def test_worked_example_n0():
    rep = analyze_construction([], y, neg(y), universe=literals(2), k=1, n_vars=2)
    assert rep.cn_I == [y, neg(y)]
    assert len(rep.pairs) == 1 and rep.t == 0


@pytest.mark.parametrize(
    "a_list, b, bp, which",
    [
        ([x, neg(x)], y, neg(y), "consistent_C"),
        ([x], x, neg(y), "independent_C"),
        ([neg(y)], x, y, "consistent_C_prime"),
        ([x], y, x, "contradictory"),
    ],
)
def test_preconditions(a_list, b, bp, which):
    with pytest.raises(PreconditionViolated) as exc:
        analyze_construction(a_list, b, bp, k=2, n_vars=2)
    assert exc.value.which == which


def test_contradictory_pairs_are_semantic():
    pairs = contradictory_pairs([("imp", x, y), ("and", x, neg(y)), x], 2)
    assert pairs == [(("imp", x, y), ("and", x, neg(y)))]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_construction_properties(seed):
    a_list, b, bp, n, k, rep = random_construction(random.Random(seed))
    union = [f for f in rep.universe if f in rep.cn_C or f in rep.cn_C_prime]
    assert rep.cn_I == union
    assert set(rep.cn_P) <= set(rep.cn_C) and set(rep.cn_P) <= set(rep.cn_C_prime)
    assert contradictory_pairs(rep.cn_C, n) == []
    assert len(rep.pairs) >= len(contradictory_pairs(rep.cn_C, n))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_consequences_monotone(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    axs = [random_formula(rng, n) for _ in range(rng.randint(1, 4))]
    uni = default_universe(n)
    for k in range(0, 3):
        assert set(consequences(axs, uni, k, n)) <= set(consequences(axs, uni, k + 1, n))
    extra = random_formula(rng, n)
    assert set(consequences(axs, uni, 2, n)) <= set(consequences(axs + [extra], uni, 2, n))


def test_system_json(tmp_path):
    path = tmp_path / "sys.json"
    path.write_text(json.dumps({"vars": 2, "axioms": ["v0", "v1", "! v1"]}))
    system = AxiomSystem.load(path)
    assert system.axioms == [x, y, neg(y)]
    assert system.to_json() == {"vars": 2, "axioms": ["v0", "v1", "! v1"]}
    with pytest.raises(ValueError):
        AxiomSystem.from_json({"vars": 1, "axioms": ["v1"]})

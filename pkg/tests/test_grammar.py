import itertools

import pytest

from anticf import (Grammar, NotGreibach, NotProjective, NotTransformed,
                    SpecError, atomic, cfg_enumerate, cfg_from_local,
                    cyk_member, distinct_vars_transform, enumerate_trees,
                    linearize, local_from_gnf, parse_linearisation,
                    reverse_spec, validate_gnf, vertices)
from anticf.fixtures import (gnf_anbn, pi_mult, pi_squa, w_mult_spec, w_squa_spec)
from anticf.locality import LocalSpec

from oracles import random_gnf, rng_for


def words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def g(rules, start="S"):
    rules = tuple((h, tuple(b.split()) if isinstance(b, str) else b) for h, b in rules)
    variables = {h for h, _ in rules} | {start}
    terminals = {x for _, b in rules for x in b if x not in variables}
    return Grammar(terminals, variables, start, rules)


class TestValidate:
    def test_anbn(self):
        v = gnf_anbn()
        assert not v.transformed
        lang = cfg_enumerate(v, 12)
        assert lang == {("a",) * n + ("b",) * n for n in range(1, 7)}

    def test_left_recursion(self):
        with pytest.raises(NotGreibach) as err:
            validate_gnf(g([("S", "S a")]))
        assert err.value.rule == ("S", ("S", "a"))

    def test_terminal_inside(self):
        with pytest.raises(NotGreibach):
            validate_gnf(g([("S", "a b")]))

    def test_epsilon_body(self):
        with pytest.raises(NotGreibach):
            validate_gnf(g([("S", ())]))

    def test_empty_grammar(self):
        empty = validate_gnf(Grammar(set(), {"S"}, "S", ()))
        assert cfg_enumerate(empty, 5) == set()
        assert not cyk_member(empty, ())

    def test_recognises_transformed(self):
        t = distinct_vars_transform(gnf_anbn())
        again = validate_gnf(Grammar(t.terminals, t.variables, t.start, t.rules))
        assert again.transformed and again.wrappers == t.wrappers

    def test_shared_wrapper_is_rejected(self):
        with pytest.raises(NotGreibach):
            validate_gnf(g([("S", "a C C"), ("C", "S"), ("S", "b")]))


class TestTransform:
    def test_shape(self):
        t = distinct_vars_transform(validate_gnf(g([("S", "a S S"), ("S", "b")])))
        assert t.transformed
        assert ("S", ("a", "C1_1", "C1_2")) in t.rules
        assert ("C1_1", ("S",)) in t.rules and ("C1_2", ("S",)) in t.rules
        assert ("S", ("b",)) in t.rules

    def test_uniform_wrapping(self):
        t = distinct_vars_transform(validate_gnf(g([("S", "a B"), ("B", "b")])))
        assert t.wrappers == {"C1_1"}

    def test_fresh_names(self):
        t = distinct_vars_transform(validate_gnf(g([("S", "a C1_1"), ("C1_1", "b")])))
        assert len(t.wrappers) == 1 and "C1_1" not in t.wrappers

    def test_same_language(self):
        rng = rng_for(31)
        for _ in range(50):
            src = random_gnf(rng)
            t = distinct_vars_transform(validate_gnf(src))
            for w in words("ab", 8):
                assert cyk_member(src, w) == cyk_member(t, w)


class TestMembership:
    def test_anbn(self):
        assert cyk_member(gnf_anbn(), "aaabbb")
        assert not cyk_member(gnf_anbn(), "aabbb")

    def test_epsilon(self):
        assert cyk_member(g([("S", ()), ("S", "a S")]), ())
        assert not cyk_member(gnf_anbn(), ())

    def test_odd_squares_rejected(self):
        squa = cfg_from_local(w_squa_spec(), pi_squa())
        for n in range(1, 10, 2):
            for w in words("ab", n):
                if len(w) == n:
                    assert not cyk_member(squa, w)

    def test_agrees_with_enumeration_on_general_grammars(self):
        rng = rng_for(32)
        for _ in range(50):
            variables = ["S", "A", "B"]
            rules = []
            for _ in range(rng.randint(1, 6)):
                body = tuple(rng.choice(variables + ["a", "b"]) for _ in range(rng.randint(0, 3)))
                rules.append((rng.choice(variables), body))
            gram = Grammar({"a", "b"}, set(variables), "S", tuple(rules))
            lang = cfg_enumerate(gram, 6)
            for w in words("ab", 6):
                assert cyk_member(gram, w) == (w in lang), (rules, w)

    def test_mult_language(self):
        mult = cfg_from_local(w_mult_spec(), pi_mult())
        assert cfg_enumerate(mult, 9) == {tuple("abc") * n for n in range(4)}

    def test_negative_length(self):
        with pytest.raises(ValueError):
            cfg_enumerate(gnf_anbn(), -1)


class TestFromLocal:
    def test_squares(self):
        squa = cfg_from_local(w_squa_spec(), pi_squa())
        assert cfg_enumerate(squa, 10) == {tuple(x for c in w for x in (c, c))
                                           for w in words("ab", 5)}

    def test_empty_u1(self):
        spec = w_squa_spec()
        empty = LocalSpec(spec.p, spec.mode, set(), spec.u2, spec.u3,
                          spec.functions, spec.vocabulary)
        gram = cfg_from_local(empty, pi_squa())
        assert not [r for r in gram.rules if r[0] == gram.start]
        assert cfg_enumerate(gram, 8) == set()

    def test_not_projective(self):
        with pytest.raises(NotProjective):
            cfg_from_local(w_squa_spec(), parse_linearisation("anti(alpha), root, anti(beta)"))

    def test_anti_spec(self):
        with pytest.raises(SpecError):
            cfg_from_local(reverse_spec(w_squa_spec()), pi_squa())

    def test_terminal_outside_u2(self):
        with pytest.warns(UserWarning):
            spec = LocalSpec(1, "local", {atomic("a")}, set(), {atomic("a")}, {"alpha"}, {"a"})
        with pytest.raises(SpecError):
            cfg_from_local(spec, parse_linearisation("root, sub(alpha)"))

    def test_deterministic(self):
        assert cfg_from_local(w_squa_spec(), pi_squa()) == cfg_from_local(w_squa_spec(), pi_squa())


class TestFromGnf:
    def test_anbn(self):
        spec, lin = local_from_gnf(distinct_vars_transform(gnf_anbn()))
        got = {linearize(lin, t) for t in enumerate_trees(spec, 24, 12)}
        assert got == {("a",) * n + ("b",) * n for n in range(1, 7)}
        assert str(lin).startswith("root, sub(C1_1), sub(C1_2), sub(C2_1)")
        assert spec.functions == distinct_vars_transform(gnf_anbn()).variables

    def test_needs_transform(self):
        with pytest.raises(NotTransformed):
            local_from_gnf(gnf_anbn())

    def test_single_rule(self):
        spec, lin = local_from_gnf(validate_gnf(g([("S", "a")])))
        assert spec.u1 == {atomic("a")}
        assert [linearize(lin, t) for t in enumerate_trees(spec, 3, 3)] == [("a",)]

    def test_depth_two_windows_are_not_enough(self):
        # S -> a C1, C1 -> X, X -> b C2, C2 -> Y, Y -> d, and a decoy Z -> b C3,
        # C3 -> W, W -> e. Depth-2 windows never see an X node together with
        # the wrapper below it, so the decoy's wrapper can be glued under X.
        gram = validate_gnf(g([("S", "a C1"), ("C1", "X"), ("X", "b C2"), ("C2", "Y"),
                               ("Y", "d"), ("Z", "b C3"), ("C3", "W"), ("W", "e")]))
        assert gram.transformed
        assert cfg_enumerate(gram, 5) == {tuple("abd")}
        spec2, lin2 = local_from_gnf(gram, p=2)
        assert tuple("abe") in {linearize(lin2, t) for t in enumerate_trees(spec2, 8, 5)}
        spec3, lin3 = local_from_gnf(gram)
        assert {linearize(lin3, t) for t in enumerate_trees(spec3, 8, 5)} == {tuple("abd")}

    def test_collapse_structure(self):
        rng = rng_for(33)
        grammars = [gnf_anbn()] + [random_gnf(rng) for _ in range(10)]
        for src in grammars:
            gram = distinct_vars_transform(validate_gnf(src))
            spec, lin = local_from_gnf(gram)
            for t in enumerate_trees(spec, 10, 6):
                for v in vertices(t):
                    kids = {a[len(v)] for a in vertices(t) if len(a) == len(v) + 1 and a[:len(v)] == v}
                    # a wrapper child silences every original-variable slot
                    if kids & gram.wrappers:
                        assert not kids - gram.wrappers
                    # an original-variable child means the node itself emits nothing
                    if kids - gram.wrappers:
                        assert v not in t and len(kids) == 1

    def test_round_trip(self):
        rng = rng_for(34)
        for _ in range(25):
            src = random_gnf(rng)
            spec, lin = local_from_gnf(distinct_vars_transform(validate_gnf(src)))
            back = cfg_from_local(spec, lin)
            assert cfg_enumerate(back, 7) == cfg_enumerate(src, 7)


def test_grammar_validation():
    with pytest.raises(SpecError):
        Grammar({"a"}, {"S"}, "T", ())
    with pytest.raises(SpecError):
        Grammar({"a"}, {"S"}, "S", (("S", ("b",)),))
    with pytest.raises(SpecError):
        Grammar({"S"}, {"S"}, "S", ())
    dup = Grammar({"a"}, {"S"}, "S", (("S", ("a",)), ("S", ("a",))))
    assert len(dup.rules) == 1

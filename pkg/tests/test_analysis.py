import json

import pytest

from anticf import IncompatibleAlphabets, Tree, atomic, linearize, reverse_linearisation
from anticf.analysis import (ParikhVector, dual_pair, governor, growth_csv,
                             length_growth, parikh_string, parikh_tree,
                             self_dual_check, total_dependency_length)
from anticf.fixtures import (anbn_fixture, dyck_fixture,
                             eng_tree, pi_dut, pi_eng, pi_mult, pi_squa, q_tree,
                             w_mult_spec, w_squa_spec)

from oracles import balanced, random_linearisation, random_tree, rng_for
from anticf.fixtures import DYCK_PAIRS


def s(w):
    return "".join(w)


class TestDualPair:
    def test_squares_and_copies(self):
        rep = dual_pair(w_squa_spec(), pi_squa(), 3, 6)
        assert "aabbaa" in map(s, rep.language)
        assert "abaaba" in map(s, rep.dual_language)
        assert rep.dual == "anti(alpha), root, anti(beta)"
        for t, w, v in rep.triples:
            assert sorted(w) == sorted(v)

    def test_mult_and_resp(self):
        rep = dual_pair(w_mult_spec(), pi_mult(), 3, 9)
        assert [s(w) for w in rep.language] == ["", "abc", "abcabc", "abcabcabc"]
        assert [s(w) for w in rep.dual_language] == ["", "abc", "aabbcc", "aaabbbccc"]

    def test_dyck(self):
        spec, lin = dyck_fixture()
        rep = dual_pair(spec, lin, 2, 6)
        for _, w, v in rep.triples:
            assert balanced(w, DYCK_PAIRS)
            half = len(v) // 2
            # reversed trees read openers first, then closers in the same order
            assert all(x in dict(DYCK_PAIRS) for x in v[:half])
            assert [dict(DYCK_PAIRS)[x] for x in v[:half]] == list(v[half:])

    def test_json_is_stable(self):
        a = dual_pair(w_mult_spec(), pi_mult(), 2, 6).to_json()
        b = dual_pair(w_mult_spec(), pi_mult(), 2, 6).to_json()
        assert a == b
        doc = json.loads(a)
        assert list(doc) == sorted(doc)
        assert doc["pairs"][2] == ["abcabc", "aabbcc"]

    def test_incompatible(self):
        with pytest.raises(IncompatibleAlphabets):
            dual_pair(w_mult_spec(), pi_squa(), 2, 3)


class TestSelfDual:
    def test_anbn(self):
        v = self_dual_check(*anbn_fixture(), 6, 12)
        assert v and v.counterexample is None and v.bounds == (6, 12)

    def test_squares_are_not(self):
        v = self_dual_check(w_squa_spec(), pi_squa(), 4, 8, max_len=8)
        assert not v
        assert s(v.counterexample) == "aabb" and v.side == "language"


class TestParikh:
    def test_counts(self):
        assert parikh_string("aabba") == {"a": 3, "b": 2}
        assert parikh_tree(Tree()) == ParikhVector()
        assert parikh_tree(Tree())["a"] == 0
        assert ParikhVector("ab").vector("abc") == (1, 1, 0)
        assert parikh_string("aab").total() == 3

    def test_commutes(self):
        rng = rng_for(41)
        for _ in range(300):
            t = random_tree(rng, 4, "xyz", "pqr")
            lin = random_linearisation(rng, "xyz", rng.choice([("sub",), ("anti",)]))
            assert parikh_tree(t) == parikh_string(linearize(lin, t))


class TestDependencyLength:
    def test_figure_values(self):
        rep = total_dependency_length(pi_squa(), q_tree("abc"))
        assert rep.total == 7 and len(rep.edges) == 5
        assert total_dependency_length(reverse_linearisation(pi_squa()), q_tree("abc")).total == 11

    def test_reversed_tree_keeps_its_own_edges(self):
        # same word abcabc, but the reversed tree's edges make it total 7
        from anticf import reverse
        assert s(linearize(pi_squa(), reverse(q_tree("abc")))) == "abcabc"
        assert total_dependency_length(pi_squa(), reverse(q_tree("abc"))).total == 7

    def test_clauses(self):
        assert total_dependency_length(pi_eng(), eng_tree()).total == 7
        assert total_dependency_length(pi_dut(), eng_tree()).total == 11

    def test_single_node(self):
        rep = total_dependency_length(pi_squa(), atomic("a"))
        assert rep.edges == [] and rep.total == 0

    def test_gaps(self):
        t = Tree({(): "a", ("alpha", "beta"): "b"})
        assert governor(t, ("alpha", "beta")) == ()
        assert governor(Tree({("alpha",): "b"}), ("alpha",)) is None
        assert total_dependency_length(pi_squa(), t).total == 1

    def test_relabelling_invariance(self):
        rng = rng_for(42)
        for _ in range(100):
            t = random_tree(rng, 4, "xy", "pq")
            relabelled = Tree({a: l.upper() for a, l in t.items()})
            lin = random_linearisation(rng, "xy", ("sub",))
            assert (total_dependency_length(lin, t).total
                    == total_dependency_length(lin, relabelled).total)

    def test_growth(self):
        rows = length_growth(pi_squa(), w_squa_spec(), 3, 6)
        assert (6, 7) in rows and all(2 * l == 3 * n - 4 for n, l in rows if n)
        copy = length_growth(reverse_linearisation(pi_squa()), w_squa_spec(), 3, 6)
        assert (6, 11) in copy
        assert growth_csv([(2, 1), (4, 4)]) == "len,total\n2,1\n4,4\n"

"""Independent reference implementations used as test oracles.

Nothing here calls the package's membership, enumeration or grammar code;
trees are handled as plain dicts of address tuples.
"""

import itertools
import random

from anticf.grammar import Grammar
from anticf.linearise import Linearisation, Slot
from anticf.trees import Tree


def _pairs(tree):
    return frozenset(tree.as_dict().items())


def _closure(domain, anti=False):
    out = set()
    for a in domain:
        for i in range(len(a) + 1):
            out.add(a[i:] if anti else a[:i])
    return out


def _below(entries, v, anti=False):
    n = len(v)
    if anti:
        return {a[:len(a) - n]: l for a, l in entries.items()
                if len(a) >= n and a[len(a) - n:] == v}
    return {a[n:]: l for a, l in entries.items() if a[:n] == v}


class Checker:
    """Window semantics written out directly from the definition."""

    def __init__(self, spec):
        self.p = spec.p
        self.anti = spec.mode == "anti-local"
        self.u1 = {_pairs(t) for t in spec.u1}
        self.u2 = {_pairs(t) for t in spec.u2}
        self.u3 = {_pairs(t) for t in spec.u3}

    def __call__(self, entries, labelled_only=False):
        p = self.p
        if frozenset((a, l) for a, l in entries.items() if len(a) <= p) not in self.u1:
            return False
        anchors = set(entries) if labelled_only else _closure(entries, self.anti)
        for v in anchors:
            sub = _below(entries, v, self.anti)
            if frozenset((a, l) for a, l in sub.items() if len(a) <= p) not in self.u2:
                return False
            if max(map(len, sub), default=0) <= p and frozenset(sub.items()) not in self.u3:
                return False
        return True


def all_addresses(functions, max_depth):
    out = [()]
    layer = [()]
    for _ in range(max_depth):
        layer = [a + (f,) for a in layer for f in sorted(functions)]
        out += layer
    return out


def brute_force(spec, max_depth, max_nodes):
    """Every partial map within the bounds that the checker accepts."""
    check = Checker(spec)
    addrs = all_addresses(spec.functions, max_depth)
    letters = sorted(spec.vocabulary)
    found = set()
    for k in range(max_nodes + 1):
        for dom in itertools.combinations(addrs, k):
            for labels in itertools.product(letters, repeat=k):
                entries = dict(zip(dom, labels))
                if check(entries):
                    found.add(frozenset(entries.items()))
    return found


def balanced(word, pairs):
    closer = dict(pairs)
    stack = []
    for x in word:
        if x in closer:
            stack.append(closer[x])
        elif not stack or stack.pop() != x:
            return False
    return not stack


# random generators

def random_tree(rng, max_depth=5, functions="abc", vocabulary="wxyz", max_entries=10):
    functions, vocabulary = list(functions), list(vocabulary)
    entries = {}
    for _ in range(rng.randint(0, max_entries)):
        addr = tuple(rng.choice(functions) for _ in range(rng.randint(0, max_depth)))
        entries[addr] = rng.choice(vocabulary)
    return Tree(entries, functions, vocabulary)


def random_linearisation(rng, functions, kinds=("sub", "anti")):
    slots = [Slot("root")] + [Slot(rng.choice(kinds), f) for f in functions]
    rng.shuffle(slots)
    return Linearisation(tuple(slots))


def random_gnf(rng, n_vars=4, n_rules=6, terminals="ab", max_body=2):
    variables = ["S", "A", "B", "C"][:rng.randint(1, n_vars)]
    rules = set()
    rules.add(("S", (rng.choice(terminals),)
               + tuple(rng.choice(variables) for _ in range(rng.randint(0, max_body)))))
    while len(rules) < rng.randint(1, n_rules):
        head = rng.choice(variables)
        body = (rng.choice(terminals),) + tuple(
            rng.choice(variables) for _ in range(rng.randint(0, max_body)))
        rules.add((head, body))
    return Grammar(set(terminals), set(variables), "S", tuple(sorted(rules)))


def rng_for(seed):
    return random.Random(seed)

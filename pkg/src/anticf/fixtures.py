"""Worked examples: trees, specs, linearisations and grammars.

Every spec constructor here is checked by the test-suite against a
brute-force filter of all partial maps within small bounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Sequence, Tuple

from .grammar import Grammar, validate_gnf
from .linearise import Linearisation, parse_linearisation, projective
from .locality import LOCAL, LocalSpec, LocalStringSpec, encode_string_spec
from .trees import Tree, chain

A, B, G, D = "alpha", "beta", "gamma", "delta"


# squares: every letter doubled

def q_tree(word: Iterable[str], functions=(A, B), vocabulary=None) -> Tree:
    """Root x1 with an atomic alpha-copy of itself and the rest hanging at beta."""
    word = tuple(word)
    entries = {}
    for i, x in enumerate(word):
        entries[(B,) * i] = x
        entries[(B,) * i + (A,)] = x
    return Tree(entries, functions, vocabulary if vocabulary is not None else set(word))


def pi_squa() -> Linearisation:
    return projective(A, "root", B)


def w_squa_spec(alphabet: Sequence[str] = "ab") -> LocalSpec:
    """The q_tree family at window depth 2.

    Depth 1 would admit ``{/: a, /alpha: a, /alpha/alpha: a}``; the extra level
    lets each window see that the alpha-child is a leaf.
    """
    sigma = tuple(alphabet)
    fz = {A, B}

    def q(w):
        return q_tree(w, fz, sigma)

    atoms = {Tree({(): x}, fz, sigma) for x in sigma}
    pairs = {q((x,)) for x in sigma}
    twos = {q((x, y)) for x in sigma for y in sigma}
    threes = {Tree({(): x, (A,): x, (B,): y, (B, A): y, (B, B): z}, fz, sigma)
              for x in sigma for y in sigma for z in sigma}
    windows = pairs | twos | threes
    return LocalSpec(2, LOCAL, {Tree((), fz, sigma)} | windows, atoms | windows,
                     {Tree((), fz, sigma)} | atoms | pairs | twos, fz, sigma,
                     note="q_tree family; linearised by pi_squa into doubled-letter words")


def doubled(word: Iterable[str]) -> Tuple[str, ...]:
    return tuple(x for x in word for _ in range(2))


# multiples of abc

def m_tree(n: int) -> Tree:
    """Root c, atomic a at alpha, atomic b at beta, the next block at gamma."""
    if n < 0:
        raise ValueError("n must be >= 0")
    entries = {}
    for i in range(n):
        base = (G,) * i
        entries[base] = "c"
        entries[base + (A,)] = "a"
        entries[base + (B,)] = "b"
    return Tree(entries, {A, B, G}, {"a", "b", "c"})


def pi_mult() -> Linearisation:
    return projective(A, B, "root", G)


def w_mult_spec() -> LocalSpec:
    fz, sigma = {A, B, G}, {"a", "b", "c"}

    def t(d):
        return Tree(d, fz, sigma)

    inner = t({(): "c", (A,): "a", (B,): "b", (G,): "c"})
    last = t({(): "c", (A,): "a", (B,): "b"})
    atoms = {t({(): "a"}), t({(): "b"})}
    return LocalSpec(1, LOCAL, {t({}), inner, last}, {inner, last} | atoms,
                     {t({}), last} | atoms, fz, sigma,
                     note="m_tree family; linearised by pi_mult into (abc)^n")


# a^n b^n, self-dual

def anbn_tree(n: int) -> Tree:
    entries = {}
    for i in range(n):
        entries[(B,) * i] = "b"
        entries[(B,) * i + (A,)] = "a"
    return Tree(entries, {A, B}, {"a", "b"})


def pi_anbn() -> Linearisation:
    return projective(A, B, "root")


def anbn_fixture() -> Tuple[LocalSpec, Linearisation]:
    fz, sigma = {A, B}, {"a", "b"}

    def t(d):
        return Tree(d, fz, sigma)

    inner = t({(): "b", (A,): "a", (B,): "b"})
    last = t({(): "b", (A,): "a"})
    atom = t({(): "a"})
    spec = LocalSpec(1, LOCAL, {t({}), inner, last}, {inner, last, atom},
                     {t({}), last, atom}, fz, sigma,
                     note="b-spine with an a at every alpha; self-dual under pi_anbn")
    return spec, pi_anbn()


def gnf_anbn() -> Grammar:
    g = Grammar({"a", "b"}, {"S", "B"}, "S",
                (("S", ("a", "S", "B")), ("S", ("a", "B")), ("B", ("b",))))
    return validate_gnf(g)


# chains and string languages

def t_chain(word: Iterable[str], f: str = B, functions=None, vocabulary=None) -> Tree:
    return chain(word, f, functions, vocabulary)


def pi_chain(f: str = A) -> Linearisation:
    return projective("root", f)


def mult_string_spec() -> LocalStringSpec:
    """(abc)^n with windows of three letters."""
    return LocalStringSpec(
        3, {(), tuple("abc")}, {(), tuple("abc"), tuple("bca"), tuple("cab")},
        {(), tuple("abc")})


def mult_string_fixture() -> Tuple[LocalSpec, Linearisation]:
    return encode_string_spec(mult_string_spec()), pi_chain()


# balanced brackets

DYCK_PAIRS = (("(", ")"), ("[", "]"), ("{", "}"), ("[[", "]]"))
DYCK_FUNCTIONS = (A, B, G, D)


def pi_dyck() -> Linearisation:
    return projective("root", A, B, G, D)


def dyck_tree(word: Iterable[str]) -> Tree:
    """Tree of a balanced word: each bracket pair is an unlabelled vertex with
    the opener at alpha, the closer at gamma, the enclosed run at beta and
    the following run at delta."""
    word = list(word)
    closer = dict(DYCK_PAIRS)
    entries = {}

    def run(i, at):
        # parse a run of pairs starting at word[i]; return the index after it
        if i >= len(word) or word[i] not in closer:
            return i
        entries[at + (A,)] = word[i]
        j = run(i + 1, at + (B,))
        if j >= len(word) or word[j] != closer[word[i]]:
            raise ValueError(f"unbalanced at position {j}")
        entries[at + (G,)] = word[j]
        return run(j + 1, at + (D,))

    end = run(0, ())
    if end != len(word):
        raise ValueError(f"unbalanced at position {end}")
    return Tree(entries, set(DYCK_FUNCTIONS), {x for p in DYCK_PAIRS for x in p})


def dyck_fixture() -> Tuple[LocalSpec, Linearisation]:
    fz = set(DYCK_FUNCTIONS)
    sigma = {x for p in DYCK_PAIRS for x in p}

    def t(d):
        return Tree(d, fz, sigma)

    heads = [{(A,): o, (G,): c} for o, c in DYCK_PAIRS]

    def below(f, h):
        return {(f,) + a: l for a, l in h.items()}

    options = [None] + heads
    windows = set()
    for h, inner, nxt in itertools.product(heads, options, options):
        d = dict(h)
        if inner:
            d.update(below(B, inner))
        if nxt:
            d.update(below(D, nxt))
        windows.add(t(d))
    atoms = {t({(): x}) for x in sigma}
    spec = LocalSpec(2, LOCAL, {t({})} | windows, windows | atoms, windows | atoms,
                     fz, sigma, note="balanced words over four bracket pairs")
    return spec, pi_dyck()


def dyck_example_tree() -> Tree:
    return dyck_tree(["[", "(", ")", "]", "{", "[[", "]]", "}"])


# subordinate clauses

def eng_tree() -> Tree:
    return Tree({(): "saw", ("Sb",): "John", ("Ob",): "help",
                 ("Ob", "Sb"): "Peter", ("Ob", "Ob"): "read",
                 ("Ob", "Ob", "Sb"): "Mary"}, {"Sb", "Ob"})


def pi_eng() -> Linearisation:
    return parse_linearisation("sub(Sb), root, sub(Ob)")


def pi_dut() -> Linearisation:
    return parse_linearisation("anti(Sb), root, anti(Ob)")


# catalog

@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # tree | spec | lin | grammar
    build: Callable[[], object]
    about: str


def _fixtures() -> Dict[str, Fixture]:
    items = [
        Fixture("q-aba", "tree", lambda: q_tree("aba"), "q_tree of aba"),
        Fixture("q-abc", "tree", lambda: q_tree("abc"), "q_tree of abc (6 nodes)"),
        Fixture("m-3", "tree", lambda: m_tree(3), "three abc blocks"),
        Fixture("anbn-3", "tree", lambda: anbn_tree(3), "b-spine for aaabbb"),
        Fixture("t-aba", "tree", lambda: t_chain("aba", B, {A, B}), "beta-chain a b a"),
        Fixture("dyck-example", "tree", dyck_example_tree, "tree of [()]{[[]]}"),
        Fixture("eng", "tree", eng_tree, "saw / help / read clause nesting"),
        Fixture("w-squa", "spec", w_squa_spec, "doubled-letter trees, p=2"),
        Fixture("w-mult", "spec", w_mult_spec, "abc blocks, p=1"),
        Fixture("anbn", "spec", lambda: anbn_fixture()[0], "a^n b^n spine, p=1"),
        Fixture("dyck", "spec", lambda: dyck_fixture()[0], "balanced brackets, p=2"),
        Fixture("mult-string", "spec", lambda: mult_string_fixture()[0],
                "chain encoding of (abc)^n"),
        Fixture("pi-squa", "lin", pi_squa, "sub(alpha), root, sub(beta)"),
        Fixture("pi-mult", "lin", pi_mult, "sub(alpha), sub(beta), root, sub(gamma)"),
        Fixture("pi-anbn", "lin", pi_anbn, "sub(alpha), sub(beta), root"),
        Fixture("pi-dyck", "lin", pi_dyck, "root, then alpha..delta"),
        Fixture("pi-chain", "lin", pi_chain, "root, sub(alpha)"),
        Fixture("pi-eng", "lin", pi_eng, "sub(Sb), root, sub(Ob)"),
        Fixture("pi-dut", "lin", pi_dut, "anti(Sb), root, anti(Ob)"),
        Fixture("gnf-anbn", "grammar", gnf_anbn, "S -> a S B | a B; B -> b"),
    ]
    return {f.name: f for f in items}


CATALOG: Dict[str, Fixture] = _fixtures()


def get_fixture(name: str):
    try:
        return CATALOG[name].build()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; try one of {sorted(CATALOG)}") from None

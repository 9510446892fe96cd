"""Local and anti-local tree languages, plus locally testable string languages.

A spec ``(p, U1, U2, U3)`` accepts a tree when its top window lies in U1,
the window hanging from every vertex lies in U2, and every terminal subtree
(one whose depth is at most ``p``) lies in U3. In anti-local mode the
windows hang from suffixes instead of prefixes.

Windows are taken at every vertex, labelled or not: a vertex is any prefix
(suffix, in anti mode) of a labelled address. Checking labelled addresses
only would let trees with unlabelled gaps longer than ``p`` slip through.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, Tuple

from .errors import IncompatibleAlphabets, SpecError
from .trees import (Tree, anti_subtree, anti_vertices, chain, reverse,
                    subtree, top, vertices)

LOCAL = "local"
ANTI = "anti-local"


@dataclass(frozen=True)
class LocalSpec:
    p: int
    mode: str
    u1: FrozenSet[Tree]
    u2: FrozenSet[Tree]
    u3: FrozenSet[Tree]
    functions: FrozenSet[str]
    vocabulary: FrozenSet[str]
    note: str = field(default="", compare=False)

    def __post_init__(self):
        for name in ("u1", "u2", "u3", "functions", "vocabulary"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if self.p <= 0:
            raise SpecError(f"locality window must be positive, got {self.p}")
        if self.mode not in (LOCAL, ANTI):
            raise SpecError(f"unknown mode {self.mode!r}")
        for name in ("u1", "u2", "u3"):
            for t in getattr(self, name):
                if t.depth > self.p:
                    raise SpecError(f"{name} tree of depth {t.depth} exceeds p={self.p}: {t!r}")
                _check_alphabets(self, t)
        stray = [t for t in (self.u1 | self.u3) - self.u2 if t]
        if stray:
            warnings.warn(f"{len(stray)} nonempty U1/U3 trees are missing from U2; "
                          "they can never occur in an accepted tree", stacklevel=3)

    @property
    def anti(self) -> bool:
        return self.mode == ANTI


def _check_alphabets(spec: LocalSpec, tree: Tree) -> None:
    used_f = {f for a, _ in tree.pairs() for f in a}
    used_l = {l for _, l in tree.pairs()}
    if not used_f <= spec.functions or not used_l <= spec.vocabulary:
        raise IncompatibleAlphabets(
            f"tree uses functions {sorted(used_f - spec.functions)} "
            f"and letters {sorted(used_l - spec.vocabulary)} outside the spec")


# windows

def p_subtrees(tree: Tree, p: int) -> set:
    return {top(subtree(tree, phi), p) for phi in vertices(tree)}


def terminal_p_subtrees(tree: Tree, p: int) -> set:
    out = set()
    for phi in vertices(tree):
        s = subtree(tree, phi)
        if s.depth <= p:
            out.add(s)
    return out


def anti_p_subtrees(tree: Tree, p: int) -> set:
    return {top(anti_subtree(phi, tree), p) for phi in anti_vertices(tree)}


def anti_terminal_p_subtrees(tree: Tree, p: int) -> set:
    out = set()
    for phi in anti_vertices(tree):
        s = anti_subtree(phi, tree)
        if s.depth <= p:
            out.add(s)
    return out


def member(spec: LocalSpec, tree: Tree) -> bool:
    _check_alphabets(spec, tree)
    if top(tree, spec.p) not in spec.u1:
        return False
    if spec.anti:
        inner, terminal = anti_p_subtrees, anti_terminal_p_subtrees
    else:
        inner, terminal = p_subtrees, terminal_p_subtrees
    return (inner(tree, spec.p) <= spec.u2
            and terminal(tree, spec.p) <= spec.u3)


def reverse_spec(spec: LocalSpec) -> LocalSpec:
    """Spec of the reversed language: flip the mode, reverse every window."""
    return LocalSpec(
        spec.p, LOCAL if spec.anti else ANTI,
        frozenset(map(reverse, spec.u1)),
        frozenset(map(reverse, spec.u2)),
        frozenset(map(reverse, spec.u3)),
        spec.functions, spec.vocabulary,
        note=spec.note)


# enumeration

_Frozen = FrozenSet[Tuple[tuple, str]]
_NOTHING: _Frozen = frozenset()


def _top(fs: _Frozen, k: int) -> _Frozen:
    return frozenset(e for e in fs if len(e[0]) <= k)


def _restrict(fs: _Frozen, f: str) -> _Frozen:
    return frozenset((a[1:], l) for a, l in fs if a and a[0] == f)


class _Generator:
    """Top-down construction of accepted trees, window by window.

    A tree is its root window plus one child per function, and each child's
    top ``p-1`` levels are fixed by the parent's window. ``trees(d, n, con)``
    returns every tree that passes the U2/U3 conditions at all its vertices,
    has depth at most ``d``, at most ``n`` labels, and top ``p-1`` levels equal
    to ``con`` (no constraint when ``con`` is None).
    """

    def __init__(self, spec: LocalSpec):
        self.p = spec.p
        self.functions = sorted(spec.functions)
        self.u3 = {frozenset(t.pairs()) for t in spec.u3}
        self.windows = []
        for t in sorted(spec.u2, key=Tree.sort_key):
            if not t:
                continue
            fs = frozenset(t.pairs())
            root_part = frozenset(e for e in fs if not e[0])
            self.windows.append((fs, t.depth, root_part, _top(fs, self.p - 1),
                                 {f: _restrict(fs, f) for f in self.functions}))
        self.memo = {}

    def trees(self, d: int, n: int, con):
        key = (d, n, con)
        if key in self.memo:
            return self.memo[key]
        out = []
        if not con:
            out.append((_NOTHING, 0, 0))
        for fs, wdepth, root_part, wtop, kids in self.windows:
            if wdepth > d or len(root_part) > n:
                continue
            if con is not None and wtop != con:
                continue
            partial = [(root_part, len(root_part), 0)]
            for f in self.functions:
                wf = kids[f]
                if d == 0:
                    if wf:
                        partial = []
                        break
                    continue
                opts = self.trees(d - 1, n - len(root_part), wf)
                grown = []
                for acc, size, dep in partial:
                    for child, csize, cdep in opts:
                        if size + csize > n:
                            continue
                        if not child:
                            grown.append((acc, size, dep))
                            continue
                        shifted = frozenset(((f,) + a, l) for a, l in child)
                        grown.append((acc | shifted, size + csize, max(dep, cdep + 1)))
                partial = grown
                if not partial:
                    break
            for acc, size, dep in partial:
                if dep <= self.p and acc not in self.u3:
                    continue
                out.append((acc, size, dep))
        self.memo[key] = out
        return out


def enumerate_trees(spec: LocalSpec, max_depth: int, max_nodes: int) -> Iterator[Tree]:
    """Every accepted tree with depth <= max_depth and <= max_nodes labels.

    Completeness holds only inside the bounds. Output is sorted by node count,
    then by serialized entries.
    """
    if max_depth < 0 or max_nodes < 0:
        raise ValueError("bounds must be non-negative")
    if spec.anti:
        flipped = enumerate_trees(reverse_spec(spec), max_depth, max_nodes)
        yield from sorted((reverse(t) for t in flipped), key=Tree.sort_key)
        return
    gen = _Generator(spec)
    found = []
    for fs, _, _ in gen.trees(max_depth, max_nodes, None):
        t = Tree(fs, spec.functions, spec.vocabulary)
        if top(t, spec.p) in spec.u1:
            found.append(t)
    found.sort(key=Tree.sort_key)
    yield from found


# locally testable string languages

Word = Tuple[str, ...]


@dataclass(frozen=True)
class LocalStringSpec:
    """Window length ``p`` with allowed prefixes, internal factors and suffixes.

    Strings shorter than ``p`` are accepted iff they belong to all three sets.
    """

    p: int
    prefixes: FrozenSet[Word]
    internals: FrozenSet[Word]
    suffixes: FrozenSet[Word]

    def __post_init__(self):
        if self.p <= 0:
            raise SpecError("window length must be positive")
        for name in ("prefixes", "internals", "suffixes"):
            words = frozenset(tuple(w) for w in getattr(self, name))
            if any(len(w) > self.p for w in words):
                raise SpecError(f"{name} holds a string longer than {self.p}")
            object.__setattr__(self, name, words)

    @property
    def vocabulary(self) -> FrozenSet[str]:
        return frozenset(x for s in (self.prefixes, self.internals, self.suffixes)
                         for w in s for x in w)


def string_member(spec: LocalStringSpec, word: Iterable[str]) -> bool:
    w = tuple(word)
    p = spec.p
    if len(w) < p:
        return w in spec.prefixes and w in spec.internals and w in spec.suffixes
    return (w[:p] in spec.prefixes
            and w[len(w) - p:] in spec.suffixes
            and all(w[i:i + p] in spec.internals for i in range(len(w) - p + 1)))


def _lift(spec: LocalStringSpec) -> LocalStringSpec:
    """Equivalent spec with window length p+1."""
    p = spec.p
    short = {w for s in (spec.prefixes, spec.internals, spec.suffixes) for w in s
             if len(w) <= p and string_member(spec, w)}
    factors = {u + v[-1:] for u in spec.internals for v in spec.internals
               if len(u) == p and len(v) == p and u[1:] == v[:-1]}
    prefixes = {w for w in factors if w[:p] in spec.prefixes}
    suffixes = {w for w in factors if w[1:] in spec.suffixes}
    return LocalStringSpec(p + 1, prefixes | short, factors | short, suffixes | short)


def encode_string_spec(spec: LocalStringSpec, function: str = "alpha") -> LocalSpec:
    """Local tree spec whose chains, read root first, spell the string language.

    Windows of ``p`` letters become chains of depth ``p-1``. Strings shorter
    than the window are admitted whole through U1 together with their suffix
    chains in U2/U3.
    """
    if spec.p == 1:
        spec = _lift(spec)
    p = spec.p
    vocab = spec.vocabulary

    def enc(w):
        return chain(w, function, {function}, vocab)

    short = [w for w in spec.prefixes if len(w) < p and string_member(spec, w)]
    short_suffixes = {w[i:] for w in short for i in range(len(w))}
    full_suffixes = {w for w in spec.suffixes if len(w) == p}
    tails = {w[i:] for w in full_suffixes for i in range(len(w))}
    u1 = {enc(w) for w in spec.prefixes if len(w) == p} | {enc(w) for w in short}
    u2 = ({enc(w) for w in spec.internals if len(w) == p}
          | {enc(w) for w in tails if len(w) < p}
          | {enc(w) for w in short_suffixes})
    u3 = {enc(w) for w in tails} | {enc(w) for w in short_suffixes}
    # windows outside U2 can never match; dropping them keeps the language
    u1 = {t for t in u1 if not t or t in u2}
    u3 = {t for t in u3 if not t or t in u2}
    return LocalSpec(p - 1, LOCAL, u1, u2, u3, {function}, vocab,
                     note="chain encoding of a locally testable string language")

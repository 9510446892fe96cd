"""Simple dependency trees and the four tree operators.

A tree is a finite partial map from addresses to letters. An address is a
tuple of function names; the empty tuple is the root. Addresses outside the
domain but prefixing a labelled address are unlabelled vertices.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

from .errors import DuplicateAddress, UnknownLetter, UnknownSymbol

Address = Tuple[str, ...]
ROOT: Address = ()

Entries = Union[Mapping[Address, str], Iterable[Tuple[Address, str]]]


class Tree:
    """Immutable partial map ``Address -> letter``.

    ``functions`` and ``vocabulary`` are the declared alphabets the tree lives
    in. They travel with the tree through every operator but do not take part
    in equality: two trees are equal when they have the same entries.
    """

    __slots__ = ("_map", "functions", "vocabulary", "_hash")

    def __init__(self, entries: Entries = (), functions=None, vocabulary=None):
        m = dict(entries.items() if isinstance(entries, Mapping) else entries)
        object.__setattr__(self, "_map", m)
        if functions is None:
            functions = {f for addr in m for f in addr}
        if vocabulary is None:
            vocabulary = set(m.values())
        object.__setattr__(self, "functions", frozenset(functions))
        object.__setattr__(self, "vocabulary", frozenset(vocabulary))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    # mapping protocol
    def __getitem__(self, addr: Address) -> str:
        return self._map[addr]

    def get(self, addr: Address, default=None):
        return self._map.get(addr, default)

    def __contains__(self, addr) -> bool:
        return addr in self._map

    def __iter__(self) -> Iterator[Address]:
        return iter(sorted(self._map))

    def __len__(self) -> int:
        return len(self._map)

    def __bool__(self) -> bool:
        return bool(self._map)

    def items(self):
        return sorted(self._map.items())

    def pairs(self):
        """Unsorted view of the entries."""
        return self._map.items()

    def as_dict(self) -> dict:
        return dict(self._map)

    @property
    def depth(self) -> int:
        return max((len(a) for a in self._map), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self._map == other._map

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._map.items())))
        return self._hash

    def sort_key(self):
        """Node count first, then the serialized entries."""
        return (len(self._map),
                tuple(sorted((format_address(a), l) for a, l in self._map.items())))

    def __lt__(self, other: "Tree") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        body = ", ".join(f"{format_address(a)!r}: {l!r}" for a, l in self.items())
        return f"Tree({{{body}}})"

    def derive(self, entries: Entries) -> "Tree":
        """New tree over the same alphabets."""
        return Tree(entries, self.functions, self.vocabulary)

    def letter_counts(self) -> Counter:
        return Counter(self._map.values())


def make_tree(pairs: Iterable[Tuple[Address, str]], functions: Iterable[str],
              vocabulary: Iterable[str]) -> Tree:
    """Build a tree from ``(address, letter)`` pairs, validating both alphabets."""
    functions = frozenset(functions)
    vocabulary = frozenset(vocabulary)
    m = {}
    for addr, letter in pairs:
        addr = tuple(addr)
        if addr in m:
            raise DuplicateAddress(f"address {format_address(addr)} given twice")
        for f in addr:
            if f not in functions:
                raise UnknownSymbol(f"function {f!r} not in {sorted(functions)}")
        if letter not in vocabulary:
            raise UnknownLetter(f"letter {letter!r} not in {sorted(vocabulary)}")
        m[addr] = letter
    return Tree(m, functions, vocabulary)


def atomic(letter: str, functions=(), vocabulary=None) -> Tree:
    return Tree({ROOT: letter}, functions, vocabulary or {letter})


def format_address(addr: Address) -> str:
    return "/" + "/".join(addr)


def parse_address(text: str) -> Address:
    text = text.strip()
    if not text.startswith("/"):
        raise ValueError(f"address must start with '/': {text!r}")
    return tuple(part for part in text[1:].split("/") if part)


# operators

def top(tree: Tree, p: int) -> Tree:
    """Keep the entries at addresses of length at most ``p``."""
    if p < 0:
        raise ValueError("p must be >= 0")
    return tree.derive((a, l) for a, l in tree._map.items() if len(a) <= p)


def reverse(tree: Tree) -> Tree:
    """Reverse every address."""
    return tree.derive((a[::-1], l) for a, l in tree._map.items())


def subtree(tree: Tree, phi: Address) -> Tree:
    """Entries below ``phi``: ``x -> S(phi x)``. Empty when nothing is there."""
    phi = tuple(phi)
    n = len(phi)
    return tree.derive((a[n:], l) for a, l in tree._map.items() if a[:n] == phi)


def anti_subtree(phi: Address, tree: Tree) -> Tree:
    """Entries ending in ``phi``: ``x -> S(x phi)``."""
    phi = tuple(phi)
    n = len(phi)
    if n == 0:
        return tree
    return tree.derive((a[:-n], l) for a, l in tree._map.items()
                       if len(a) >= n and a[-n:] == phi)


def root(tree: Tree) -> Optional[str]:
    """Root letter, or ``None`` when the root is unlabelled."""
    return tree._map.get(ROOT)


def depth(tree: Tree) -> int:
    return tree.depth


def vertices(tree: Tree) -> frozenset:
    """Prefix closure of the domain; empty for the empty tree."""
    out = set()
    for a in tree._map:
        for i in range(len(a) + 1):
            out.add(a[:i])
    return frozenset(out)


def anti_vertices(tree: Tree) -> frozenset:
    """Suffix closure of the domain."""
    out = set()
    for a in tree._map:
        for i in range(len(a) + 1):
            out.add(a[i:])
    return frozenset(out)


def chain(word, function: str, functions=None, vocabulary=None) -> Tree:
    """``x1 -f-> x2 -f-> ... -f-> xn`` as a tree; the empty word gives the empty tree."""
    word = tuple(word)
    return Tree({(function,) * i: x for i, x in enumerate(word)},
                functions if functions is not None else {function},
                vocabulary if vocabulary is not None else set(word))

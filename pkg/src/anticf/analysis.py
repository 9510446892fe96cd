"""Dual pairs, Parikh vectors and dependency lengths."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from .errors import IncompatibleAlphabets
from .linearise import (Linearisation, format_word, linearize,
                        linearize_positions, reverse_linearisation)
from .locality import LocalSpec, enumerate_trees
from .trees import Address, Tree, format_address, reverse

Word = Tuple[str, ...]


def _word_key(w: Word):
    return (len(w), w)


def _compatible(spec: LocalSpec, lin: Linearisation) -> None:
    if not spec.functions <= lin.functions:
        raise IncompatibleAlphabets(
            f"functions {sorted(spec.functions - lin.functions)} have no slot")


# dual pairs

@dataclass
class DualPairReport:
    max_depth: int
    max_nodes: int
    linearisation: str
    dual: str
    triples: List[Tuple[Tree, Word, Word]]
    language: List[Word]
    dual_language: List[Word]

    def to_json(self) -> str:
        doc = {
            "bounds": {"max_depth": self.max_depth, "max_nodes": self.max_nodes},
            "linearisation": self.linearisation,
            "dual": self.dual,
            "language": [format_word(w) for w in self.language],
            "dual_language": [format_word(w) for w in self.dual_language],
            "pairs": [[format_word(a), format_word(b)] for _, a, b in self.triples],
        }
        return json.dumps(doc, indent=2, sort_keys=True)


def dual_pair(spec: LocalSpec, lin: Linearisation, max_depth: int,
              max_nodes: int) -> DualPairReport:
    """Bounded images of the tree language under ``lin`` and its reverse.

    The reverse image is computed twice, directly and on reversed trees, and
    the two must agree tree by tree.
    """
    _compatible(spec, lin)
    bar = reverse_linearisation(lin)
    triples = []
    for t in enumerate_trees(spec, max_depth, max_nodes):
        w, v = linearize(lin, t), linearize(bar, t)
        if v != linearize(lin, reverse(t)):
            raise AssertionError(f"reverse linearisation disagrees on {t!r}")
        triples.append((t, w, v))
    return DualPairReport(
        max_depth, max_nodes, str(lin), str(bar), triples,
        sorted({w for _, w, _ in triples}, key=_word_key),
        sorted({v for _, _, v in triples}, key=_word_key))


@dataclass
class SelfDualVerdict:
    self_dual: bool
    counterexample: Optional[Word]
    side: str = ""  # which language holds the counterexample
    bounds: Tuple[int, int] = (0, 0)

    def __bool__(self):
        return self.self_dual


def self_dual_check(spec: LocalSpec, lin: Linearisation, max_depth: int,
                    max_nodes: int, max_len: Optional[int] = None) -> SelfDualVerdict:
    """Compare the two bounded images; bounded evidence, never a proof.

    With ``max_len`` only words up to that length are compared, which avoids
    spurious differences caused by the tree bounds cutting the two languages
    at different places.
    """
    report = dual_pair(spec, lin, max_depth, max_nodes)
    ok = (lambda w: True) if max_len is None else (lambda w: len(w) <= max_len)
    left = {w for w in report.language if ok(w)}
    right = {w for w in report.dual_language if ok(w)}
    diff = [(w, "language") for w in left - right] + [(w, "dual") for w in right - left]
    if not diff:
        return SelfDualVerdict(True, None, "", (max_depth, max_nodes))
    w, side = min(diff, key=lambda d: _word_key(d[0]))
    return SelfDualVerdict(False, w, side, (max_depth, max_nodes))


# Parikh vectors

class ParikhVector(Counter):
    """Letter counts; missing letters count zero."""

    def vector(self, alphabet: Iterable[str]) -> Tuple[int, ...]:
        return tuple(self[a] for a in sorted(alphabet))

    def __eq__(self, other):
        if not isinstance(other, Counter):
            return NotImplemented
        return +self == +other

    __hash__ = None


def parikh_string(word: Iterable[str]) -> ParikhVector:
    return ParikhVector(word)


def parikh_tree(tree: Tree) -> ParikhVector:
    return ParikhVector(tree.letter_counts())


# dependency length

@dataclass
class DependencyReport:
    edges: List[Tuple[Address, Address, int]] = field(default_factory=list)
    total: int = 0

    def lines(self) -> List[str]:
        out = [f"{format_address(g)} -> {format_address(d)} : {n}"
               for g, d, n in self.edges]
        out.append(f"total : {self.total}")
        return out


def governor(tree: Tree, addr: Address) -> Optional[Address]:
    """Nearest labelled proper ancestor, skipping unlabelled gaps."""
    for i in range(len(addr) - 1, -1, -1):
        if addr[:i] in tree:
            return addr[:i]
    return None


def total_dependency_length(lin: Linearisation, tree: Tree) -> DependencyReport:
    placed = linearize_positions(lin, tree).placement
    edges = []
    for addr in tree:
        gov = governor(tree, addr)
        if gov is not None:
            edges.append((gov, addr, abs(placed[gov] - placed[addr])))
    return DependencyReport(edges, sum(n for _, _, n in edges))


def length_growth(lin: Linearisation, spec: LocalSpec, max_depth: int,
                  max_nodes: int) -> List[Tuple[int, int]]:
    """(word length, total dependency length) for every enumerated tree."""
    _compatible(spec, lin)
    rows = [(len(t), total_dependency_length(lin, t).total)
            for t in enumerate_trees(spec, max_depth, max_nodes)]
    return sorted(rows)


def growth_csv(rows: Iterable[Tuple[int, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["len", "total"])
    w.writerows(rows)
    return buf.getvalue()

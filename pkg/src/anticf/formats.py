"""Plain-text formats for trees, specs and grammars, plus DOT output.

Tree::

    functions: alpha beta
    vocabulary: a b
    / : a
    /alpha : a

Spec: ``p``, ``mode``, ``functions`` and ``vocabulary`` headers, then
``U1:``, ``U2:`` and ``U3:`` sections holding tree blocks separated by blank
lines (the line ``empty`` is the empty tree).

Grammar::

    terminals: a b
    variables: S B
    start: S
    S -> a S B | a B
    B -> b
"""

from __future__ import annotations

import warnings
from typing import Dict, List, Optional, Tuple

from .errors import AnticfError, FormatError
from .grammar import Grammar
from .linearise import Linearisation, linearize_positions
from .locality import LocalSpec
from .trees import Tree, format_address, make_tree, parse_address, vertices

_HEADERS = ("functions", "vocabulary", "p", "mode", "terminals", "variables", "start")


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip() if not raw.lstrip().startswith("#") else ""
        yield n, line


def _header(line: str) -> Optional[Tuple[str, str]]:
    key, sep, value = line.partition(":")
    key = key.strip()
    if sep and key in _HEADERS:
        return key, value.strip()
    return None


# trees

def _entries(block: List[Tuple[int, str]]):
    pairs = []
    for n, line in block:
        if line.strip() == "empty":
            continue
        addr, sep, letter = line.partition(":")
        if not sep or not letter.strip():
            raise FormatError(f"line {n}: expected '<address> : <letter>', got {line.strip()!r}")
        try:
            pairs.append((parse_address(addr), letter.strip()))
        except ValueError as err:
            raise FormatError(f"line {n}: {err}") from None
    return pairs


def _build(pairs, functions, vocabulary) -> Tree:
    if functions is None:
        functions = {f for a, _ in pairs for f in a}
    if vocabulary is None:
        vocabulary = {l for _, l in pairs}
    return make_tree(pairs, functions, vocabulary)


def parse_tree(text: str) -> Tree:
    heads: Dict[str, str] = {}
    body = []
    for n, line in _lines(text):
        if not line.strip():
            continue
        h = _header(line)
        if h:
            heads[h[0]] = h[1]
        else:
            body.append((n, line))
    functions = heads["functions"].split() if "functions" in heads else None
    vocabulary = heads["vocabulary"].split() if "vocabulary" in heads else None
    return _build(_entries(body), functions, vocabulary)


def _entry_lines(tree: Tree) -> List[str]:
    if not tree:
        return ["empty"]
    return [f"{format_address(a)} : {l}" for a, l in
            sorted(tree.items(), key=lambda e: (len(e[0]), e[0]))]


def format_tree(tree: Tree) -> str:
    out = [f"functions: {' '.join(sorted(tree.functions))}",
           f"vocabulary: {' '.join(sorted(tree.vocabulary))}"]
    if tree:
        out += _entry_lines(tree)
    return "\n".join(out) + "\n"


# specs

def format_spec(spec: LocalSpec) -> str:
    out = []
    if spec.note:
        out.append(f"# {spec.note}")
    out += [f"p: {spec.p}", f"mode: {spec.mode}",
            f"functions: {' '.join(sorted(spec.functions))}",
            f"vocabulary: {' '.join(sorted(spec.vocabulary))}"]
    for name, trees in (("U1", spec.u1), ("U2", spec.u2), ("U3", spec.u3)):
        out += ["", f"{name}:"]
        for i, t in enumerate(sorted(trees, key=Tree.sort_key)):
            if i:
                out.append("")
            out += _entry_lines(t)
    return "\n".join(out) + "\n"


def parse_spec(text: str) -> LocalSpec:
    heads: Dict[str, str] = {}
    sections: Dict[str, List[List[Tuple[int, str]]]] = {}
    current = None
    note = ""
    for n, raw in enumerate(text.splitlines(), 1):
        if raw.lstrip().startswith("#"):
            if not note and current is None:
                note = raw.lstrip()[1:].strip()
            continue
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if stripped in ("U1:", "U2:", "U3:"):
            current = stripped[:2]
            sections[current] = [[]]
            continue
        if current is None:
            if not stripped:
                continue
            h = _header(line)
            if not h:
                raise FormatError(f"line {n}: unexpected {stripped!r} before U1:/U2:/U3:")
            heads[h[0]] = h[1]
            continue
        blocks = sections[current]
        if not stripped:
            if blocks[-1]:
                blocks.append([])
        else:
            blocks[-1].append((n, line))
    for key in ("p", "functions", "vocabulary"):
        if key not in heads:
            raise FormatError(f"spec is missing the '{key}:' header")
    try:
        p = int(heads["p"])
    except ValueError:
        raise FormatError(f"p must be an integer, got {heads['p']!r}") from None
    functions = heads["functions"].split()
    vocabulary = heads["vocabulary"].split()
    sets = {}
    for name in ("U1", "U2", "U3"):
        sets[name] = {_build(_entries(b), functions, vocabulary)
                      for b in sections.get(name, []) if b}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return LocalSpec(p, heads.get("mode", "local"), sets["U1"], sets["U2"], sets["U3"],
                         functions, vocabulary, note=note)


# grammars

def format_grammar(g: Grammar) -> str:
    out = [f"terminals: {' '.join(sorted(g.terminals))}",
           f"variables: {' '.join(sorted(g.variables))}",
           f"start: {g.start}"]
    heads: List[str] = []
    bodies: Dict[str, List[str]] = {}
    for head, body in g.rules:
        if head not in bodies:
            heads.append(head)
            bodies[head] = []
        bodies[head].append(" ".join(body) if body else "epsilon")
    out += [f"{h} -> {' | '.join(bodies[h])}" for h in heads]
    return "\n".join(out) + "\n"


def parse_grammar(text: str) -> Grammar:
    heads: Dict[str, str] = {}
    rules = []
    for n, line in _lines(text):
        if not line.strip():
            continue
        h = _header(line)
        if h:
            heads[h[0]] = h[1]
            continue
        head, sep, rhs = line.partition("->")
        if not sep or not head.strip():
            raise FormatError(f"line {n}: expected 'A -> body | body', got {line.strip()!r}")
        for alt in rhs.split("|"):
            syms = alt.split()
            rules.append((head.strip(), () if syms == ["epsilon"] else tuple(syms)))
    rule_heads = [h for h, _ in rules]
    variables = heads["variables"].split() if "variables" in heads else list(dict.fromkeys(rule_heads))
    start = heads.get("start") or (rule_heads[0] if rule_heads else None)
    if start is None:
        raise FormatError("grammar has no rules and no 'start:' header")
    if "terminals" in heads:
        terminals = heads["terminals"].split()
    else:
        terminals = {s for _, b in rules for s in b if s not in variables}
    try:
        return Grammar(frozenset(terminals), frozenset(variables) | {start}, start, tuple(rules))
    except AnticfError as err:
        raise FormatError(str(err)) from err


# DOT

def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def tree_dot(tree: Tree, name: str = "tree") -> str:
    """Nodes are addresses, edges carry function names; gaps are drawn dashed."""
    out = [f"digraph {name} {{", "  node [shape=plaintext];"]
    for v in sorted(vertices(tree), key=lambda a: (len(a), a)):
        label = tree.get(v)
        style = "" if label is not None else ", shape=point"
        out.append(f"  {_q(format_address(v))} [label={_q(label or '')}{style}];")
    for v in sorted(vertices(tree), key=lambda a: (len(a), a)):
        if v:
            out.append(f"  {_q(format_address(v[:-1]))} -> {_q(format_address(v))} "
                       f"[label={_q(v[-1])}];")
    out.append("}")
    return "\n".join(out) + "\n"


def render_dot(lin: Linearisation, tree: Tree, name: str = "deps") -> str:
    """Words left to right in output order, arcs from governor to dependent."""
    from .analysis import governor

    pos = linearize_positions(lin, tree)
    order = sorted(pos.placement, key=pos.placement.get)
    out = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=plaintext];",
           "  { rank=same;"]
    out += [f"    {_q(format_address(a))} [label={_q(tree[a])}];" for a in order]
    out.append("  }")
    for a, b in zip(order, order[1:]):
        out.append(f"  {_q(format_address(a))} -> {_q(format_address(b))} [style=invis];")
    for a in order:
        g = governor(tree, a)
        if g is not None:
            f = a[len(g):]
            out.append(f"  {_q(format_address(g))} -> {_q(format_address(a))} "
                       f"[label={_q('.'.join(f))}, constraint=false];")
    out.append("}")
    return "\n".join(out) + "\n"

"""Context-free grammars and the bridge to local tree languages.

``cfg_from_local`` turns a local spec and a projective linearisation into a
grammar with one variable per internal window. ``local_from_gnf`` goes the
other way for grammars in Greibach normal form whose body variables have
been made pairwise distinct by ``distinct_vars_transform``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .errors import (IncompatibleAlphabets, NotGreibach, NotProjective,
                     NotTransformed, SpecError)
from .linearise import ROOT_SLOT, Linearisation, Slot, SUB, linearize
from .locality import LOCAL, LocalSpec
from .trees import Tree, root, subtree, top

Rule = Tuple[str, Tuple[str, ...]]


@dataclass(frozen=True)
class Grammar:
    terminals: FrozenSet[str]
    variables: FrozenSet[str]
    start: str
    rules: Tuple[Rule, ...]

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        object.__setattr__(self, "variables", frozenset(self.variables))
        seen, rules = set(), []
        for head, body in self.rules:
            r = (head, tuple(body))
            if r not in seen:
                seen.add(r)
                rules.append(r)
        object.__setattr__(self, "rules", tuple(rules))
        if self.terminals & self.variables:
            raise SpecError(f"symbols both terminal and variable: "
                            f"{sorted(self.terminals & self.variables)}")
        if self.start not in self.variables:
            raise SpecError(f"start symbol {self.start!r} is not a variable")
        for head, body in self.rules:
            if head not in self.variables:
                raise SpecError(f"rule head {head!r} is not a variable")
            for sym in body:
                if sym not in self.variables and sym not in self.terminals:
                    raise SpecError(f"undeclared symbol {sym!r} in rule for {head}")

    def rules_for(self, head: str) -> List[Tuple[str, ...]]:
        return [b for h, b in self.rules if h == head]

    def is_variable(self, sym: str) -> bool:
        return sym in self.variables


@dataclass(frozen=True)
class GnfGrammar(Grammar):
    """A grammar whose rules are ``A -> a B1 ... Bk``, plus, once transformed,
    unit rules ``C -> B`` for the fresh wrapper variables."""

    transformed: bool = False
    wrappers: FrozenSet[str] = field(default=frozenset())


def format_rule(rule: Rule) -> str:
    head, body = rule
    return f"{head} -> {' '.join(body) if body else 'epsilon'}"


def validate_gnf(g: Grammar) -> GnfGrammar:
    """Check Greibach shape; recognise an already transformed grammar."""
    units = []
    for head, body in g.rules:
        if len(body) == 1 and body[0] in g.variables:
            units.append((head, body))
            continue
        if not body or body[0] not in g.terminals:
            raise NotGreibach(f"rule {format_rule((head, body))} does not start "
                              f"with a terminal", (head, body))
        if any(s not in g.variables for s in body[1:]):
            raise NotGreibach(f"rule {format_rule((head, body))} has a terminal "
                              f"after the first position", (head, body))
    body_vars = [s for _, b in g.rules if not (len(b) == 1 and b[0] in g.variables)
                 for s in b[1:]]
    wrappers = frozenset(h for h, _ in units)
    if units:
        for head, body in units:
            why = None
            if len(g.rules_for(head)) != 1:
                why = "wrapper variable has more than one rule"
            elif head == g.start:
                why = "start symbol cannot be a wrapper"
            elif body[0] in wrappers:
                why = "wrapper points at another wrapper"
            elif body_vars.count(head) != 1:
                why = "wrapper must occur in exactly one body position"
            if why:
                raise NotGreibach(f"unit rule {format_rule((head, body))}: {why}",
                                  (head, body))
        stray = [v for v in body_vars if v not in wrappers]
        if stray:
            raise NotGreibach(f"variables {sorted(set(stray))} appear in bodies "
                              f"next to wrapper unit rules")
        transformed = True
    else:
        transformed = not body_vars
    return GnfGrammar(g.terminals, g.variables, g.start, g.rules,
                      transformed=transformed, wrappers=wrappers)


def distinct_vars_transform(g: GnfGrammar) -> GnfGrammar:
    """Replace every body variable occurrence by a fresh wrapper ``C -> B``."""
    if not isinstance(g, GnfGrammar):
        g = validate_gnf(g)
    if g.transformed:
        return g
    taken = set(g.variables) | set(g.terminals)
    rules: List[Rule] = []
    units: List[Rule] = []
    for j, (head, body) in enumerate(g.rules, 1):
        new_body = [body[0]]
        for i, var in enumerate(body[1:], 1):
            name = f"C{j}_{i}"
            while name in taken:
                name = "_" + name
            taken.add(name)
            new_body.append(name)
            units.append((name, (var,)))
        rules.append((head, tuple(new_body)))
    wrappers = frozenset(h for h, _ in units)
    return GnfGrammar(g.terminals, g.variables | wrappers, g.start,
                      tuple(rules + units), transformed=True, wrappers=wrappers)


# membership

@lru_cache(maxsize=256)
def _cnf(g: Grammar):
    """Chomsky-style tables: (start nullable, terminal -> heads, binary rules)."""
    counter = itertools.count()
    rules: Set[Rule] = set()
    term_var: Dict[str, str] = {}
    for head, body in g.rules:
        if len(body) >= 2:
            body = tuple(s if s in g.variables
                         else term_var.setdefault(s, f"<t{next(counter)}>")
                         for s in body)
            while len(body) > 2:
                fresh = f"<b{next(counter)}>"
                rules.add((head, (body[0], fresh)))
                head, body = fresh, body[1:]
        rules.add((head, body))
    for t, v in term_var.items():
        rules.add((v, (t,)))

    variables = {h for h, _ in rules} | set(g.variables)
    nullable: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for head, body in rules:
            if head not in nullable and all(s in nullable for s in body):
                nullable.add(head)
                changed = True

    reduced: Set[Rule] = set()
    for head, body in rules:
        if len(body) == 2:
            reduced.add((head, body))
            if body[0] in nullable:
                reduced.add((head, (body[1],)))
            if body[1] in nullable:
                reduced.add((head, (body[0],)))
        elif len(body) == 1:
            reduced.add((head, body))

    unit_to = {v: {v} for v in variables}
    changed = True
    while changed:
        changed = False
        for head, body in reduced:
            if len(body) == 1 and body[0] in variables:
                for v in variables:
                    if head in unit_to[v] and body[0] not in unit_to[v]:
                        unit_to[v].add(body[0])
                        changed = True
    lexical: Dict[str, Set[str]] = {}
    binary: List[Tuple[str, str, str]] = []
    for v in variables:
        for head, body in reduced:
            if head not in unit_to[v]:
                continue
            if len(body) == 1 and body[0] not in variables:
                lexical.setdefault(body[0], set()).add(v)
            elif len(body) == 2:
                binary.append((v, body[0], body[1]))
    return g.start in nullable, lexical, tuple(set(binary))


def cyk_member(g: Grammar, word: Iterable[str]) -> bool:
    word = tuple(word)
    nullable, lexical, binary = _cnf(g)
    n = len(word)
    if n == 0:
        return nullable
    # chart[i][l]: variables deriving word[i:i+l]
    chart = [[set() for _ in range(n + 1)] for _ in range(n)]
    for i, x in enumerate(word):
        chart[i][1] = set(lexical.get(x, ()))
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            cell = chart[i][length]
            for split in range(1, length):
                left, right = chart[i][split], chart[i + split][length - split]
                if not left or not right:
                    continue
                for head, b, c in binary:
                    if b in left and c in right:
                        cell.add(head)
    return g.start in chart[0][n]


def cfg_enumerate(g: Grammar, max_len: int) -> Set[Tuple[str, ...]]:
    """All words of length <= max_len, by least fixpoint over bounded languages."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    lang: Dict[str, Set[Tuple[str, ...]]] = {v: set() for v in g.variables}
    changed = True
    while changed:
        changed = False
        for head, body in g.rules:
            acc = {()}
            for sym in body:
                options = lang[sym] if sym in g.variables else {(sym,)}
                acc = {a + b for a in acc for b in options if len(a) + len(b) <= max_len}
                if not acc:
                    break
            new = acc - lang[head]
            if new:
                lang[head] |= new
                changed = True
    return set(lang[g.start])


# local language -> grammar

def cfg_from_local(spec: LocalSpec, lin: Linearisation) -> Grammar:
    """One variable per nonempty U2 window; start, body and terminal rules."""
    if spec.mode != LOCAL:
        raise SpecError("grammar construction needs a local (not anti-local) spec")
    if not lin.is_projective:
        raise NotProjective(f"linearisation {lin} is {lin.kind}")
    if not spec.functions <= lin.functions:
        raise IncompatibleAlphabets(
            f"functions {sorted(spec.functions - lin.functions)} have no slot")
    p = spec.p
    windows = sorted((t for t in spec.u2 if t), key=Tree.sort_key)
    missing = [t for t in spec.u3 if t and t not in spec.u2]
    if missing:
        raise SpecError(f"terminal trees missing from U2: {missing[:3]}")
    name = {t: f"X{i}" for i, t in enumerate(windows, 1)}
    start = "S"
    by_top: Dict[Tree, List[Tree]] = {}
    for t in windows:
        by_top.setdefault(top(t, p - 1), []).append(t)

    rules: List[Rule] = []
    if any(not t for t in spec.u1):
        rules.append((start, ()))
    rules += [(start, (name[t],)) for t in sorted(spec.u1, key=Tree.sort_key)
              if t and t in name]
    order = [s.function for s in lin.slots if s.kind != ROOT_SLOT]
    for t in windows:
        choices = []
        for f in order:
            below = subtree(t, (f,))
            opts: List[Optional[str]] = [name[c] for c in by_top.get(below, [])]
            if not below:
                opts.append(None)
            choices.append(opts)
        letter = root(t)
        for combo in itertools.product(*choices):
            pick = dict(zip(order, combo))
            body = []
            for s in lin.slots:
                if s.kind == ROOT_SLOT:
                    if letter is not None:
                        body.append(letter)
                elif pick[s.function] is not None:
                    body.append(pick[s.function])
            rules.append((name[t], tuple(body)))
    for t in sorted(spec.u3, key=Tree.sort_key):
        if t:
            rules.append((name[t], linearize(lin, t)))
    return Grammar(spec.vocabulary, {start, *name.values()}, start, tuple(rules))


# grammar -> local language

def _shift(label: str, trees):
    return {frozenset(((label,) + a, l) for a, l in t) for t in trees}


def _combine(parts):
    out = {frozenset()}
    for part in parts:
        out = {a | b for a in out for b in part}
    return out


def gnf_linearisation(g: GnfGrammar) -> Linearisation:
    """Root, then every wrapper slot in rule order, then every original variable."""
    wrappers = [s for _, b in g.rules if not (len(b) == 1 and b[0] in g.variables)
                for s in b[1:]]
    originals = sorted(g.variables - g.wrappers)
    return Linearisation((Slot(ROOT_SLOT),)
                         + tuple(Slot(SUB, c) for c in wrappers)
                         + tuple(Slot(SUB, v) for v in originals))


def local_from_gnf(g: Grammar, p: int = 3) -> Tuple[LocalSpec, Linearisation]:
    """Local spec and linearisation whose image is the language of ``g``.

    Functions are the grammar's variables. A node for ``A -> a C1 .. Cr`` is
    labelled ``a`` and has an unlabelled child at each ``Ci``; that child has
    a single child at ``B`` for its unit rule ``Ci -> B``. Windows of depth
    ``p`` are all depth-``p`` truncations of derivations from any variable.
    With p = 2 a window never sees both the edge into a node and the wrappers
    under it, so the grammar is not pinned down; p >= 3 is needed.
    """
    if not isinstance(g, GnfGrammar):
        g = validate_gnf(g)
    if not g.transformed:
        raise NotTransformed("apply distinct_vars_transform first")
    unit = {h: b[0] for h, b in g.rules if h in g.wrappers}
    lexical = [(h, b) for h, b in g.rules if h not in g.wrappers]

    @lru_cache(maxsize=None)
    def frag(var: str, d: int) -> FrozenSet[frozenset]:
        if var in unit:
            if d == 0:
                return frozenset({frozenset()})
            return frozenset(_shift(unit[var], frag(unit[var], d - 1)))
        out = set()
        for head, body in lexical:
            if head != var:
                continue
            node = frozenset({((), body[0])})
            if d == 0:
                out.add(node)
                continue
            parts = [_shift(c, frag(c, d - 1)) for c in body[1:]]
            out |= {node | rest for rest in _combine(parts)}
        return frozenset(out)

    @lru_cache(maxsize=None)
    def complete(var: str, d: int) -> FrozenSet[frozenset]:
        if d < 0:
            return frozenset()
        if var in unit:
            return frozenset(_shift(unit[var], complete(unit[var], d - 1)))
        out = set()
        for head, body in lexical:
            if head != var:
                continue
            node = frozenset({((), body[0])})
            parts = [_shift(c, complete(c, d - 1)) for c in body[1:]]
            out |= {node | rest for rest in _combine(parts)}
        return frozenset(out)

    def trees(sets):
        return {Tree(fs, g.variables, g.terminals) for fs in sets}

    u1 = trees(frag(g.start, p))
    u2 = {t for v in g.variables for t in trees(frag(v, p)) if t}
    u3 = {t for v in g.variables for t in trees(complete(v, p))}
    spec = LocalSpec(p, LOCAL, u1, u2, u3, g.variables, g.terminals,
                     note=f"built from a Greibach grammar with start {g.start}")
    return spec, gnf_linearisation(g)

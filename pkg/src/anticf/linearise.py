"""Recursive projective, anti-projective and mixed linearisations.

A linearisation is an ordered slot list. ``root`` emits the root letter,
``sub(f)`` recurses into the subtree at ``f`` and ``anti(f)`` into the
anti-subtree at ``f``. Every function of the tree's alphabet occupies exactly
one non-root slot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import FormatError, IncompatibleAlphabets, NotAnOrdering, SpecError
from .trees import Address, Tree, format_address

ROOT_SLOT = "root"
SUB = "sub"
ANTI = "anti"


@dataclass(frozen=True)
class Slot:
    kind: str
    function: str = ""

    def __str__(self):
        return ROOT_SLOT if self.kind == ROOT_SLOT else f"{self.kind}({self.function})"


@dataclass(frozen=True)
class Linearisation:
    slots: Tuple[Slot, ...]

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(self.slots))
        roots = sum(s.kind == ROOT_SLOT for s in self.slots)
        if roots != 1:
            raise SpecError(f"need exactly one root slot, got {roots}")
        seen = set()
        for s in self.slots:
            if s.kind == ROOT_SLOT:
                continue
            if s.kind not in (SUB, ANTI) or not s.function:
                raise SpecError(f"bad slot {s!r}")
            if s.function in seen:
                raise SpecError(f"function {s.function!r} occupies two slots")
            seen.add(s.function)

    @property
    def functions(self) -> frozenset:
        return frozenset(s.function for s in self.slots if s.kind != ROOT_SLOT)

    @property
    def kind(self) -> str:
        """'projective', 'anti-projective' or 'mixed'."""
        kinds = {s.kind for s in self.slots if s.kind != ROOT_SLOT}
        if kinds <= {SUB}:
            return "projective"
        if kinds == {ANTI}:
            return "anti-projective"
        return "mixed"

    @property
    def is_projective(self) -> bool:
        return self.kind == "projective"

    def __str__(self):
        return ", ".join(map(str, self.slots))


def parse_linearisation(text: str) -> Linearisation:
    """Parse ``sub(Sb), root, anti(Ob)``."""
    slots = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part == ROOT_SLOT:
            slots.append(Slot(ROOT_SLOT))
            continue
        m = re.fullmatch(r"(sub|anti)\(\s*([^()\s,]+)\s*\)", part)
        if not m:
            raise FormatError(f"cannot parse slot {part!r}")
        slots.append(Slot(m.group(1), m.group(2)))
    try:
        return Linearisation(tuple(slots))
    except SpecError as err:
        raise FormatError(str(err)) from err


def projective(*order: str) -> Linearisation:
    """Shorthand: ``projective('alpha', 'root', 'beta')``."""
    return Linearisation(tuple(Slot(ROOT_SLOT) if o == ROOT_SLOT else Slot(SUB, o)
                               for o in order))


def _check(lin: Linearisation, tree: Tree) -> None:
    used = {f for a, _ in tree.pairs() for f in a}
    if not used <= lin.functions:
        raise IncompatibleAlphabets(
            f"tree uses functions {sorted(used - lin.functions)} with no slot")


def _walk(lin: Linearisation, entries: Dict[Address, Tuple[str, Address]], out: list):
    # entries: local address -> (letter, address in the original tree)
    for slot in lin.slots:
        if slot.kind == ROOT_SLOT:
            if () in entries:
                out.append(entries[()])
            continue
        f = slot.function
        if slot.kind == SUB:
            child = {a[1:]: v for a, v in entries.items() if a and a[0] == f}
        else:
            child = {a[:-1]: v for a, v in entries.items() if a and a[-1] == f}
        if child:
            _walk(lin, child, out)


def _placed(lin: Linearisation, tree: Tree) -> List[Tuple[str, Address]]:
    _check(lin, tree)
    out: List[Tuple[str, Address]] = []
    if tree:
        _walk(lin, {a: (l, a) for a, l in tree.pairs()}, out)
    if lin.kind == "mixed" and (len(out) != len(tree) or len({a for _, a in out}) != len(out)):
        # an address like /f/g with sub(f) and anti(g) lands in both children,
        # one with anti(f) and sub(g) in neither
        emitted = [a for _, a in out]
        lost = sorted(set(tree.as_dict()) - set(emitted))
        twice = sorted({a for a in emitted if emitted.count(a) > 1})
        raise NotAnOrdering(f"{lin} is not an ordering of this tree: "
                            f"lost {[format_address(a) for a in lost]}, "
                            f"repeated {[format_address(a) for a in twice]}")
    return out


def linearize(lin: Linearisation, tree: Tree) -> Tuple[str, ...]:
    """The output word as a tuple of letters."""
    return tuple(l for l, _ in _placed(lin, tree))


@dataclass(frozen=True)
class PositionedString:
    letters: Tuple[str, ...]
    placement: Dict[Address, int]  # address -> 1-based position

    def address_at(self, position: int) -> Address:
        for a, i in self.placement.items():
            if i == position:
                return a
        raise KeyError(position)


def linearize_positions(lin: Linearisation, tree: Tree) -> PositionedString:
    placed = _placed(lin, tree)
    return PositionedString(tuple(l for l, _ in placed),
                            {a: i for i, (_, a) in enumerate(placed, 1)})


def reverse_linearisation(lin: Linearisation) -> Linearisation:
    """Swap every ``sub`` with ``anti``; slot order is kept."""
    swap = {SUB: ANTI, ANTI: SUB}
    return Linearisation(tuple(s if s.kind == ROOT_SLOT else Slot(swap[s.kind], s.function)
                               for s in lin.slots))


def format_word(word) -> str:
    """Join letters; space-separated as soon as one letter is longer than a character."""
    word = tuple(word)
    return "".join(word) if all(len(x) == 1 for x in word) else " ".join(word)


def parse_word(text: str) -> Tuple[str, ...]:
    text = text.strip()
    if text in ("", "epsilon"):
        return ()
    return tuple(text.split()) if any(c.isspace() for c in text) else tuple(text)

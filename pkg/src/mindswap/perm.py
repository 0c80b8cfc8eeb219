"""Exact arithmetic on finite-support permutations of labeled elements.

Elements are either insiders ("a1", "a2", ...), the originally scrambled
people, or outsiders ("x1", "x2", ...), fresh helpers recruited to undo the
scramble.  A :class:`Permutation` is kept in canonical disjoint-cycle form:
each cycle is rotated so its minimal element leads, cycles are sorted by
their leaders, and fixed points are dropped.

Composition is right-to-left everywhere in this package: ``(p * q)(e) ==
p(q(e))``, so in a written product of cycles the rightmost factor acts
first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

INSIDER = "a"
OUTSIDER = "x"


class ParseError(ValueError):
    """Raised for malformed cycle-notation text."""


@dataclass(frozen=True, order=True)
class Element:
    """A labeled point; total order puts all insiders before all outsiders."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in (INSIDER, OUTSIDER):
            raise ValueError(f"unknown element kind {self.kind!r}")
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"element index must be a positive integer, got {self.index!r}")

    @property
    def is_outsider(self) -> bool:
        return self.kind == OUTSIDER

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    def __repr__(self) -> str:
        return f"Element({self.kind}{self.index})"


def insider(index: int) -> Element:
    return Element(INSIDER, index)


def outsider(index: int) -> Element:
    return Element(OUTSIDER, index)


def parse_element(token: str) -> Element:
    """Parse "a3", "x2" or a bare integer (bare integers are insiders)."""
    if token.isdigit():
        return insider(int(token))
    kind, rest = token[:1], token[1:]
    if kind in (INSIDER, OUTSIDER) and rest.isdigit() and not rest.startswith("0"):
        return Element(kind, int(rest))
    raise ParseError(f"malformed element token {token!r}")


Cycle = tuple[Element, ...]


def _canonical_cycle(elements: Sequence[Element]) -> Cycle:
    """Rotate a cycle so its minimal element leads."""
    lead = min(range(len(elements)), key=lambda i: elements[i])
    return tuple(elements[lead:]) + tuple(elements[:lead])


class Permutation:
    """A finite-support bijection stored as canonical disjoint cycles."""

    __slots__ = ("_map", "_cycles")

    def __init__(self, mapping: dict[Element, Element] | None = None):
        cleaned = {e: v for e, v in (mapping or {}).items() if e != v}
        if set(cleaned.values()) != set(cleaned.keys()):
            raise ValueError("mapping is not a finite-support bijection")
        self._map = cleaned
        self._cycles = self._decompose(cleaned)

    @staticmethod
    def _decompose(mapping: dict[Element, Element]) -> tuple[Cycle, ...]:
        cycles = []
        seen: set[Element] = set()
        for start in sorted(mapping):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            cur = mapping[start]
            while cur != start:
                cycle.append(cur)
                seen.add(cur)
                cur = mapping[cur]
            cycles.append(_canonical_cycle(cycle))
        cycles.sort(key=lambda c: c[0])
        return tuple(cycles)

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    @classmethod
    def from_cycle(cls, elements: Sequence[Element]) -> "Permutation":
        """The single cycle sending elements[0] -> elements[1] -> ... -> elements[0]."""
        if len(set(elements)) != len(elements):
            raise ValueError("repeated element in cycle")
        if len(elements) < 2:
            return cls()
        mapping = {elements[i]: elements[(i + 1) % len(elements)] for i in range(len(elements))}
        return cls(mapping)

    @property
    def cycles(self) -> tuple[Cycle, ...]:
        """Canonical disjoint-cycle decomposition; right-to-left product equals self."""
        return self._cycles

    def apply(self, e: Element) -> Element:
        return self._map.get(e, e)

    __call__ = apply

    def support(self) -> frozenset[Element]:
        return frozenset(self._map)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose right-to-left: (self * other)(e) == self(other(e))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        mapping = {}
        for e in self.support() | other.support():
            mapping[e] = self.apply(other.apply(e))
        return Permutation(mapping)

    def inverse(self) -> "Permutation":
        return Permutation({v: k for k, v in self._map.items()})

    def parity(self) -> int:
        """0 for even, 1 for odd; a k-cycle contributes k - 1 transpositions."""
        return sum(len(c) - 1 for c in self._cycles) % 2

    @property
    def is_even(self) -> bool:
        return self.parity() == 0

    def is_identity(self) -> bool:
        return not self._map

    def __bool__(self) -> bool:
        return bool(self._map)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._cycles == other._cycles

    def __hash__(self) -> int:
        return hash(self._cycles)

    def __str__(self) -> str:
        return format_cycles(self) or "()"

    def __repr__(self) -> str:
        return f"Permutation({self})"


def parse_cycles(text: str) -> Permutation:
    """Parse cycle-notation text into a canonical permutation.

    The text is a whitespace-tolerant concatenation of parenthesized cycles
    over tokens like "a2", "x1" or bare integers (insiders).  Cycles are
    multiplied right-to-left, so repeated elements across cycles are fine;
    repeats inside one cycle are an error.  The empty string is the
    identity.
    """
    groups: list[list[Element]] = []
    current: list[Element] | None = None
    token = ""

    def flush_token() -> None:
        nonlocal token
        if token:
            if current is None:
                raise ParseError(f"element {token!r} outside parentheses")
            current.append(parse_element(token))
            token = ""

    for ch in text:
        if ch == "(":
            if current is not None:
                raise ParseError("nested '(' in cycle notation")
            current = []
        elif ch == ")":
            flush_token()
            if current is None:
                raise ParseError("unbalanced ')' in cycle notation")
            groups.append(current)
            current = None
        elif ch.isspace():
            flush_token()
        elif current is None:
            raise ParseError(f"unexpected character {ch!r} outside parentheses")
        else:
            token += ch
    if current is not None:
        raise ParseError("unbalanced '(' in cycle notation")

    factors = []
    for group in groups:
        if len(set(group)) != len(group):
            raise ParseError(f"repeated element within cycle ({' '.join(map(str, group))})")
        factors.append(Permutation.from_cycle(group))
    return reduce(lambda acc, f: acc * f, factors, Permutation.identity())


def format_cycles(p: Permutation) -> str:
    """Serialize to canonical cycle notation; inverse of parse_cycles."""
    return "".join("(" + " ".join(str(e) for e in cycle) + ")" for cycle in p.cycles)

"""Machine moves and plan products.

A machine move is one use of an m-machine: the ordered seat list of the m
people cycled together.  A plan is a chronological list of moves (first
machine use first); its product is the right-to-left composition of the
induced cycles, so the last move is the leftmost factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Element, Permutation


@dataclass(frozen=True)
class MachineMove:
    """One machine use: seats[0] -> seats[1] -> ... -> seats[-1] -> seats[0].

    Seats are rotated at construction so the minimal element leads, which
    does not change the induced cycle but makes serialization stable.
    """

    seats: tuple[Element, ...]

    def __post_init__(self) -> None:
        seats = tuple(self.seats)
        if len(seats) < 2:
            raise ValueError("a machine move needs at least 2 seats")
        if len(set(seats)) != len(seats):
            raise ValueError(f"repeated seat in move ({' '.join(map(str, seats))})")
        lead = min(range(len(seats)), key=lambda i: seats[i])
        object.__setattr__(self, "seats", seats[lead:] + seats[:lead])

    @property
    def size(self) -> int:
        return len(self.seats)

    @property
    def support(self) -> frozenset[Element]:
        return frozenset(self.seats)

    def perm(self) -> Permutation:
        return Permutation.from_cycle(self.seats)

    def has_outsider(self) -> bool:
        return any(s.is_outsider for s in self.seats)

    def __str__(self) -> str:
        return "(" + " ".join(str(s) for s in self.seats) + ")"


def plan_product(moves: Iterable[MachineMove]) -> Permutation:
    """Product of a chronological plan: later moves compose on the left."""
    acc = Permutation.identity()
    for move in moves:
        acc = move.perm() * acc
    return acc


def written_product(factors: Sequence[MachineMove]) -> Permutation:
    """Product of factors in written order: the rightmost factor acts first."""
    return plan_product(reversed(factors))


def supports_distinct(moves: Sequence[MachineMove]) -> bool:
    supports = [m.support for m in moves]
    return len(set(supports)) == len(supports)

"""Plan documents: the on-disk text format for machine plans.

A document is line-oriented with a fixed field order so diffs stay stable:

    mindswap-plan v1
    machine-size: 3
    target: (a1 a2 a3)
    outsiders: x1
    solver: optimal3          # optional
    steps: 2
    lower-bound: 2            # optional
    moves:
      a2 a1 x1
      a3 a2 x1

Move lines list seats chronologically, one machine use per line, each with
exactly machine-size seats.  Serialization normalizes in one pass: loading
a canonical document and dumping it again is byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .moves import MachineMove
from .perm import Element, ParseError, parse_cycles, parse_element

HEADER = "mindswap-plan v1"


class PlanFormatError(ValueError):
    """Raised for malformed plan documents."""


@dataclass(frozen=True)
class PlanDocument:
    m: int
    target: str
    outsiders: tuple[Element, ...]
    moves: tuple[MachineMove, ...]
    solver: str | None = None
    lower_bound: int | None = None

    def __post_init__(self) -> None:
        parse_cycles(self.target)
        for move in self.moves:
            if move.size != self.m:
                raise PlanFormatError(
                    f"move {move} has {move.size} seats, machine size is {self.m}"
                )

    @property
    def steps(self) -> int:
        return len(self.moves)


def dumps(doc: PlanDocument) -> str:
    lines = [
        HEADER,
        f"machine-size: {doc.m}",
        f"target: {doc.target}",
        "outsiders: " + " ".join(str(e) for e in doc.outsiders),
    ]
    if doc.solver is not None:
        lines.append(f"solver: {doc.solver}")
    lines.append(f"steps: {doc.steps}")
    if doc.lower_bound is not None:
        lines.append(f"lower-bound: {doc.lower_bound}")
    lines.append("moves:")
    for move in doc.moves:
        lines.append("  " + " ".join(str(s) for s in move.seats))
    return "\n".join(lines) + "\n"


def loads(text: str) -> PlanDocument:
    lines = [line.rstrip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0].strip() != HEADER:
        raise PlanFormatError(f"missing header line {HEADER!r}")
    fields: dict[str, str] = {}
    move_lines: list[str] = []
    in_moves = False
    for line in lines[1:]:
        if in_moves:
            move_lines.append(line.strip())
            continue
        if line.strip() == "moves:":
            in_moves = True
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise PlanFormatError(f"expected 'key: value', got {line!r}")
        fields[key.strip()] = value.strip()
    if not in_moves:
        raise PlanFormatError("missing 'moves:' section")
    for required in ("machine-size", "target", "outsiders"):
        if required not in fields:
            raise PlanFormatError(f"missing required field {required!r}")
    try:
        m = int(fields["machine-size"])
        outsiders = tuple(parse_element(tok) for tok in fields["outsiders"].split())
        moves = tuple(
            MachineMove(tuple(parse_element(tok) for tok in line.split()))
            for line in move_lines
        )
        doc = PlanDocument(
            m=m,
            target=fields["target"],
            outsiders=outsiders,
            moves=moves,
            solver=fields.get("solver"),
            lower_bound=int(fields["lower-bound"]) if "lower-bound" in fields else None,
        )
    except (ParseError, ValueError) as err:
        raise PlanFormatError(str(err)) from err
    if "steps" in fields and int(fields["steps"]) != doc.steps:
        raise PlanFormatError(
            f"steps field says {fields['steps']} but document lists {doc.steps} moves"
        )
    return doc

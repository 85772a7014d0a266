"""Symbolic Arthur parameters for Sp(2n): validation, partitions, duality.

A parameter is a formal sum of simple pieces (tau_i, b_i) where tau_i is an
opaque label for a self-dual cuspidal representation of GL(a_i) and b_i is a
positive multiplicity.  Only (rank, self-dual type, central-character label)
are modeled; every criterion downstream depends on the parameter through
those data alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import InvalidArgument, ParameterError
from .partitions import Partition, barbasch_vogan_dual

__all__ = [
    "SelfDualType",
    "Triviality",
    "CharacterLabel",
    "SimpleParameter",
    "ArthurParameter",
    "validate",
    "parse_parameter",
    "render_parameter",
]


class SelfDualType(Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"


class Triviality(Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "Nontrivial"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CharacterLabel:
    """A named quadratic character with three-valued triviality."""

    name: str
    triviality: Triviality = Triviality.UNKNOWN

    def __post_init__(self):
        if not self.name:
            raise InvalidArgument("character label name must be nonempty")


@dataclass(frozen=True)
class SimpleParameter:
    """One summand (tau, b): rank, multiplicity, type and central character.

    The constructor only checks basic ranges; the parity rules between rank,
    multiplicity and type are enforced by :func:`validate`, which can then
    report every violation at once.
    """

    label: str
    rank: int
    mult: int
    dual_type: SelfDualType
    central_char: CharacterLabel = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if not self.label:
            raise InvalidArgument("summand label must be nonempty")
        if self.rank < 1:
            raise InvalidArgument(f"rank must be at least 1, got {self.rank}")
        if self.mult < 1:
            raise InvalidArgument(f"multiplicity must be at least 1, got {self.mult}")
        if self.central_char is None:
            object.__setattr__(
                self, "central_char", CharacterLabel(f"w({self.label})")
            )

    @property
    def size(self) -> int:
        return self.rank * self.mult


def _validation_issues(summands: Sequence[SimpleParameter]) -> list[tuple[str, str]]:
    issues: list[tuple[str, str]] = []
    for s in summands:
        if s.dual_type is SelfDualType.SYMPLECTIC:
            if s.rank % 2:
                issues.append(
                    ("parity-rule", f"summand {s.label}: symplectic type needs even rank, got {s.rank}")
                )
            if s.mult % 2:
                issues.append(
                    ("parity-rule", f"summand {s.label}: symplectic type needs even multiplicity, got {s.mult}")
                )
        else:
            if s.mult % 2 == 0:
                issues.append(
                    ("parity-rule", f"summand {s.label}: orthogonal type needs odd multiplicity, got {s.mult}")
                )
    seen = set()
    for s in summands:
        key = (s.label, s.mult)
        if key in seen:
            issues.append(("duplicate-summand", f"repeated summand ({s.label}, {s.mult})"))
        seen.add(key)
    total = sum(s.size for s in summands)
    if total % 2 == 0 or total < 3:
        issues.append(
            ("not-odd-weight", f"total rank*multiplicity must be odd and at least 3, got {total}")
        )
    return issues


def _central_char_warnings(summands: Sequence[SimpleParameter]) -> tuple[str, ...]:
    # Advisory only: the product of central characters must be trivial for
    # tau's realizing the parameter to exist.  Checked only when every
    # triviality is known; Unknown never blocks analysis.
    if any(s.central_char.triviality is Triviality.UNKNOWN for s in summands):
        return ()
    exponent: dict[str, int] = {}
    nontrivial: set[str] = set()
    for s in summands:
        exponent[s.central_char.name] = exponent.get(s.central_char.name, 0) + s.mult
        if s.central_char.triviality is Triviality.NONTRIVIAL:
            nontrivial.add(s.central_char.name)
    odd = sorted(name for name in nontrivial if exponent[name] % 2)
    if not odd:
        return ()
    if len(odd) <= 2:
        return (
            "central character product is nontrivial (odd exponent on: " + ", ".join(odd) + ")",
        )
    return (
        "central character product cannot be verified as trivial (odd exponent on: "
        + ", ".join(odd)
        + ")",
    )


class ArthurParameter:
    """A validated formal sum of simple parameters with odd total size 2n+1.

    Construction runs full validation and raises :class:`ParameterError`
    carrying every violation.  Advisory findings (the central-character
    product condition) are attached as ``warnings``.
    """

    __slots__ = ("_summands", "_n", "_warnings")

    def __init__(self, summands: Iterable[SimpleParameter]):
        summands = tuple(summands)
        if not summands:
            raise ParameterError([("not-odd-weight", "parameter needs at least one summand")])
        issues = _validation_issues(summands)
        if issues:
            raise ParameterError(issues)
        self._summands = summands
        self._n = (sum(s.size for s in summands) - 1) // 2
        self._warnings = _central_char_warnings(summands)

    @property
    def summands(self) -> tuple[SimpleParameter, ...]:
        return self._summands

    @property
    def n(self) -> int:
        """Half the dual size: the parameter lives on Sp(2n)."""
        return self._n

    @property
    def warnings(self) -> tuple[str, ...]:
        return self._warnings

    def ranks(self) -> tuple[int, ...]:
        return tuple(s.rank for s in self._summands)

    def mults(self) -> tuple[int, ...]:
        return tuple(s.mult for s in self._summands)

    def is_generic(self) -> bool:
        """True when every multiplicity is one."""
        return all(s.mult == 1 for s in self._summands)

    def attached_partition(self) -> Partition:
        """The partition of 2n+1 with each multiplicity repeated rank times."""
        values: list[int] = []
        for s in self._summands:
            values.extend([s.mult] * s.rank)
        return Partition(values)

    def dual_partition(self) -> Partition:
        """Dual of the attached partition: a symplectic partition of 2n."""
        return barbasch_vogan_dual(self.attached_partition())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ArthurParameter) and self._summands == other._summands

    def __hash__(self) -> int:
        return hash(self._summands)

    def __repr__(self) -> str:
        return f"ArthurParameter({render_parameter(self)!r})"

    def __str__(self) -> str:
        return render_parameter(self)


def validate(summands: Iterable[SimpleParameter]) -> ArthurParameter:
    """Build a parameter, raising ParameterError with all violations at once."""
    return ArthurParameter(summands)


_SIMPLE = re.compile(
    r"^\(\s*(\d+)\s*([osc])\s*(?::\s*([^\s,()]+)\s*)?,\s*(\d+)\s*\)$"
)


def _auto_label(position: int) -> str:
    return f"tau{position}"


def parse_parameter(text: str) -> ArthurParameter:
    """Parse strings like ``(1c,7)+(2s,2)`` or ``(2o:tau,5)+(1o:w,1)``.

    Types: ``o`` orthogonal, ``s`` symplectic, ``c`` rank-1 quadratic
    character (forces rank 1, orthogonal).  Omitted labels auto-number
    tau1, tau2, ...  For rank-1 summands the label names the character
    itself; label ``1`` means the trivial character.
    """
    pieces = [piece.strip() for piece in text.strip().split("+")]
    if pieces == [""]:
        raise InvalidArgument("empty parameter string")
    summands = []
    for idx, piece in enumerate(pieces, start=1):
        m = _SIMPLE.match(piece)
        if not m:
            raise InvalidArgument(f"cannot parse simple parameter {piece!r}")
        rank = int(m.group(1))
        typ = m.group(2)
        label = m.group(3) or _auto_label(idx)
        mult = int(m.group(4))
        if typ == "c" and rank != 1:
            raise InvalidArgument(f"type 'c' means a rank-1 character, got rank {rank} in {piece!r}")
        dual = SelfDualType.SYMPLECTIC if typ == "s" else SelfDualType.ORTHOGONAL
        if rank == 1:
            triv = Triviality.TRIVIAL if label == "1" else Triviality.UNKNOWN
            char = CharacterLabel(label, triv)
        else:
            char = CharacterLabel(f"w({label})", Triviality.UNKNOWN)
        summands.append(
            SimpleParameter(label=label, rank=rank, mult=mult, dual_type=dual, central_char=char)
        )
    return ArthurParameter(summands)


def render_parameter(psi: ArthurParameter) -> str:
    """Canonical text form; auto-numbered labels are omitted."""
    pieces = []
    for idx, s in enumerate(psi.summands, start=1):
        typ = "c" if s.rank == 1 else ("s" if s.dual_type is SelfDualType.SYMPLECTIC else "o")
        label = "" if s.label == _auto_label(idx) else f":{s.label}"
        pieces.append(f"({s.rank}{typ}{label},{s.mult})")
    return "+".join(pieces)

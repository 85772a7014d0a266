"""Weight bounds and the cuspidality rule engine for Sp(2n) packets.

Three numeric bounds are computed for a parameter: a coarse bound from the
ranks alone, and two refinements maximizing the weight of an admissible even
partition below the dual partition under the lexicographic and dominance
orders.  A small rule set then derives a verdict, recording every rule that
fired and which conjectural assumption (if any) each conclusion needs.
"""

from __future__ import annotations

import itertools
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from string import Template
from typing import Iterable, Optional, Sequence

from .arthur import ArthurParameter, parse_parameter
from .errors import (
    CuspcheckError,
    InternalInvariantViolation,
    InvalidArgument,
)
from .partitions import Partition, is_grs_admissible

__all__ = [
    "FieldKind",
    "Assumption",
    "Status",
    "OrderChoice",
    "Firing",
    "BoundsReport",
    "Verdict",
    "ScanCell",
    "rank_only_bound",
    "is_realizable",
    "grs_max_weight",
    "bounds",
    "verdict",
    "scan",
]


class FieldKind(Enum):
    """Hypothesis on the ground number field."""

    GENERAL = "general"
    TOTALLY_IMAGINARY = "totally-imaginary"
    TOTALLY_REAL = "totally-real"


class Assumption(Enum):
    """Named conjectural hypotheses that conditional rules may rely on.

    The first two assert the same dominance bound (the dual partition
    dominates every wave-front partition of a square-integrable packet
    member) but are stated in two different places by the sources, so they
    are deliberately kept as distinct flags.
    """

    DOMINANCE_UPPER_BOUND = "upbfc"
    DOMINANCE_UPPER_BOUND_CONJ = "conj-j14-1"
    MOEGLIN_CRITERION = "moeglin"


class Status(Enum):
    NO_CUSPIDAL = "NoCuspidal"
    CONTAINS_CUSPIDAL = "ContainsCuspidal"
    UNDETERMINED = "Undetermined"


class OrderChoice(Enum):
    LEX = "lex"
    DOMINANCE = "dominance"


@dataclass(frozen=True)
class Firing:
    """One rule that fired, the status it implies, and its assumption if any."""

    rule: str
    name: str
    implies: Status
    conditional_on: Optional[Assumption] = None

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "status": self.implies.value,
            "conditional_on": None if self.conditional_on is None else self.conditional_on.value,
        }


@dataclass(frozen=True)
class BoundsReport:
    """The bound triple with the witnessing maximizer partitions."""

    n_a: int
    n1: int
    n1_witness: Partition
    n2: int
    n2_witness: Partition

    def to_dict(self) -> dict:
        return {
            "N_a": self.n_a,
            "N1": self.n1,
            "N2": self.n2,
            "N1_witness": str(self.n1_witness),
            "N2_witness": str(self.n2_witness),
        }


@dataclass(frozen=True)
class Verdict:
    """Cuspidality status plus every fired rule and the computed bounds."""

    status: Status
    n: int
    p_psi: Partition
    eta: Partition
    bounds: BoundsReport
    firings: tuple[Firing, ...]
    warnings: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "n": self.n,
            "p_psi": str(self.p_psi),
            "eta": str(self.eta),
            "bounds": self.bounds.to_dict(),
            "firings": [f.to_dict() for f in self.firings],
            "warnings": list(self.warnings),
        }


def rank_only_bound(ranks: Sequence[int]) -> int:
    """Coarse bound depending only on the rank tuple.

    With A the rank sum: A^2 + 2A when A is even, A^2 - 1 when A is odd
    (four rows of each even value up to the largest possible first part).
    """
    if not ranks:
        raise InvalidArgument("rank tuple must be nonempty")
    a = sum(ranks)
    return a * a + 2 * a if a % 2 == 0 else a * a - 1


def is_realizable(ranks: Sequence[int], mults: Sequence[int]) -> bool:
    """Can some choice of self-dual types make (ranks, mults) a parameter?

    Needs an even rank wherever the multiplicity is even (symplectic type),
    and an odd total size of at least 3.
    """
    if len(ranks) != len(mults):
        raise InvalidArgument("ranks and mults must have equal length")
    if any(r < 1 for r in ranks) or any(b < 1 for b in mults):
        return False
    if any(b % 2 == 0 and r % 2 for r, b in zip(ranks, mults)):
        return False
    total = sum(r * b for r, b in zip(ranks, mults))
    return total % 2 == 1 and total >= 3


def _filled_tail(top: int) -> list[int]:
    # Four copies of every even value from top down to 2.
    return [v for v in range(top, 0, -2) for _ in range(4)]


def _tail_weight(top: int) -> int:
    # 4 * (2 + 4 + ... + top)
    half = top // 2
    return 4 * half * (half + 1)


@lru_cache(maxsize=65536)
def _max_grs_lex(eta: Partition) -> tuple[int, Partition]:
    """Maximal-weight admissible partition lexicographically below eta.

    A candidate either equals eta, or copies a prefix of eta and then drops
    strictly below it; after dropping, the lexicographic constraint is slack,
    so the best continuation packs four copies of every smaller even value.
    """
    parts = eta.parts
    candidates: list[tuple[int, tuple[int, ...]]] = []
    if is_grs_admissible(eta):
        candidates.append((eta.weight, parts))
    prefix_weight = 0
    mult_in_run = 0
    for j in range(len(parts)):
        # Here parts[:j] is a feasible prefix (even values, runs of <= 4).
        candidates.append((prefix_weight, parts[:j]))
        v = parts[j] - 1
        v -= v % 2
        if v >= 2:
            tail = tuple(_filled_tail(v))
            candidates.append((prefix_weight + _tail_weight(v), parts[:j] + tail))
        pj = parts[j]
        if pj % 2:
            break
        mult_in_run = mult_in_run + 1 if j > 0 and parts[j - 1] == pj else 1
        if mult_in_run > 4:
            break
        prefix_weight += pj
    best_weight = max(w for w, _ in candidates)
    best = max(p for w, p in candidates if w == best_weight)
    return best_weight, Partition(best)


@lru_cache(maxsize=65536)
def _max_grs_dominated(eta: Partition) -> tuple[int, Partition]:
    """Maximal-weight admissible partition dominated by eta.

    Dynamic program over even values taken in descending order.  Because the
    prefix sums of eta are concave and a run of equal parts adds linearly,
    dominance only needs checking at the end of each run.  States are
    (parts placed, weight placed); for each state the lexicographically
    largest multiplicity history is kept so the witness tie-break is exact.
    """
    parts = eta.parts
    if not parts:
        return 0, Partition()
    top = parts[0] - (parts[0] % 2)
    values = list(range(top, 0, -2))
    prefix = list(itertools.accumulate(parts))
    total = eta.weight

    def bound(count: int) -> int:
        return prefix[count - 1] if count <= len(prefix) else total

    states: dict[tuple[int, int], tuple[int, ...]] = {(0, 0): ()}
    for v in values:
        nxt: dict[tuple[int, int], tuple[int, ...]] = {}
        for (c, w), hist in states.items():
            for m in range(5):
                c2, w2 = c + m, w + m * v
                if m and w2 > bound(c2):
                    break  # the deficit only grows with larger m
                key = (c2, w2)
                h2 = hist + (m,)
                if key not in nxt or h2 > nxt[key]:
                    nxt[key] = h2
        states = nxt
    best_weight = max(w for _, w in states)
    best_hist = max(h for (_, w), h in states.items() if w == best_weight)
    witness = [v for v, m in zip(values, best_hist) for _ in range(m)]
    return best_weight, Partition(witness)


def grs_max_weight(eta: Partition, order: OrderChoice) -> tuple[int, Partition]:
    """Maximal weight of a GRS-admissible partition below ``eta``.

    ``order`` selects the comparison (lexicographic or dominance).  Returns
    the weight and a witness; ties on weight resolve to the lexicographically
    largest witness.  An empty feasible set can only mean the empty
    partition, reported as (0, []).
    """
    if not eta.is_symplectic():
        raise InvalidArgument(f"expected a symplectic partition, got {eta}")
    if order is OrderChoice.LEX:
        return _max_grs_lex(eta)
    if order is OrderChoice.DOMINANCE:
        return _max_grs_dominated(eta)
    raise InvalidArgument(f"unknown order choice {order!r}")


def bounds(psi: ArthurParameter) -> BoundsReport:
    """The bound triple for a parameter, with maximizer witnesses."""
    n_a = rank_only_bound(psi.ranks())
    eta = psi.dual_partition()
    n1, w1 = grs_max_weight(eta, OrderChoice.LEX)
    n2, w2 = grs_max_weight(eta, OrderChoice.DOMINANCE)
    if not (n2 <= n1 <= n_a and n2 <= 2 * psi.n):
        raise InternalInvariantViolation(
            f"bound ordering violated for {psi}: N_a={n_a} N1={n1} N2={n2} 2n={2 * psi.n}"
        )
    return BoundsReport(n_a=n_a, n1=n1, n1_witness=w1, n2=n2, n2_witness=w2)


def _evaluate_rules(
    psi: ArthurParameter, field: FieldKind, report: BoundsReport
) -> tuple[Firing, ...]:
    n = psi.n
    two_n = 2 * n
    imaginary = field is FieldKind.TOTALLY_IMAGINARY
    firings: list[Firing] = []

    if psi.is_generic():
        firings.append(Firing("R1", "generic", Status.CONTAINS_CUSPIDAL))

    # Rank-1 summands are quadratic characters; the pole position of the
    # twisted L-function caps their multiplicity at n+1 (n even) / n (n odd).
    kr_cap = n + 1 if n % 2 == 0 else n
    if any(s.rank == 1 and s.mult > kr_cap for s in psi.summands):
        firings.append(Firing("R2", "kudla-rallis", Status.NO_CUSPIDAL))

    if any(s.rank == 1 and s.mult > n + 1 for s in psi.summands):
        firings.append(
            Firing(
                "R3",
                "character-multiplicity",
                Status.NO_CUSPIDAL,
                Assumption.DOMINANCE_UPPER_BOUND,
            )
        )

    if imaginary and two_n > report.n_a:
        firings.append(Firing("R4", "rank-bound", Status.NO_CUSPIDAL))
    if imaginary and two_n > report.n1:
        firings.append(Firing("R5", "lex-bound", Status.NO_CUSPIDAL))
    if imaginary and two_n > report.n2:
        firings.append(
            Firing(
                "R6",
                "dominance-bound",
                Status.NO_CUSPIDAL,
                Assumption.DOMINANCE_UPPER_BOUND_CONJ,
            )
        )

    if len(psi.summands) >= 2:
        for j1, s1 in enumerate(psi.summands):
            if all(
                s1.mult >= s1.rank + s2.rank + s2.mult
                for j2, s2 in enumerate(psi.summands)
                if j2 != j1
            ):
                firings.append(
                    Firing("R7", "moeglin", Status.NO_CUSPIDAL, Assumption.MOEGLIN_CRITERION)
                )
                break

    return tuple(firings)


def verdict(
    psi: ArthurParameter,
    field: FieldKind = FieldKind.GENERAL,
    assumptions: Iterable[Assumption] = (),
) -> Verdict:
    """Apply every rule and aggregate a status.

    Conditional rules always fire and are recorded; only the status
    aggregation filters on the active assumption set.  Absence of any firing
    yields Undetermined: the criteria are one-directional, so nothing is ever
    upgraded to ContainsCuspidal except the proved generic case.
    """
    active = frozenset(assumptions)
    report = bounds(psi)
    firings = _evaluate_rules(psi, field, report)
    effective = {
        f.implies
        for f in firings
        if f.conditional_on is None or f.conditional_on in active
    }
    if Status.NO_CUSPIDAL in effective and Status.CONTAINS_CUSPIDAL in effective:
        raise InternalInvariantViolation(
            f"contradictory conclusions for {psi} under {sorted(a.value for a in active)}"
        )
    if Status.NO_CUSPIDAL in effective:
        status = Status.NO_CUSPIDAL
    elif Status.CONTAINS_CUSPIDAL in effective:
        status = Status.CONTAINS_CUSPIDAL
    else:
        status = Status.UNDETERMINED
    return Verdict(
        status=status,
        n=psi.n,
        p_psi=psi.attached_partition(),
        eta=psi.dual_partition(),
        bounds=report,
        firings=firings,
        warnings=psi.warnings,
    )


@dataclass(frozen=True)
class ScanCell:
    """One grid cell: slot values plus either a verdict or a validation error."""

    slots: tuple[tuple[str, int], ...]
    verdict: Optional[Verdict]
    error: Optional[str]

    @property
    def status_text(self) -> str:
        return "Invalid" if self.verdict is None else self.verdict.status.value

    def to_dict(self) -> dict:
        out: dict = {"slots": dict(self.slots), "status": self.status_text}
        if self.verdict is None:
            out["error"] = self.error
        else:
            out["verdict"] = self.verdict.to_dict()
        return out


_IDENT = re.compile(r"\$\{?([A-Za-z_][A-Za-z0-9_]*)\}?")


def _template_slots(template: str) -> set[str]:
    return set(_IDENT.findall(template))


def scan(
    template: str,
    ranges: Sequence[tuple[str, Sequence[int]]],
    field: FieldKind = FieldKind.GENERAL,
    assumptions: Iterable[Assumption] = (),
    max_workers: Optional[int] = None,
) -> list[ScanCell]:
    """Evaluate a parameter template over integer ranges.

    ``ranges`` is an ordered list of (slot name, values); the grid is walked
    row-major in that order.  Cells whose instantiation fails validation are
    reported with status Invalid rather than dropped.  Evaluation may run on
    a thread pool; the output order is fixed by the ranges regardless.
    """
    names = [name for name, _ in ranges]
    if len(set(names)) != len(names):
        raise InvalidArgument("duplicate slot name in ranges")
    slots = _template_slots(template)
    if slots != set(names):
        raise InvalidArgument(
            f"template slots {sorted(slots)} do not match range names {sorted(names)}"
        )
    active = frozenset(assumptions)
    combos = list(itertools.product(*[list(vals) for _, vals in ranges]))

    def evaluate(combo: tuple[int, ...]) -> ScanCell:
        mapping = dict(zip(names, combo))
        text = Template(template).substitute({k: str(v) for k, v in mapping.items()})
        cell_slots = tuple(zip(names, combo))
        try:
            psi = parse_parameter(text)
            return ScanCell(cell_slots, verdict(psi, field, active), None)
        except InternalInvariantViolation:
            raise
        except CuspcheckError as exc:
            return ScanCell(cell_slots, None, str(exc))

    if max_workers is not None and max_workers > 1 and combos:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(evaluate, combos))
    return [evaluate(c) for c in combos]

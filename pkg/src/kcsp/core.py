"""Problem representation for finite-domain CSPs given as nogood lists.

A problem over n variables (indexed 1..n) with domain {0..d-1} is a list
of nogoods.  A nogood is a partial assignment, given as (variable, value)
pairs, that a total assignment must not match in full.  An assignment
satisfies the instance iff no nogood is fully matched.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

UNASSIGNED = None


class ParseError(ValueError):
    """Instance-file syntax or range violation, with the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Nogood:
    """A forbidden partial assignment; pairs are kept sorted by variable index."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs):
        pairs = tuple(sorted((int(v), int(a)) for v, a in pairs))
        seen = set()
        for v, _ in pairs:
            if v in seen:
                raise ValueError(f"variable {v} appears twice in nogood {pairs}")
            seen.add(v)
        object.__setattr__(self, "pairs", pairs)

    @property
    def arity(self) -> int:
        return len(self.pairs)

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.pairs)


class StatusKind(enum.Enum):
    KILLED = "killed"
    MATCHED = "matched"
    ACTIVE = "active"


@dataclass(frozen=True)
class NogoodStatus:
    """Classification of a nogood against a partial assignment.

    KILLED: some assigned variable disagrees with the nogood, so the nogood
    can never be matched on this branch.  MATCHED: every pair is assigned
    and agrees, i.e. the nogood is violated.  ACTIVE: no disagreement yet,
    with at least one pair unassigned; `unassigned` lists those variables
    in canonical (sorted) order.
    """

    kind: StatusKind
    unassigned: tuple[int, ...] = ()


KILLED = NogoodStatus(StatusKind.KILLED)
MATCHED = NogoodStatus(StatusKind.MATCHED)


class PartialAssignment:
    """Mutable per-variable value map built up during search.

    Variables are 1-indexed; `values[0]` is unused padding.  Single-owner:
    one search thread mutates one instance of this.
    """

    def __init__(self, n: int):
        self.n = n
        self.values: list[int | None] = [UNASSIGNED] * (n + 1)
        self.assigned_count = 0

    def assign(self, var: int, value: int) -> None:
        if self.values[var] is not UNASSIGNED:
            raise ValueError(f"variable {var} already assigned")
        self.values[var] = value
        self.assigned_count += 1

    def unassign(self, var: int) -> None:
        if self.values[var] is UNASSIGNED:
            raise ValueError(f"variable {var} is not assigned")
        self.values[var] = UNASSIGNED
        self.assigned_count -= 1

    def value(self, var: int) -> int | None:
        return self.values[var]

    def is_assigned(self, var: int) -> bool:
        return self.values[var] is not UNASSIGNED

    def is_total(self) -> bool:
        return self.assigned_count == self.n

    def as_tuple(self) -> tuple[int, ...]:
        if not self.is_total():
            raise ValueError("assignment is not total")
        return tuple(self.values[1:])

    @classmethod
    def from_values(cls, values) -> "PartialAssignment":
        pa = cls(len(values))
        for var, val in enumerate(values, start=1):
            if val is not UNASSIGNED:
                pa.assign(var, val)
        return pa


class CspInstance:
    """Immutable CSP instance: n variables over {0..d-1} plus a nogood list.

    Nogoods are canonicalized (pairs sorted by variable) and deduplicated,
    keeping first-occurrence order.  Safe to share across threads.
    """

    def __init__(self, n: int, d: int, nogoods=()):
        if n < 1:
            raise ValueError(f"variable count must be positive, got {n}")
        if d < 1:
            raise ValueError(f"domain size must be at least 1, got {d}")
        self.n = n
        self.d = d
        canonical = []
        seen = set()
        for ng in nogoods:
            if not isinstance(ng, Nogood):
                ng = Nogood(ng)
            for v, a in ng.pairs:
                if not 1 <= v <= n:
                    raise ValueError(f"variable {v} out of range 1..{n}")
                if not 0 <= a < d:
                    raise ValueError(f"value {a} out of range 0..{d - 1}")
            if ng.pairs not in seen:
                seen.add(ng.pairs)
                canonical.append(ng)
        self.nogoods: tuple[Nogood, ...] = tuple(canonical)
        self.k_max = max((ng.arity for ng in self.nogoods), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, CspInstance)
            and self.n == other.n
            and self.d == other.d
            and self.nogoods == other.nogoods
        )

    def __hash__(self):
        return hash((self.n, self.d, self.nogoods))

    def __repr__(self):
        return f"CspInstance(n={self.n}, d={self.d}, nogoods={len(self.nogoods)})"

    @cached_property
    def by_var(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each variable (index 1..n), the (nogood index, value) pairs naming it."""
        occ: list[list[tuple[int, int]]] = [[] for _ in range(self.n + 1)]
        for j, ng in enumerate(self.nogoods):
            for v, a in ng.pairs:
                occ[v].append((j, a))
        return tuple(tuple(entry) for entry in occ)

    @cached_property
    def arities(self) -> tuple[int, ...]:
        return tuple(ng.arity for ng in self.nogoods)


def nogood_status(nogood: Nogood, pa: PartialAssignment) -> NogoodStatus:
    """Classify `nogood` under `pa` as KILLED, MATCHED, or ACTIVE."""
    unassigned = []
    for v, a in nogood.pairs:
        val = pa.values[v]
        if val is UNASSIGNED:
            unassigned.append(v)
        elif val != a:
            return KILLED
    if unassigned:
        return NogoodStatus(StatusKind.ACTIVE, tuple(unassigned))
    return MATCHED


def is_satisfying(instance: CspInstance, pa: PartialAssignment) -> bool:
    """True iff the total assignment `pa` matches no nogood in full."""
    if not pa.is_total():
        raise ValueError("is_satisfying requires a total assignment")
    values = pa.values
    for ng in instance.nogoods:
        if all(values[v] == a for v, a in ng.pairs):
            return False
    return True


def narrowed_domain(instance: CspInstance, pa: PartialAssignment, y: int) -> set[int]:
    """Values still open to unassigned variable `y` under `pa`.

    A value a is removed when some nogood contains (y, a) and every one of
    its other pairs is assigned and agrees.  A unary nogood (y, a) removes
    a unconditionally.  An arity-0 nogood is already violated, so nothing
    is open to any variable and the empty set is returned.
    """
    if pa.is_assigned(y):
        raise ValueError(f"variable {y} is already assigned")
    values = pa.values
    domain = set(range(instance.d))
    for ng in instance.nogoods:
        if ng.arity == 0:
            return set()
        forbidden = None
        others_match = True
        for v, a in ng.pairs:
            if v == y:
                forbidden = a
            elif values[v] != a:
                others_match = False
                break
        if forbidden is not None and others_match:
            domain.discard(forbidden)
    return domain


def is_narrowly_chosen(instance: CspInstance, pa: PartialAssignment, y: int) -> bool:
    """True iff at least one value of `y` is currently ruled out by a nogood."""
    return len(narrowed_domain(instance, pa, y)) < instance.d


def parse_instance(text) -> CspInstance:
    """Parse the instance file format.

    Format: '#' comment lines; one header line `p csp <n> <d>`; then one
    nogood per line, `n <arity> v1 a1 ... v_arity a_arity`.  Raises
    ParseError (with line number) on malformed input.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = d = None
    nogoods = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != "csp":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, d = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 1 or d < 1:
                raise ParseError(f"header requires n >= 1 and d >= 1, got n={n} d={d}", lineno)
            continue
        if tokens[0] != "n":
            raise ParseError(f"expected nogood line, got {line!r}", lineno)
        try:
            arity = int(tokens[1])
            ints = [int(t) for t in tokens[2:]]
        except (ValueError, IndexError):
            raise ParseError(f"malformed nogood line {line!r}", lineno) from None
        if arity < 0 or len(ints) != 2 * arity:
            raise ParseError(
                f"nogood declares arity {tokens[1]} but carries {len(ints) // 2} pairs", lineno
            )
        pairs = []
        seen_vars = set()
        for v, a in zip(ints[0::2], ints[1::2]):
            if not 1 <= v <= n:
                raise ParseError(f"variable {v} out of range 1..{n}", lineno)
            if not 0 <= a < d:
                raise ParseError(f"value {a} out of range 0..{d - 1}", lineno)
            if v in seen_vars:
                raise ParseError(f"variable {v} repeated within nogood", lineno)
            seen_vars.add(v)
            pairs.append((v, a))
        nogoods.append(Nogood(pairs))
    if n is None:
        raise ParseError("missing header line 'p csp <n> <d>'", 1)
    return CspInstance(n, d, nogoods)


def serialize_instance(instance: CspInstance) -> str:
    """Canonical text form; parse(serialize(I)) == I."""
    lines = [f"p csp {instance.n} {instance.d}"]
    for ng in instance.nogoods:
        flat = " ".join(f"{v} {a}" for v, a in ng.pairs)
        lines.append(f"n {ng.arity} {flat}".rstrip())
    return "\n".join(lines) + "\n"


def load_instance(path) -> CspInstance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())


def save_instance(instance: CspInstance, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_instance(instance))

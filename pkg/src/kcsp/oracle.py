"""Brute-force ground truth: exhaustive enumeration, isolation degrees, and
exact checks of the isolation-weight inequality and the narrow-choice average
bound.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np

from .core import CspInstance, PartialAssignment, is_satisfying

DEFAULT_CAP = 1 << 24
EXHAUSTIVE_MAX_N = 8

_Z99 = 2.5758293035489004


@dataclass(frozen=True)
class PointSet:
    """A nonempty subset of D^n given extensionally."""

    points: frozenset
    n: int
    d: int

    def __post_init__(self):
        if not self.points:
            raise ValueError("point set must be nonempty")
        for pt in self.points:
            if len(pt) != self.n:
                raise ValueError(f"point {pt} is not of length {self.n}")
            if any(not 0 <= a < self.d for a in pt):
                raise ValueError(f"point {pt} has values outside 0..{self.d - 1}")

    @classmethod
    def of(cls, points, n: int, d: int) -> "PointSet":
        return cls(frozenset(tuple(p) for p in points), n, d)

    def __contains__(self, point) -> bool:
        return tuple(point) in self.points

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class SolutionSet:
    """All solutions of an instance, with per-solution isolation data.

    `critical_dims[i]` holds the dimensions (1-indexed) in which flipping
    `solutions[i]` to some other single value leaves the solution set;
    `isolation[i]` is its size.
    """

    n: int
    d: int
    solutions: tuple
    critical_dims: tuple
    isolation: tuple

    def __len__(self) -> int:
        return len(self.solutions)

    def as_point_set(self) -> PointSet:
        return PointSet.of(self.solutions, self.n, self.d)

    def isolation_of(self, X) -> int:
        X = tuple(X)
        try:
            return self.isolation[self.solutions.index(X)]
        except ValueError:
            raise ValueError(f"{X} is not a solution") from None


def _encode(points, n: int, d: int) -> np.ndarray:
    """Mixed-radix codes (variable 1 most significant); lexicographic == numeric."""
    codes = np.zeros(len(points), dtype=np.int64)
    arr = np.asarray(points, dtype=np.int64)
    for i in range(n):
        codes = codes * d + arr[:, i]
    return codes


def _member(sorted_codes: np.ndarray, queries: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(sorted_codes, queries)
    idx[idx == len(sorted_codes)] = 0
    return sorted_codes[idx] == queries if len(sorted_codes) else np.zeros(len(queries), bool)


def _critical_matrix(sorted_codes: np.ndarray, n: int, d: int) -> np.ndarray:
    """Boolean (|S|, n): entry (s, i) set iff dimension i+1 is critical for point s."""
    crit = np.zeros((len(sorted_codes), n), dtype=bool)
    for i in range(n):
        power = d ** (n - 1 - i)
        digit = (sorted_codes // power) % d
        for delta in range(1, d):
            alt = sorted_codes + (((digit + delta) % d) - digit) * power
            crit[:, i] |= ~_member(sorted_codes, alt)
    return crit


def isolation_degrees(points, n: int, d: int) -> list[int]:
    """Isolation degree of each point with respect to the given set itself."""
    order = sorted(range(len(points)), key=lambda idx: tuple(points[idx]))
    codes = _encode([points[idx] for idx in order], n, d)
    counts = _critical_matrix(codes, n, d).sum(axis=1)
    out = [0] * len(points)
    for rank, idx in enumerate(order):
        out[idx] = int(counts[rank])
    return out


def enumerate_solutions(instance: CspInstance, cap: int = DEFAULT_CAP) -> SolutionSet:
    """Exhaustively list all satisfying total assignments, in lexicographic order."""
    n, d = instance.n, instance.d
    total = d**n
    if total > cap:
        raise ValueError(f"search space d^n = {total} exceeds cap {cap}")
    powers = [d ** (n - 1 - i) for i in range(n)]
    chunk = 1 << 16
    found = []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        matched_any = np.zeros(len(codes), dtype=bool)
        for ng in instance.nogoods:
            matched = np.ones(len(codes), dtype=bool)
            for v, a in ng.pairs:
                matched &= (codes // powers[v - 1]) % d == a
            matched_any |= matched
        found.append(codes[~matched_any])
    sol_codes = np.concatenate(found) if found else np.empty(0, dtype=np.int64)

    solutions = []
    for code in sol_codes.tolist():
        point = [0] * n
        for i in range(n - 1, -1, -1):
            point[i] = code % d
            code //= d
        solutions.append(tuple(point))

    crit = _critical_matrix(sol_codes, n, d)
    critical_dims = tuple(tuple(int(i) + 1 for i in np.nonzero(row)[0]) for row in crit)
    isolation = tuple(int(c) for c in crit.sum(axis=1))
    return SolutionSet(n, d, tuple(solutions), critical_dims, isolation)


def critical_points(X, S: PointSet) -> set[int]:
    """Dimensions (1-indexed) where some single-value change moves X out of S."""
    X = tuple(X)
    if X not in S:
        raise ValueError(f"{X} is not in the point set")
    crit = set()
    for i in range(S.n):
        for a in range(S.d):
            if a != X[i] and (*X[:i], a, *X[i + 1 :]) not in S:
                crit.add(i + 1)
                break
    return crit


def verify_lemma2(S, n: int | None = None, d: int | None = None) -> tuple[bool, int]:
    """Exact-integer check that sum over S of d^J(x) is at least d^n.

    Equivalent to the isolation-weight inequality sum (1/d)^(n-J) >= 1, but
    carried out in big integers so no rounding can produce a false alarm.
    Returns (holds, the integer sum); `holds` false indicates a bug.
    """
    if isinstance(S, PointSet):
        n, d = S.n, S.d
        points = sorted(S.points)
    else:
        if n is None or d is None:
            raise ValueError("n and d are required when S is a bare point collection")
        S = PointSet.of(S, n, d)
        points = sorted(S.points)
    degrees = isolation_degrees(points, n, d)
    lhs = sum(d**j for j in degrees)
    return lhs >= d**n, lhs


class NarrowTracker:
    """Incremental per-nogood bookkeeping for narrow-choice queries.

    Tracks, for each nogood, how many of its variables are unassigned and
    whether any assigned variable already disagrees.  A variable y is
    narrowly chosen exactly when some live nogood has y as its only
    unassigned variable; that nogood's value at y is then forbidden.
    Mirrors core.narrowed_domain; the equivalence is covered by tests.
    """

    def __init__(self, instance: CspInstance):
        self.d = instance.d
        self.by_var = instance.by_var
        self.base_counts = list(instance.arities)
        self.has_empty_nogood = 0 in instance.arities
        self.counts = list(self.base_counts)
        self.killed = bytearray(len(self.base_counts))

    def reset(self) -> None:
        self.counts[:] = self.base_counts
        for i in range(len(self.killed)):
            self.killed[i] = 0

    def forbidden_values(self, y: int) -> set[int]:
        counts, killed = self.counts, self.killed
        return {a for j, a in self.by_var[y] if counts[j] == 1 and not killed[j]}

    def narrowed_domain(self, y: int) -> set[int]:
        if self.has_empty_nogood:
            return set()
        return set(range(self.d)) - self.forbidden_values(y)

    def is_narrow(self, y: int) -> bool:
        if self.has_empty_nogood:
            return True
        counts, killed = self.counts, self.killed
        return any(counts[j] == 1 and not killed[j] for j, _ in self.by_var[y])

    def assign(self, y: int, value: int) -> None:
        counts, killed = self.counts, self.killed
        for j, a in self.by_var[y]:
            counts[j] -= 1
            if a != value:
                killed[j] = 1


@dataclass(frozen=True)
class NarrowCountResult:
    """Average number of narrowly chosen variables over assignment orders."""

    average: Fraction | float
    ci99: tuple[float, float] | None
    j: int
    mode: str
    orders: int


def avg_narrow_count(
    instance: CspInstance,
    X,
    mode: str = "exhaustive",
    trials: int | None = None,
    seed: int | None = None,
    cap: int = DEFAULT_CAP,
) -> NarrowCountResult:
    """Average narrow-choice count over variable orders that end at solution X.

    Exhaustive mode loops over all n! orders (n <= 8) and returns an exact
    rational; sampled mode averages `trials` uniform orders and attaches a
    99% normal-approximation confidence interval.  Also reports X's
    isolation degree j, taken from the full solution enumeration.
    """
    X = tuple(X)
    n = instance.n
    if not is_satisfying(instance, PartialAssignment.from_values(X)):
        raise ValueError(f"{X} does not satisfy the instance")
    j = enumerate_solutions(instance, cap=cap).isolation_of(X)
    tracker = NarrowTracker(instance)

    def count_for(order) -> int:
        tracker.reset()
        count = 0
        for y in order:
            if tracker.is_narrow(y):
                count += 1
            tracker.assign(y, X[y - 1])
        return count

    variables = list(range(1, n + 1))
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive mode supports n <= {EXHAUSTIVE_MAX_N}, got {n}")
        total = 0
        orders = 0
        for order in permutations(variables):
            total += count_for(order)
            orders += 1
        return NarrowCountResult(Fraction(total, orders), None, j, "exhaustive", orders)
    if mode == "sampled":
        if not trials or trials < 1:
            raise ValueError("sampled mode requires trials >= 1")
        rng = random.Random(seed)
        counts = []
        for _ in range(trials):
            rng.shuffle(variables)
            counts.append(count_for(variables))
        mean = sum(counts) / trials
        var = sum((c - mean) ** 2 for c in counts) / trials
        half = _Z99 * math.sqrt(var / trials)
        return NarrowCountResult(mean, (mean - half, mean + half), j, "sampled", trials)
    raise ValueError(f"unknown mode {mode!r}")

"""Deterministic branching solver driven by nogood selection.

At each node the solver picks a live nogood and walks its unassigned pairs
(u1:a1), ..., (ut:at) in canonical order: for each position i it first
branches u_i over every value other than a_i (with u_1..u_{i-1} pinned to
the nogood's own values), then pins u_i := a_i and moves to position i+1.
Once every pair is pinned the nogood is matched, so the node fails.  This
yields at most t*(d-1) child branches per node.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import CspInstance, PartialAssignment, is_satisfying


@dataclass(frozen=True)
class DpllStats:
    """Outcome of one deterministic solve; nodes counts branching-point visits."""

    status: str  # "SAT" | "UNSAT"
    assignment: tuple | None
    nodes: int
    max_depth: int
    elapsed_s: float

    def semantic_key(self):
        return (self.status, self.assignment, self.nodes, self.max_depth)


class _Search:
    def __init__(self, instance: CspInstance):
        self.instance = instance
        self.values: list[int | None] = [None] * (instance.n + 1)
        self.by_var = instance.by_var
        self.pair_lists = [ng.pairs for ng in instance.nogoods]
        self.counts = list(instance.arities)
        self.bad = [0] * len(self.counts)
        self.matched = self.counts.count(0)  # arity-0 nogoods are matched up front
        self.nodes = 0
        self.max_depth = 0

    def assign(self, var: int, value: int) -> None:
        self.values[var] = value
        counts, bad = self.counts, self.bad
        for j, a in self.by_var[var]:
            counts[j] -= 1
            if a != value:
                bad[j] += 1
            elif counts[j] == 0 and bad[j] == 0:
                self.matched += 1

    def unassign(self, var: int, value: int) -> None:
        self.values[var] = None
        counts, bad = self.counts, self.bad
        for j, a in self.by_var[var]:
            if a != value:
                bad[j] -= 1
            elif counts[j] == 0 and bad[j] == 0:
                self.matched -= 1
            counts[j] += 1

    def select(self) -> int:
        """Index of the active nogood with fewest unassigned pairs (ties: lowest index)."""
        counts, bad = self.counts, self.bad
        best, best_count = -1, None
        for j in range(len(counts)):
            c = counts[j]
            if c > 0 and bad[j] == 0 and (best_count is None or c < best_count):
                best, best_count = j, c
                if c == 1:
                    break
        return best

    def run(self, depth: int):
        self.nodes += 1
        if depth > self.max_depth:
            self.max_depth = depth
        if self.matched > 0:
            return None
        chosen = self.select()
        if chosen < 0:
            # every nogood killed: any completion satisfies; take zeros
            values = self.values
            completion = tuple(v if v is not None else 0 for v in values[1:])
            assert is_satisfying(self.instance, PartialAssignment.from_values(completion))
            return completion
        pairs = [(v, a) for v, a in self.pair_lists[chosen] if self.values[v] is None]
        d = self.instance.d
        pinned = 0
        for u, a in pairs:
            for value in range(d):
                if value == a:
                    continue
                self.assign(u, value)
                result = self.run(depth + 1)
                if result is not None:
                    return result
                self.unassign(u, value)
            self.assign(u, a)
            pinned += 1
        for u, a in reversed(pairs[:pinned]):
            self.unassign(u, a)
        return None


def solve_dpll(instance: CspInstance) -> DpllStats:
    """Complete and sound: SAT with a satisfying assignment iff one exists."""
    start = time.perf_counter()
    search = _Search(instance)
    assignment = search.run(0)
    elapsed = time.perf_counter() - start
    if assignment is None:
        return DpllStats("UNSAT", None, search.nodes, search.max_depth, elapsed)
    return DpllStats("SAT", assignment, search.nodes, search.max_depth, elapsed)


def count_nodes(instance: CspInstance) -> int:
    """Nodes visited: the full tree on UNSAT input, up to first success on SAT."""
    return solve_dpll(instance).nodes

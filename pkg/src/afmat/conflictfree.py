"""Conflict-free sets: compatibility sets and level-wise enumeration.

A set is conflict-free when its inner sub-block is all zero, i.e. no
member attacks a member (self-attacks included). Enumeration goes level
by cardinality. For each argument i that does not attack itself, its
compatibility set C(i) collects the arguments j != i with no attack in
either direction between i and j and no self-attack on j. A level-r set
S then grows into S + {i} exactly when i > max(S) and S is contained in
C(i); the max-extension rule produces every conflict-free set exactly
once and keeps each level in lexicographic order.

Note the conjunctive reading of compatibility: *both* directions between
i and j must be attack-free, otherwise {i, j} would not be conflict-free
in the first place. Self-attackers have no compatibility set and appear
in no enumerated set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import (
    ArgSet,
    AttackTables,
    Framework,
    argset,
    attack_tables,
    checked_argset,
    pack,
    unpack,
)


def is_conflict_free(f: Framework, candidate: Iterable[int]) -> bool:
    """True iff the candidate's inner sub-block is all zero."""
    members = checked_argset(f, candidate)
    tables = attack_tables(f)
    mask = pack(members)
    return all(tables.targets[a] & mask == 0 for a in members)


def _compat_masks(tables: AttackTables) -> list[int]:
    """C(i) as bitmasks; entry is meaningless for self-attackers."""
    comp = [0] * (tables.n + 1)
    for i in range(1, tables.n + 1):
        comp[i] = (
            tables.full
            & ~tables.targets[i]
            & ~tables.attackers[i]
            & ~tables.loops
            & ~(1 << (i - 1))
        )
    return comp


def basic_sets(f: Framework) -> dict[int, frozenset[int]]:
    """Compatibility set C(i) for every argument i without a self-attack."""
    tables = attack_tables(f)
    comp = _compat_masks(tables)
    return {
        i: frozenset(unpack(comp[i]))
        for i in range(1, f.n + 1)
        if not (tables.loops >> (i - 1)) & 1
    }


def _levels(f: Framework) -> Iterator[list[tuple[ArgSet, int]]]:
    """Non-empty levels of the conflict-free family, as (set, mask) pairs."""
    tables = attack_tables(f)
    comp = _compat_masks(tables)
    yield [((), 0)]
    level = [
        ((i,), 1 << (i - 1))
        for i in range(1, f.n + 1)
        if not (tables.loops >> (i - 1)) & 1
    ]
    while level:
        yield level
        grown = []
        for s, mask in level:
            for i in range(s[-1] + 1, f.n + 1):
                if (tables.loops >> (i - 1)) & 1:
                    continue
                if mask & ~comp[i] == 0:
                    grown.append((s + (i,), mask | (1 << (i - 1))))
        level = grown


def iter_conflict_free(f: Framework) -> Iterator[ArgSet]:
    """Every conflict-free set, streamed by cardinality, lexicographic within a level."""
    for level in _levels(f):
        for s, _ in level:
            yield s


@dataclass(frozen=True)
class CfFamily:
    """The conflict-free family stratified by cardinality.

    ``levels[r]`` holds the conflict-free sets of size r, for r = 0..n.
    The family is downward closed: dropping any member of a level-r set
    lands in level r-1.
    """

    levels: tuple[frozenset[ArgSet], ...]

    @property
    def n(self) -> int:
        return len(self.levels) - 1

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)

    def __contains__(self, candidate: Iterable[int]) -> bool:
        s = argset(candidate)
        return len(s) <= self.n and s in self.levels[len(s)]

    def __iter__(self) -> Iterator[ArgSet]:
        for level in self.levels:
            yield from sorted(level)

    def all_sets(self) -> frozenset[ArgSet]:
        return frozenset(s for level in self.levels for s in level)


def enumerate_conflict_free(f: Framework) -> CfFamily:
    """Materialise the whole conflict-free family, level by level."""
    levels: list[frozenset[ArgSet]] = [frozenset()] * (f.n + 1)
    for level in _levels(f):
        if level:
            levels[len(level[0][0])] = frozenset(s for s, _ in level)
    return CfFamily(tuple(levels))

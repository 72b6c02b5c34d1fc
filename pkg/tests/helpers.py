"""Shared fixtures-in-code for the test suite.

Holds the small hand-checked frameworks the unit tests revolve around,
naive grid-walking reference implementations of the sub-block criteria
(independent of the packed-word path in the library), and the seeded
corpus builder used by the differential and acceptance tests.
"""

from __future__ import annotations

from itertools import chain, combinations

from afmat import Framework, GeneratorConfig, SubBlocks, generate
from afmat.core import ArgSet, Grid

# 3-cycle: no stable extension, grounded/ideal/eager all empty-set.
CYCLE3 = Framework(3, {(1, 2), (2, 3), (3, 1)})

# Five arguments, unique stable extension {1, 3, 5}.
AF5A = Framework(5, {(1, 2), (2, 3), (2, 5), (4, 3), (5, 4)})

# Variant of AF5A with 4 -> 1: two stable extensions, empty grounded.
AF5B = Framework(5, {(1, 2), (2, 3), (2, 5), (4, 1), (4, 3), (5, 4)})

# Dense attacker 2: three preferred extensions with empty intersection.
AF5C = Framework(5, {(1, 4), (2, 1), (2, 3), (2, 4), (2, 5), (3, 2), (4, 1)})

# Mutual attacks 1<->3, 4<->5 plus 5 -> 1: rich norm-form structure.
AF5D = Framework(5, {(1, 2), (1, 3), (3, 1), (4, 5), (5, 1), (5, 4)})

NAMED_FRAMEWORKS = {
    "cycle3": CYCLE3,
    "af5a": AF5A,
    "af5b": AF5B,
    "af5c": AF5C,
    "af5d": AF5D,
}


def powerset(f: Framework):
    return chain.from_iterable(combinations(f.arguments, r) for r in range(f.n + 1))


def naive_conflict_free(f: Framework) -> frozenset[ArgSet]:
    """Power-set filter by the pairwise definition, nothing shared with the library."""
    return frozenset(
        s
        for s in powerset(f)
        if not any((a, b) in f.attacks for a in s for b in s)
    )


def column(grid: Grid, t: int) -> tuple[int, ...]:
    return tuple(row[t] for row in grid)


def nonzero(vector: tuple[int, ...]) -> bool:
    return any(vector)


def stable_by_blocks(sb: SubBlocks) -> bool:
    """Every column of the outgoing block is non-zero."""
    width = len(sb.outsiders)
    return all(nonzero(column(sb.outgoing, t)) for t in range(width))


def admissible_by_blocks(sb: SubBlocks) -> bool:
    """Non-zero incoming rows are matched by non-zero outgoing columns."""
    for t in range(len(sb.outsiders)):
        if nonzero(sb.incoming[t]) and not nonzero(column(sb.outgoing, t)):
            return False
    return True


def complete_by_blocks(sb: SubBlocks) -> bool:
    """Admissible, and each zero outgoing column has an attacker (a 1 in the
    outer column) sitting on a row whose own outgoing column is zero."""
    if not admissible_by_blocks(sb):
        return False
    h = len(sb.outsiders)
    for t in range(h):
        if nonzero(column(sb.outgoing, t)):
            continue
        col = column(sb.outer, t)
        if not nonzero(col):
            return False
        if not any(col[v] and not nonzero(column(sb.outgoing, v)) for v in range(h)):
            return False
    return True


def assemble(sb: SubBlocks) -> Grid:
    """Lay the four blocks out as [[inner, outgoing], [incoming, outer]]."""
    top = tuple(r1 + r2 for r1, r2 in zip(sb.inner, sb.outgoing))
    bottom = tuple(r1 + r2 for r1, r2 in zip(sb.incoming, sb.outer))
    return top + bottom


def corpus_seed(n: int, p_index: int, i: int) -> int:
    return n * 1_000_000 + p_index * 10_000 + i


def make_corpus(ns, ps, count) -> list[Framework]:
    """Deterministic random corpus: ``count`` frameworks per (n, p) cell."""
    out = []
    for n in ns:
        for pi, p in enumerate(ps):
            for i in range(count):
                out.append(generate(GeneratorConfig(n=n, p=p, seed=corpus_seed(n, pi, i))))
    return out

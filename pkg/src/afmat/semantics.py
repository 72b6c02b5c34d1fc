"""Extension semantics decided on the attack matrix.

For a conflict-free candidate set S the core criteria read off the
partition blocks of the natural matrix (:func:`afmat.core.extract_subblocks`),
here evaluated as word scans over the packed rows:

* stable      -- every column of the outgoing block is non-zero: S
                 attacks every outsider.
* admissible  -- whenever a row of the incoming block is non-zero (that
                 outsider attacks S), the outgoing column for the same
                 outsider is non-zero (S strikes back at it).
* complete    -- admissible, and every outsider whose outgoing column is
                 zero has at least one attacker whose own outgoing column
                 is also zero; so no outsider is defended by S.

The same answers can be read off the norm form
(:func:`afmat.core.to_norm_form`): stable means no undefeated zone at
all (q = 0), admissible means the undefeated x members block is zero,
and complete additionally needs every column of the undefeated square
block to be non-zero.

The remaining semantics only compare whole families: preferred picks the
inclusion-maximal admissible sets, grounded the least complete set,
semi-stable the admissible sets with inclusion-maximal range (the set
plus everything it attacks), and ideal / eager the single largest
admissible set inside the intersection of all preferred / all
semi-stable extensions.

Family computations and acceptance queries are deterministic: families
order their sets by cardinality and then lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .conflictfree import iter_conflict_free
from .core import (
    ArgSet,
    AttackTables,
    Framework,
    InternalInvariantError,
    NormForm,
    PreconditionError,
    attack_tables,
    checked_argset,
    internal_attack,
    pack,
    unpack,
)


class Semantics(str, Enum):
    """Closed set of supported semantics tags (parse with ``Semantics(tag)``)."""

    CONFLICT_FREE = "cf"
    STABLE = "st"
    ADMISSIBLE = "ad"
    COMPLETE = "co"
    PREFERRED = "pr"
    GROUNDED = "gr"
    IDEAL = "id"
    SEMI_STABLE = "sst"
    EAGER = "eg"


CORE_SEMANTICS = (
    Semantics.CONFLICT_FREE,
    Semantics.STABLE,
    Semantics.ADMISSIBLE,
    Semantics.COMPLETE,
)
DERIVED_SEMANTICS = (
    Semantics.PREFERRED,
    Semantics.GROUNDED,
    Semantics.IDEAL,
    Semantics.SEMI_STABLE,
    Semantics.EAGER,
)
SINGLETON_SEMANTICS = (Semantics.GROUNDED, Semantics.IDEAL, Semantics.EAGER)


@dataclass(frozen=True)
class ExtensionFamily:
    """All extensions of one framework under one semantics tag."""

    tag: Semantics
    sets: frozenset[ArgSet]

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, candidate: Iterable[int]) -> bool:
        return tuple(sorted(set(candidate))) in self.sets

    def __iter__(self) -> Iterator[ArgSet]:
        return iter(self.ordered())

    def ordered(self) -> list[ArgSet]:
        """Sets sorted by cardinality, then lexicographically."""
        return sorted(self.sets, key=lambda s: (len(s), s))


def _require_conflict_free(f: Framework, members: ArgSet) -> None:
    clash = internal_attack(f, members)
    if clash is not None:
        raise PreconditionError(
            f"candidate set is not conflict-free: {clash[0]} attacks {clash[1]}",
            pair=clash,
        )


def _outsider_bits(tables: AttackTables, mask: int) -> Iterator[int]:
    rest = tables.full & ~mask
    while rest:
        low = rest & -rest
        yield low.bit_length()
        rest ^= low


def _stable_ok(tables: AttackTables, mask: int) -> bool:
    return all(tables.attackers[j] & mask for j in _outsider_bits(tables, mask))


def _admissible_ok(tables: AttackTables, mask: int) -> bool:
    for j in _outsider_bits(tables, mask):
        if tables.targets[j] & mask and not tables.attackers[j] & mask:
            return False
    return True


def _complete_ok(tables: AttackTables, mask: int) -> bool:
    """Completeness test for an already admissible mask."""
    for j in _outsider_bits(tables, mask):
        if tables.attackers[j] & mask:
            continue  # the candidate defeats j, so j cannot be defended
        attackers = tables.attackers[j]
        if attackers == 0:
            return False  # unattacked outsider is trivially defended
        rest = attackers
        while rest:
            low = rest & -rest
            if tables.attackers[low.bit_length()] & mask == 0:
                break  # an attacker of j the candidate leaves alone
            rest ^= low
        else:
            return False  # every attacker of j is struck: j is defended
    return True


def is_stable(f: Framework, candidate: Iterable[int]) -> bool:
    """Does the conflict-free candidate attack every outside argument?"""
    members = checked_argset(f, candidate)
    _require_conflict_free(f, members)
    return _stable_ok(attack_tables(f), pack(members))


def is_admissible(f: Framework, candidate: Iterable[int]) -> bool:
    """Does the conflict-free candidate strike back at each of its attackers?"""
    members = checked_argset(f, candidate)
    _require_conflict_free(f, members)
    return _admissible_ok(attack_tables(f), pack(members))


def is_complete(f: Framework, candidate: Iterable[int]) -> bool:
    """Does the admissible candidate already contain everything it defends?"""
    members = checked_argset(f, candidate)
    _require_conflict_free(f, members)
    tables = attack_tables(f)
    mask = pack(members)
    if not _admissible_ok(tables, mask):
        raise PreconditionError("candidate set is not admissible")
    return _complete_ok(tables, mask)


def stable_on_norm_form(nf: NormForm) -> bool:
    """Stable iff the undefeated zone is empty."""
    return nf.q == 0


def admissible_on_norm_form(nf: NormForm) -> bool:
    """Admissible iff the undefeated x members block is all zero."""
    member_zone = (1 << nf.k) - 1
    rows = nf.matrix.rows
    return all(rows[r] & member_zone == 0 for r in range(nf.k, nf.k + nf.q))


def complete_on_norm_form(nf: NormForm) -> bool:
    """Complete iff admissible and no column of the undefeated square block is zero."""
    if not admissible_on_norm_form(nf):
        return False
    rows = nf.matrix.rows
    span = range(nf.k, nf.k + nf.q)
    return all(any((rows[r] >> t) & 1 for r in span) for t in span)


def range_of(f: Framework, candidate: Iterable[int]) -> ArgSet:
    """The candidate set plus every argument it attacks."""
    members = checked_argset(f, candidate)
    tables = attack_tables(f)
    mask = pack(members)
    for a in members:
        mask |= tables.targets[a]
    return unpack(mask)


def compute_family(f: Framework, tag: Semantics | str) -> ExtensionFamily:
    """All extensions under a core tag (cf, st, ad, co), by filtering the
    conflict-free enumeration through the matrix criterion."""
    tag = Semantics(tag)
    if tag not in CORE_SEMANTICS:
        raise ValueError(f"{tag.value} is a derived semantics; use compute_derived")
    tables = attack_tables(f)
    keep = []
    for s in iter_conflict_free(f):
        mask = pack(s)
        if tag is Semantics.CONFLICT_FREE:
            keep.append(s)
        elif tag is Semantics.STABLE:
            if _stable_ok(tables, mask):
                keep.append(s)
        elif tag is Semantics.ADMISSIBLE:
            if _admissible_ok(tables, mask):
                keep.append(s)
        else:
            if _admissible_ok(tables, mask) and _complete_ok(tables, mask):
                keep.append(s)
    return ExtensionFamily(tag, frozenset(keep))


def _admissible_masks(f: Framework) -> list[int]:
    tables = attack_tables(f)
    return [
        mask
        for s in iter_conflict_free(f)
        if _admissible_ok(tables, mask := pack(s))
    ]


def _maximal(masks: list[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(masks, key=lambda x: x.bit_count(), reverse=True):
        if not any(m & ~kept == 0 for kept in out):
            out.append(m)
    return out


def _minimal(masks: list[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(masks, key=lambda x: x.bit_count()):
        if not any(kept & ~m == 0 for kept in out):
            out.append(m)
    return out


def _largest_inside(masks: list[int], fence: int, what: str) -> list[int]:
    """The unique inclusion-maximal mask among ``masks`` confined to ``fence``."""
    inside = [m for m in masks if m & ~fence == 0]
    top = _maximal(inside)
    if len(top) != 1:
        raise InternalInvariantError(f"{what}: expected a unique maximal set, got {len(top)}")
    return top


def _range_maximal(tables: AttackTables, masks: list[int]) -> list[int]:
    """The masks whose range is not a proper subset of another's range."""
    reach = {m: _range_mask(tables, m) for m in masks}
    ranges = list(reach.values())
    return [
        m
        for m in masks
        if not any(reach[m] != r and reach[m] & ~r == 0 for r in ranges)
    ]


def compute_derived(f: Framework, tag: Semantics | str) -> ExtensionFamily:
    """All extensions under a derived tag (pr, gr, id, sst, eg), by set
    comparison over the admissible / complete families."""
    tag = Semantics(tag)
    if tag not in DERIVED_SEMANTICS:
        raise ValueError(f"{tag.value} is a core semantics; use compute_family")
    tables = attack_tables(f)
    admissible = _admissible_masks(f)

    if tag is Semantics.PREFERRED:
        chosen = _maximal(admissible)
    elif tag is Semantics.GROUNDED:
        complete = [m for m in admissible if _complete_ok(tables, m)]
        chosen = _minimal(complete)
        if len(chosen) != 1:
            raise InternalInvariantError(
                f"grounded: expected a unique minimal complete set, got {len(chosen)}"
            )
    elif tag is Semantics.SEMI_STABLE:
        chosen = _range_maximal(tables, admissible)
    elif tag is Semantics.IDEAL:
        fence = tables.full
        for m in _maximal(admissible):
            fence &= m
        chosen = _largest_inside(admissible, fence, "ideal")
    else:  # EAGER
        fence = tables.full
        for m in _range_maximal(tables, admissible):
            fence &= m
        chosen = _largest_inside(admissible, fence, "eager")

    return ExtensionFamily(tag, frozenset(unpack(m) for m in chosen))


def _range_mask(tables: AttackTables, mask: int) -> int:
    reach = mask
    rest = mask
    while rest:
        low = rest & -rest
        reach |= tables.targets[low.bit_length()]
        rest ^= low
    return reach


def extensions(f: Framework, tag: Semantics | str) -> ExtensionFamily:
    """All extensions under any supported tag."""
    tag = Semantics(tag)
    if tag in CORE_SEMANTICS:
        return compute_family(f, tag)
    return compute_derived(f, tag)


def _as_target(f: Framework, target: int | Iterable[int]) -> ArgSet:
    if isinstance(target, int):
        target = (target,)
    return checked_argset(f, target)


def _extension_attacks(f: Framework, extension: ArgSet, target: ArgSet) -> bool:
    """An extension attacks a set iff some member attacks some target member."""
    return any((e, a) in f.attacks for e in extension for a in target)


def some_extension(f: Framework, tag: Semantics | str) -> ArgSet | None:
    """The first extension in family order, or None when there is none."""
    ordered = extensions(f, tag).ordered()
    return ordered[0] if ordered else None


def credulously_accepted(f: Framework, tag: Semantics | str, target: int | Iterable[int]) -> bool:
    """Is the target contained in at least one extension?"""
    t = set(_as_target(f, target))
    return any(t <= set(e) for e in extensions(f, tag).sets)


def skeptically_accepted(f: Framework, tag: Semantics | str, target: int | Iterable[int]) -> bool:
    """Is the target contained in every extension? Vacuously true when the
    family is empty."""
    t = set(_as_target(f, target))
    return all(t <= set(e) for e in extensions(f, tag).sets)


def attacked_by_some(f: Framework, tag: Semantics | str, target: int | Iterable[int]) -> bool:
    """Does at least one extension attack the target?"""
    t = _as_target(f, target)
    return any(_extension_attacks(f, e, t) for e in extensions(f, tag).sets)


def attacked_by_all(f: Framework, tag: Semantics | str, target: int | Iterable[int]) -> bool:
    """Does every extension attack the target? Vacuously true when the
    family is empty."""
    t = _as_target(f, target)
    return all(_extension_attacks(f, e, t) for e in extensions(f, tag).sets)


def extensions_containing(f: Framework, tag: Semantics | str, target: int | Iterable[int]) -> list[ArgSet]:
    t = set(_as_target(f, target))
    return [e for e in extensions(f, tag).ordered() if t <= set(e)]


def extensions_attacking(f: Framework, tag: Semantics | str, target: int | Iterable[int]) -> list[ArgSet]:
    t = _as_target(f, target)
    return [e for e in extensions(f, tag).ordered() if _extension_attacks(f, e, t)]


def query(
    f: Framework,
    question: str,
    tag: Semantics | str,
    target: int | Iterable[int] | None = None,
):
    """Answer one catalogue question about the extensions of ``f``.

    Global questions: ``exists`` (is the family non-empty), ``SE`` (one
    extension or None), ``EE`` (all extensions, ordered). Local questions
    about a target argument or set: ``DC`` / ``DS`` (contained in some /
    all extensions), ``AC`` / ``AS`` (attacked by some / all extensions),
    ``SE-containing`` / ``EE-containing`` and ``SE-attacking`` /
    ``EE-attacking`` (witness or list thereof). The universally
    quantified answers are vacuously true for an empty family.
    """
    tag = Semantics(tag)
    if question == "exists":
        return len(extensions(f, tag)) > 0
    if question == "SE":
        return some_extension(f, tag)
    if question == "EE":
        return extensions(f, tag).ordered()
    if target is None:
        raise ValueError(f"question {question!r} needs a target argument or set")
    if question == "DC":
        return credulously_accepted(f, tag, target)
    if question == "DS":
        return skeptically_accepted(f, tag, target)
    if question == "AC":
        return attacked_by_some(f, tag, target)
    if question == "AS":
        return attacked_by_all(f, tag, target)
    if question == "EE-containing":
        return extensions_containing(f, tag, target)
    if question == "SE-containing":
        found = extensions_containing(f, tag, target)
        return found[0] if found else None
    if question == "EE-attacking":
        return extensions_attacking(f, tag, target)
    if question == "SE-attacking":
        found = extensions_attacking(f, tag, target)
        return found[0] if found else None
    raise ValueError(f"unknown question {question!r}")

"""Consequent-keyed rule clusters and greedy cover-based representatives.

A cluster's cover is the union of its members' rule covers. The greedy
loop repeatedly takes the rule with the largest residual cover, subtracts
that rule's original cover from the remaining cluster cover and from every
residual, and stops once the remaining cover (or the best candidate's
residual) drops to the threshold share of the original cover size.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .dataset import Item
from .mining import AssociationRule, exact_fraction
from .tidset import TidSet

ClusterKey = Item | tuple[Item, ...]


class ClusterMode(enum.Enum):
    BY_ITEM = "by_item"
    BY_EXACT_CONSEQUENT = "by_exact_consequent"


def _key_sort(key: ClusterKey):
    if isinstance(key, Item):
        return ((key.attribute_index, key.value_index),)
    return tuple((it.attribute_index, it.value_index) for it in key)


def key_label(key: ClusterKey) -> str:
    if isinstance(key, Item):
        return key.label
    return "^".join(it.label for it in key)


@dataclass(frozen=True)
class Cluster:
    """Rules sharing a consequent key, with their combined record cover."""

    key: ClusterKey
    member_rule_indices: tuple[int, ...]
    cover: TidSet


@dataclass(frozen=True)
class RepresentativeSet:
    """Greedy selection result for one cluster.

    `selections` holds (mining_index, marginal_gain) in pick order;
    `threshold_count` is the residual size at or below which the loop
    stops (floor of threshold * cover_size).
    """

    selections: tuple[tuple[int, int], ...]
    residual_uncovered: int
    threshold_count: int
    cover_size: int

    @property
    def rule_indices(self) -> tuple[int, ...]:
        return tuple(idx for idx, _ in self.selections)

    @property
    def covered(self) -> int:
        return self.cover_size - self.residual_uncovered

    @property
    def exited_via_threshold(self) -> bool:
        # False means the loop quit because the best candidate was too small
        return self.residual_uncovered <= self.threshold_count


def cluster_rules(rules: Sequence[AssociationRule],
                  mode: ClusterMode = ClusterMode.BY_ITEM) -> list[Cluster]:
    """Group rules by consequent.

    BY_ITEM keys on each consequent item, so a rule with a j-item
    consequent joins j clusters; BY_EXACT_CONSEQUENT keys on the whole
    consequent itemset. Clusters come back in deterministic key order.
    """
    if not rules:
        raise ValueError("cannot cluster an empty rule list")
    groups: dict[ClusterKey, list[AssociationRule]] = {}
    for r in rules:
        if mode is ClusterMode.BY_ITEM:
            for item in r.consequent:
                groups.setdefault(item, []).append(r)
        else:
            groups.setdefault(r.consequent, []).append(r)

    clusters = []
    for key in sorted(groups, key=_key_sort):
        members = groups[key]
        cover = reduce(lambda acc, r: acc | r.cover_xy, members, TidSet.empty())
        indices = tuple(sorted(r.mining_index for r in members))
        clusters.append(Cluster(key=key, member_rule_indices=indices, cover=cover))
    return clusters


def cluster_cover(c: Cluster, rules: Sequence[AssociationRule]) -> TidSet:
    """Union of the members' rule covers, recomputed from the rules."""
    by_index = {r.mining_index: r for r in rules}
    return reduce(lambda acc, i: acc | by_index[i].cover_xy, c.member_rule_indices,
                  TidSet.empty())


def select_representatives(c: Cluster, rules: Sequence[AssociationRule],
                           threshold: float = 0.02) -> RepresentativeSet:
    """Greedy cover selection over one cluster.

    Candidate order: largest residual cover first, ties by confidence
    descending, support descending, mining index ascending. A candidate
    whose residual has shrunk to the threshold share ends the loop, so
    zero-gain picks cannot happen.
    """
    thr = exact_fraction(threshold)
    if not 0 <= thr < 1:
        raise ValueError(f"threshold must be in [0, 1), got {threshold}")
    by_index = {r.mining_index: r for r in rules}
    try:
        members = [by_index[i] for i in c.member_rule_indices]
    except KeyError as exc:
        raise ValueError(f"cluster references a rule not in the list: {exc}") from exc

    remaining = c.cover
    size = len(remaining)
    stop_bound = math.floor(thr * size)  # |C_y| > thr*S  <=>  |C_y| > floor(thr*S)

    residual = {r.mining_index: r.cover_xy for r in members}
    chosen: set[int] = set()
    selections: list[tuple[int, int]] = []

    def candidate_key(r: AssociationRule):
        return (
            len(residual[r.mining_index]),
            Fraction(len(r.cover_xy), len(r.cover_x)),
            len(r.cover_xy),
            -r.mining_index,
        )

    while len(remaining) > stop_bound:
        pool = [r for r in members if r.mining_index not in chosen]
        if not pool:
            break
        best = max(pool, key=candidate_key)
        gain = len(residual[best.mining_index])
        if gain <= stop_bound:
            break
        selections.append((best.mining_index, gain))
        chosen.add(best.mining_index)
        remaining = remaining - best.cover_xy
        for r in pool:
            if r.mining_index not in chosen:
                residual[r.mining_index] = residual[r.mining_index] - best.cover_xy

    return RepresentativeSet(
        selections=tuple(selections),
        residual_uncovered=len(remaining),
        threshold_count=stop_bound,
        cover_size=size,
    )


def format_cover_report(clusters: Sequence[Cluster],
                        representatives: Sequence[RepresentativeSet],
                        rules: Sequence[AssociationRule]) -> str:
    """Per-cluster text report: key, members, cover, picks with gains."""
    by_index = {r.mining_index: r for r in rules}
    lines = []
    for c, reps in zip(clusters, representatives):
        lines.append(
            f"cluster {key_label(c.key)}  members={len(c.member_rule_indices)}"
            f"  cover={len(c.cover)}"
        )
        for pos, (idx, gain) in enumerate(reps.selections, start=1):
            lines.append(f"  {pos}. R{idx} {by_index[idx].label()}  gain={gain}")
        lines.append(f"  residual={reps.residual_uncovered}")
    return "\n".join(lines) + "\n"

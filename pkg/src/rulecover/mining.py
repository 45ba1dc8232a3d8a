"""Apriori over tidsets: frequent itemsets and association rules.

The miner is vertical: every itemset keeps its exact record cover, computed
by intersecting member tidsets, so the cover algebra needed downstream by
the cluster-cover machinery comes for free.

Thresholds given as floats are interpreted through their decimal literal
(0.7 means exactly 7/10), so support counts and confidence cuts are exact:
a 3-of-14 itemset passes min_support 0.2 because ceil(14/5) = 3, and a
6-of-8 rule passes min_confidence 0.75.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .dataset import Dataset, Item
from .tidset import TidSet


def exact_fraction(x: float | int | str | Fraction) -> Fraction:
    """Exact rational value of a threshold, honoring decimal intent of floats."""
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


def support_count(min_support: float | Fraction, n_records: int) -> int:
    """Minimum absolute cover size for a fractional support threshold."""
    frac = exact_fraction(min_support)
    if not 0 < frac <= 1:
        raise ValueError(f"min_support must be in (0, 1], got {min_support}")
    return math.ceil(frac * n_records)


@dataclass(frozen=True)
class MiningConfig:
    min_support: float = 0.3
    min_confidence: float = 0.8

    def __post_init__(self):
        if not 0 < exact_fraction(self.min_support) <= 1:
            raise ValueError(f"min_support must be in (0, 1], got {self.min_support}")
        if not 0 < exact_fraction(self.min_confidence) <= 1:
            raise ValueError(f"min_confidence must be in (0, 1], got {self.min_confidence}")


@dataclass(frozen=True)
class FrequentItemset:
    itemset: tuple[Item, ...]
    cover: TidSet

    def __len__(self) -> int:
        return len(self.itemset)


@dataclass(frozen=True)
class AssociationRule:
    """X -> Y with the exact record covers of X, XY and Y.

    `mining_index` is the stable 1-based rule number assigned at
    generation (confidence desc, support desc, then lexicographic).
    """

    antecedent: tuple[Item, ...]
    consequent: tuple[Item, ...]
    cover_x: TidSet
    cover_xy: TidSet
    cover_y: TidSet
    mining_index: int

    @property
    def confidence(self) -> float:
        return len(self.cover_xy) / len(self.cover_x)

    @property
    def confidence_exact(self) -> Fraction:
        return Fraction(len(self.cover_xy), len(self.cover_x))

    def label(self) -> str:
        ant = " ^ ".join(it.label for it in self.antecedent)
        cons = " ^ ".join(it.label for it in self.consequent)
        return f"{ant} => {cons}"

    def __repr__(self) -> str:
        return f"AssociationRule(R{self.mining_index}: {self.label()})"


def rule_stats(r: AssociationRule, n: int) -> tuple[float, float]:
    """(support, confidence) of a mined rule over an n-record dataset."""
    if len(r.cover_x) == 0:
        raise AssertionError("mined rule with empty antecedent cover")
    return len(r.cover_xy) / n, len(r.cover_xy) / len(r.cover_x)


def percent(fraction: float) -> int:
    """Nearest-integer percentage, as printed in reports."""
    return int(round(100 * fraction))


def frequent_itemsets(d: Dataset, min_support: float) -> list[FrequentItemset]:
    """All itemsets whose cover meets the support threshold.

    Level-wise candidate generation; covers come from tidset
    intersections. Output is sorted by (size, item ids). Itemsets never
    combine two values of one attribute: their covers are empty.
    """
    min_count = support_count(min_support, d.n_records)
    items = d.item_catalog()
    attr_of = [it.attribute_index for it in items]

    level: dict[tuple[int, ...], TidSet] = {}
    for gid in range(len(items)):
        cover = d._tidsets[gid]
        if len(cover) >= min_count:
            level[(gid,)] = cover
    frequent: dict[tuple[int, ...], TidSet] = dict(level)

    while level:
        next_level: dict[tuple[int, ...], TidSet] = {}
        groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for key in sorted(level):
            groups[key[:-1]].append(key[-1])
        for prefix, lasts in groups.items():
            for i, a in enumerate(lasts):
                for b in lasts[i + 1:]:
                    if attr_of[a] == attr_of[b]:
                        continue
                    cand = prefix + (a, b)
                    if prefix and any(
                        cand[:m] + cand[m + 1:] not in level for m in range(len(prefix))
                    ):
                        continue
                    cover = level[prefix + (a,)] & level[prefix + (b,)]
                    if len(cover) >= min_count:
                        next_level[cand] = cover
        frequent.update(next_level)
        level = next_level

    return [
        FrequentItemset(tuple(items[g] for g in key), cover)
        for key, cover in sorted(frequent.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]


def generate_rules(frequents: Sequence[FrequentItemset], d: Dataset,
                   min_confidence: float) -> list[AssociationRule]:
    """Every ordered partition X => Y of a frequent itemset passing the
    confidence threshold, multi-item consequents included.

    Rules are numbered by descending confidence, then descending support,
    then antecedent/consequent order, so the numbering is stable.
    """
    conf_min = exact_fraction(min_confidence)
    if not 0 < conf_min <= 1:
        raise ValueError(f"min_confidence must be in (0, 1], got {min_confidence}")
    cover_of = {fi.itemset: fi.cover for fi in frequents}

    raw: list[tuple[tuple[Item, ...], tuple[Item, ...], TidSet, TidSet, TidSet]] = []
    for fi in frequents:
        if len(fi.itemset) < 2:
            continue
        z_cover = fi.cover
        nz = len(z_cover)
        for r in range(1, len(fi.itemset)):
            for ant in combinations(fi.itemset, r):
                x_cover = cover_of[ant]
                if Fraction(nz, len(x_cover)) >= conf_min:
                    cons = tuple(it for it in fi.itemset if it not in ant)
                    raw.append((ant, cons, x_cover, z_cover, cover_of[cons]))

    def order(entry):
        ant, cons, x_cover, z_cover, _ = entry
        return (
            -Fraction(len(z_cover), len(x_cover)),
            -len(z_cover),
            tuple((it.attribute_index, it.value_index) for it in ant),
            tuple((it.attribute_index, it.value_index) for it in cons),
        )

    raw.sort(key=order)
    return [
        AssociationRule(ant, cons, x_cover, z_cover, y_cover, idx)
        for idx, (ant, cons, x_cover, z_cover, y_cover) in enumerate(raw, start=1)
    ]


@dataclass(frozen=True)
class MinedRules:
    """A rule set plus the dataset context needed to use it standalone."""

    attribute_names: tuple[str, ...]
    value_catalog: tuple[tuple[str, ...], ...]
    n_records: int
    min_support: float
    min_confidence: float
    rules: tuple[AssociationRule, ...]


def mine(d: Dataset, config: MiningConfig = MiningConfig()) -> MinedRules:
    """Frequent itemsets plus rules in one call."""
    frequents = frequent_itemsets(d, config.min_support)
    rules = generate_rules(frequents, d, config.min_confidence)
    return MinedRules(
        attribute_names=d.attribute_names,
        value_catalog=d.value_catalog,
        n_records=d.n_records,
        min_support=config.min_support,
        min_confidence=config.min_confidence,
        rules=tuple(rules),
    )

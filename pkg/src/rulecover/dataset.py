"""Nominal tabular data: ingestion, attribute=value items, per-item tidsets.

Record ids are 1-based on every external surface. Missing cells produce no
item, so they never support a rule. Value catalogs keep first-occurrence
order, which pins item ids across runs.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np

from .tidset import TidSet


class IngestionError(ValueError):
    """Raised for malformed input tables."""


@dataclass(frozen=True, order=True)
class Item:
    """One attribute=value pair; ordering follows catalog position."""

    attribute_index: int
    value_index: int
    attribute: str
    value: str

    @property
    def label(self) -> str:
        return f"{self.attribute}={self.value}"

    def __repr__(self) -> str:
        return f"Item({self.label})"


@dataclass(frozen=True)
class IngestConfig:
    delimiter: str = ","
    missing_token: str = "?"
    has_header: bool = True

    def __post_init__(self):
        if len(self.delimiter) != 1:
            raise ValueError("delimiter must be a single character")


class Dataset:
    """Encoded nominal records plus the tidset of every catalog item."""

    def __init__(self, attribute_names: Sequence[str], rows: Iterable[Sequence[str | None]]):
        self.attribute_names: tuple[str, ...] = tuple(attribute_names)
        n_attrs = len(self.attribute_names)
        catalogs: list[list[str]] = [[] for _ in range(n_attrs)]
        value_ids: list[dict[str, int]] = [{} for _ in range(n_attrs)]
        encoded: list[tuple[tuple[int, int], ...]] = []
        for row in rows:
            if len(row) != n_attrs:
                raise IngestionError(
                    f"row {len(encoded) + 1} has {len(row)} cells, expected {n_attrs}"
                )
            rec = []
            for a, cell in enumerate(row):
                if cell is None:
                    continue
                vid = value_ids[a].get(cell)
                if vid is None:
                    vid = len(catalogs[a])
                    catalogs[a].append(cell)
                    value_ids[a][cell] = vid
                rec.append((a, vid))
            encoded.append(tuple(rec))
        if not encoded:
            raise IngestionError("no data rows")

        self.value_catalog: tuple[tuple[str, ...], ...] = tuple(tuple(c) for c in catalogs)
        self.n_records: int = len(encoded)

        # global item ids in (attribute, first-occurrence value) order
        self._items: list[Item] = []
        self._gid: dict[tuple[int, int], int] = {}
        for a, name in enumerate(self.attribute_names):
            for v, value in enumerate(self.value_catalog[a]):
                self._gid[(a, v)] = len(self._items)
                self._items.append(Item(a, v, name, value))

        self.records: tuple[tuple[int, ...], ...] = tuple(
            tuple(self._gid[pair] for pair in rec) for rec in encoded
        )

        tids: list[list[int]] = [[] for _ in self._items]
        for rid, rec in enumerate(self.records, start=1):
            for gid in rec:
                tids[gid].append(rid)
        self._tidsets: tuple[TidSet, ...] = tuple(
            TidSet._wrap(np.asarray(t, dtype=np.uint32)) for t in tids
        )

    # -- item access -------------------------------------------------

    def item_catalog(self) -> list[Item]:
        return list(self._items)

    def item_id(self, item: Item) -> int:
        gid = self._gid.get((item.attribute_index, item.value_index))
        if gid is None or self._items[gid] != item:
            raise KeyError(f"unknown item {item!r}")
        return gid

    def item(self, label: str) -> Item:
        """Look an item up by its "attribute=value" label."""
        attr, sep, value = label.partition("=")
        if not sep:
            raise KeyError(f"not an attribute=value label: {label!r}")
        for it in self._items:
            if it.attribute == attr and it.value == value:
                return it
        raise KeyError(f"unknown item {label!r}")

    def tidset_of_item(self, item: Item) -> TidSet:
        return self._tidsets[self.item_id(item)]


def item_catalog(d: Dataset) -> list[Item]:
    """All distinct attribute=value items in deterministic catalog order."""
    return d.item_catalog()


def tidset_of_item(d: Dataset, item: Item) -> TidSet:
    """Exactly the 1-based ids of records containing the item."""
    return d.tidset_of_item(item)


def load_table(source: TextIO | str | Path, config: IngestConfig = IngestConfig()) -> Dataset:
    """Load a delimited nominal table into a Dataset.

    `source` is a path or an open text stream. Cells equal to the
    configured missing token yield no item for that attribute.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return load_table(fh, config)

    reader = csv.reader(source, delimiter=config.delimiter)
    rows = [row for row in reader if row]
    if not rows:
        raise IngestionError("empty input")
    if config.has_header:
        header, data = [c.strip() for c in rows[0]], rows[1:]
    else:
        header, data = [f"col{i + 1}" for i in range(len(rows[0]))], rows
    if not data:
        raise IngestionError("no data rows")

    def decode(row):
        return [None if (c := cell.strip()) == config.missing_token else c for cell in row]

    return Dataset(header, (decode(row) for row in data))


def write_csv(d: Dataset, target: TextIO | str | Path, delimiter: str = ",",
              missing_token: str = "?") -> None:
    """Write a Dataset back out as delimited text (header included)."""
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8", newline="") as fh:
            write_csv(d, fh, delimiter, missing_token)
        return
    writer = csv.writer(target, delimiter=delimiter, lineterminator="\n")
    writer.writerow(d.attribute_names)
    items = d.item_catalog()
    for rec in d.records:
        cells = [missing_token] * len(d.attribute_names)
        for gid in rec:
            it = items[gid]
            cells[it.attribute_index] = it.value
        writer.writerow(cells)


def generate_synthetic(n_records: int, n_attributes: int,
                       values_per_attribute: int | tuple[int, int] = (2, 4),
                       seed: int = 0) -> Dataset:
    """Seeded random nominal dataset at a controllable scale.

    Per-attribute categorical distributions are skewed so that 20-30%
    support thresholds keep frequent itemsets around, and a small slice
    of attributes gets a near-dominant value so high-confidence rules
    survive mining at an 80% confidence threshold. Identical arguments
    always produce the identical dataset.
    """
    if n_records < 1 or n_attributes < 1:
        raise ValueError("n_records and n_attributes must be >= 1")
    if isinstance(values_per_attribute, int):
        lo = hi = values_per_attribute
    else:
        lo, hi = values_per_attribute
    if not (1 <= lo <= hi):
        raise ValueError("values_per_attribute must be >= 1 with lo <= hi")

    rng = np.random.default_rng(seed)
    width = len(str(n_attributes))
    names = [f"A{i + 1:0{width}d}" for i in range(n_attributes)]

    n_heavy = max(1, n_attributes // 12)
    heavy = set(rng.choice(n_attributes, size=n_heavy, replace=False).tolist())

    columns = []
    for a in range(n_attributes):
        v = int(rng.integers(lo, hi + 1))
        if v == 1:
            probs = np.array([1.0])
        else:
            if a in heavy:
                p0 = rng.uniform(0.84, 0.93)
            else:
                p0 = rng.uniform(0.45, 0.62)
            rest = 1.0 / np.arange(1, v, dtype=float) ** 1.5
            rest *= (1.0 - p0) / rest.sum()
            probs = np.concatenate(([p0], rest))
        columns.append(rng.choice(v, size=n_records, p=probs))

    rows = (
        [f"v{int(columns[a][r]) + 1}" for a in range(n_attributes)]
        for r in range(n_records)
    )
    return Dataset(names, rows)


def dump_items(d: Dataset) -> str:
    """Debug listing: item id, attribute=value, tidset cardinality."""
    lines = [
        f"{gid + 1}\t{it.label}\t{len(d._tidsets[gid])}"
        for gid, it in enumerate(d.item_catalog())
    ]
    return "\n".join(lines) + "\n"


def dataset_from_text(text: str, config: IngestConfig = IngestConfig()) -> Dataset:
    """Convenience wrapper: load a table from an in-memory string."""
    return load_table(io.StringIO(text), config)

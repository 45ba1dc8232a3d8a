"""Line-delimited JSON rule files.

First line is a header object carrying the dataset context (record count,
thresholds, attribute/value catalog); each following line is one rule with
items referenced as [attribute_index, value_index] pairs. The format
round-trips losslessly, and is self-contained enough that measure
evaluation and cover extraction can run from a rule file alone.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO

from .dataset import Item
from .mining import AssociationRule, MinedRules
from .tidset import TidSet

_FORMAT = "rulecover-rules"
_VERSION = 1


class RuleFileError(ValueError):
    """Raised for malformed or inconsistent rule files."""


def write_rules(mined: MinedRules, target: TextIO | str | Path) -> None:
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            write_rules(mined, fh)
        return
    header = {
        "format": _FORMAT,
        "version": _VERSION,
        "n_records": mined.n_records,
        "min_support": mined.min_support,
        "min_confidence": mined.min_confidence,
        "attributes": list(mined.attribute_names),
        "values": [list(vals) for vals in mined.value_catalog],
    }
    target.write(json.dumps(header) + "\n")
    n = mined.n_records
    for r in mined.rules:
        record = {
            "index": r.mining_index,
            "antecedent": [[it.attribute_index, it.value_index] for it in r.antecedent],
            "consequent": [[it.attribute_index, it.value_index] for it in r.consequent],
            "cover_x": list(r.cover_x.ids),
            "cover_xy": list(r.cover_xy.ids),
            "cover_y": list(r.cover_y.ids),
            "support": len(r.cover_xy) / n,
            "confidence": len(r.cover_xy) / len(r.cover_x),
        }
        target.write(json.dumps(record) + "\n")


def read_rules(source: TextIO | str | Path) -> MinedRules:
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            return read_rules(fh)

    lines = [line for line in source.read().splitlines() if line.strip()]
    if not lines:
        raise RuleFileError("empty rule file")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise RuleFileError(f"bad rule file header: {exc}") from exc
    if not isinstance(header, dict) or header.get("format") != _FORMAT:
        raise RuleFileError("not a rulecover rule file")

    attributes = [str(a) for a in header["attributes"]]
    values = [[str(v) for v in vals] for vals in header["values"]]
    n = int(header["n_records"])

    def make_items(pairs) -> tuple[Item, ...]:
        out = []
        for a, v in pairs:
            if not (0 <= a < len(attributes)) or not (0 <= v < len(values[a])):
                raise RuleFileError(f"item reference [{a}, {v}] outside the catalog")
            out.append(Item(a, v, attributes[a], values[a][v]))
        return tuple(out)

    def make_tidset(ids) -> TidSet:
        ts = TidSet(ids)
        if len(ts) != len(ids) or (len(ts) and max(ids) > n):
            raise RuleFileError("cover ids must be unique and within 1..n_records")
        return ts

    rules = []
    for line in lines[1:]:
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise RuleFileError(f"bad rule record: {exc}") from exc
        cover_x = make_tidset(rec["cover_x"])
        cover_xy = make_tidset(rec["cover_xy"])
        cover_y = make_tidset(rec["cover_y"])
        if not cover_xy.issubset(cover_x) or not cover_xy.issubset(cover_y):
            raise RuleFileError(f"rule {rec.get('index')}: cover_xy is not nested in its covers")
        rules.append(
            AssociationRule(
                antecedent=make_items(rec["antecedent"]),
                consequent=make_items(rec["consequent"]),
                cover_x=cover_x,
                cover_xy=cover_xy,
                cover_y=cover_y,
                mining_index=int(rec["index"]),
            )
        )

    return MinedRules(
        attribute_names=tuple(attributes),
        value_catalog=tuple(tuple(v) for v in values),
        n_records=n,
        min_support=float(header["min_support"]),
        min_confidence=float(header["min_confidence"]),
        rules=tuple(rules),
    )

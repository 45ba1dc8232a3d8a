"""The pruning experiment: baseline representatives from all rules,
measure-ranked top-k pruning, re-derived representatives, and the
Cluster/Common comparison, reported as CSV files and a markdown summary.

"Common" counts representative rules shared by identity (mining index,
i.e. exact antecedent+consequent), per cluster key, against the
all-rules baseline.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .cover import (Cluster, ClusterKey, ClusterMode, RepresentativeSet,
                    _key_sort, cluster_rules, key_label, select_representatives)
from .dataset import Dataset
from .measures import MEASURES, top_k, write_measures_csv
from .mining import AssociationRule, MinedRules, MiningConfig, mine


@dataclass(frozen=True)
class BaselineResult:
    """Representatives per cluster key, derived from the complete rule set."""

    mode: ClusterMode
    threshold: float
    clusters: tuple[Cluster, ...]
    representatives: dict[ClusterKey, RepresentativeSet]


@dataclass(frozen=True)
class PrunedResult:
    """Representatives per cluster key, derived from the top-k rules only."""

    measure: str
    k: int | float
    mode: ClusterMode
    threshold: float
    clusters: tuple[Cluster, ...]
    representatives: dict[ClusterKey, RepresentativeSet]


@dataclass(frozen=True)
class ComparisonRow:
    """Per-cluster (cluster, common) representative counts for one measure."""

    measure: str
    entries: tuple[tuple[ClusterKey, int, int], ...]

    @property
    def total_cluster(self) -> int:
        return sum(c for _, c, _ in self.entries)

    @property
    def total_common(self) -> int:
        return sum(c for _, _, c in self.entries)

    def counts(self) -> dict[ClusterKey, tuple[int, int]]:
        return {key: (cl, co) for key, cl, co in self.entries}


@dataclass(frozen=True)
class ExperimentReport:
    baseline: BaselineResult
    rows: tuple[ComparisonRow, ...]
    metadata: dict = field(default_factory=dict)

    def baseline_counts(self) -> list[tuple[ClusterKey, int]]:
        return [
            (c.key, len(self.baseline.representatives[c.key].selections))
            for c in self.baseline.clusters
        ]


def _extract(rules: Sequence[AssociationRule], mode: ClusterMode,
             threshold: float) -> tuple[tuple[Cluster, ...], dict[ClusterKey, RepresentativeSet]]:
    clusters = tuple(cluster_rules(rules, mode))
    reps = {c.key: select_representatives(c, rules, threshold) for c in clusters}
    return clusters, reps


def baseline_representatives(rules: Sequence[AssociationRule],
                             mode: ClusterMode = ClusterMode.BY_ITEM,
                             threshold: float = 0.02) -> BaselineResult:
    if not rules:
        raise ValueError("cannot build a baseline from zero rules")
    clusters, reps = _extract(rules, mode, threshold)
    return BaselineResult(mode=mode, threshold=threshold, clusters=clusters,
                          representatives=reps)


def pruned_representatives(rules: Sequence[AssociationRule], measure: str,
                           k: int | float, mode: ClusterMode, threshold: float,
                           n: int) -> PrunedResult:
    kept = top_k(rules, measure, k, n)
    clusters, reps = _extract(kept, mode, threshold)
    return PrunedResult(measure=measure, k=k, mode=mode, threshold=threshold,
                        clusters=clusters, representatives=reps)


def compare(b: BaselineResult, p: PrunedResult) -> ComparisonRow:
    """Per baseline key: how many representatives the pruned run found, and
    how many coincide with the baseline's. Keys only the pruned run has are
    appended with common = 0.
    """
    if b.mode is not p.mode:
        raise ValueError(f"cluster mode mismatch: {b.mode} vs {p.mode}")
    if b.threshold != p.threshold:
        raise ValueError(f"cover threshold mismatch: {b.threshold} vs {p.threshold}")

    entries: list[tuple[ClusterKey, int, int]] = []
    for c in b.clusters:
        base_set = set(b.representatives[c.key].rule_indices)
        pruned_reps = p.representatives.get(c.key)
        if pruned_reps is None:
            entries.append((c.key, 0, 0))
        else:
            found = set(pruned_reps.rule_indices)
            entries.append((c.key, len(found), len(found & base_set)))
    base_keys = {c.key for c in b.clusters}
    for c in p.clusters:
        if c.key not in base_keys:
            entries.append((c.key, len(p.representatives[c.key].rule_indices), 0))
    return ComparisonRow(measure=p.measure, entries=tuple(entries))


def experiment_from_rules(rules: Sequence[AssociationRule], n_records: int,
                          measures: Sequence[str], k: int | float,
                          mode: ClusterMode = ClusterMode.BY_ITEM,
                          threshold: float = 0.02,
                          metadata: Mapping | None = None) -> ExperimentReport:
    """Baseline once, then one Cluster/Common comparison per measure."""
    for m in measures:
        if m not in MEASURES:
            raise ValueError(f"unknown measure {m!r}")
    baseline = baseline_representatives(rules, mode, threshold)
    rows = tuple(
        compare(baseline,
                pruned_representatives(rules, m, k, mode, threshold, n_records))
        for m in measures
    )
    meta = {
        "cover_threshold": threshold,
        "top_k": k,
        "mode": mode.value,
        "n_records": n_records,
        "n_rules": len(rules),
    }
    if metadata:
        meta.update(metadata)
    return ExperimentReport(baseline=baseline, rows=rows, metadata=meta)


def run_experiment(d: Dataset, cfg: MiningConfig, measures: Sequence[str],
                   k: int | float, mode: ClusterMode = ClusterMode.BY_ITEM,
                   threshold: float = 0.02,
                   metadata: Mapping | None = None) -> ExperimentReport:
    """Mine once, then run the full per-measure comparison."""
    mined = mine(d, cfg)
    if not mined.rules:
        raise ValueError(
            f"mining produced zero rules at min_support={cfg.min_support}, "
            f"min_confidence={cfg.min_confidence}"
        )
    meta = {"min_support": cfg.min_support, "min_confidence": cfg.min_confidence}
    if metadata:
        meta.update(metadata)
    return experiment_from_rules(mined.rules, d.n_records, measures, k, mode,
                                 threshold, meta)


BASELINE_LABEL = "All-ARs"

APPENDIX_FILE = "appendix.csv"
SUMMARY_FILE = "summary.csv"
FIGURE_CLUSTER_FILE = "figure_by_cluster.csv"
FIGURE_COMMON_FILE = "figure_by_common.csv"
SUMMARY_MD_FILE = "summary.md"


def _column_keys(report: ExperimentReport) -> list[ClusterKey]:
    keys = [c.key for c in report.baseline.clusters]
    seen = set(keys)
    extras = set()
    for row in report.rows:
        for key, _, _ in row.entries:
            if key not in seen:
                extras.add(key)
    return keys + sorted(extras, key=_key_sort)


def emit_report(report: ExperimentReport, directory: str | Path) -> list[Path]:
    """Write appendix, summary, both figure series, and the markdown summary.

    All files are UTF-8 CSV with a header row; counts are integers. Two
    runs on identical inputs produce byte-identical files.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    keys = _column_keys(report)
    labels = [key_label(k) for k in keys]

    appendix = directory / APPENDIX_FILE
    with open(appendix, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["measure", "row", *labels, "total"])
        base_counts = dict(report.baseline_counts())
        base_row = [base_counts.get(k, 0) for k in keys]
        writer.writerow([BASELINE_LABEL, "cluster", *base_row, sum(base_row)])
        for row in report.rows:
            counts = row.counts()
            cluster_cells = [counts.get(k, (0, 0))[0] for k in keys]
            common_cells = [counts.get(k, (0, 0))[1] for k in keys]
            writer.writerow([row.measure, "cluster", *cluster_cells, row.total_cluster])
            writer.writerow([row.measure, "common", *common_cells, row.total_common])

    summary = directory / SUMMARY_FILE
    totals = [(row.measure, row.total_cluster, row.total_common) for row in report.rows]
    baseline_total = sum(n for _, n in report.baseline_counts())
    with open(summary, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["measure", "total_cluster", "total_common"])
        writer.writerow([BASELINE_LABEL, baseline_total, ""])
        for measure, cluster, common in totals:
            writer.writerow([measure, cluster, common])

    def write_figure(path: Path, sort_column: int):
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["measure", "total_cluster", "total_common"])
            for measure, cluster, common in sorted(
                totals, key=lambda t: (-t[sort_column], t[0])
            ):
                writer.writerow([measure, cluster, common])

    figure_cluster = directory / FIGURE_CLUSTER_FILE
    figure_common = directory / FIGURE_COMMON_FILE
    write_figure(figure_cluster, 1)
    write_figure(figure_common, 2)

    summary_md = directory / SUMMARY_MD_FILE
    with open(summary_md, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# Pruning experiment summary\n\n")
        for key in sorted(report.metadata):
            fh.write(f"- {key}: {report.metadata[key]}\n")
        fh.write("\n| measure | total_cluster | total_common |\n")
        fh.write("| --- | --- | --- |\n")
        fh.write(f"| {BASELINE_LABEL} | {baseline_total} | - |\n")
        for measure, cluster, common in totals:
            fh.write(f"| {measure} | {cluster} | {common} |\n")

    return [appendix, summary, figure_cluster, figure_common, summary_md]


def load_appendix(path: str | Path) -> dict[str, dict[str, list[tuple[str, int]]]]:
    """Parse an appendix CSV back into {measure: {row_kind: [(label, count)]}}.

    The trailing total column is checked against the per-cluster counts.
    """
    out: dict[str, dict[str, list[tuple[str, int]]]] = {}
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        labels = header[2:-1]
        for row in reader:
            measure, kind = row[0], row[1]
            counts = [int(c) for c in row[2:-1]]
            if sum(counts) != int(row[-1]):
                raise ValueError(f"appendix total mismatch for {measure}/{kind}")
            out.setdefault(measure, {})[kind] = list(zip(labels, counts))
    return out


def write_intermediates(mined: MinedRules, baseline: BaselineResult,
                        directory: str | Path) -> list[Path]:
    """The artifacts a manual mine -> measures -> cover pipeline would make."""
    from .cover import format_cover_report
    from .rules_io import write_rules

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    rules_path = directory / "rules.jsonl"
    write_rules(mined, rules_path)
    measures_path = directory / "measures.csv"
    write_measures_csv(mined.rules, mined.n_records, list(MEASURES), measures_path)
    cover_path = directory / "cover_baseline.txt"
    reps = [baseline.representatives[c.key] for c in baseline.clusters]
    cover_path.write_text(
        format_cover_report(baseline.clusters, reps, mined.rules), encoding="utf-8"
    )
    return [rules_path, measures_path, cover_path]

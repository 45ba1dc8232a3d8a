import pytest

from rulecover import (ALL_MEASURES, ClusterMode, MiningConfig, baseline_representatives,
                       compare, emit_report, experiment_from_rules, generate_synthetic,
                       load_appendix, mine, pruned_representatives, run_experiment)
from rulecover.cover import key_label
from rulecover.experiment import write_intermediates

from .conftest import find_rule


@pytest.fixture(scope="module")
def weather_report(weather):
    return run_experiment(weather, MiningConfig(0.2, 0.7), list(ALL_MEASURES), 1.0,
                          ClusterMode.BY_ITEM, 0.02)


def test_baseline_play_yes_representatives(weather_rules):
    baseline = baseline_representatives(weather_rules, ClusterMode.BY_ITEM, 0.02)
    yes = [c for c in baseline.clusters if key_label(c.key) == "Play=yes"][0]
    expected = tuple(find_rule(weather_rules, n).mining_index for n in ("R9", "R1", "R7"))
    assert baseline.representatives[yes.key].rule_indices == expected


def test_baseline_totals_are_sums(weather_report):
    counts = weather_report.baseline_counts()
    assert sum(n for _, n in counts) == 10
    assert [n for _, n in counts] == [1, 2, 1, 2, 1, 3]


def test_baseline_requires_rules():
    with pytest.raises(ValueError):
        baseline_representatives([], ClusterMode.BY_ITEM, 0.02)


def test_pruned_top8_by_confidence(weather_rules):
    # keeping only the 100%-confidence rules leaves {R1, R3, R7} in the
    # Play=yes cluster; greedy then picks R1 (4 new), R3 (3 new), R7 (1 new)
    pruned = pruned_representatives(weather_rules, "confidence", 8,
                                    ClusterMode.BY_ITEM, 0.02, 14)
    yes = [c for c in pruned.clusters if key_label(c.key) == "Play=yes"][0]
    members = {
        find_rule(weather_rules, n).mining_index for n in ("R1", "R3", "R7")
    }
    assert set(yes.member_rule_indices) == members
    reps = pruned.representatives[yes.key]
    r1 = find_rule(weather_rules, "R1").mining_index
    r3 = find_rule(weather_rules, "R3").mining_index
    r7 = find_rule(weather_rules, "R7").mining_index
    assert reps.selections == ((r1, 4), (r3, 3), (r7, 1))
    assert sum(g for _, g in reps.selections) == len(yes.cover)


def test_identity_pruning_equals_baseline(weather_rules):
    baseline = baseline_representatives(weather_rules, ClusterMode.BY_ITEM, 0.02)
    for measure in ("confidence", "lift", "specificity_2"):
        pruned = pruned_representatives(weather_rules, measure, 1.0,
                                        ClusterMode.BY_ITEM, 0.02, 14)
        row = compare(baseline, pruned)
        for key, cluster_count, common_count in row.entries:
            base = len(baseline.representatives[key].selections)
            assert cluster_count == common_count == base


def test_compare_missing_cluster_counts_zero(weather_rules):
    baseline = baseline_representatives(weather_rules, ClusterMode.BY_ITEM, 0.02)
    # top-1 keeps a single rule, so most clusters disappear from the pruned run
    pruned = pruned_representatives(weather_rules, "confidence", 1,
                                    ClusterMode.BY_ITEM, 0.02, 14)
    row = compare(baseline, pruned)
    zeros = [(cl, co) for _, cl, co in row.entries if cl == 0]
    assert zeros and all(co == 0 for _, co in zeros)
    assert row.total_cluster == 1


def test_compare_appends_foreign_keys_with_zero_common(weather_rules):
    # a baseline spanning fewer consequents than the pruned run: the pruned
    # run's extra keys must be appended with common = 0
    r15 = find_rule(weather_rules, "R15")
    small_baseline = baseline_representatives([r15], ClusterMode.BY_ITEM, 0.02)
    pruned = pruned_representatives(weather_rules, "confidence", 1.0,
                                    ClusterMode.BY_ITEM, 0.02, 14)
    row = compare(small_baseline, pruned)
    assert row.entries[0][0] == small_baseline.clusters[0].key
    foreign = row.entries[1:]
    assert len(foreign) == len(pruned.clusters) - 1
    for key, cluster_count, common_count in foreign:
        assert cluster_count == len(pruned.representatives[key].selections)
        assert common_count == 0


def test_compare_rejects_mode_mismatch(weather_rules):
    baseline = baseline_representatives(weather_rules, ClusterMode.BY_ITEM, 0.02)
    pruned = pruned_representatives(weather_rules, "lift", 1.0,
                                    ClusterMode.BY_EXACT_CONSEQUENT, 0.02, 14)
    with pytest.raises(ValueError):
        compare(baseline, pruned)


def test_common_bounded_by_cluster_and_baseline(weather_rules):
    baseline = baseline_representatives(weather_rules, ClusterMode.BY_ITEM, 0.02)
    base_counts = {c.key: len(baseline.representatives[c.key].selections)
                   for c in baseline.clusters}
    for measure in ALL_MEASURES:
        for k in (3, 8, 0.5):
            pruned = pruned_representatives(weather_rules, measure, k,
                                            ClusterMode.BY_ITEM, 0.02, 14)
            row = compare(baseline, pruned)
            for key, cluster_count, common_count in row.entries:
                assert common_count <= cluster_count
                assert common_count <= base_counts.get(key, 0)


def test_rank_equivalent_families_produce_identical_rows(weather_rules):
    families = [("lift", "information_gain"),
                ("confidence", "example_counterexample_rate", "sebag_schoenauer"),
                ("yule_q", "yule_y")]
    for k in (5, 0.5):
        report = experiment_from_rules(weather_rules, 14,
                                       [m for fam in families for m in fam], k)
        rows = {row.measure: row.entries for row in report.rows}
        for fam in families:
            first = rows[fam[0]]
            for other in fam[1:]:
                assert rows[other] == first, (fam[0], other, k)


def test_experiment_requires_known_measures(weather_rules):
    with pytest.raises(ValueError):
        experiment_from_rules(weather_rules, 14, ["nope"], 1.0)


def test_run_experiment_errors_on_zero_rules(weather):
    with pytest.raises(ValueError, match="min_support=0.9"):
        run_experiment(weather, MiningConfig(0.9, 0.9), ["lift"], 1.0)


def test_report_files_and_round_trip(weather_report, tmp_path):
    paths = emit_report(weather_report, tmp_path)
    names = [p.name for p in paths]
    assert names == ["appendix.csv", "summary.csv", "figure_by_cluster.csv",
                     "figure_by_common.csv", "summary.md"]

    appendix = load_appendix(tmp_path / "appendix.csv")
    assert set(appendix) == {"All-ARs", *ALL_MEASURES}
    base_counts = [n for _, n in weather_report.baseline_counts()]
    assert [c for _, c in appendix["All-ARs"]["cluster"]] == base_counts
    for row in weather_report.rows:
        loaded = appendix[row.measure]
        assert sum(c for _, c in loaded["cluster"]) == row.total_cluster
        assert sum(c for _, c in loaded["common"]) == row.total_common
        assert [c for _, c in loaded["cluster"]] == [cl for _, cl, _ in row.entries]
        assert [c for _, c in loaded["common"]] == [co for _, _, co in row.entries]


def test_identity_pruned_summary_matches_baseline(weather_report, tmp_path):
    emit_report(weather_report, tmp_path)
    lines = (tmp_path / "summary.csv").read_text().strip().splitlines()
    assert lines[0] == "measure,total_cluster,total_common"
    assert lines[1] == "All-ARs,10,"
    for line in lines[2:]:
        measure, total_cluster, total_common = line.split(",")
        assert total_cluster == total_common == "10"


def test_figure_files_are_sorted_permutations_of_summary(weather_report, tmp_path):
    emit_report(weather_report, tmp_path)
    summary = (tmp_path / "summary.csv").read_text().strip().splitlines()[2:]
    for name, column in (("figure_by_cluster.csv", 1), ("figure_by_common.csv", 2)):
        figure = (tmp_path / name).read_text().strip().splitlines()
        assert figure[0] == "measure,total_cluster,total_common"
        assert sorted(figure[1:]) == sorted(summary)
        values = [int(line.split(",")[column]) for line in figure[1:]]
        assert values == sorted(values, reverse=True)


def test_emit_is_deterministic(weather_report, tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    for path in (a, b):
        emit_report(weather_report, path)
    for name in ("appendix.csv", "summary.csv", "figure_by_cluster.csv",
                 "figure_by_common.csv", "summary.md"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_identity_pruning_over_modes_and_thresholds(weather_rules):
    for mode in (ClusterMode.BY_ITEM, ClusterMode.BY_EXACT_CONSEQUENT):
        for threshold in (0.0, 0.02):
            baseline = baseline_representatives(weather_rules, mode, threshold)
            for measure in ALL_MEASURES:
                pruned = pruned_representatives(weather_rules, measure, 1.0, mode,
                                                threshold, 14)
                row = compare(baseline, pruned)
                for key, cluster_count, common_count in row.entries:
                    assert cluster_count == common_count
                    assert cluster_count == len(baseline.representatives[key].selections)


def test_synthetic_experiment_smoke(tmp_path):
    d = generate_synthetic(300, 10, (2, 3), seed=11)
    report = run_experiment(d, MiningConfig(0.25, 0.7), ["lift", "support"], 0.4)
    assert {row.measure for row in report.rows} == {"lift", "support"}
    emit_report(report, tmp_path)
    mined = mine(d, MiningConfig(0.25, 0.7))
    files = write_intermediates(mined, report.baseline, tmp_path)
    assert all(p.exists() for p in files)

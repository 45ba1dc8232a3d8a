"""Contingency tables and the full catalog of rule interestingness measures.

Every measure is a function of the four joint counts (XY, X not-Y, not-X Y,
not-X not-Y). Division follows one convention throughout: positive/0 is
+inf, negative/0 is -inf, 0/0 is nan ("undefined"). Ranking uses the total
order  +inf > finite > -inf > nan,  with ties broken by mining index, so a
rank is always a permutation.

Measures are evaluated from integer count products with a single final
float division wherever the value feeds a ranking. That keeps
rank-equivalent families (lift/information gain, confidence/Sebag/ECR,
Yule's Q/Y) tying bitwise on proportional tables, which plain
probability-space evaluation does not guarantee.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence, TextIO

from .mining import AssociationRule

NAN = float("nan")
INF = float("inf")


@dataclass(frozen=True)
class ContingencyTable:
    """Joint counts of a rule against an n-record dataset."""

    n: int
    n_x: int
    n_y: int
    n_xy: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not (0 <= self.n_xy <= min(self.n_x, self.n_y)):
            raise ValueError("need 0 <= n_xy <= min(n_x, n_y)")
        if self.n_x > self.n or self.n_y > self.n:
            raise ValueError("n_x and n_y cannot exceed n")
        if self.n - self.n_x - self.n_y + self.n_xy < 0:
            raise ValueError("joint counts are inconsistent (negative not-X not-Y cell)")

    @property
    def n_x_noty(self) -> int:
        return self.n_x - self.n_xy

    @property
    def n_notx_y(self) -> int:
        return self.n_y - self.n_xy

    @property
    def n_notx_noty(self) -> int:
        return self.n - self.n_x - self.n_y + self.n_xy

    @property
    def n_notx(self) -> int:
        return self.n - self.n_x

    @property
    def n_noty(self) -> int:
        return self.n - self.n_y


def contingency(r: AssociationRule, n: int) -> ContingencyTable:
    """Joint counts of a mined rule; n is the mining dataset size."""
    return ContingencyTable(n=n, n_x=len(r.cover_x), n_y=len(r.cover_y), n_xy=len(r.cover_xy))


def _div(num, den) -> float:
    if den == 0:
        if num > 0:
            return INF
        if num < 0:
            return -INF
        return NAN
    return num / den


def _support(t):
    return t.n_xy / t.n


def _confidence(t):
    return _div(t.n_xy, t.n_x)


def _coverage(t):
    return t.n_x / t.n


def _prevalence(t):
    return t.n_y / t.n


def _recall(t):
    return _div(t.n_xy, t.n_y)


def _specificity_1(t):
    # P(not-Y | not-X)
    return _div(t.n_notx_noty, t.n_notx)


def _accuracy(t):
    return (t.n_xy + t.n_notx_noty) / t.n


def _lift(t):
    return _div(t.n * t.n_xy, t.n_x * t.n_y)


def _leverage_1(t):
    # P(Y|X) - P(X)P(Y): the conditional-first-term variant
    return _div(t.n_xy * t.n * t.n - t.n_x * t.n_x * t.n_y, t.n_x * t.n * t.n)


def _added_value(t):
    return _div(t.n_xy * t.n - t.n_x * t.n_y, t.n_x * t.n)


def _relative_risk(t):
    return _div(t.n_xy * t.n_notx, t.n_x * t.n_notx_y)


def _jaccard(t):
    return _div(t.n_xy, t.n_x + t.n_y - t.n_xy)


def _certainty_factor(t):
    return _div(t.n_xy * t.n - t.n_x * t.n_y, t.n_x * t.n_noty)


def _odds_ratio(t):
    return _div(t.n_xy * t.n_notx_noty, t.n_x_noty * t.n_notx_y)


def _yule_q(t):
    concordant = t.n_xy * t.n_notx_noty
    discordant = t.n_x_noty * t.n_notx_y
    return _div(concordant - discordant, concordant + discordant)


def _yule_y(t):
    # evaluated through the odds ratio so proportional tables tie exactly
    ratio = _div(t.n_xy * t.n_notx_noty, t.n_x_noty * t.n_notx_y)
    if math.isnan(ratio):
        return NAN
    if math.isinf(ratio):
        return 1.0
    root = math.sqrt(ratio)
    return (root - 1.0) / (root + 1.0)


def _klosgen(t):
    return math.sqrt(t.n_xy / t.n) * _added_value(t)


def _conviction(t):
    return _div(t.n_x * t.n_noty, t.n * t.n_x_noty)


def _collective_strength(t):
    violation_den = t.n * t.n - t.n * t.n_xy - t.n * t.n_notx_noty
    if violation_den == 0:
        return NAN
    agree = _div(t.n * (t.n_xy + t.n_notx_noty), t.n_x * t.n_y + t.n_notx * t.n_noty)
    violation_num = t.n * t.n - t.n_x * t.n_y - t.n_notx * t.n_noty
    return agree * (violation_num / violation_den)


def _laplace_correction(t):
    return (t.n_xy + 1) / (t.n_x + 2)


def _gini_index(t):
    given_x = _div(t.n_xy ** 2 + t.n_x_noty ** 2, t.n * t.n_x)
    given_notx = _div(t.n_notx_y ** 2 + t.n_notx_noty ** 2, t.n * t.n_notx)
    return given_x + given_notx - (t.n_y ** 2 + t.n_noty ** 2) / (t.n * t.n)


def _phi_coefficient(t):
    return _div(t.n_xy * t.n - t.n_x * t.n_y,
                math.sqrt(t.n_x * t.n_y * t.n_notx * t.n_noty))


def _j_measure(t):
    # p*log(p/q) terms are 0 when p == 0
    term1 = 0.0
    if t.n_xy:
        term1 = (t.n_xy / t.n) * math.log((t.n * t.n_xy) / (t.n_x * t.n_y))
    term2 = 0.0
    if t.n_x_noty:
        term2 = (t.n_x_noty / t.n) * math.log((t.n * t.n_x_noty) / (t.n_x * t.n_noty))
    return term1 + term2


def _piatetsky_shapiro(t):
    return (t.n_xy * t.n - t.n_x * t.n_y) / (t.n * t.n)


def _cosine(t):
    return _div(t.n_xy, math.sqrt(t.n_x * t.n_y))


def _loevinger(t):
    return 1.0 - _div(t.n_x * t.n_noty, t.n * t.n_x_noty)


def _information_gain(t):
    lift = _lift(t)
    if math.isnan(lift):
        return NAN
    if lift == 0.0:
        return -INF
    return math.log(lift)


def _sebag_schoenauer(t):
    return _div(t.n_xy, t.n_x_noty)


def _least_contradiction(t):
    return _div(t.n_xy - t.n_x_noty, t.n_y)


def _odd_multiplier(t):
    return _div(t.n_xy * t.n_noty, t.n_y * t.n_x_noty)


def _example_counterexample_rate(t):
    return 1.0 - _div(t.n_x_noty, t.n_xy)


def _zhang(t):
    return _div(t.n_xy * t.n - t.n_x * t.n_y,
                max(t.n_xy * t.n_noty, t.n_y * t.n_x_noty))


def _correlation(t):
    # printed without the square root; deliberately distinct from phi
    return _div((t.n_xy * t.n - t.n_x * t.n_y) * t.n * t.n,
                t.n_x * t.n_y * t.n_notx * t.n_noty)


def _specificity_2(t):
    # joint P(not-X not-Y)
    return t.n_notx_noty / t.n


def _all_confidence(t):
    a, b = _div(t.n_xy, t.n_y), _div(t.n_xy, t.n_x)
    if math.isnan(a) or math.isnan(b):
        return NAN
    return min(a, b)


def _max_confidence(t):
    a, b = _div(t.n_xy, t.n_y), _div(t.n_xy, t.n_x)
    if math.isnan(a) or math.isnan(b):
        return NAN
    return max(a, b)


def _kulczynski(t):
    return (_div(t.n_xy, t.n_y) + _div(t.n_xy, t.n_x)) / 2.0


MEASURES: dict[str, Callable[[ContingencyTable], float]] = {
    "support": _support,
    "confidence": _confidence,
    "coverage": _coverage,
    "prevalence": _prevalence,
    "recall": _recall,
    "specificity_1": _specificity_1,
    "accuracy": _accuracy,
    "lift": _lift,
    "leverage_1": _leverage_1,
    "added_value": _added_value,
    "relative_risk": _relative_risk,
    "jaccard": _jaccard,
    "certainty_factor": _certainty_factor,
    "odds_ratio": _odds_ratio,
    "yule_q": _yule_q,
    "yule_y": _yule_y,
    "klosgen": _klosgen,
    "conviction": _conviction,
    "collective_strength": _collective_strength,
    "laplace_correction": _laplace_correction,
    "gini_index": _gini_index,
    "phi_coefficient": _phi_coefficient,
    "j_measure": _j_measure,
    "piatetsky_shapiro": _piatetsky_shapiro,
    "cosine": _cosine,
    "loevinger": _loevinger,
    "information_gain": _information_gain,
    "sebag_schoenauer": _sebag_schoenauer,
    "least_contradiction": _least_contradiction,
    "odd_multiplier": _odd_multiplier,
    "example_counterexample_rate": _example_counterexample_rate,
    "zhang": _zhang,
    "correlation": _correlation,
    "leverage_2": _piatetsky_shapiro,
    "coherence": _jaccard,
    "specificity_2": _specificity_2,
    "all_confidence": _all_confidence,
    "max_confidence": _max_confidence,
    "kulczynski": _kulczynski,
}

ALL_MEASURES: tuple[str, ...] = tuple(MEASURES)


def evaluate(measure: str, t: ContingencyTable) -> float:
    """One measure on one table. Degenerate inputs land on +-inf or nan."""
    fn = MEASURES.get(measure)
    if fn is None:
        raise ValueError(f"unknown measure {measure!r}")
    return fn(t)


def evaluate_all(rules: Sequence[AssociationRule], measure: str, n: int) -> list[float]:
    fn = MEASURES.get(measure)
    if fn is None:
        raise ValueError(f"unknown measure {measure!r}")
    return [fn(contingency(r, n)) for r in rules]


def ranking_key(value: float) -> tuple[int, float]:
    """Sort key fragment realizing +inf > finite > -inf > nan (descending)."""
    if math.isnan(value):
        return (0, 0.0)
    return (1, value)


def rank(rules: Sequence[AssociationRule], measure: str, n: int) -> list[int]:
    """Positions of `rules` sorted best-first by the measure.

    Ties break by mining index ascending, so the output is a permutation
    independent of evaluation order.
    """
    if not rules:
        raise ValueError("cannot rank an empty rule list")
    values = evaluate_all(rules, measure, n)

    def key(pos: int):
        cls, val = ranking_key(values[pos])
        return (-cls, -val, rules[pos].mining_index)

    return sorted(range(len(rules)), key=key)


def top_k(rules: Sequence[AssociationRule], measure: str, k: int | float,
          n: int) -> list[AssociationRule]:
    """Best k rules by a measure; float k in (0, 1] means a fraction."""
    if isinstance(k, bool) or k == 0:
        raise ValueError("k must be positive")
    if isinstance(k, int):
        if k < 0:
            raise ValueError("k must be positive")
        count = k
    else:
        if not 0 < k <= 1:
            raise ValueError(f"fractional k must be in (0, 1], got {k}")
        count = math.ceil(k * len(rules))
    order = rank(rules, measure, n)
    return [rules[pos] for pos in order[:count]]


def format_value(value: float) -> str:
    """CSV rendering: +inf / -inf / nan, finite values via repr."""
    if math.isnan(value):
        return "nan"
    if value == INF:
        return "+inf"
    if value == -INF:
        return "-inf"
    return repr(value + 0.0)  # +0.0 folds -0.0 into 0.0


def write_measures_csv(rules: Sequence[AssociationRule], n: int,
                       measures: Sequence[str], target: TextIO | str | Path) -> None:
    """One row per rule, one column per measure, plus the mining index."""
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8", newline="") as fh:
            write_measures_csv(rules, n, measures, fh)
        return
    for m in measures:
        if m not in MEASURES:
            raise ValueError(f"unknown measure {m!r}")
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(["mining_index", *measures])
    for r in rules:
        t = contingency(r, n)
        writer.writerow([r.mining_index, *(format_value(MEASURES[m](t)) for m in measures)])

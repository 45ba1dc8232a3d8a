from pathlib import Path

import pytest

from rulecover import MiningConfig, load_table, mine

DATA_DIR = Path(__file__).parent / "data"

# The 17 sample rules the golden dataset must reproduce at support 0.2 /
# confidence 0.7, keyed by their published numbering: antecedent labels,
# consequent labels, cover of X, cover of XY, support %, confidence %.
GOLDEN_RULES = {
    "R1": ((("Outlook=overcast",), ("Play=yes",)), (3, 7, 12, 13), (3, 7, 12, 13), 29, 100),
    "R2": ((("Temperature=cool",), ("Humidity=normal",)), (5, 6, 7, 9), (5, 6, 7, 9), 29, 100),
    "R3": ((("Humidity=normal", "Windy=FALSE"), ("Play=yes",)), (5, 9, 10, 13), (5, 9, 10, 13), 29, 100),
    "R4": ((("Outlook=sunny", "Play=no"), ("Humidity=high",)), (1, 2, 8), (1, 2, 8), 21, 100),
    "R5": ((("Outlook=sunny", "Humidity=high"), ("Play=no",)), (1, 2, 8), (1, 2, 8), 21, 100),
    "R6": ((("Outlook=rainy", "Play=yes"), ("Windy=FALSE",)), (4, 5, 10), (4, 5, 10), 21, 100),
    "R7": ((("Outlook=rainy", "Windy=FALSE"), ("Play=yes",)), (4, 5, 10), (4, 5, 10), 21, 100),
    "R8": ((("Temperature=cool", "Play=yes"), ("Humidity=normal",)), (5, 7, 9), (5, 7, 9), 21, 100),
    "R9": ((("Humidity=normal",), ("Play=yes",)), (5, 6, 7, 9, 10, 11, 13), (5, 7, 9, 10, 11, 13), 43, 86),
    "R10": ((("Play=no",), ("Humidity=high",)), (1, 2, 6, 8, 14), (1, 2, 8, 14), 29, 80),
    "R11": ((("Windy=FALSE",), ("Play=yes",)), (1, 3, 4, 5, 8, 9, 10, 13), (3, 4, 5, 9, 10, 13), 43, 75),
    "R12": ((("Temperature=hot",), ("Humidity=high",)), (1, 2, 3, 13), (1, 2, 3), 21, 75),
    "R13": ((("Temperature=hot",), ("Windy=FALSE",)), (1, 2, 3, 13), (1, 3, 13), 21, 75),
    "R14": ((("Temperature=cool",), ("Play=yes",)), (5, 6, 7, 9), (5, 7, 9), 21, 75),
    "R15": ((("Humidity=high", "Play=no"), ("Outlook=sunny",)), (1, 2, 8, 14), (1, 2, 8), 21, 75),
    "R16": ((("Temperature=cool", "Humidity=normal"), ("Play=yes",)), (5, 6, 7, 9), (5, 7, 9), 21, 75),
    "R17": ((("Temperature=cool",), ("Humidity=normal", "Play=yes")), (5, 6, 7, 9), (5, 7, 9), 21, 75),
}


def rule_signature(rule):
    return (
        tuple(sorted(it.label for it in rule.antecedent)),
        tuple(sorted(it.label for it in rule.consequent)),
    )


def golden_signature(name):
    ant, cons = GOLDEN_RULES[name][0]
    return (tuple(sorted(ant)), tuple(sorted(cons)))


def find_rule(rules, name):
    """The mined rule matching a published rule number, by content."""
    wanted = golden_signature(name)
    matches = [r for r in rules if rule_signature(r) == wanted]
    assert len(matches) == 1, f"{name}: expected exactly one match, got {len(matches)}"
    return matches[0]


@pytest.fixture(scope="session")
def weather_path():
    return DATA_DIR / "weather.csv"


@pytest.fixture(scope="session")
def weather(weather_path):
    return load_table(weather_path)


@pytest.fixture(scope="session")
def weather_rows(weather_path):
    lines = weather_path.read_text().strip().splitlines()[1:]
    return [tuple(line.split(",")) for line in lines]


@pytest.fixture(scope="session")
def weather_mined(weather):
    return mine(weather, MiningConfig(min_support=0.2, min_confidence=0.7))


@pytest.fixture(scope="session")
def weather_rules(weather_mined):
    return weather_mined.rules

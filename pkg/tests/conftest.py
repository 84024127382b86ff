import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

EXAMPLE1 = [
    711.56, 121.65, 7498.12, 2866.83, 794.47, 7638.57, 9561.95, 6819.74, 8324.07,
    2753.54, -272.60, 3396.49, 3857.34, 5266.30, 2788.52, 4681.03, 6.34, 5494.43,
    -8914.71, 7603.40, 1428.25, 591.98, 3332.02, 9255.67, 7133.70,
]
EXAMPLE1_VARIANT = [8914.71 if x == -8914.71 else x for x in EXAMPLE1]

TITLES = [
    "A Brief History of Time",
    "Alice Munro: Selected Stories",
    "Bel Canto",
    "Charlie and the Chocolate Factory",
    "Daring Greatly: How the Courage to Be Vulnerable Transforms the Way We Live, "
    "Love, Parent, and Lead",
    "Great Expectations",
    "Harry Potter and the Sorcerer's Stone",
    "Invisible Man",
    "In Cold Blood",
    "Jimmy Corrigan: Smartest Kid on Earth",
    "Kitchen Confidential",
    "The Devil in the White City: Murder, Magic, and Madness at the Fair that "
    "Changed America",
    "Love in the Time of Cholera",
    "Man's Search for Meaning",
    "The Lion, the Witch and the Wardrobe",
]
TITLES_VARIANT = TITLES[:11] + ["Life After Life"] + TITLES[12:]


@pytest.fixture
def example1():
    return list(EXAMPLE1)


@pytest.fixture
def example1_variant():
    return list(EXAMPLE1_VARIANT)


@pytest.fixture
def titles():
    return list(TITLES)


@pytest.fixture
def titles_variant():
    return list(TITLES_VARIANT)


@pytest.fixture
def data_dir():
    return DATA


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

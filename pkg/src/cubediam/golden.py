"""Published reference values used by the ``paper-table`` regression presets.

Cells are transcribed verbatim from the estimate tables. A trailing ``N``
marks a value printed in units of the configuration count; bare integers are
absolute counts; ``e`` notation is an absolute count printed to four digits.
"""

from __future__ import annotations

from dataclasses import dataclass

# cell kinds
ABSOLUTE = "absolute"
SCALED = "scaled"


@dataclass(frozen=True)
class Cell:
    kind: str
    value: float
    text: str

    @classmethod
    def parse(cls, text: str) -> "Cell":
        text = text.strip()
        if text.endswith("N"):
            return cls(SCALED, float(text[:-1]), text)
        if "e" in text:
            return cls(ABSOLUTE, float(text), text)
        return cls(ABSOLUTE, int(text), text)


@dataclass(frozen=True)
class GoldenRow:
    t: int
    S: Cell
    C: Cell
    T: Cell


@dataclass(frozen=True)
class GoldenTable:
    id: str
    slug: str
    n: int
    metric: str
    r_printed: float
    seed_depth: int
    diameter: int
    rows: tuple[GoldenRow, ...]
    # step -> (completion probability, unseen count) quoted alongside the table
    probabilities: dict[int, tuple[float, float]]
    exempt: frozenset[tuple[int, str]] = frozenset()
    # steps whose cells are exact breadth-first counts, not model output
    census_rows: frozenset[int] = frozenset()


def _rows(block: str) -> tuple[GoldenRow, ...]:
    out = []
    for line in block.strip().splitlines():
        t, s, c, tt = line.split("|")
        out.append(GoldenRow(int(t), Cell.parse(s), Cell.parse(c), Cell.parse(tt)))
    return tuple(out)


TABLES: dict[str, GoldenTable] = {}


def _add(table: GoldenTable) -> None:
    TABLES[table.id] = table


# Table I: 2x2x2, half-turn metric
_add(GoldenTable(
    "I", "2x2x2-half", 2, "half", 5.94, 3, 12,
    _rows("""
        0 | 1 | 1 | 1
        1 | 9 | 9 | 10
        2 | 54 | 54 | 64
        3 | 321 | 321 | 385
        4 | 0.001N | 0.001N | 0.001N
        5 | 0.003N | 0.003N | 0.004N
        6 | 0.018N | 0.018N | 0.022N
        7 | 0.102N | 0.108N | 0.130N
        8 | 0.454N | 0.606N | 0.735N
        9 | 0.933N | 2.699N | 3.435N
        10 | 0.996N | 5.540N | 8.975N
        11 | 0.997N | 5.917N | 14.892N
        12 | 0.997N | 5.924N | 20.816N
    """),
    {11: (0.286, 1.3), 12: (0.997, 0.003)},
))

# Table II: 2x2x2, quarter-turn metric
_add(GoldenTable(
    "II", "2x2x2-quarter", 2, "quarter", 4.44, 3, 14,
    _rows("""
        0 | 1 | 1 | 1
        1 | 6 | 6 | 7
        2 | 27 | 27 | 34
        3 | 120 | 120 | 154
        4 | 533 | 533 | 687
        5 | 0.001N | 0.001N | 0.001N
        6 | 0.003N | 0.003N | 0.004N
        7 | 0.013N | 0.013N | 0.016N
        8 | 0.055N | 0.056N | 0.073N
        9 | 0.221N | 0.250N | 0.323N
        10 | 0.626N | 0.983N | 1.306N
        11 | 0.938N | 2.778N | 4.084N
        12 | 0.984N | 4.164N | 8.248N
        13 | 0.987N | 4.371N | 12.619N
        14 | 0.988N | 4.384N | 17.003N
        15 | 0.988N | 4.385N | 21.388N
    """),
    {13: (5e-6, 12), 14: (0.859, 0.15), 15: (0.998, 0.002)},
))

# Table III: 2x2x2, semi-quarter-turn metric
_add(GoldenTable(
    "III", "2x2x2-semi-quarter", 2, "semi-quarter", 2.77, 5, 21,
    _rows("""
        0 | 1 | 1 | 1
        1 | 3 | 3 | 4
        2 | 9 | 9 | 13
        3 | 27 | 27 | 40
        4 | 78 | 78 | 118
        5 | 216 | 216 | 334
        6 | 583 | 583 | 917
        7 | 1546 | 1546 | 2463
        8 | 0.001N | 0.001N | 0.002N
        9 | 0.003N | 0.003N | 0.005N
        10 | 0.010N | 0.010N | 0.015N
        11 | 0.026N | 0.026N | 0.041N
        12 | 0.070N | 0.072N | 0.113N
        13 | 0.175N | 0.193N | 0.306N
        14 | 0.384N | 0.485N | 0.791N
        15 | 0.655N | 1.065N | 1.856N
        16 | 0.837N | 1.815N | 3.671N
        17 | 0.902N | 2.319N | 5.990N
        18 | 0.918N | 2.498N | 8.488N
        19 | 0.921N | 2.542N | 11.030N
        20 | 0.922N | 2.552N | 13.582N
        21 | 0.922N | 2.554N | 16.136N
        22 | 0.922N | 2.555N | 18.691N
    """),
    {20: (0.0097, 4.6), 21: (0.697, 0.36), 22: (0.972, 0.03)},
    census_rows=frozenset({6, 7}),
))

# Table IV: 2x2x2, bi-quarter-turn metric
_add(GoldenTable(
    "IV", "2x2x2-bi-quarter", 2, "bi-quarter", 9.19, 3, 9,
    _rows("""
        0 | 1 | 1 | 1
        1 | 15 | 15 | 16
        2 | 144 | 144 | 160
        3 | 1324 | 1324 | 1484
        4 | 0.003N | 0.003N | 0.004N
        5 | 0.030N | 0.030N | 0.034N
        6 | 0.240N | 0.275N | 0.309N
        7 | 0.890N | 2.210N | 2.519N
        8 | 1.000N | 8.182N | 10.700N
        9 | 1.000N | 9.187N | 19.888N
        10 | 1.000N | 9.189N | 29.077N
        11 | 1.000N | 9.189N | 38.266N
    """),
    {9: (0.992, 0.008), 10: (0.999999, float("nan"))},
))

# Table V: 3x3x3, half-turn metric. S(4) = 43217 exceeds C(4), which the
# saturation formula forbids; that cell is not compared.
_add(GoldenTable(
    "V", "3x3x3-half", 3, "half", 13.33, 3, 22,
    _rows("""
        0 | 1 | 1 | 1
        1 | 18 | 18 | 19
        2 | 243 | 243 | 262
        3 | 3240 | 3240 | 3502
        4 | 43217 | 43189 | 46691
        5 | 576232 | 576088 | 622780
        6 | 7683099 | 7681178 | 8303957
        7 | 102415704 | 102415704 | 110719662
        8 | 1365200187 | 1365201339 | 1475921001
        9 | 1.820e10 | 1.820e10 | 1.967e10
        10 | 2.426e11 | 2.426e11 | 2.623e11
        11 | 3.234e12 | 3.234e12 | 3.496e12
        12 | 4.310e13 | 4.310e13 | 4.660e13
        13 | 5.746e14 | 5.746e14 | 6.212e14
        14 | 0.0002N | 0.0002N | 0.0002N
        15 | 0.0024N | 0.0024N | 0.0026N
        16 | 0.0309N | 0.0314N | 0.0340N
        17 | 0.3379N | 0.4124N | 0.4464N
        18 | 0.9889N | 4.5046N | 4.9510N
        19 | 1.0000N | 13.1826N | 18.1336N
        20 | 1.0000N | 13.3300N | 31.4635N
        21 | 1.0000N | 13.3300N | 44.7935N
        22 | 1.0000N | 13.3300N | 58.1235N
    """),
    {21: (0.218, 1.5), 22: (0.999998, 2e-6)},
    exempt=frozenset({(4, "S")}),
))

# Table VI: 3x3x3, quarter-turn metric
_add(GoldenTable(
    "VI", "3x3x3-quarter", 3, "quarter", 9.37, 3, 26,
    _rows("""
        0 | 1 | 1 | 1
        1 | 12 | 12 | 13
        2 | 114 | 114 | 127
        3 | 1068 | 1068 | 1195
        4 | 9604 | 10007 | 11202
        5 | 91237 | 89988 | 101190
        6 | 854745 | 854889 | 956079
        7 | 8009630 | 8008958 | 8965037
        8 | 75049468 | 75050236 | 84015273
        9 | 703214807 | 703213511 | 787228784
        10 | 6589121400 | 6589122744 | 7376351528
        11 | 6.174e10 | 6.174e10 | 6.912e10
        12 | 5.785e11 | 5.785e11 | 6.476e11
        13 | 5.421e12 | 5.421e12 | 6.068e12
        14 | 5.079e13 | 5.079e13 | 5.686e13
        15 | 4.759e14 | 4.759e14 | 5.328e14
        16 | 0.0001N | 0.0001N | 0.0001N
        17 | 0.0010N | 0.0010N | 0.0011N
        18 | 0.0090N | 0.0090N | 0.0101N
        19 | 0.0809N | 0.0844N | 0.0945N
        20 | 0.5315N | 0.7583N | 0.8528N
        21 | 0.9931N | 4.9804N | 5.8332N
        22 | 0.9999N | 9.3056N | 15.1388N
        23 | 0.9999N | 9.3691N | 24.5079N
        24 | 0.9999N | 9.3692N | 33.8771N
        25 | 0.9999N | 9.3692N | 43.2463N
        26 | 0.9999N | 9.3692N | 52.6155N
    """),
    {25: (8e-4, 7.2), 26: (0.9994, 6e-4)},
))

# Table VII: 3x3x3, square-turn metric
_add(GoldenTable(
    "VII", "3x3x3-square", 3, "square", 4.44, 3, 13,
    _rows("""
        0 | 1 | 1 | 1
        1 | 6 | 6 | 7
        2 | 27 | 27 | 34
        3 | 120 | 120 | 154
        4 | 0.0008N | 0.0008N | 0.0010N
        5 | 0.0036N | 0.0036N | 0.0046N
        6 | 0.0157N | 0.0158N | 0.0204N
        7 | 0.0672N | 0.0696N | 0.0900N
        8 | 0.2580N | 0.2984N | 0.3884N
        9 | 0.6820N | 1.1456N | 1.5340N
        10 | 0.9516N | 3.0279N | 4.5618N
        11 | 0.9854N | 4.2250N | 8.7869N
        12 | 0.9874N | 4.3751N | 13.1619N
        13 | 0.9875N | 4.3841N | 17.5460N
        14 | 0.9875N | 4.3846N | 21.9307N
        15 | 0.9875N | 4.3846N | 26.3153N
    """),
    {12: (0.279, 1.3), 13: (0.984, 0.016)},
))

# Table VIII: 4x4x4, half-turn metric (rows 9..31 elided in print)
_add(GoldenTable(
    "VIII", "4x4x4-half", 4, "half", 20.67, 3, 41,
    _rows("""
        0 | 1 | 1 | 1
        1 | 27 | 27 | 28
        2 | 567 | 567 | 595
        3 | 11721 | 11721 | 12316
        4 | 242273 | 242273 | 254589
        5 | 5007784 | 5007784 | 5262373
        6 | 103510903 | 103510903 | 108773276
        7 | 2139570358 | 2139570358 | 2248343634
        8 | 44224919298 | 44224919298 | 46473262932
        32 | 0.0002N | 0.0002N | 0.0002N
        33 | 0.0046N | 0.0046N | 0.0048N
        34 | 0.0899N | 0.0942N | 0.0990N
        35 | 0.8442N | 1.8590N | 1.9581N
        36 | 1.0000N | 17.4491N | 19.4072N
        37 | 1.0000N | 20.6700N | 40.0772N
        38 | 1.0000N | 20.6700N | 60.7472N
        39 | 1.0000N | 20.6700N | 81.4172N
        40 | 1.0000N | 20.6700N | 102.0872N
        41 | 1.0000N | 20.6700N | 122.7572N
    """),
    {40: (1e-15, 34), 41: (1.0, 4e-8)},
))

# 4x4x4, quarter-turn metric (rows 10..35 elided in print)
_add(GoldenTable(
    "4x4x4-quarter", "4x4x4-quarter", 4, "quarter", 14.30, 3, 48,
    _rows("""
        0 | 1 | 1 | 1
        1 | 18 | 18 | 19
        2 | 261 | 261 | 280
        3 | 3732 | 3732 | 4012
        4 | 53368 | 53368 | 57380
        5 | 763157 | 763157 | 820536
        6 | 10913141 | 10913141 | 11733677
        7 | 156057909 | 156057909 | 167791586
        8 | 2231628106 | 2231628106 | 2399419692
        9 | 31912281912 | 31912281912 | 34311701604
        36 | 0.0001N | 0.0001N | 0.0001N
        37 | 0.0010N | 0.0010N | 0.0010N
        38 | 0.0137N | 0.0138N | 0.0148N
        39 | 0.1777N | 0.1957N | 0.2105N
        40 | 0.9213N | 2.5417N | 2.7522N
        41 | 1.0000N | 13.1741N | 15.9264N
        42 | 1.0000N | 14.3000N | 30.2264N
        43 | 1.0000N | 14.3000N | 44.5263N
        44 | 1.0000N | 14.3000N | 58.8263N
        45 | 1.0000N | 14.3000N | 73.1263N
        46 | 1.0000N | 14.3000N | 87.4263N
        47 | 1.0000N | 14.3000N | 101.7263N
        48 | 1.0000N | 14.3000N | 116.0263N
    """),
    {47: (5e-22, 49), 48: (0.99997, 3e-5)},
))

# 5x5x5, half-turn metric (rows 8..48 elided in print)
_add(GoldenTable(
    "X", "5x5x5-half", 5, "half", 28.08, 3, 58,
    _rows("""
        0 | 1 | 1 | 1
        1 | 36 | 36 | 37
        2 | 1026 | 1026 | 1063
        3 | 28812 | 28812 | 29875
        4 | 809041 | 809041 | 838916
        5 | 22717870 | 22717870 | 23556786
        6 | 637917794 | 637917794 | 661474580
        7 | 17912731656 | 17912731656 | 18574206236
        49 | 0.0004N | 0.0004N | 0.0004N
        50 | 0.0120N | 0.0121N | 0.0125N
        51 | 0.2864N | 0.3374N | 0.3499N
        52 | 0.9997N | 8.0413N | 8.3912N
        53 | 1.0000N | 28.0710N | 36.4621N
        54 | 1.0000N | 28.0800N | 64.5421N
        55 | 1.0000N | 28.0800N | 92.6221N
        56 | 1.0000N | 28.0800N | 120.7021N
        57 | 1.0000N | 28.0800N | 148.7821N
        58 | 1.0000N | 28.0800N | 176.8621N
    """),
    {57: (0.0, 7e9), 58: (0.996, 0.004)},
))

# 5x5x5, quarter-turn metric (rows 10..54 elided in print)
_add(GoldenTable(
    "XI", "5x5x5-quarter", 5, "quarter", 19.23, 3, 68,
    _rows("""
        0 | 1 | 1 | 1
        1 | 24 | 24 | 25
        2 | 468 | 468 | 493
        3 | 9000 | 9000 | 9493
        4 | 173070 | 173070 | 182563
        5 | 3328136 | 3328136 | 3510699
        6 | 64000057 | 64000057 | 67510756
        7 | 1230721100 | 1230721100 | 1298231856
        8 | 23666766753 | 23666766753 | 24964998610
        9 | 455111924665 | 455111924665 | 480076923275
        55 | 0.0002N | 0.0002N | 0.0002N
        56 | 0.0036N | 0.0036N | 0.0038N
        57 | 0.0663N | 0.0686N | 0.0724N
        58 | 0.7207N | 1.2755N | 1.3479N
        59 | 1.0000N | 13.8593N | 15.2072N
        60 | 1.0000N | 19.2300N | 34.4371N
        61 | 1.0000N | 19.2300N | 53.6671N
        62 | 1.0000N | 19.2300N | 72.8971N
        63 | 1.0000N | 19.2300N | 92.1271N
        64 | 1.0000N | 19.2300N | 111.3571N
        65 | 1.0000N | 19.2300N | 130.5871N
        66 | 1.0000N | 19.2300N | 149.8171N
        67 | 1.0000N | 19.2300N | 169.0471N
        68 | 1.0000N | 19.2300N | 188.2771N
    """),
    {67: (2e-5, 11), 68: (1.0, 5e-8)},
))


@dataclass(frozen=True)
class SummaryRow:
    n: int
    metric: str
    r_printed: float
    actual: int | None
    predicted: int
    closed_form: float


# Summary table of diameters ("IX" in the regression presets)
SUMMARY: tuple[SummaryRow, ...] = (
    SummaryRow(2, "half", 5.94, 11, 12, 11.0),
    SummaryRow(2, "quarter", 4.44, 14, 14, 13.5),
    SummaryRow(2, "semi-quarter", 2.77, 19, 21, 20.3),
    SummaryRow(2, "bi-quarter", 9.19, 10, 9, 8.5),
    SummaryRow(3, "half", 13.33, 20, 22, 20.8),
    SummaryRow(3, "quarter", 9.37, 26, 26, 25.0),
    SummaryRow(3, "square", 4.44, 15, 13, 12.0),
    SummaryRow(4, "half", 20.67, None, 41, 40.0),
    SummaryRow(4, "quarter", 14.30, None, 48, 47.1),
    SummaryRow(5, "half", 28.08, None, 58, 57.5),
    SummaryRow(5, "quarter", 19.23, None, 68, 66.9),
)

# Exact seed counts quoted in the text, usable without running a census.
BUILTIN_SEEDS: dict[tuple[int, str], tuple[int, ...]] = {
    (2, "half"): (1, 9, 54, 321),
    (2, "quarter"): (1, 6, 27, 120),
    (2, "semi-quarter"): (1, 3, 9, 27, 78, 216),
    (2, "bi-quarter"): (1, 15, 144, 1324),
    (3, "half"): (1, 18, 243, 3240),
    (3, "quarter"): (1, 12, 114, 1068),
    (3, "square"): (1, 6, 27, 120),
    (4, "half"): (1, 27, 567, 11721),
    (4, "quarter"): (1, 18, 261, 3732),
    (5, "half"): (1, 36, 1026, 28812),
    (5, "quarter"): (1, 24, 468, 9000),
}

# Diameters found by exhaustive search (2x2x2 metrics, 3x3x3 square) or
# cited from the literature (3x3x3 half/quarter, not reproduced here).
ACTUAL_DIAMETERS: dict[tuple[int, str], int] = {
    (row.n, row.metric): row.actual for row in SUMMARY if row.actual is not None
}

ROMAN_ALIASES = {"IX": "summary"}


def table_ids() -> list[str]:
    return list(TABLES) + ["IX"]


def resolve(table_id: str) -> str:
    """Map an id or slug to its canonical key (``"IX"``/``"summary"`` -> ``"IX"``)."""
    key = table_id.strip()
    if key.lower() == "summary" or key.upper() == "IX":
        return "IX"
    if key.upper() in TABLES:
        return key.upper()
    for table in TABLES.values():
        if table.slug == key.lower():
            return table.id
    raise KeyError(table_id)

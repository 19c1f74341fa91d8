"""Exact configuration counts of the cube groups, in arbitrary precision."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial as fact

SUPPORTED = {(2, "full"), (3, "full"), (3, "square"), (4, "full"), (5, "full")}


class OrderError(ValueError):
    pass


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def corner_factor(n_corners: int) -> int:
    """Corner arrangements with the twist constraint (one orbit of three)."""
    return _exact_div(fact(n_corners) * 3**n_corners, 3)


def edge_factor() -> int:
    """3x3x3 edge arrangements: 12! placements, 2**12 flips, one orbit of four."""
    return _exact_div(fact(12) * 2**12, 4)


def center_factor() -> int:
    """Six indistinguishable quadruplets of centre blocks over 24 slots."""
    return _exact_div(fact(24), fact(4) ** 6)


def square_subgroup_order() -> int:
    # 4! placements of one tetrad of corners, 4 spots for front-up-left,
    # three edge slices of 4! each halved by the parity orbit
    return 4 * fact(4) * _exact_div(fact(4) ** 3, 2)


@dataclass(frozen=True)
class GroupOrder:
    n: int
    metric_class: str
    exact: int

    @property
    def approx(self) -> float:
        return float(self.exact)

    @property
    def label(self) -> str:
        return f"{self.n}x{self.n}x{self.n}" + ("" if self.metric_class == "full" else f" {self.metric_class}")

    def scientific(self, digits: int = 3) -> str:
        """Mantissa rounded to ``digits`` significant figures, e.g. ``'4.33e19'``."""
        s = f"{self.exact:.{digits - 1}e}"
        mantissa, exp = s.split("e")
        return f"{mantissa}e{int(exp)}"


def group_order(n: int, metric_class: str = "full") -> GroupOrder:
    if (n, metric_class) not in SUPPORTED:
        raise OrderError(f"no configuration count for n={n}, class={metric_class!r}")
    if metric_class == "square":
        exact = square_subgroup_order()
    elif n == 2:
        exact = corner_factor(7)
    elif n == 3:
        exact = corner_factor(8) * edge_factor()
    elif n == 4:
        exact = corner_factor(7) * fact(24) * center_factor()
    else:
        exact = corner_factor(8) * edge_factor() * fact(24) * center_factor() ** 2
    return GroupOrder(n, metric_class, exact)


def metric_class(metric_name: str) -> str:
    return "square" if metric_name == "square" else "full"


def order_for_metric(n: int, metric_name: str) -> GroupOrder:
    """Number of configurations reachable in the given metric."""
    return group_order(n, metric_class(metric_name))

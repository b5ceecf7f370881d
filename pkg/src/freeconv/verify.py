"""Cross-check convolutions of factor moments against walk counts on product graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .convolve import CONVOLUTIONS
from .graph import BALL_KINDS, ColoredRootedGraph, product
from .io import frac_to_str
from .series import Dist
from .walks import (
    dwalk_counts_bruteforce,
    dwalk_counts_matrix,
    even_fwalk_check,
    first_return_moments,
)

__all__ = ["LOOP_PRODUCT_CONVOLUTION", "VerifyReport", "verify_product"]

# loop product kind -> convolution whose first-return moments count its d-walks
LOOP_PRODUCT_CONVOLUTION = {
    "comb_loop": "monotone",
    "star_loop": "boolean",
    "ortho_loop": "orthogonal",
    "sfree_loop": "sfree",
    "free": "free",
}


@dataclass
class VerifyReport:
    kind: str
    max_n: int
    columns: dict[str, list[Fraction]] = field(default_factory=dict)
    factor_first_return: tuple[list[int], list[int]] = ((), ())
    even_fwalk_ok: bool = True

    @property
    def status(self) -> list[bool]:
        cols = list(self.columns.values())
        return [all(c[i] == cols[0][i] for c in cols) for i in range(self.max_n)]

    @property
    def passed(self) -> bool:
        return all(self.status)

    @property
    def values(self) -> list[Fraction]:
        return next(iter(self.columns.values()))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "max_n": self.max_n,
            "convolution": LOOP_PRODUCT_CONVOLUTION[self.kind],
            "factor_first_return": [list(v) for v in self.factor_first_return],
            "even_fwalk_check": self.even_fwalk_ok,
            "columns": {k: [frac_to_str(x) for x in v] for k, v in self.columns.items()},
            "status": ["pass" if ok else "fail" for ok in self.status],
            "result": "pass" if self.passed else "fail",
        }

    def table(self) -> str:
        names = list(self.columns)
        width = max(12, *(len(n) for n in names))
        head = "n".rjust(3) + "".join(n.rjust(width + 2) for n in names) + "  status"
        rows = [head]
        for i, ok in enumerate(self.status):
            cells = "".join(str(self.columns[n][i]).rjust(width + 2) for n in names)
            rows.append(f"{i + 1:>3}{cells}  {'pass' if ok else 'FAIL'}")
        return "\n".join(rows) + "\n"


def verify_product(
    kind: str,
    g1: ColoredRootedGraph,
    g2: ColoredRootedGraph,
    max_n: int,
    brute: bool = True,
) -> VerifyReport:
    """Four-way comparison for one loop product.

    Columns: the convolution of the factors' first-return moments by the
    transform and combinatorial paths, and the product's d-walk counts by
    matrix and (optionally) brute force.  Ball products use radius ``max_n``.
    """
    if kind not in LOOP_PRODUCT_CONVOLUTION:
        raise ValueError(
            f"kind {kind!r} has no associated convolution; "
            f"expected one of {tuple(LOOP_PRODUCT_CONVOLUTION)}"
        )
    conv = CONVOLUTIONS[LOOP_PRODUCT_CONVOLUTION[kind]]
    prod_graph = product(kind, g1, g2, radius=max_n if kind in BALL_KINDS else None)
    n1 = first_return_moments(g1, max_n)
    n2 = first_return_moments(g2, max_n)
    mu1, mu2 = Dist.from_first_return(n1), Dist.from_first_return(n2)
    report = VerifyReport(kind, max_n, factor_first_return=(n1, n2))
    for method in ("transform", "combinatorial"):
        report.columns[method] = list(conv(mu1, mu2, max_n, method).first_return)
    report.columns["matrix"] = [Fraction(x) for x in dwalk_counts_matrix(prod_graph, max_n)]
    if brute:
        report.columns["brute"] = [Fraction(x) for x in dwalk_counts_bruteforce(prod_graph, max_n)]
    report.even_fwalk_ok = even_fwalk_check(prod_graph, 2 * max_n)
    return report

"""Round-complexity bounds for emulating r full-information iterations.

For n processes, 2^n - 1 distinct process states per color per iteration
must flow through b-bit registers; the counting bound multiplies across
iterations.  Two processes are special: one bit distinguishes the two
states a neighbor can hold, so the per-iteration cost is constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .complexes import ChromaticComplex
from .encoding import lower_bound_rounds
from .errors import InvalidParameters


@dataclass(frozen=True)
class BoundsReport:
    """Formula bounds, plus degree-based bounds when a complex is given."""

    n: int
    r: int
    b: int
    lower_formula: float
    snapshot_upper: float
    two_process: bool
    degree_lower: int | None = None
    degree_upper: int | None = None
    measured_rounds: int | None = None

    def rows(self) -> list[tuple[str, object]]:
        out: list[tuple[str, object]] = [
            ("processes", self.n),
            ("iterations", self.r),
            ("bits", self.b),
            ("round lower bound", self.lower_formula),
            ("snapshot upper bound", self.snapshot_upper),
        ]
        if self.two_process:
            out.append(("two-process round complexity", 1))
        if self.degree_lower is not None:
            out.append(("degree lower bound", self.degree_lower))
        if self.degree_upper is not None:
            out.append(("degree upper bound", self.degree_upper))
        if self.measured_rounds is not None:
            out.append(("measured rounds", self.measured_rounds))
        return out


def bounds_table(
    n: int,
    r: int,
    b: int,
    c: ChromaticComplex | None = None,
    measured_rounds: int | None = None,
) -> BoundsReport:
    """Counting bounds for (n, r, b); degree bounds when c is supplied.

    n = 2 short-circuits: each iteration costs one round regardless of b,
    so the formula bounds are reported as the iteration count itself.
    """
    if n < 2:
        raise InvalidParameters("need at least two processes")
    if r < 1 or b < 1:
        raise InvalidParameters("need r >= 1 and b >= 1")
    if n == 2:
        lower: float = float(r)
        upper: float = float(r)
    else:
        lower = float(factorial(n)) ** (r - 1) * 2.0 ** (n - b)
        upper = n * lower
    degree_lower = degree_upper = None
    if c is not None:
        from .greedy import upper_bound_rounds

        degree_lower = lower_bound_rounds(c, b)
        degree_upper = upper_bound_rounds(c, b)
    return BoundsReport(
        n=n,
        r=r,
        b=b,
        lower_formula=lower,
        snapshot_upper=upper,
        two_process=(n == 2),
        degree_lower=degree_lower,
        degree_upper=degree_upper,
        measured_rounds=measured_rounds,
    )

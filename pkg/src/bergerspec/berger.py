"""Exact Laplace spectrum of the unit-volume Berger 3-sphere family.

The family is g_B^t = t^{-1} g_1 + (t^2 - t^{-1}) sigma_3^2 for t > 0,
where g_1 is the unit round metric on the 3-sphere.  Eigenmodes are
labelled by pairs (k, q) with 0 <= q <= k and q = k (mod 2); the mode
eigenvalue is

    t * (k(k+2) - q^2) + t^{-2} * q^2  =  t * (A + B x),

with A = k(k+2) - q^2, B = q^2 and x = t^{-3}.  After division by t every
branch is affine in x with non-negative integer coefficients, so sorting
the spectrum reduces to an exact lower-envelope computation over a family
of lines.  All branch arithmetic below is done with fractions.Fraction;
floating point enters only through the final multiplication by t.

Three one-parameter families of branches recur when the spectrum is
sorted: gamma_n = mode (n, n) with A = 2n, B = n^2; alpha_k = mode (k, 1)
for odd k with A = k^2 + 2k - 1, B = 1; and beta_l = mode (l, 0) for even
l with A = l(l+2), B = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

RationalLike = Union[int, Fraction, str]


@dataclass(frozen=True)
class Mode:
    """Eigenmode label (k, q) of the Berger sphere Laplacian."""

    k: int
    q: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or not isinstance(self.q, int):
            raise ValueError(f"mode indices must be integers, got ({self.k!r}, {self.q!r})")
        if self.k < 0 or self.q < 0 or self.q > self.k:
            raise ValueError(f"mode requires 0 <= q <= k, got (k={self.k}, q={self.q})")
        if (self.k - self.q) % 2 != 0:
            raise ValueError(f"mode requires q = k (mod 2), got (k={self.k}, q={self.q})")

    @property
    def A(self) -> int:
        return self.k * (self.k + 2) - self.q * self.q

    @property
    def B(self) -> int:
        return self.q * self.q

    def label(self) -> str:
        return f"({self.k},{self.q})"


@dataclass(frozen=True)
class AffineBranch:
    """A branch coefficient A + B*x of the spectrum, affine in x = t^{-3}."""

    A: int
    B: int
    source: Mode | None = None

    def value_at(self, x: RationalLike) -> Fraction:
        return Fraction(self.A) + Fraction(self.B) * Fraction(x)

    def same_line(self, other: "AffineBranch") -> bool:
        return self.A == other.A and self.B == other.B

    def label(self) -> str:
        return self.source.label() if self.source is not None else f"A={self.A},B={self.B}"


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenvalue with multiplicity and a source annotation."""

    value: float
    multiplicity: int
    source: Mode | str = "constant"

    def __post_init__(self) -> None:
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise ValueError(f"multiplicity must be a positive integer, got {self.multiplicity!r}")


def branch_of(mode: Mode) -> AffineBranch:
    return AffineBranch(mode.A, mode.B, mode)


def gamma_branch(n: int) -> AffineBranch:
    """Branch of mode (n, n): A = 2n, B = n^2."""
    return branch_of(Mode(n, n))


def alpha_branch(k: int) -> AffineBranch:
    """Branch of mode (k, 1) for odd k: A = k^2 + 2k - 1, B = 1."""
    if k % 2 != 1:
        raise ValueError(f"alpha branch requires odd k, got {k}")
    return branch_of(Mode(k, 1))


def beta_branch(l: int) -> AffineBranch:
    """Branch of mode (l, 0) for even l: A = l(l+2), B = 0."""
    if l % 2 != 0:
        raise ValueError(f"beta branch requires even l, got {l}")
    return branch_of(Mode(l, 0))


def mode_value(m: Mode, t: float) -> float:
    """Eigenvalue t*(A + B*t^{-3}) of mode m on g_B^t."""
    if t <= 0:
        raise ValueError(f"squash parameter t must be positive, got {t!r}")
    return t * (m.A + m.B * t ** -3)


def mode_multiplicity(m: Mode) -> int:
    """Multiplicity k+1 for q = 0, else 2(k+1).

    The rule is fixed by the round-sphere totals: at t = 1 the modes with
    fixed k must sum to the harmonic dimension (k+1)^2, and each q > 0
    carries the two circle-weight signs.
    """
    return m.k + 1 if m.q == 0 else 2 * (m.k + 1)


def enumerate_modes(k_max: int) -> list[Mode]:
    """All valid modes with k <= k_max, including (0, 0)."""
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max!r}")
    return [Mode(k, q) for k in range(k_max + 1) for q in range(k % 2, k + 1, 2)]


def _as_positive_fraction(x: RationalLike, name: str) -> Fraction:
    value = Fraction(x)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {x!r}")
    return value


def _modes_with_value_below(x: Fraction, bound: int) -> dict[int, list[Mode]]:
    """Group modes with A + B*x <= bound by the numerator of their value.

    Values are handled over the common denominator of x, so the scan is
    pure integer arithmetic: with x = P/Q the value numerator is
    k(k+2) Q + q^2 (P - Q), monotone in q for fixed k.  Each q-scan stops
    at the first excluded mode, and A >= 2k caps k, which keeps the sweep
    proportional to the output size even for extreme x.
    """
    P, Q = x.numerator, x.denominator
    slope = P - Q
    threshold = bound * Q
    groups: dict[int, list[Mode]] = {}
    for k in range(bound // 2 + 1):
        base = k * (k + 2) * Q
        qs = range(k % 2, k + 1, 2) if slope >= 0 else range(k, -1, -2)
        for q in qs:
            num = base + q * q * slope
            if num > threshold:
                break
            groups.setdefault(num, []).append(Mode(k, q))
    return groups


def distinct_spectrum_at(
    x: RationalLike, count: int
) -> list[tuple[Fraction, list[Mode]]]:
    """The `count` smallest distinct branch values A + B*x, exactly.

    Each returned value carries every mode attaining it.  Completeness
    comes from collecting every mode below a value bound and growing the
    bound until `count` distinct values fit under it.
    """
    xf = _as_positive_fraction(x, "x")
    if count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    bound = 4 * count
    while True:
        groups = _modes_with_value_below(xf, bound)
        if len(groups) >= count:
            nums = sorted(groups)[:count]
            return [(Fraction(n, xf.denominator), groups[n]) for n in nums]
        bound *= 2


def spectrum_with_multiplicity(
    x: RationalLike, count: int
) -> list[tuple[Fraction, int, list[Mode]]]:
    """Like distinct_spectrum_at, adding the total multiplicity per value."""
    return [
        (value, sum(mode_multiplicity(m) for m in modes), modes)
        for value, modes in distinct_spectrum_at(x, count)
    ]


def branch_crossing(b1: AffineBranch, b2: AffineBranch) -> Fraction | None:
    """The unique x > 0 where the two branch lines meet, or None.

    Parallel distinct lines and crossings at x <= 0 give None; identical
    lines are rejected.
    """
    if b1.same_line(b2):
        raise ValueError(f"identical branches A={b1.A}, B={b1.B} have no crossing")
    if b1.B == b2.B:
        return None
    x = Fraction(b2.A - b1.A, b1.B - b2.B)
    return x if x > 0 else None


@dataclass(frozen=True)
class PiecewiseCell:
    """One cell (lo, hi] of a piecewise branch assignment."""

    lo: Fraction
    hi: Fraction
    branch: AffineBranch


def _partition(
    pool: list[AffineBranch], i: int, x_max: Fraction
) -> list[PiecewiseCell] | None:
    cuts = set()
    for a in range(len(pool)):
        for b in range(a + 1, len(pool)):
            x = branch_crossing(pool[a], pool[b])
            if x is not None and x < x_max:
                cuts.add(x)
    edges = [Fraction(0)] + sorted(cuts) + [x_max]
    cells: list[PiecewiseCell] = []
    for lo, hi in zip(edges, edges[1:]):
        mid = (lo + hi) / 2
        values = sorted({br.value_at(mid) for br in pool})
        if len(values) < i:
            return None
        target = values[i - 1]
        winner = next(br for br in pool if br.value_at(mid) == target)
        if cells and cells[-1].branch.same_line(winner):
            cells[-1] = PiecewiseCell(cells[-1].lo, hi, cells[-1].branch)
        else:
            cells.append(PiecewiseCell(lo, hi, winner))
    return cells


def kth_distinct_piecewise(i: int, x_max: RationalLike) -> list[PiecewiseCell]:
    """Partition of (0, x_max] realizing the i-th smallest distinct value.

    Position i counts nonzero distinct values; the constant mode (0, 0) is
    excluded.  On each open cell interior the stated branch attains the
    i-th distinct value A + B*x; adjacent cells meet at exact rational
    breakpoints.  At a breakpoint where two branch values collide, the
    number of distinct values drops by one for that single x, so the i-th
    distinct value jumps there; the cell branch reports the two-sided
    limit instead.  The branch pool grows until every excluded branch
    provably exceeds the computed envelope everywhere on the interval.
    """
    if i < 1:
        raise ValueError(f"position must be a positive integer, got {i!r}")
    xm = _as_positive_fraction(x_max, "x_max")
    return list(_cells_for(i, xm))


@lru_cache(maxsize=None)
def _cells_for(i: int, xm: Fraction) -> tuple[PiecewiseCell, ...]:
    # pure search, safe to memoize; cells are frozen so sharing is harmless
    k_pool = 16
    a_cap: Fraction | None = None
    while True:
        pool = [
            branch_of(m)
            for m in enumerate_modes(k_pool)
            if m.A > 0 and (a_cap is None or m.A <= a_cap)
        ]
        cells = _partition(pool, i, xm) if pool else None
        if cells is not None:
            # branch values are nondecreasing in x, so the cell maximum sits
            # at the right endpoint
            envelope_max = max(c.branch.value_at(c.hi) for c in cells)
            # complete once every excluded branch (by k or by the A cap)
            # provably stays above the envelope: its value is at least its A,
            # and A >= 2k
            if 2 * (k_pool + 1) > envelope_max and (a_cap is None or a_cap >= envelope_max):
                return tuple(cells)
            # enlarging the pool can only lower the envelope, so this round's
            # maximum is a sound cap for the next round
            a_cap = envelope_max
            k_pool = max(2 * k_pool, int(envelope_max // 2) + 1)
        else:
            k_pool *= 2


def eleven_slot_table() -> list[list[PiecewiseCell]]:
    """The conventional eleven-curve table of the low spectrum.

    Slot j keeps its identity across branch crossings (curves trade places
    instead of trading labels), so slots differ from distinct-value
    positions wherever two curves have crossed.  The last cell of each
    slot nominally extends to infinity; it is encoded with hi = 0 meaning
    unbounded.
    """
    inf = Fraction(0)  # sentinel for an unbounded right end

    def cell(lo, hi, branch):
        return PiecewiseCell(Fraction(lo), Fraction(hi), branch)

    g, al, be = gamma_branch, alpha_branch, beta_branch
    return [
        [cell(0, 6, g(1)), cell(6, inf, be(2))],
        [cell(0, 1, g(2)), cell(1, inf, be(2))],
        [cell(0, Fraction(2, 9), g(3)), cell(Fraction(2, 9), inf, be(2))],
        [cell(0, inf, be(2))],
        [cell(0, Fraction(2, 5), g(4)), cell(Fraction(2, 5), 10, al(3)), cell(10, inf, be(4))],
        [cell(0, Fraction(1, 6), g(5)), cell(Fraction(1, 6), 10, al(3)), cell(10, inf, be(4))],
        [cell(0, Fraction(2, 35), g(6)), cell(Fraction(2, 35), 10, al(3)), cell(10, inf, be(4))],
        [cell(0, 10, al(3)), cell(10, inf, be(4))],
        [cell(0, Fraction(10, 49), g(7)), cell(Fraction(10, 49), inf, be(4))],
        [cell(0, Fraction(1, 8), g(8)), cell(Fraction(1, 8), inf, be(4))],
        [cell(0, Fraction(2, 27), g(9)), cell(Fraction(2, 27), inf, be(4))],
    ]


def slot_value_at(slot: int, x: RationalLike) -> Fraction:
    """Coefficient value of table slot `slot` (1-based) at x."""
    xf = _as_positive_fraction(x, "x")
    if not 1 <= slot <= 11:
        raise ValueError(f"slot must be in 1..11, got {slot!r}")
    for c in eleven_slot_table()[slot - 1]:
        if xf <= c.hi or c.hi == 0:
            return c.branch.value_at(xf)
    raise AssertionError("unreachable: last slot cell is unbounded")


def tanno_lambda1(t: float) -> float:
    """First nonzero eigenvalue of g_B^t.

    Equals t(2 + t^{-3}) while t^{-3} <= 6 (mode (1,1)) and 8t beyond
    (mode (2,0)); the two branches agree at t^{-3} = 6.
    """
    if t <= 0:
        raise ValueError(f"squash parameter t must be positive, got {t!r}")
    x = t ** -3
    return t * (2 + x) if x <= 6 else 8 * t


def scale_spectrum(entries: Iterable[SpectrumEntry], mu: float) -> list[SpectrumEntry]:
    """Rescale eigenvalues for a metric scaled by mu: values divide by mu."""
    if mu <= 0:
        raise ValueError(f"scale factor must be positive, got {mu!r}")
    return [replace(e, value=e.value / mu) for e in entries]


def epsilon_lambda1(eps: float) -> float:
    """First nonzero eigenvalue of g_eps = sigma_1^2 + sigma_2^2 + eps^2 sigma_3^2.

    Routed through the identification g_eps = eps^{2/3} g_B^t with
    t = eps^{2/3}, then unscaled by mu = eps^{2/3}: eigenvalues of a
    metric mu*g are those of g divided by mu.  The result equals 8 for
    eps <= 1/sqrt(6) and 2 + 1/eps^2 above.
    """
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps!r}")
    t = eps ** (2.0 / 3.0)
    source = Mode(1, 1) if t ** -3 <= 6 else Mode(2, 0)
    entry = SpectrumEntry(tanno_lambda1(t), mode_multiplicity(source), source)
    return scale_spectrum([entry], t)[0].value

"""Exhaustive case search over (ell, m, x_ell, x_m) and the inequality audit.

For profiles with x_ell < ell the certificate pairs the hitting set T2 with
one of eight packing recipes (P13, P14, P15^l, P15^m, P16^l, P16^m, P17^l,
P17^m).  Each recipe is a union of clique packings p(K_n) and apex-over-
matching packings p(S, K), so its size admits a profile-level lower bound
assembled from the corresponding count bounds.  Scaling by 6 keeps all
arithmetic in integers: f_i = 6*|P_recipe| - 3*|T2|, and a recipe settles a
profile when f_i > -3 (then 2|P| - |T2| >= 0 by integrality).

The search enumerates all constrained profiles with ell, m <= limit and
collects the tuples where every f_i fails.  Which exact lower-bound variant
goes into each term is not fully pinned by the analysis, so the variant
choice is explicit here (BoundStrategy) and the search can report the
outcome under every variant instead of silently picking one:

* clique terms: "exact" uses the exact deficiency k(n) of the maximum
  packing of K_n (these packings are constructed, so the recipe realizes the
  value); "universal" uses the all-n bound (binom(n,2) - n/2 - 3/2)/3;
  "observation" uses the best of the three always-valid relaxations.
* apex terms: with the even-|K| form enabled, p(S, K) is scored as
  max((|K|-1)/2 * min(|S|, |K|), [|K| even] |K|/2 * min(|S|, |K|-1)),
  exactly what the matching-assignment construction realizes.

The default strategy (exact cliques, even form on) reproduces the published
list of 12 exceptional tuples; the audit report also evaluates the others.

``audit_inequalities`` replays every displayed inequality chain of the case
analysis step by step over its case-condition range, in exact rational
arithmetic, and reports each violated step.  Violations indicate slack in a
written chain, never in a certificate: the certifier checks realized sizes
directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Iterable

from .graphs import CaseProfile
from .packings import feder_count

EXPECTED_EXCEPTIONAL: frozenset[tuple[int, int, int, int]] = frozenset(
    {
        (1, 2, 0, 1),
        (2, 1, 1, 0),
        (2, 2, 1, 1),
        (2, 3, 1, 2),
        (2, 5, 1, 4),
        (3, 2, 2, 1),
        (3, 3, 2, 1),
        (3, 4, 2, 3),
        (3, 6, 2, 5),
        (4, 3, 3, 2),
        (5, 2, 4, 1),
        (6, 3, 5, 2),
    }
)

F_RECIPE_IDS = ("P13", "P14", "P15l", "P15m", "P16l", "P16m", "P17l", "P17m")


@dataclass(frozen=True)
class BoundStrategy:
    """Which lower-bound variant feeds each term of the f-functions."""

    clique_variant: str = "exact"  # exact | universal | observation
    even_form: bool = True

    def describe(self) -> str:
        return f"clique={self.clique_variant},even_form={self.even_form}"


DEFAULT_STRATEGY = BoundStrategy()

ALL_STRATEGIES = (
    BoundStrategy("exact", True),
    BoundStrategy("observation", True),
    BoundStrategy("universal", True),
    BoundStrategy("universal", False),
)


def _clique_bound6(n: int, strategy: BoundStrategy) -> int:
    """6 times a lower bound on the maximum triangle packing of K_n."""
    if n <= 2:
        return 0
    pairs2 = n * (n - 1)  # 2 * binom(n, 2)
    if strategy.clique_variant == "exact":
        return 2 * (comb(n, 2) - feder_count(n).k)
    if strategy.clique_variant == "universal":
        return pairs2 - n - 3
    if strategy.clique_variant == "observation":
        best = pairs2 - n - 3
        if n % 2 == 1:
            best = max(best, pairs2 - 8)
        if n != 5:
            best = max(best, pairs2 - n - 2)
        return max(best, 0)
    raise ValueError(f"unknown clique variant {strategy.clique_variant!r}")


def _side_bound6(s: int, k: int, strategy: BoundStrategy) -> int:
    """6 times a lower bound on p(S, K) with |S| = s apexes over a k-clique."""
    if k < 2 or s < 1:
        return 0
    bound = 3 * (k - 1) * min(s, k)
    if strategy.even_form and k % 2 == 0:
        bound = max(bound, 3 * k * min(s, k - 1))
    return bound


def t2_size(p: CaseProfile) -> int:
    """|T2| = 2*binom(m,2) + 2*binom(ell,2) + m*x_ell + ell*x_m - x_ell*x_m."""
    ell, m, xl, xm = p.as_tuple()
    return (
        2 * comb(m, 2) + 2 * comb(ell, 2) + m * xl + ell * xm - xl * xm
    )


def _recipe_terms(
    recipe: str, p: CaseProfile
) -> list[tuple[str, tuple[int, ...]]]:
    """The clique/apex terms a recipe is assembled from, at profile level."""
    ell, m, xl, xm = p.as_tuple()
    half_m = ("side", (m, m))
    half_l = ("side", (ell, ell))
    table: dict[str, list[tuple[str, tuple[int, ...]]]] = {
        "P13": [
            ("clique", (m + xl,)),
            ("side", (xl + xm, ell - xl)),
            half_m,
            half_l,
        ],
        "P14": [half_m, half_l, ("side", ((ell - xl) + (m - xm), xl + xm))],
        "P15l": [("clique", (ell,)), ("side", (xl, m)), half_m, half_l],
        "P15m": [("clique", (m,)), ("side", (xm, ell)), half_m, half_l],
        "P16l": [("clique", (2 * ell,)), ("side", (xl, m)), half_m],
        "P16m": [("clique", (2 * m,)), ("side", (xm, ell)), half_l],
        "P17l": [
            ("clique", (2 * ell,)),
            ("side", (xl, m - 1)),
            ("side", (m - 1, m + 1)),
        ],
        "P17m": [
            ("clique", (2 * m,)),
            ("side", (xm, ell - 1)),
            ("side", (ell - 1, ell + 1)),
        ],
    }
    if recipe not in table:
        raise ValueError(f"unknown recipe id {recipe!r}")
    return table[recipe]


def recipe_lower_bound(
    recipe: str, p: CaseProfile, strategy: BoundStrategy = DEFAULT_STRATEGY
) -> int:
    """6 times the certified lower bound on the recipe's packing size."""
    total = 0
    for kind, args in _recipe_terms(recipe, p):
        if kind == "clique":
            total += _clique_bound6(args[0], strategy)
        else:
            total += _side_bound6(args[0], args[1], strategy)
    return total


@dataclass(frozen=True)
class CaseFunctionReport:
    profile: CaseProfile
    f_values: tuple[int, ...]
    passing: frozenset[int]
    exceptional: bool
    strategy: BoundStrategy = DEFAULT_STRATEGY

    def __post_init__(self) -> None:
        assert self.exceptional == (not self.passing)


def _check_search_constraints(p: CaseProfile) -> None:
    ell, m, xl, xm = p.as_tuple()
    if not (xl < ell and xm < m):
        raise ValueError(f"profile {p.as_tuple()} must satisfy x_ell < ell, x_m < m")
    if ell + xm > m + xl:
        raise ValueError(f"profile {p.as_tuple()} must satisfy ell + x_m <= m + x_ell")
    if ell - xl > xm + xl:
        raise ValueError(f"profile {p.as_tuple()} must satisfy ell - x_ell <= x_m + x_ell")


def evaluate_case_functions(
    p: CaseProfile, strategy: BoundStrategy = DEFAULT_STRATEGY
) -> CaseFunctionReport:
    """f_1..f_8 at a profile; a recipe passes when its f-value exceeds -3."""
    _check_search_constraints(p)
    t2 = t2_size(p)
    values = tuple(
        recipe_lower_bound(rid, p, strategy) - 3 * t2 for rid in F_RECIPE_IDS
    )
    passing = frozenset(i for i, v in enumerate(values) if v > -3)
    return CaseFunctionReport(p, values, passing, not passing, strategy)


def constrained_profiles(limit: int) -> Iterable[CaseProfile]:
    """All search-domain profiles with ell, m <= limit."""
    for ell, m in product(range(1, limit + 1), repeat=2):
        for xl, xm in product(range(ell), range(m)):
            if ell + xm <= m + xl and ell - xl <= xm + xl:
                yield CaseProfile(ell, m, xl, xm)


def search_exceptional(
    limit: int = 10, strategy: BoundStrategy = DEFAULT_STRATEGY
) -> set[CaseProfile]:
    """Profiles in the constrained domain where every f_i fails (<= -3)."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    return {
        p
        for p in constrained_profiles(limit)
        if evaluate_case_functions(p, strategy).exceptional
    }


# ---------------------------------------------------------------------------
# Numeric audit of the displayed inequality chains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StepViolation:
    chain: str
    step: str
    params: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ChainReport:
    chain: str
    checked: int
    violations: tuple[StepViolation, ...]


@dataclass(frozen=True)
class AuditReport:
    max_half: int
    chains: tuple[ChainReport, ...]

    @property
    def violations(self) -> list[StepViolation]:
        return [v for c in self.chains for v in c.violations]


@dataclass(frozen=True)
class _Chain:
    """One displayed chain: a parameter domain plus ordered >= steps.

    Each step maps the parameter tuple to (lhs, rhs); the audit records a
    violation whenever lhs < rhs.
    """

    anchor: str
    domain: Callable[[int], Iterable[tuple[int, ...]]]
    steps: tuple[tuple[str, Callable[..., tuple[Fraction, Fraction]]], ...]


def _c2(n: int) -> int:
    return n * (n - 1) // 2


def _dom_case1(limit: int) -> Iterable[tuple[int, ...]]:
    # x_ell >= ell, 2 <= ell <= m, x_ell <= min(m, 2 ell), m <= x_m <= 2 m
    for ell in range(2, limit + 1):
        for m in range(ell, limit + 1):
            for xl in range(ell, min(m, 2 * ell) + 1):
                for xm in range(m, 2 * m + 1):
                    yield ell, m, xl, xm


def _dom_case21(limit: int) -> Iterable[tuple[int, ...]]:
    # case 2.1: x_ell > m, x_m <= m + ell, 2 <= ell <= m
    for ell in range(2, limit + 1):
        for m in range(ell, limit + 1):
            for xl in range(m + 1, 2 * ell + 1):
                for xm in range(m, min(m + ell, 2 * m) + 1):
                    yield ell, m, xl, xm


def _dom_case22(limit: int) -> Iterable[tuple[int, ...]]:
    # case 2.2: x_ell > m, x_m > m + ell, 2 <= ell < m
    for ell in range(2, limit + 1):
        for m in range(ell + 1, limit + 1):
            for xl in range(m + 1, 2 * ell + 1):
                for xm in range(m + ell + 1, 2 * m + 1):
                    yield ell, m, xl, xm


def _dom_321(limit: int) -> Iterable[tuple[int, ...]]:
    # x_ell < ell, x_m < m, ell + x_m <= m + x_ell, x_m + x_ell < ell - x_ell
    for ell in range(1, limit + 1):
        for m in range(1, limit + 1):
            for xl in range(ell):
                for xm in range(m):
                    if ell + xm <= m + xl and xm + xl < ell - xl:
                        yield ell, m, xl, xm


def _dom_322(limit: int) -> Iterable[tuple[int, ...]]:
    for ell in range(1, limit + 1):
        for m in range(1, limit + 1):
            for xl in range(ell):
                for xm in range(m):
                    if ell + xm <= m + xl and ell - xl <= xm + xl:
                        yield ell, m, xl, xm


def _build_chains() -> list[_Chain]:
    F = Fraction
    chains: list[_Chain] = []

    def chain(anchor, domain, *steps):
        chains.append(_Chain(anchor, domain, tuple(steps)))

    def p3_master(ell, m, xl, xm):
        return (
            (m - 1) * min(xl, m)
            + (ell - 1) * min(xm - m, ell)
            - ell * m
            - (xl - ell) * (xm - m)
        )

    # case 1 master reduction of the P3 bound
    chain(
        "(m-1)*min{x_l,m}",
        _dom_case1,
        (
            "case1-reduction",
            lambda ell, m, xl, xm: (
                F(p3_master(ell, m, xl, xm)),
                F(
                    (xl - ell) * (2 * m - xm)
                    + (ell - 1) * min(xm - m, ell)
                    - xl
                ),
            ),
        ),
    )

    # case 1, min = ell branch
    def dom_case1_min_ell(limit):
        for ell, m, xl, xm in _dom_case1(limit):
            if xm - m >= ell:
                yield ell, m, xl, xm

    chain(
        "(x_l-l)*(2m-x_m)",
        dom_case1_min_ell,
        (
            "xm<2m:val>=(l-2)l",
            lambda ell, m, xl, xm: (
                F((xl - ell) * (2 * m - xm) + (ell - 1) * ell - xl),
                F((ell - 2) * ell) if xm < 2 * m else F((ell - 3) * ell),
            ),
        ),
        (
            "l>=3,xm=2m:nonneg",
            lambda ell, m, xl, xm: (
                F((ell - 1) * ell - xl) if xm == 2 * m and ell >= 3 else F(0),
                F(0),
            ),
        ),
    )

    # case 1, min = x_m - m, x_ell > ell
    def dom_case1_min_xm(limit):
        for ell, m, xl, xm in _dom_case1(limit):
            if xm - m < ell and xl > ell:
                yield ell, m, xl, xm

    chain(
        "case1 x_l>l slack",
        dom_case1_min_xm,
        (
            "val>=m-x_l>=0",
            lambda ell, m, xl, xm: (
                F((xl - ell) * (2 * m - xm) + (ell - 1) * (xm - m) - xl),
                F(m - xl),
            ),
        ),
    )

    # P7 chain
    def dom_p7(limit):
        for ell in range(2, limit + 1):
            for m in range(ell, limit + 1):
                if ell + m != 5:
                    yield (ell, m)

    chain(
        "(m-l)^2+(m-2)(l-2)-6",
        dom_p7,
        (
            "identity",
            lambda ell, m: (
                F(2, 3) * (_c2(ell + m) - F(ell + m, 2) - 1) - ell * m,
                F((m - ell) ** 2 + (m - 2) * (ell - 2) - 6, 3),
            ),
        ),
        (
            "m-l>=2 or l>=4 => >= -2/3",
            lambda ell, m: (
                F((m - ell) ** 2 + (m - 2) * (ell - 2) - 6, 3)
                if (m - ell >= 2 or (m == ell and ell >= 4))
                else F(0),
                F(-2, 3) if (m - ell >= 2 or (m == ell and ell >= 4)) else F(0),
            ),
        ),
        (
            "m-l=1,l>=3: odd-n form >= -2/3",
            lambda ell, m: (
                F(2, 3) * (_c2(2 * ell + 1) - 4) - ell * (ell + 1)
                if m - ell == 1
                else F(0),
                F(ell * ell - ell - 8, 3) if m - ell == 1 else F(0),
            ),
        ),
    )

    # case 2.1 master identity and m-l >= 2 slack
    chain(
        "m*(m-l-1)",
        _dom_case21,
        (
            "identity",
            lambda ell, m, xl, xm: (
                F(
                    (m - 1) * m
                    + (ell - 1) * (xm - m)
                    - ell * m
                    - (xl - ell) * (xm - m)
                ),
                F(m * (m - ell - 1) + (xm - m) * (2 * ell - 1 - xl)),
            ),
        ),
        (
            "m-l>=2 => >= 2m-x_m",
            lambda ell, m, xl, xm: (
                F(m * (m - ell - 1) + (xm - m) * (2 * ell - 1 - xl))
                if m - ell >= 2
                else F(0),
                F(2 * m - xm) if m - ell >= 2 else F(0),
            ),
        ),
    )

    # case 2.1, m = l + 1, x_l = 2l: the P2 chain
    def dom_p2_21(limit):
        for ell in range(2, limit):
            m = ell + 1
            if m <= limit:
                for xm in range(m, min(m + ell, 2 * m) + 1):
                    yield (ell, m, 2 * ell, xm)

    chain(
        "l^2-1-l*(x_m-m)",
        dom_p2_21,
        (
            "identity",
            lambda ell, m, xl, xm: (
                F(2, 3) * (_c2(3 * ell + 1) - F(3 * ell + 1, 2) - 1)
                - ell * (ell + 1)
                - 2 * _c2(ell)
                - (xm - m) * ell,
                F(ell * ell - 1 - ell * (xm - m)),
            ),
        ),
        (
            "x_m-m<=l-1 => >=0",
            lambda ell, m, xl, xm: (
                F(ell * ell - 1 - ell * (xm - m)) if xm - m <= ell - 1 else F(0),
                F(0),
            ),
        ),
    )

    # P9 chain (m = l + 1, x_l = 2l, x_m = 2m - 1)
    def dom_p9(limit):
        for ell in range(2, limit):
            if ell + 1 <= limit:
                yield (ell,)

    chain(
        "P9: (4l^2+l-8)/3 >= 10/3",
        dom_p9,
        (
            "identity",
            lambda ell: (
                F(2, 3) * (_c2(4 * ell + 1) - 4) - 4 * ell * ell - ell,
                F(4 * ell * ell + ell - 8, 3),
            ),
        ),
        (
            ">=10/3",
            lambda ell: (F(4 * ell * ell + ell - 8, 3), F(10, 3)),
        ),
    )

    # P10' chain (subcase 2.1, l = m odd, x_l > l)
    def dom_p10(limit):
        for ell in range(3, limit + 1, 2):
            for xl in range(ell + 1, 2 * ell + 1):
                for xm in range(ell, 2 * ell + 1):
                    yield (ell, xl, xm)

    def p10_expr(ell, xl, xm):
        return (
            2 * _c2(ell)
            + (ell - 1) * min(xl - ell, ell)
            + 2 * (xm - ell)
            - ell * ell
            - (xl - ell) * (xm - ell)
        )

    chain(
        "(x_l-l-1)*(2l-1-x_m)",
        dom_p10,
        (
            "identity",
            lambda ell, xl, xm: (
                F(p10_expr(ell, xl, xm)),
                F((xl - ell - 1) * (2 * ell - 1 - xm) + xm - ell - 1),
            ),
        ),
        (
            "x_l>l+1 => >= l-2",
            lambda ell, xl, xm: (
                F(p10_expr(ell, xl, xm)) if xl > ell + 1 else F(ell - 2),
                F(ell - 2),
            ),
        ),
        (
            "x_l>l+1 => >= 0 (used conclusion)",
            lambda ell, xl, xm: (
                F(p10_expr(ell, xl, xm)) if xl > ell + 1 else F(0),
                F(0),
            ),
        ),
        (
            "x_l=l+1,x_m>l => >= x_m-l-1 >= 0",
            lambda ell, xl, xm: (
                F(p10_expr(ell, xl, xm)) if xl == ell + 1 and xm > ell else F(0),
                F(xm - ell - 1) if xl == ell + 1 and xm > ell else F(0),
            ),
        ),
    )

    # P11 chain (l = m = x_m, x_l = l + 1, l odd >= 3)
    def dom_p11(limit):
        for ell in range(3, limit + 1, 2):
            yield (ell,)

    chain(
        "1/3(l^2-4l-2)",
        dom_p11,
        (
            "identity",
            lambda ell: (
                F(2, 3) * (_c2(2 * ell + 1) - 4)
                + (ell - 1) * (ell - 2)
                - ell * (ell - 1)
                - ell * ell,
                F(ell * ell - 4 * ell - 2, 3),
            ),
        ),
        (
            "l>=5 => >=1",
            lambda ell: (
                F(ell * ell - 4 * ell - 2, 3) if ell >= 5 else F(1),
                F(1),
            ),
        ),
        (
            "l=3 exact-K7 form >= 1",
            lambda ell: (
                F(2, 3) * _c2(2 * ell + 1)
                + (ell - 1) * (ell - 2)
                - ell * (ell - 1)
                - ell * ell
                if ell == 3
                else F(1),
                F(1),
            ),
        ),
    )

    # P12 chain (subcase 2.2)
    def p12_line1(ell, m, xl, xm):
        return (
            (xl - 1) * min(m, xl)
            + (xm - m - 1) * min(ell, xm - m)
            - ell * m
            - (xl - ell) * (xm - m)
            - ell * (ell - 1)
        )

    chain(
        "(m-l)^2-(m-l)-1",
        _dom_case22,
        (
            "min-substitution",
            lambda ell, m, xl, xm: (
                F(p12_line1(ell, m, xl, xm)),
                F(
                    (xl - 1) * m
                    + (xm - m - 1) * ell
                    - ell * m
                    - (xl - ell) * (xm - m)
                    - ell * (ell - 1)
                ),
            ),
        ),
        (
            "identity-2",
            lambda ell, m, xl, xm: (
                F(
                    (xl - 1) * m
                    + (xm - m - 1) * ell
                    - ell * m
                    - (xl - ell) * (xm - m)
                    - ell * (ell - 1)
                ),
                F(
                    (xm - m) * (2 * ell - xl)
                    - ell * ell
                    - ell * m
                    - m
                    + m * xl
                ),
            ),
        ),
        (
            "substitutions => (m-l)^2-(m-l)-1",
            lambda ell, m, xl, xm: (
                F((xm - m) * (2 * ell - xl) - ell * ell - ell * m - m + m * xl),
                F((m - ell) ** 2 - (m - ell) - 1),
            ),
        ),
        (
            "m-l>=2 => >=1",
            lambda ell, m, xl, xm: (
                F((m - ell) ** 2 - (m - ell) - 1) if m - ell >= 2 else F(1),
                F(1),
            ),
        ),
    )

    # ell = 1 chains (P1 and P2)
    def dom_l1(limit):
        return ((m,) for m in range(4, limit + 1))

    chain(
        "l=1: (m^2-4m-2)/3",
        dom_l1,
        (
            "P1-identity",
            lambda m: (
                F(2, 3) * (_c2(2 * m) - m - 1) - m * m,
                F(m * m - 4 * m - 2, 3),
            ),
        ),
        (
            "P2-identity",
            lambda m: (
                F(2, 3) * (_c2(m + 2) - F(m + 2, 2) - 1) + m * (m - 1) - m * m - m,
                F(m * m - 4 * m - 2, 3),
            ),
        ),
        (
            ">= -2/3",
            lambda m: (F(m * m - 4 * m - 2, 3), F(-2, 3)),
        ),
    )

    # case 1 P4 chain
    def dom_p4(limit):
        for m in range(3, limit + 1):
            for xl in (3, 4):
                if xl <= m:
                    yield (m, xl)

    chain(
        "case1-P4: (m^2-2-m(3x_l-7))/3",
        dom_p4,
        (
            "identity",
            lambda m, xl: (
                F(2, 3) * (_c2(2 * m + 2) - m - 2) - m * m - m * (xl - 1),
                F(m * m - 2 - m * (3 * xl - 7), 3),
            ),
        ),
        (
            "x_l=3 => >=1/3",
            lambda m, xl: (
                F(m * m - 2 * m - 2, 3) if xl == 3 else F(1, 3),
                F(1, 3),
            ),
        ),
        (
            "x_l=4,m>=5 => >=-2/3",
            lambda m, xl: (
                F(m * m - 5 * m - 2, 3) if xl == 4 and m >= 5 else F(-2, 3),
                F(-2, 3),
            ),
        ),
    )

    # subcase 2.2 P4 chain (m = l + 1, x_m = 2m, x_l <= 2l - 1)
    def dom_p4_22(limit):
        for ell in range(2, limit):
            if ell + 1 <= limit:
                for xl in range(ell + 2, 2 * ell):
                    yield (ell, xl)

    chain(
        "case2.2-P4: (3l^2-2)/3-(l+1)(x_l-l)",
        dom_p4_22,
        (
            "identity",
            lambda ell, xl: (
                F(2, 3) * (_c2(3 * ell + 2) - F(3 * ell + 2, 2) - 1)
                - 2 * _c2(ell + 1)
                - ell * (ell + 1)
                - (ell + 1) * (xl - ell),
                F(3 * ell * ell - 2, 3) - (ell + 1) * (xl - ell),
            ),
        ),
        (
            "x_l<=2l-1 => >=1/3",
            lambda ell, xl: (
                F(3 * ell * ell - 2, 3) - (ell + 1) * (xl - ell),
                F(1, 3),
            ),
        ),
    )

    # subcase 2.2, x_l = 2l even-form chain value = l
    def dom_even22(limit):
        return ((ell,) for ell in range(2, limit))

    chain(
        "case2.2 even-form value = l",
        dom_even22,
        (
            "identity",
            lambda ell: (
                F(
                    2 * ell * (ell + 1)
                    + ell * ell
                    - ell * (ell + 1)
                    - ell * (ell + 1)
                    - ell * (ell - 1)
                ),
                F(ell),
            ),
        ),
    )

    # 3.2.1 derived linear inequalities and the final rational chain
    def f321_rhs1(ell, m, xl, xm):
        return (m + xl) * (m + xl - 2) - 3 + 3 * (ell - xl - 1) * (xm + xl) - (
            3 * m * xl + 3 * ell * xm - 3 * xl * xm
        )

    def f321_quad(ell, m, xl, xm):
        return (
            m * m
            - 2 * m
            - m * xl
            - 3
            - (2 * xl * xl + 5 * xl + 3 * xm - 3 * ell * xl)
        )

    chain(
        "3.2.1: derived bounds",
        _dom_321,
        (
            "expand-identity",
            lambda ell, m, xl, xm: (
                F(f321_rhs1(ell, m, xl, xm)),
                F(f321_quad(ell, m, xl, xm)),
            ),
        ),
        (
            "2m-x_l >= 7/2 x_m + l/2 + 3/2",
            lambda ell, m, xl, xm: (
                F(2 * m - xl),
                F(7, 2) * xm + F(ell, 2) + F(3, 2),
            ),
        ),
        (
            "2m-x_l-2 >= 7/2 x_m",
            lambda ell, m, xl, xm: (F(2 * m - xl - 2), F(7, 2) * xm),
        ),
        (
            "final: quad >= 49x_m^2/16+15x_l^2/4+3x_mx_l-3x_m-3x_l-4",
            lambda ell, m, xl, xm: (
                F(f321_quad(ell, m, xl, xm)),
                F(49, 16) * xm * xm
                + F(15, 4) * xl * xl
                + 3 * xm * xl
                - 3 * xm
                - 3 * xl
                - 4,
            ),
        ),
    )

    # 3.2.2 large-parameter reduction
    def f322_start(ell, m, xl, xm):
        return (
            (m + xl) * (m + xl - 2)
            - 3
            + 3 * (ell - xl) * (ell - xl - 1)
            - 3 * (m * xl + ell * xm - xl * xm)
        )

    chain(
        "24l^2+24m^2-60m-60l-36lm-85",
        _dom_322,
        (
            "x_m substitution",
            lambda ell, m, xl, xm: (
                F(f322_start(ell, m, xl, xm)),
                F(
                    m * m
                    - 2 * m
                    - 3
                    + 6 * ell * ell
                    - 3 * ell
                    - 3 * ell * m
                    + 7 * xl * xl
                    - xl * (12 * ell - 2 * m - 1)
                ),
            ),
        ),
        (
            "quadratic vertex bound",
            lambda ell, m, xl, xm: (
                F(
                    m * m
                    - 2 * m
                    - 3
                    + 6 * ell * ell
                    - 3 * ell
                    - 3 * ell * m
                    + 7 * xl * xl
                    - xl * (12 * ell - 2 * m - 1)
                ),
                F(
                    24 * ell * ell
                    + 24 * m * m
                    - 60 * m
                    - 60 * ell
                    - 36 * ell * m
                    - 85,
                    28,
                ),
            ),
        ),
        (
            "max(l,m)>=11 => > -3",
            lambda ell, m, xl, xm: (
                F(
                    24 * ell * ell
                    + 24 * m * m
                    - 60 * m
                    - 60 * ell
                    - 36 * ell * m
                    - 85,
                    28,
                )
                if max(ell, m) >= 11
                else F(0),
                F(-3) + F(1, 1000) if max(ell, m) >= 11 else F(0),
            ),
        ),
    )

    return chains


_CHAINS = _build_chains()

CHAIN_ANCHORS = tuple(c.anchor for c in _CHAINS)


def audit_inequalities(max_half: int = 25) -> AuditReport:
    """Evaluate every displayed chain over its case-condition range."""
    reports = []
    for chain in _CHAINS:
        violations: list[StepViolation] = []
        checked = 0
        for params in chain.domain(max_half):
            checked += 1
            for name, fn in chain.steps:
                lhs, rhs = fn(*params)
                if lhs < rhs:
                    violations.append(
                        StepViolation(chain.anchor, name, tuple(params), lhs, rhs)
                    )
        reports.append(ChainReport(chain.anchor, checked, tuple(violations)))
    return AuditReport(max_half, tuple(reports))

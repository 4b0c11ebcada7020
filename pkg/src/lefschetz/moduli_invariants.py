"""Numerical invariants of the fibred 4-manifold and their consistency verdicts.

Everything downstream of the signature lives here: Euler characteristic,
the degree of the determinant line over the base sphere, the
Weil-Petersson pairing, the genus-2 fractional signature formula and its
divisibility / double-cover consequences, the hyperelliptic equality, and
the rule that an all-separating word bounds nothing.

Checks are reported as named verdicts rather than exceptions wherever a
failure is informative (a word can be homologically consistent yet fail the
necessary conditions for realizability).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .meyer_signature import SignatureBreakdown, total_signature
from .monodromy import Separating, Word, check_global_relation
from .zariski_homology import HomologyReport, homology_report


class NonIntegralHodgeDegreeError(ArithmeticError):
    """sigma + r was not divisible by 4: an internal inconsistency, never valid output."""


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class WordStats:
    """Counts of critical fibres by kind."""

    genus: int
    twist_count: int  # total critical fibres
    nonseparating: int
    separating: int
    separating_by_type: tuple[tuple[int, int], ...]  # (h, count), ascending h, counts > 0
    # (nonseparating + 2*separating)/10; meaningful only at genus 2, where it
    # is the degree parameter of the sphere-bundle double cover when integral
    cover_parameter: Fraction | None

    def __post_init__(self) -> None:
        if self.nonseparating + self.separating != self.twist_count:
            raise ValueError("twist counts do not add up")
        if sum(c for _, c in self.separating_by_type) != self.separating:
            raise ValueError("separating type counts do not add up")


def word_stats(w: Word) -> WordStats:
    by_type: dict[int, int] = {}
    sep = 0
    for t in w.twists:
        if isinstance(t, Separating):
            sep += 1
            by_type[t.h] = by_type.get(t.h, 0) + 1
    r = len(w.twists)
    n = r - sep
    cover = Fraction(n + 2 * sep, 10) if w.genus == 2 else None
    return WordStats(
        genus=w.genus,
        twist_count=r,
        nonseparating=n,
        separating=sep,
        separating_by_type=tuple(sorted(by_type.items())),
        cover_parameter=cover,
    )


def euler_characteristic(w: Word) -> int:
    """chi of the total space: sphere times fibre, plus one per critical point."""
    return 4 - 4 * w.genus + len(w.twists)


def hodge_degree(w: Word) -> int:
    """Degree of the determinant line over the base: (sigma + r)/4."""
    sigma = total_signature(w).signature
    return _hodge_from(sigma, len(w.twists))


def _hodge_from(sigma: int, r: int) -> int:
    if (sigma + r) % 4 != 0:
        raise NonIntegralHodgeDegreeError(
            f"sigma + r = {sigma + r} not divisible by 4; cocycle or input is inconsistent"
        )
    return (sigma + r) // 4


def wp_pairing(w: Word) -> int:
    """Weil-Petersson pairing with the base sphere, in units of 2 pi^2."""
    return 12 * hodge_degree(w) - len(w.twists)


def genus2_fractional_signature(n: int, s: int) -> Fraction:
    """Exact genus-2 signature from fibre counts: -(3n + s)/5."""
    return Fraction(-(3 * n + s), 5)


def divisibility_verdict(g: int, n: int, s: int) -> Verdict:
    """Abelianized mapping-class-group constraint on the counts.

    Genus 1: the group abelianizes to Z/12, so 12 | n (and s = 0 by
    construction).  Genus 2: Z/10 with separating twists weighing double, so
    10 | n + 2s.  From genus 3 on the group is perfect and nothing is
    constrained.
    """
    if g == 1:
        ok = n % 12 == 0
        return Verdict("divisibility", ok, f"genus 1 requires 12 | n; n = {n}")
    if g == 2:
        ok = (n + 2 * s) % 10 == 0
        return Verdict("divisibility", ok, f"genus 2 requires 10 | n + 2s; n + 2s = {n + 2 * s}")
    return Verdict("divisibility", True, f"no constraint at genus {g}")


def genus2_double_cover_base(n: int, s: int) -> tuple[str, int]:
    """Parity of the sphere bundle the genus-2 total space double-covers.

    Returns ("even" | "odd", m) with n + 2s = 10 m.  Even means the trivial
    bundle (a product of spheres up to diffeomorphism), odd the twisted one.
    """
    total = n + 2 * s
    if total % 10 != 0:
        raise ValueError(f"divisibility fails: n + 2s = {total} not a multiple of 10")
    m = total // 10
    return ("even" if m % 2 == 0 else "odd"), m


def endo_check(w: Word) -> Verdict:
    """Hyperelliptic signature equality; the caller vouches for hyperellipticity."""
    sigma = total_signature(w).signature
    return _endo_verdict(word_stats(w), _hodge_from(sigma, len(w.twists)))


def _endo_verdict(stats: WordStats, hodge: int) -> Verdict:
    g = stats.genus
    lhs = (8 * g + 4) * hodge
    rhs = g * stats.nonseparating + sum(
        4 * h * (g - h) * count for h, count in stats.separating_by_type
    )
    return Verdict(
        "endo_equality",
        lhs == rhs,
        f"(8g+4)*hodge = {lhs}, weighted fibre count = {rhs}",
    )


def torelli_check(w: Word) -> Verdict:
    """A relation made entirely of separating twists is not realizable."""
    all_sep = all(isinstance(t, Separating) for t in w.twists)
    if all_sep:
        return Verdict(
            "torelli_realizable",
            False,
            "NotRealizable: every twist acts trivially on homology",
        )
    return Verdict("torelli_realizable", True, "word leaves the Torelli group")


@dataclass(frozen=True)
class InvariantReport:
    """Everything the analyzer knows about one word.

    Fields after `chi` are None when the word fails the homological relation
    check: there is no closed 4-manifold to measure, but counts, chi and the
    verdict list are still worth reporting.
    """

    stats: WordStats
    chi: int
    relation_passed: bool
    homology: HomologyReport | None
    breakdown: SignatureBreakdown | None
    sigma: int | None
    b_plus: int | None
    b_minus: int | None
    c1_squared: int | None
    chi_h: int | None
    hodge_degree: int | None
    wp_pairing: int | None
    double_cover_base: str | None
    verdicts: tuple[Verdict, ...]

    @property
    def all_passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def full_report(w: Word, assume_hyperelliptic: bool = False) -> InvariantReport:
    """Aggregate every invariant and verdict for one word.

    Verdict order is fixed so serialized reports are stable: relation,
    divisibility, Torelli, then the signature-dependent checks.
    """
    stats = word_stats(w)
    g, r = stats.genus, stats.twist_count
    chi = euler_characteristic(w)
    relation = check_global_relation(w)

    verdicts: list[Verdict] = [
        Verdict(
            "global_relation",
            relation.passed,
            "word acts trivially on homology"
            if relation.passed
            else "monodromy product is not the identity",
        ),
        divisibility_verdict(g, stats.nonseparating, stats.separating),
        torelli_check(w),
    ]

    if not relation.passed:
        return InvariantReport(
            stats=stats,
            chi=chi,
            relation_passed=False,
            homology=None,
            breakdown=None,
            sigma=None,
            b_plus=None,
            b_minus=None,
            c1_squared=None,
            chi_h=None,
            hodge_degree=None,
            wp_pairing=None,
            double_cover_base=None,
            verdicts=tuple(verdicts),
        )

    homology = homology_report(w)
    breakdown = total_signature(w)
    sigma = breakdown.signature
    hodge = _hodge_from(sigma, r)  # raises on inconsistency, per contract
    wp = 12 * hodge - r
    c1_squared = 2 * chi + 3 * sigma
    chi_h = (sigma + chi) // 4  # same residue as sigma + r, so exact here
    b2 = homology.betti[2]
    b_plus = (b2 + sigma) // 2 if (b2 + sigma) % 2 == 0 else None
    b_minus = (b2 - sigma) // 2 if b_plus is not None else None

    verdicts.append(Verdict("hodge_integrality", True, f"4 | sigma + r = {sigma + r}"))
    verdicts.append(
        Verdict(
            "signature_positivity",
            sigma + r > 0,
            f"sigma + delta = {sigma + r}, must be > 0",
        )
    )
    verdicts.append(
        Verdict("wp_positivity", wp > 0, f"Weil-Petersson pairing = {wp}, must be > 0")
    )

    double_cover = None
    if g == 2:
        predicted = genus2_fractional_signature(stats.nonseparating, stats.separating)
        verdicts.append(
            Verdict(
                "genus2_fractional_formula",
                Fraction(sigma) == predicted,
                f"cocycle sigma = {sigma}, fractional formula = {predicted}",
            )
        )
        if (stats.nonseparating + 2 * stats.separating) % 10 == 0:
            double_cover, _ = genus2_double_cover_base(
                stats.nonseparating, stats.separating
            )

    if assume_hyperelliptic:
        verdicts.append(_endo_verdict(stats, hodge))

    return InvariantReport(
        stats=stats,
        chi=chi,
        relation_passed=True,
        homology=homology,
        breakdown=breakdown,
        sigma=sigma,
        b_plus=b_plus,
        b_minus=b_minus,
        c1_squared=c1_squared,
        chi_h=chi_h,
        hodge_degree=hodge,
        wp_pairing=wp,
        double_cover_base=double_cover,
        verdicts=tuple(verdicts),
    )

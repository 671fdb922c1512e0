"""Realizability of an endomorphism profile for a simple structure.

Beyond the two divisibility bounds checked by validation, a short catalog
of algebra shapes is excluded: five at odd weight and seven at even
weight.  A profile is realizable exactly when it is structurally valid
and matches none of the catalog entries for its parity.  Entries that
consult data the profile omits (the discriminant flag or the CM trace
list) yield a conditional match instead of a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    EVEN,
    ODD,
    HodgeProfile,
    InvalidProfileError,
    validate_profile,
)


@dataclass(frozen=True)
class ExceptionalCase:
    parity: str
    index: int
    description: str

    def to_json(self) -> dict:
        return {
            "parity": self.parity,
            "index": self.index,
            "description": self.description,
        }


ODD_CASES = (
    ExceptionalCase(ODD, 1, "Type III and m=1"),
    ExceptionalCase(ODD, 2, "Type III, m=2, disc(B,-)=1 in F*/(F*)^2"),
    ExceptionalCase(
        ODD, 3, "Type IV and sum of n_sigma*n_sigma_bar = 0, unless m=q=1"
    ),
    ExceptionalCase(
        ODD, 4, "Type IV, m=2, q=1, and n_sigma=n_sigma_bar=1 for all i"
    ),
    ExceptionalCase(
        ODD, 5, "Type IV, m=1, q=2, and n_sigma=n_sigma_bar=1 for all i"
    ),
)

EVEN_CASES = (
    ExceptionalCase(EVEN, 1, "Type II and m=1"),
    ExceptionalCase(EVEN, 2, "Type II, m=2, disc(B,-)=1 in F*/(F*)^2"),
    ExceptionalCase(
        EVEN, 3, "Type IV and sum of n_sigma*n_sigma_bar = 0, unless m=q=1"
    ),
    ExceptionalCase(
        EVEN, 4, "Type IV, m=2, q=1, and n_sigma=n_sigma_bar=1 for all i"
    ),
    ExceptionalCase(
        EVEN, 5, "Type IV, m=1, q=2, and n_sigma=n_sigma_bar=1 for all i"
    ),
    ExceptionalCase(EVEN, 6, "Type I and m=2"),
    ExceptionalCase(
        EVEN, 7, "Type I, m=4, and (V,<,>) has discriminant 1 in F*/(F*)^2"
    ),
)


@dataclass(frozen=True)
class ExceptionalMatch:
    """A catalog hit; conditional=True means required data was absent."""

    case: ExceptionalCase
    conditional: bool = False
    missing: Optional[str] = None

    def to_json(self) -> dict:
        out = self.case.to_json()
        out["conditional"] = self.conditional
        if self.missing is not None:
            out["missing"] = self.missing
        return out


# Each predicate returns True (matches), False (does not match), or a
# string naming the missing datum when the profile cannot decide.


def _match_iii_m1(p: HodgeProfile):
    return p.endo.albert_type == "III" and p.m == 1


def _match_quat_m2_disc(p: HodgeProfile, albert_type: str):
    if p.endo.albert_type != albert_type or p.m != 2:
        return False
    if p.endo.disc_one is None:
        return "disc_one"
    return p.endo.disc_one


def _match_iv_zero_products(p: HodgeProfile):
    if p.endo.albert_type != "IV":
        return False
    if p.m == 1 and p.endo.q == 1:
        return False
    if p.endo.cm_traces is None:
        return "cm_traces"
    return sum(a * b for a, b in p.endo.cm_traces) == 0


def _match_iv_all_ones(p: HodgeProfile, m: int, q: int):
    if p.endo.albert_type != "IV" or p.m != m or p.endo.q != q:
        return False
    if p.endo.cm_traces is None:
        return "cm_traces"
    return all(a == 1 and b == 1 for a, b in p.endo.cm_traces)


def _match_i_m2(p: HodgeProfile):
    return p.endo.albert_type == "I" and p.m == 2


def _match_i_m4_disc(p: HodgeProfile):
    if p.endo.albert_type != "I" or p.m != 4:
        return False
    if p.endo.disc_one is None:
        return "disc_one"
    return p.endo.disc_one


def _catalog(parity: str):
    if parity == ODD:
        return [
            (ODD_CASES[0], _match_iii_m1),
            (ODD_CASES[1], lambda p: _match_quat_m2_disc(p, "III")),
            (ODD_CASES[2], _match_iv_zero_products),
            (ODD_CASES[3], lambda p: _match_iv_all_ones(p, 2, 1)),
            (ODD_CASES[4], lambda p: _match_iv_all_ones(p, 1, 2)),
        ]
    return [
        (EVEN_CASES[0], lambda p: p.endo.albert_type == "II" and p.m == 1),
        (EVEN_CASES[1], lambda p: _match_quat_m2_disc(p, "II")),
        (EVEN_CASES[2], _match_iv_zero_products),
        (EVEN_CASES[3], lambda p: _match_iv_all_ones(p, 2, 1)),
        (EVEN_CASES[4], lambda p: _match_iv_all_ones(p, 1, 2)),
        (EVEN_CASES[5], _match_i_m2),
        (EVEN_CASES[6], _match_i_m4_disc),
    ]


def is_exceptional(profile: HodgeProfile) -> Optional[ExceptionalMatch]:
    """Match the profile against the catalog, in catalog order.

    A definite hit wins over a conditional one regardless of order; the
    first conditional hit is reported only when no later entry matches
    outright.  Returns None when no entry matches or could match.
    """
    if validate_profile(profile):
        raise InvalidProfileError("is_exceptional requires a valid profile")
    pending: Optional[ExceptionalMatch] = None
    for case, pred in _catalog(profile.parity):
        verdict = pred(profile)
        if verdict is True:
            return ExceptionalMatch(case)
        if isinstance(verdict, str) and pending is None:
            pending = ExceptionalMatch(case, conditional=True, missing=verdict)
    return pending


@dataclass(frozen=True)
class RealizabilityVerdict:
    """realizable is True, False, or None when data is missing."""

    realizable: Optional[bool]
    case: Optional[ExceptionalMatch] = None
    violations: tuple = ()

    @property
    def reason(self) -> str:
        if self.violations:
            return "invalid profile: " + "; ".join(
                v.message for v in self.violations
            )
        if self.case is None:
            return "valid and not exceptional"
        if self.case.conditional:
            return (
                f"possibly exceptional ({self.case.case.parity} case "
                f"{self.case.case.index}); missing {self.case.missing}"
            )
        return (
            f"exceptional ({self.case.case.parity} case "
            f"{self.case.case.index}): {self.case.case.description}"
        )

    def to_json(self) -> dict:
        out: dict = {"realizable": self.realizable}
        if self.case is not None:
            out["case"] = self.case.to_json()
        out["violations"] = [v.to_json() for v in self.violations]
        out["reason"] = self.reason
        return out


def realizable(profile: HodgeProfile) -> RealizabilityVerdict:
    """Tri-state realizability: valid and no exceptional case matches."""
    violations = validate_profile(profile)
    if violations:
        return RealizabilityVerdict(False, violations=tuple(violations))
    match = is_exceptional(profile)
    if match is None:
        return RealizabilityVerdict(True)
    if match.conditional:
        return RealizabilityVerdict(None, case=match)
    return RealizabilityVerdict(False, case=match)

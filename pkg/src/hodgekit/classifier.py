"""Map a realizable profile to its set of possible Hodge groups.

The dispatch tries the sharp results for special half-dimensions first
(n = 1, n prime, n = 4, n = 2p with p an odd prime) and falls back to
the general statements organized by Albert type and the multiplicity m.
Anything the theorems do not cover is reported as out_of_scope with the
Lefschetz group as an upper bound.  Missing optional data (trace lists,
discriminant flags, subfield inventories, the Galois flag) degrades the
status to conditional instead of guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    FAM_SL2_SO4,
    FAM_SO7,
    FAM_SU_B,
    FAM_SU_LE,
    FAM_SU_POW2,
    FAM_U_B,
    EndomorphismDescriptor,
    GroupExpr,
    HodgeProfile,
    ODD,
    REP_EXTERIOR,
    REP_PRODUCT,
    REP_SPIN,
)
from .lefschetz import group_rank, lefschetz_group
from .numth import central_binomial_solve
from .realizability import realizable

DETERMINED = "determined"
CONDITIONAL = "conditional"
OUT_OF_SCOPE = "out_of_scope"

OCCURS_PROVEN = "proven"
OCCURS_POSSIBLE = "possible"

RULE_N1 = "n=1"
RULE_PRIME = "n=prime"
RULE_N4 = "n=4"
RULE_2P = "n=2p"
RULE_I_ODD_L = "typeI:odd-multiplicity"
RULE_I_L2 = "typeI:multiplicity-2"
RULE_I_TWICE_ODD = "typeI:rational-twice-odd"
RULE_QUAT_M_ODD = "typeII/III:m-odd"
RULE_QUAT_M2 = "typeII/III:m=2"
RULE_QUAT_4ODD = "typeII/III:rational-four-times-odd"
RULE_IV_QUAD = "typeIV:imaginary-quadratic"
RULE_IV_FULL_CM = "typeIV:full-CM-balanced"
RULE_IV_INDEX2 = "typeIV:index-2-balanced-coprime"
RULE_IV_M2 = "typeIV:multiplicity-2-balanced"
RULE_IV_TORUS = "typeIV:torus"
RULE_UPPER = "upper-bound-only"


class NotRealizableError(ValueError):
    """classify was handed a profile that cannot occur."""


class InconsistentSubfieldError(ValueError):
    """Subfield assertions contradict the profile (no structure exists)."""


@dataclass(frozen=True)
class SubfieldDescriptor:
    """A CM subfield E of the endomorphism algebra, with the flag saying
    whether the structure is balanced over E (equal extreme multiplicities
    at every embedding of E), and optionally whether L/Q is Galois."""

    deg_E: int
    balanced: bool
    galois_L: Optional[bool] = None

    def to_json(self) -> dict:
        out: dict = {"deg_E": self.deg_E, "balanced": self.balanced}
        if self.galois_L is not None:
            out["galois_L"] = self.galois_L
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SubfieldDescriptor":
        extra = set(data) - {"deg_E", "balanced", "galois_L"}
        if extra:
            raise ValueError(f"unknown subfield fields: {sorted(extra)}")
        return cls(
            deg_E=int(data["deg_E"]),
            balanced=bool(data["balanced"]),
            galois_L=data.get("galois_L"),
        )


@dataclass(frozen=True)
class Candidate:
    group: GroupExpr
    condition: str = ""
    occurs: str = OCCURS_PROVEN

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "condition": self.condition,
            "occurs": self.occurs,
        }


@dataclass(frozen=True)
class ClassificationOutcome:
    status: str
    candidates: tuple[Candidate, ...]
    applied_rule: str
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "applied_rule": self.applied_rule,
            "candidates": [c.to_json() for c in self.candidates],
            "notes": list(self.notes),
        }


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, int(n ** 0.5) + 1, 2))


def rank_threshold(n: int) -> int:
    """ceil(log2(2n)): the integer rank floor for commutative algebras."""
    return (2 * n - 1).bit_length()


def _commutative(profile: HodgeProfile) -> bool:
    t = profile.endo.albert_type
    return t == "I" or (t == "IV" and profile.endo.q == 1)


def _bound_ok(profile: HodgeProfile, expr: GroupExpr) -> bool:
    if not _commutative(profile):
        return True
    return group_rank(expr) >= rank_threshold(profile.n)


def _guard(profile: HodgeProfile, expr: GroupExpr, claim: str) -> GroupExpr:
    """Refuse to emit a group below the rank floor for commutative L.

    Such an emission would mean the input data asserts a structure whose
    Hodge group is provably too small to exist; the data, not the
    engine, is inconsistent.
    """
    if not _bound_ok(profile, expr):
        raise InconsistentSubfieldError(
            f"{claim}: {expr.label()} has rank {group_rank(expr)} < "
            f"{rank_threshold(profile.n)} = ceil(log2(2n)); no simple "
            "structure with the asserted data exists"
        )
    return expr


# ---------------------------------------------------------------------------
# Product-pattern exclusion
# ---------------------------------------------------------------------------

_A1_SIZES = {"SL": 2, "SU": 2, "Sp": 2}


def _simple_components(factor: tuple[str, int]) -> list[str]:
    """Simple Lie-algebra components of one classical factor, flagging A1."""
    fam, size = factor
    if fam in ("SL", "SU"):
        if size < 2:
            raise ValueError(f"{fam}({size}) is not semisimple")
        return ["A1"] if size == 2 else [f"A{size - 1}"]
    if fam == "Sp":
        if size < 2 or size % 2:
            raise ValueError(f"Sp({size}) is not a symplectic group")
        return ["A1"] if size == 2 else [f"C{size // 2}"]
    if fam == "SO":
        if size < 3:
            raise ValueError(f"SO({size}) is not semisimple")
        if size == 3:
            return ["A1"]
        if size == 4:
            return ["A1", "A1"]
        if size == 6:
            return ["A3"]
        return [f"B{size // 2}" if size % 2 else f"D{size // 2}"]
    raise ValueError(f"unknown factor family {fam!r}")


def exclude_sl2_product(factors: Sequence[tuple[str, int]]) -> bool:
    """Whether a product SL(2) x G (product of standards) is struck.

    The pattern must be a leading rank-1 factor followed by a nontrivial
    semisimple G; the group is excluded whenever G has no rank-1 simple
    components (so SL(2) x SO(4) survives, SL(2) x SO(2k) for k >= 3 and
    SL(2) x Sp(4) and SL(2) x SL(2^k) do not).
    """
    factors = [(str(f), int(s)) for f, s in factors]
    if len(factors) < 2:
        raise ValueError("pattern needs SL(2) times a nontrivial group")
    head = _simple_components(factors[0])
    if head != ["A1"]:
        raise ValueError("pattern must start with an SL(2)-type factor")
    rest: list[str] = []
    for f in factors[1:]:
        rest.extend(_simple_components(f))
    if not rest:
        raise ValueError("G must be nontrivial")
    return "A1" not in rest


# ---------------------------------------------------------------------------
# Subfield bookkeeping
# ---------------------------------------------------------------------------


def _check_subfield(profile: HodgeProfile, sub: SubfieldDescriptor) -> None:
    if sub.deg_E < 2 or sub.deg_E % 2 != 0:
        raise InconsistentSubfieldError(
            f"a CM subfield has even degree >= 2, got {sub.deg_E}"
        )
    if profile.endo.deg_L % sub.deg_E != 0:
        raise InconsistentSubfieldError(
            f"deg_E={sub.deg_E} does not divide [L:Q]={profile.endo.deg_L}"
        )
    if sub.balanced and profile.n % sub.deg_E != 0:
        raise InconsistentSubfieldError(
            f"balanced action needs deg_E | n; {sub.deg_E} does not divide "
            f"n={profile.n}"
        )


def su_constraint(profile: HodgeProfile, sub: SubfieldDescriptor) -> bool:
    """Whether the special-unitary containment from the subfield holds.

    True exactly when the structure is balanced over E.  When E is the
    whole algebra and trace data is present, balance is read off the
    traces and cross-checked against the descriptor.
    """
    _check_subfield(profile, sub)
    if sub.deg_E == profile.endo.deg_L and profile.endo.cm_traces is not None:
        from_traces = all(a == b for a, b in profile.endo.cm_traces)
        if from_traces != sub.balanced:
            raise InconsistentSubfieldError(
                "balanced flag contradicts the trace data"
            )
        return from_traces
    return sub.balanced


def _balanced_quadratic(
    profile: HodgeProfile, subfields: Optional[Sequence[SubfieldDescriptor]]
) -> Optional[SubfieldDescriptor]:
    if subfields is None:
        return None
    for sub in subfields:
        if sub.deg_E == 2 and su_constraint(profile, sub):
            return sub
    return None


def _balanced_any(
    profile: HodgeProfile, subfields: Optional[Sequence[SubfieldDescriptor]]
) -> list[SubfieldDescriptor]:
    if subfields is None:
        return []
    return [s for s in subfields if su_constraint(profile, s)]


def _su_bound_group(profile: HodgeProfile, sub: SubfieldDescriptor) -> GroupExpr:
    """R_{J/Q}SU(C,-) for the centralizer C of E, as a symbolic group."""
    size = (2 * profile.n) // sub.deg_E
    if size == 1:
        return GroupExpr(FAM_SU_LE, param=profile.endo.deg_F)
    return GroupExpr(FAM_SU_B, param=size, base_degree=sub.deg_E // 2)


# ---------------------------------------------------------------------------
# Outcome builders
# ---------------------------------------------------------------------------


def _single(profile, rule, notes=()):
    return ClassificationOutcome(
        DETERMINED,
        (Candidate(lefschetz_group(profile)),),
        rule,
        tuple(notes),
    )


def _wedge_alternative(profile, double_dim, k_max=20):
    """The restricted special-unitary wedge group when the side condition
    2l = C(2^k, 2^(k-1)) has a solution; None plus a note otherwise."""
    k = central_binomial_solve(double_dim, k_max)
    if k is None:
        return None, (
            f"wedge alternative dropped: {double_dim} = C(2^k, 2^(k-1)) "
            f"has no solution with 3 <= k <= {k_max}"
        )
    group = GroupExpr(
        FAM_SU_POW2,
        param=k,
        base_degree=profile.endo.deg_F,
        rep=REP_EXTERIOR,
        rep_param=1 << (k - 1),
    )
    return (
        Candidate(group, condition=f"{double_dim} = C(2^{k}, 2^{k - 1})"),
        None,
    )


# ---------------------------------------------------------------------------
# Special half-dimensions
# ---------------------------------------------------------------------------


def _classify_n4(profile: HodgeProfile, subfields) -> ClassificationOutcome:
    endo = profile.endo
    t = endo.albert_type
    odd = profile.parity == ODD
    if t == "I" and endo.deg_L == 1:
        lef = lefschetz_group(profile)
        notes = []
        if odd:
            extra = GroupExpr(FAM_SL2_SO4, rep=REP_PRODUCT)
            if exclude_sl2_product([("SL", 2), ("SO", 4)]):
                raise AssertionError("SL(2) x SO(4) must survive exclusion")
        else:
            if not exclude_sl2_product([("SL", 2), ("Sp", 4)]):
                raise AssertionError("SL(2) x Sp(4) must be excluded")
            notes.append("product alternative SL(2) x Sp(4) excluded")
            extra = GroupExpr(FAM_SO7, rep=REP_SPIN)
        return ClassificationOutcome(
            DETERMINED,
            (Candidate(lef), Candidate(extra)),
            RULE_N4,
            tuple(notes),
        )
    if t in ("I", "II", "III"):
        return _single(profile, RULE_N4)
    # Type IV at n=4
    if endo.deg_L == 2:
        if endo.cm_traces is None:
            return ClassificationOutcome(
                CONDITIONAL,
                (
                    Candidate(
                        GroupExpr(FAM_U_B, param=4),
                        condition="extreme multiplicities {1,3}",
                    ),
                    Candidate(
                        GroupExpr(FAM_SU_B, param=4),
                        condition="extreme multiplicities {2,2}",
                    ),
                ),
                RULE_N4,
                ("trace data absent; both alternatives listed",),
            )
        a, b = profile.endo.cm_traces[0]
        if {a, b} == {2, 2}:
            return ClassificationOutcome(
                DETERMINED,
                (Candidate(GroupExpr(FAM_SU_B, param=4)),),
                RULE_N4,
            )
        return _single(profile, RULE_N4)
    if endo.deg_L == 4:
        return _single(profile, RULE_N4)
    # deg_L = 8: the torus, cut down by a balanced quadratic subfield
    return _classify_iv_torus(profile, subfields, RULE_N4, equality_known=True)


def _classify_2p(profile: HodgeProfile, subfields) -> ClassificationOutcome:
    endo = profile.endo
    p = profile.n // 2
    if endo.albert_type in ("I", "II", "III"):
        note = (
            "restricted special-unitary alternatives are impossible at "
            "n=2p (the halved central binomial is odd and composite)"
        )
        return _single(profile, RULE_2P, notes=(note,))
    # Type IV; realizability forces q=1, so L is a CM field.
    quad = _balanced_quadratic(profile, subfields)
    four_p = 4 * p
    if subfields is None:
        cands = [
            Candidate(
                lefschetz_group(profile),
                condition="no balanced imaginary quadratic subfield known",
                occurs=OCCURS_POSSIBLE,
            )
        ]
        if endo.deg_L != four_p:
            alt = GroupExpr(
                FAM_SU_B, param=profile.m, base_degree=endo.deg_F
            )
            cond = "balanced imaginary quadratic subfield exists"
            if _bound_ok(profile, alt):
                cands.append(Candidate(alt, condition=cond))
            else:
                return ClassificationOutcome(
                    CONDITIONAL,
                    tuple(cands),
                    RULE_2P,
                    (
                        "the balanced alternative is impossible here: its "
                        "rank would violate the commutative rank bound",
                    ),
                )
        else:
            cands.append(
                Candidate(
                    GroupExpr(FAM_SU_LE, param=2 * p),
                    condition=(
                        "balanced imaginary quadratic subfield exists and "
                        "L/Q is Galois"
                    ),
                )
            )
        return ClassificationOutcome(
            CONDITIONAL,
            tuple(cands),
            RULE_2P,
            ("subfield inventory not supplied",),
        )
    if quad is None:
        return ClassificationOutcome(
            OUT_OF_SCOPE,
            (
                Candidate(
                    lefschetz_group(profile),
                    condition="upper bound",
                    occurs=OCCURS_POSSIBLE,
                ),
            ),
            RULE_2P,
            (
                "no balanced imaginary quadratic subfield: the n=2p result "
                "gives no determination",
            ),
        )
    if endo.deg_L != four_p:
        group = _guard(
            profile,
            GroupExpr(FAM_SU_B, param=profile.m, base_degree=endo.deg_F),
            "balanced quadratic subfield at n=2p",
        )
        return ClassificationOutcome(
            DETERMINED, (Candidate(group),), RULE_2P
        )
    # deg_L = 4p: the answer is the relative-norm-one torus, given Galois.
    torus = GroupExpr(FAM_SU_LE, param=2 * p)
    if quad.galois_L is True:
        return ClassificationOutcome(DETERMINED, (Candidate(torus),), RULE_2P)
    if quad.galois_L is None:
        return ClassificationOutcome(
            CONDITIONAL,
            (
                Candidate(torus, condition="L/Q is a Galois extension"),
                Candidate(
                    lefschetz_group(profile),
                    condition="upper bound otherwise",
                    occurs=OCCURS_POSSIBLE,
                ),
            ),
            RULE_2P,
            ("Galois flag not supplied",),
        )
    return ClassificationOutcome(
        OUT_OF_SCOPE,
        (
            Candidate(
                torus,
                condition="upper bound (norm-one containment)",
                occurs=OCCURS_POSSIBLE,
            ),
        ),
        RULE_2P,
        ("L/Q not Galois: the n=2p result gives no determination",),
    )


# ---------------------------------------------------------------------------
# General propositions
# ---------------------------------------------------------------------------


def _classify_type_i(profile: HodgeProfile) -> ClassificationOutcome:
    endo = profile.endo
    l = profile.n // endo.deg_L
    odd = profile.parity == ODD
    if l % 2 == 1:
        if odd:
            return _single(profile, RULE_I_ODD_L)
        cands = [Candidate(lefschetz_group(profile))]
        alt, note = _wedge_alternative(profile, 2 * l)
        notes = () if note is None else (note,)
        if alt is not None:
            cands.append(alt)
        return ClassificationOutcome(
            DETERMINED, tuple(cands), RULE_I_ODD_L, notes
        )
    if l == 2:
        return _single(profile, RULE_I_L2)
    if endo.deg_L == 1 and l % 4 == 2:
        n = profile.n
        notes = []
        if odd:
            # strike SL(2) x SO(n) and, when n is a central binomial,
            # SL(2) x SL(2^k); both have no rank-1 factors in G for n >= 6
            if not exclude_sl2_product([("SL", 2), ("SO", n)]):
                raise AssertionError("SL(2) x SO(n) must be excluded here")
            notes.append(f"product alternative SL(2) x SO({n}) excluded")
            k = central_binomial_solve(n) if n >= 70 else None
            if k is not None:
                if not exclude_sl2_product([("SL", 2), ("SL", 1 << k)]):
                    raise AssertionError("SL(2) x SL(2^k) must be excluded")
                notes.append(
                    f"product alternative SL(2) x SL(2^{k}) excluded"
                )
            return _single(profile, RULE_I_TWICE_ODD, notes=notes)
        if not exclude_sl2_product([("SL", 2), ("SO", n)]):
            raise AssertionError("SU(2) x SO(n) must be excluded here")
        notes.append(f"product alternative SU(2) x SO({n}) excluded")
        cands = [Candidate(lefschetz_group(profile))]
        alt, note = _wedge_alternative(profile, 2 * n)
        if note is not None:
            notes.append(note)
        if alt is not None:
            cands.append(alt)
        return ClassificationOutcome(
            DETERMINED, tuple(cands), RULE_I_TWICE_ODD, tuple(notes)
        )
    return _fallback(profile)


def _classify_quaternion(profile: HodgeProfile) -> ClassificationOutcome:
    endo = profile.endo
    m = profile.m
    odd = profile.parity == ODD
    sp_side = odd if endo.albert_type == "II" else not odd
    if m % 2 == 1:
        if sp_side:
            return _single(profile, RULE_QUAT_M_ODD)
        cands = [Candidate(lefschetz_group(profile))]
        alt, note = _wedge_alternative(profile, 2 * m)
        notes = () if note is None else (note,)
        if alt is not None:
            cands.append(alt)
        return ClassificationOutcome(
            DETERMINED, tuple(cands), RULE_QUAT_M_ODD, notes
        )
    if m == 2:
        return _single(profile, RULE_QUAT_M2)
    if endo.deg_F == 1 and m % 4 == 2:
        if sp_side:
            return _single(profile, RULE_QUAT_4ODD)
        cands = [Candidate(lefschetz_group(profile))]
        alt, note = _wedge_alternative(profile, 2 * m)
        notes = () if note is None else (note,)
        if alt is not None:
            cands.append(alt)
        return ClassificationOutcome(
            DETERMINED, tuple(cands), RULE_QUAT_4ODD, notes
        )
    return _fallback(profile)


def _classify_iv_torus(
    profile: HodgeProfile,
    subfields,
    rule: str,
    equality_known: bool,
) -> ClassificationOutcome:
    """m = 1: the Lefschetz group is the norm-one torus of the CM field.

    A balanced imaginary quadratic subfield cuts the torus down to the
    relative-norm-one subtorus; whether that containment is an equality
    is known only for the special half-dimensions (equality_known).
    """
    lef = lefschetz_group(profile)
    su_le = GroupExpr(FAM_SU_LE, param=profile.endo.deg_F)
    if subfields is None:
        occurs = OCCURS_PROVEN if equality_known else OCCURS_POSSIBLE
        return ClassificationOutcome(
            CONDITIONAL,
            (
                Candidate(
                    lef,
                    condition="no balanced imaginary quadratic subfield known",
                    occurs=occurs,
                ),
                Candidate(
                    su_le,
                    condition="balanced imaginary quadratic subfield exists",
                    occurs=occurs,
                ),
            ),
            rule,
            ("subfield inventory not supplied",),
        )
    quad = _balanced_quadratic(profile, subfields)
    if quad is not None:
        torus = _guard(
            profile, su_le, "balanced quadratic subfield on the torus case"
        )
        if equality_known:
            return ClassificationOutcome(DETERMINED, (Candidate(torus),), rule)
        return ClassificationOutcome(
            OUT_OF_SCOPE,
            (
                Candidate(lef, condition="upper bound", occurs=OCCURS_POSSIBLE),
                Candidate(
                    torus,
                    condition="upper bound (norm-one containment)",
                    occurs=OCCURS_POSSIBLE,
                ),
            ),
            RULE_UPPER,
            ("containment known, equality not proved at this n",),
        )
    balanced = _balanced_any(profile, subfields)
    if equality_known and not balanced:
        return ClassificationOutcome(DETERMINED, (Candidate(lef),), rule)
    cands = [Candidate(lef, condition="upper bound", occurs=OCCURS_POSSIBLE)]
    for sub in balanced:
        cands.append(
            Candidate(
                _guard(profile, _su_bound_group(profile, sub), "balanced subfield"),
                condition=(
                    f"upper bound from the balanced degree-{sub.deg_E} subfield"
                ),
                occurs=OCCURS_POSSIBLE,
            )
        )
    return ClassificationOutcome(
        OUT_OF_SCOPE,
        tuple(cands),
        RULE_UPPER,
        ("no determination for the torus case at this n",),
    )


def _classify_type_iv(profile: HodgeProfile, subfields) -> ClassificationOutcome:
    endo = profile.endo
    if endo.q != 1:
        return _fallback(profile, note="no determination for q=2 at this n")
    m = profile.m
    traces = endo.cm_traces
    if endo.deg_L == 2:
        if traces is None:
            return ClassificationOutcome(
                CONDITIONAL,
                (
                    Candidate(
                        lefschetz_group(profile),
                        condition="coprime extreme multiplicities",
                    ),
                    Candidate(
                        GroupExpr(FAM_SU_B, param=m),
                        condition="balanced extreme multiplicities (upper bound)",
                        occurs=OCCURS_POSSIBLE,
                    ),
                ),
                RULE_IV_QUAD,
                ("trace data absent",),
            )
        a, b = traces[0]
        if math.gcd(a, b) == 1:
            return _single(profile, RULE_IV_QUAD)
        if a == b:
            return ClassificationOutcome(
                OUT_OF_SCOPE,
                (
                    Candidate(
                        lefschetz_group(profile),
                        condition="upper bound",
                        occurs=OCCURS_POSSIBLE,
                    ),
                    Candidate(
                        GroupExpr(FAM_SU_B, param=m),
                        condition="upper bound (balanced multiplicities)",
                        occurs=OCCURS_POSSIBLE,
                    ),
                ),
                RULE_UPPER,
                ("balanced but m is not twice a prime: no determination",),
            )
        return _fallback(
            profile,
            note="multiplicities neither coprime nor balanced: no determination",
        )
    if m == 1:
        return _classify_iv_torus(
            profile, subfields, RULE_IV_TORUS, equality_known=False
        )
    balanced_full = (
        traces is not None
        and all(a == b for a, b in traces)
        and m % 2 == 0
        and _is_prime(m // 2)
    )
    if balanced_full:
        group = _guard(
            profile,
            GroupExpr(FAM_SU_B, param=m, base_degree=endo.deg_F),
            "balanced full-CM action with prime half-multiplicity",
        )
        return ClassificationOutcome(
            DETERMINED, (Candidate(group),), RULE_IV_FULL_CM
        )
    if m == 2 and _balanced_any(profile, subfields):
        group = _guard(
            profile,
            GroupExpr(FAM_SU_B, param=2, base_degree=endo.deg_F),
            "balanced subfield with multiplicity 2",
        )
        return ClassificationOutcome(
            DETERMINED, (Candidate(group),), RULE_IV_M2
        )
    if traces is not None and subfields:
        coprime = all(math.gcd(a, b) == 1 for a, b in traces)
        index2 = [
            s
            for s in _balanced_any(profile, subfields)
            if s.deg_E * 2 == endo.deg_L
        ]
        if coprime and index2:
            group = _guard(
                profile,
                GroupExpr(FAM_SU_B, param=m, base_degree=endo.deg_F),
                "balanced index-2 subfield with coprime multiplicities",
            )
            return ClassificationOutcome(
                DETERMINED, (Candidate(group),), RULE_IV_INDEX2
            )
    note = None
    if subfields is None and (m == 2 or m % 2 == 0):
        note = "subfield inventory not supplied; only the upper bound is reported"
    return _fallback(profile, note=note, subfields=subfields)


def _fallback(
    profile: HodgeProfile,
    note: Optional[str] = None,
    subfields: Optional[Sequence[SubfieldDescriptor]] = None,
) -> ClassificationOutcome:
    cands = [
        Candidate(
            lefschetz_group(profile),
            condition="upper bound",
            occurs=OCCURS_POSSIBLE,
        )
    ]
    for sub in _balanced_any(profile, subfields):
        cands.append(
            Candidate(
                _guard(profile, _su_bound_group(profile, sub), "balanced subfield"),
                condition=(
                    f"upper bound from the balanced degree-{sub.deg_E} subfield"
                ),
                occurs=OCCURS_POSSIBLE,
            )
        )
    notes = ("outside the classified cases",)
    if note:
        notes += (note,)
    return ClassificationOutcome(OUT_OF_SCOPE, tuple(cands), RULE_UPPER, notes)


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def classify(
    profile: HodgeProfile,
    subfields: Optional[Sequence[SubfieldDescriptor]] = None,
) -> ClassificationOutcome:
    """Possible Hodge groups of a realizable profile.

    Raises NotRealizableError when the profile is invalid or matches an
    exclusion; proceeds with conditional status when optional data
    needed by the exclusion catalog is absent.
    """
    verdict = realizable(profile)
    if verdict.realizable is False:
        raise NotRealizableError(verdict.reason)
    for sub in subfields or ():
        _check_subfield(profile, sub)
    n = profile.n
    if n == 1:
        out = _single(profile, RULE_N1)
    elif _is_prime(n):
        out = _single(profile, RULE_PRIME)
    elif n == 4:
        out = _classify_n4(profile, subfields)
    elif n % 2 == 0 and _is_prime(n // 2) and (n // 2) % 2 == 1:
        out = _classify_2p(profile, subfields)
    elif profile.endo.albert_type == "I":
        out = _classify_type_i(profile)
    elif profile.endo.albert_type in ("II", "III"):
        out = _classify_quaternion(profile)
    else:
        out = _classify_type_iv(profile, subfields)
    if verdict.realizable is None and out.status == DETERMINED:
        out = ClassificationOutcome(
            CONDITIONAL,
            out.candidates,
            out.applied_rule,
            out.notes + (f"profile not confirmed realizable: {verdict.reason}",),
        )
    return out


# ---------------------------------------------------------------------------
# The n=4 grid
# ---------------------------------------------------------------------------


def _first_group(profile, subfields=None) -> GroupExpr:
    out = classify(profile, subfields)
    if len(out.candidates) != 1:
        raise AssertionError("expected a single candidate")
    return out.candidates[0].group


def table3() -> list[dict]:
    """The 13-row grid of possible Hodge groups at n=4.

    Rows follow the Albert type and the algebra degree; the two
    non-Lefschetz type-I entries (the odd-weight product group and the
    even-weight spin group) share one row, as do the parity-independent
    type IV alternatives.
    """

    def prof(t, dL, dF, q, w, traces=None, disc=None):
        return HodgeProfile(
            weight=w,
            n=4,
            endo=EndomorphismDescriptor(
                albert_type=t,
                deg_L=dL,
                deg_F=dF,
                q=q,
                cm_traces=traces,
                disc_one=disc,
            ),
        )

    def row(t, dL, odd, even, lef):
        return {
            "albert_type": t,
            "deg_L": dL,
            "odd": None if odd is None else odd.to_json(),
            "even": None if even is None else even.to_json(),
            "equals_lefschetz": lef,
        }

    rows = []
    i1_odd = classify(prof("I", 1, 1, 1, 1))
    i1_even = classify(prof("I", 1, 1, 1, 2))
    rows.append(
        row("I", 1, i1_odd.candidates[0].group, i1_even.candidates[0].group, True)
    )
    rows.append(
        row("I", 1, i1_odd.candidates[1].group, i1_even.candidates[1].group, False)
    )
    rows.append(
        row(
            "I",
            2,
            _first_group(prof("I", 2, 2, 1, 1)),
            _first_group(prof("I", 2, 2, 1, 2)),
            True,
        )
    )
    rows.append(row("I", 4, _first_group(prof("I", 4, 4, 1, 1)), None, True))
    rows.append(
        row(
            "II",
            4,
            _first_group(prof("II", 4, 1, 2, 1, disc=False)),
            _first_group(prof("II", 4, 1, 2, 2, disc=False)),
            True,
        )
    )
    rows.append(row("II", 8, _first_group(prof("II", 8, 2, 2, 1)), None, True))
    rows.append(
        row(
            "III",
            4,
            _first_group(prof("III", 4, 1, 2, 1, disc=False)),
            _first_group(prof("III", 4, 1, 2, 2, disc=False)),
            True,
        )
    )
    rows.append(row("III", 8, None, _first_group(prof("III", 8, 2, 2, 2)), True))
    u_odd = _first_group(prof("IV", 2, 1, 1, 1, traces=((1, 3),)))
    u_even = _first_group(prof("IV", 2, 1, 1, 2, traces=((1, 3),)))
    rows.append(row("IV", 2, u_odd, u_even, True))
    su_odd = _first_group(prof("IV", 2, 1, 1, 1, traces=((2, 2),)))
    su_even = _first_group(prof("IV", 2, 1, 1, 2, traces=((2, 2),)))
    rows.append(row("IV", 2, su_odd, su_even, False))
    iv4 = ((2, 0), (1, 1))
    rows.append(
        row(
            "IV",
            4,
            _first_group(prof("IV", 4, 2, 1, 1, traces=iv4)),
            _first_group(prof("IV", 4, 2, 1, 2, traces=iv4)),
            True,
        )
    )
    iv8 = ((1, 0), (0, 1), (1, 0), (0, 1))
    rows.append(
        row(
            "IV",
            8,
            _first_group(prof("IV", 8, 4, 1, 1, traces=iv8), subfields=[]),
            _first_group(prof("IV", 8, 4, 1, 2, traces=iv8), subfields=[]),
            True,
        )
    )
    balanced = [SubfieldDescriptor(deg_E=2, balanced=True)]
    rows.append(
        row(
            "IV",
            8,
            _first_group(prof("IV", 8, 4, 1, 1, traces=iv8), subfields=balanced),
            _first_group(prof("IV", 8, 4, 1, 2, traces=iv8), subfields=balanced),
            False,
        )
    )
    return rows

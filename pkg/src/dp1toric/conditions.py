"""Validity, nef thresholds, delta, and the K / K^2 / K^3 condition verdicts.

For a normalized triplet (lambda, mu, nu) the weight ratios

    wr(x) = 0,  wr(y) = lambda,  wr(z) = mu/2,  wr(w) = nu/3

order the fiber coordinates and select one of three nef-cone cases:

    a-i :  max(wr(x), wr(z)) <= wr(y) <= wr(w)      nef = -mu + nu - 2
    a-ii:  wr(x) <= wr(y) < wr(z) < wr(w)           nef = -lambda - mu/2 + nu - 2
    b   :  wr(w) < wr(y)                            nef = -mu + nu - 2

The key invariant is delta = (-K_X)^3 + nef(X/P^1).  The K^2-condition is
delta <= 0 and the K^3_d condition is delta <= d.  The K-condition (-K_X
not interior to the movable cone) is decided as a tri-state: it is proven
to fail when -K_X is ample (negative nef threshold) or when D_z restricts
to a movable class with -K_X interior to the cone it spans with the fiber
class; otherwise no claim is made.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .chow import minus_k_cubed
from .grading import BundleParams, is_dz_movable_on_x

DEFAULT_THRESHOLDS = (Fraction(0), Fraction(1), Fraction(3, 2))


class InvalidParams(ValueError):
    """Operation requires parameters passing the validity conditions."""


class CaseLabel(enum.Enum):
    AI = "AI"
    AII = "AII"
    B = "B"

    @property
    def table_label(self) -> str:
        return {"AI": "(a-i)", "AII": "(a-ii)", "B": "(b)"}[self.value]


class RestrictBranch(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


class KFailureReason(enum.Enum):
    AMPLE_ANTICANONICAL = "AmpleAntiCanonical"
    DZ_MOVABLE_INTERIOR = "DzMovableInterior"


class Verdict(enum.Enum):
    SUPERRIGID = "Superrigid"
    SUPERRIGID_IF_K_CONDITION = "SuperrigidIfKCondition"
    NOT_RIGID_OVER_BASE = "NotRigidOverBase"


@dataclass(frozen=True)
class WeightRatios:
    wr_x: Fraction
    wr_y: Fraction
    wr_z: Fraction
    wr_w: Fraction

    @classmethod
    def from_params(cls, p: BundleParams) -> "WeightRatios":
        return cls(Fraction(0), Fraction(p.lam), Fraction(p.mu, 2), Fraction(p.nu, 3))


@dataclass(frozen=True)
class ValidityReport:
    nu_nonneg: bool
    three_mu_lt_two_nu: bool
    restrictb_branch: RestrictBranch | None
    is_valid: bool

    def failure_reasons(self) -> list[str]:
        reasons = []
        if not self.nu_nonneg:
            reasons.append("nu >= 0 violated")
        if not self.three_mu_lt_two_nu:
            reasons.append("3*mu <= 2*nu - 1 violated")
        if self.nu_nonneg and self.three_mu_lt_two_nu and not self.is_valid:
            reasons.append("case (b) but no branch of 2*nu vs 5*lambda, 4*lambda+mu matches")
        return reasons


@dataclass(frozen=True)
class KStatus:
    proven_fails: bool
    reason: KFailureReason | None = None

    @classmethod
    def proven(cls, reason: KFailureReason) -> "KStatus":
        return cls(True, reason)

    @classmethod
    def not_proven(cls) -> "KStatus":
        return cls(False, None)

    def __str__(self) -> str:
        if self.proven_fails:
            return f"ProvenFails({self.reason.value})"
        return "NotProvenToFail"

    @classmethod
    def parse(cls, text: str) -> "KStatus":
        if text == "NotProvenToFail":
            return cls.not_proven()
        if text.startswith("ProvenFails(") and text.endswith(")"):
            return cls.proven(KFailureReason(text[len("ProvenFails("):-1]))
        raise ValueError(f"unrecognized K-status {text!r}")


@dataclass(frozen=True)
class FibrationReport:
    params: BundleParams
    validity: ValidityReport
    case: CaseLabel | None = None
    weight_ratios: WeightRatios | None = None
    k_cubed: Fraction | None = None
    nef_threshold: Fraction | None = None
    delta: Fraction | None = None
    k2_holds: bool | None = None
    k3_threshold_results: dict[Fraction, bool] = field(default_factory=dict)
    k_status: KStatus | None = None
    verdict: Verdict | None = None

    def to_json_dict(self) -> dict:
        """JSON form: field names as-is, rationals as reduced strings."""
        out: dict = {
            "params": {"lambda": self.params.lam, "mu": self.params.mu,
                       "nu": self.params.nu},
            "validity": {
                "nu_nonneg": self.validity.nu_nonneg,
                "three_mu_lt_two_nu": self.validity.three_mu_lt_two_nu,
                "restrictb_branch": (self.validity.restrictb_branch.value
                                     if self.validity.restrictb_branch else None),
                "is_valid": self.validity.is_valid,
            },
        }
        if self.case is None:
            return out
        out["case"] = self.case.value
        wr = self.weight_ratios
        out["weight_ratios"] = {
            "wr_x": str(wr.wr_x), "wr_y": str(wr.wr_y),
            "wr_z": str(wr.wr_z), "wr_w": str(wr.wr_w),
        }
        out["k_cubed"] = str(self.k_cubed)
        out["nef_threshold"] = str(self.nef_threshold)
        out["delta"] = str(self.delta)
        out["k2_holds"] = self.k2_holds
        out["k3_threshold_results"] = {
            str(d): ok for d, ok in self.k3_threshold_results.items()
        }
        out["k_status"] = str(self.k_status)
        out["verdict"] = self.verdict.value if self.verdict else None
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "FibrationReport":
        params = BundleParams(data["params"]["lambda"], data["params"]["mu"],
                              data["params"]["nu"])
        v = data["validity"]
        branch = (RestrictBranch(v["restrictb_branch"])
                  if v["restrictb_branch"] is not None else None)
        validity_ = ValidityReport(v["nu_nonneg"], v["three_mu_lt_two_nu"],
                                   branch, v["is_valid"])
        if "case" not in data:
            return cls(params, validity_)
        wr = data["weight_ratios"]
        return cls(
            params,
            validity_,
            case=CaseLabel(data["case"]),
            weight_ratios=WeightRatios(
                Fraction(wr["wr_x"]), Fraction(wr["wr_y"]),
                Fraction(wr["wr_z"]), Fraction(wr["wr_w"])),
            k_cubed=Fraction(data["k_cubed"]),
            nef_threshold=Fraction(data["nef_threshold"]),
            delta=Fraction(data["delta"]),
            k2_holds=data["k2_holds"],
            k3_threshold_results={
                Fraction(d): ok for d, ok in data["k3_threshold_results"].items()
            },
            k_status=KStatus.parse(data["k_status"]),
            verdict=Verdict(data["verdict"]) if data["verdict"] else None,
        )


def validity(p: BundleParams) -> ValidityReport:
    """Check the conditions for (lambda, mu, nu) to carry a valid fibration.

    A valid triplet has nu >= 0 and 3*mu < 2*nu (as integers, 3*mu <=
    2*nu - 1), and in case (b) must match exactly one of the branches

        I   : 2*nu >= max(5*lambda, 4*lambda + mu)
        II  : 5*lambda > 2*nu = 4*lambda + mu
        III : 4*lambda + mu > 2*nu = 5*lambda

    (the branch predicates are pairwise exclusive).  Never raises.
    """
    nu_nonneg = p.nu >= 0
    three_mu_lt_two_nu = 3 * p.mu <= 2 * p.nu - 1
    wr = WeightRatios.from_params(p)
    branch = None
    in_case_b = wr.wr_w < wr.wr_y
    if in_case_b:
        two_nu = 2 * p.nu
        if two_nu >= 5 * p.lam and two_nu >= 4 * p.lam + p.mu:
            branch = RestrictBranch.I
        elif 5 * p.lam > two_nu and two_nu == 4 * p.lam + p.mu:
            branch = RestrictBranch.II
        elif 4 * p.lam + p.mu > two_nu and two_nu == 5 * p.lam:
            branch = RestrictBranch.III
    is_valid = (nu_nonneg and three_mu_lt_two_nu
                and (not in_case_b or branch is not None))
    return ValidityReport(nu_nonneg, three_mu_lt_two_nu, branch, is_valid)


def _require_valid(p: BundleParams) -> None:
    if not validity(p).is_valid:
        raise InvalidParams(f"{p} fails the validity conditions")


def classify_case(p: BundleParams) -> CaseLabel:
    """Nef-cone case of a valid triplet.

    Validity forces wr(z) < wr(w), so the three cases partition: (b) when
    wr(w) < wr(y); else (a-i) when wr(z) <= wr(y) (ties wr(y) = wr(w) go to
    case (a)); else (a-ii), where wr(y) < wr(z) < wr(w) holds automatically.
    """
    _require_valid(p)
    wr = WeightRatios.from_params(p)
    if wr.wr_w < wr.wr_y:
        return CaseLabel.B
    if max(wr.wr_x, wr.wr_z) <= wr.wr_y:
        return CaseLabel.AI
    return CaseLabel.AII


def nef_threshold(p: BundleParams) -> Fraction:
    """Nef threshold of X over P^1: the least r with -K_X + r*F nef."""
    case = classify_case(p)
    if case is CaseLabel.AII:
        return -p.lam - Fraction(p.mu, 2) + p.nu - 2
    return Fraction(-p.mu + p.nu - 2)


def delta(p: BundleParams) -> Fraction:
    """delta_X = (-K_X)^3 + nef(X/P^1)."""
    _require_valid(p)
    return minus_k_cubed(p) + nef_threshold(p)


def k2_condition(p: BundleParams) -> bool:
    """K^2-condition: (-K_X)^2 not interior to the effective cone, i.e. delta <= 0."""
    return delta(p) <= 0


def k3_condition(p: BundleParams, d0: Fraction) -> bool:
    """K^3_d condition: delta <= d0."""
    return delta(p) <= Fraction(d0)


def k_status(p: BundleParams) -> KStatus:
    """Tri-state K-condition verdict.

    Failure of the K-condition is proven either because -K_X is ample
    (negative nef threshold) or because D_z restricts to a movable class
    with -K_X strictly inside the cone spanned by F and D_z (the
    movability half is a combinatorial certificate).  All other triplets
    report NotProvenToFail; the tool never claims the K-condition holds.
    """
    _require_valid(p)
    if nef_threshold(p) < 0:
        return KStatus.proven(KFailureReason.AMPLE_ANTICANONICAL)
    anticanonical_f = Fraction(p.lam + p.mu - p.nu + 2)
    interior = anticanonical_f > Fraction(p.mu, 2)
    if interior and is_dz_movable_on_x(p):
        return KStatus.proven(KFailureReason.DZ_MOVABLE_INTERIOR)
    return KStatus.not_proven()


def report(p: BundleParams,
           thresholds: tuple[Fraction, ...] = DEFAULT_THRESHOLDS) -> FibrationReport:
    """Full invariant-and-verdict report for a normalized triplet.

    Invalid triplets yield a report carrying only params and validity.
    Verdicts: Superrigid when delta <= 0 (the K^2-condition implies both
    the K-condition and the K^3 conditions); NotRigidOverBase when the
    K-condition provably fails; SuperrigidIfKCondition when delta <= 1 and
    no failure is proven.
    """
    if p.lam < 0:
        raise InvalidParams(f"{p} is not normalized (lambda < 0)")
    v = validity(p)
    if not v.is_valid:
        return FibrationReport(params=p, validity=v)
    d = delta(p)
    status = k_status(p)
    if d <= 0:
        verdict = Verdict.SUPERRIGID
    elif status.proven_fails:
        verdict = Verdict.NOT_RIGID_OVER_BASE
    elif d <= 1:
        verdict = Verdict.SUPERRIGID_IF_K_CONDITION
    else:
        verdict = None  # unreachable for valid triplets: delta > 1 forces a proven failure
    return FibrationReport(
        params=p,
        validity=v,
        case=classify_case(p),
        weight_ratios=WeightRatios.from_params(p),
        k_cubed=minus_k_cubed(p),
        nef_threshold=nef_threshold(p),
        delta=d,
        k2_holds=d <= 0,
        k3_threshold_results={Fraction(d0): d <= Fraction(d0) for d0 in thresholds},
        k_status=status,
        verdict=verdict,
    )

"""Construction of theta-lift sources and exact verification of the
identities relating a cohomological module of U(a,b) to the lift of a
smaller one.

Given a standard block list, a distinguished block index r0 and a pair of
splitting characters, the source datum consists of the block list with the
r0-th block removed and the later blocks reflected, a shifted integral
character, and a det-power twist.  Four independent checks are exposed:

* parameter identity: the lifted parameter equals the twisted target
  parameter as a multiset;
* infinitesimal character: the lift-composition rule lands on the target
  infinitesimal character;
* K-type correspondence: the source lowest K-type decomposes with the
  predicted tail sizes and its image under the type map, after the det
  twist, is the target lowest K-type;
* minimal degree: no K-type candidate of the source in a bounded cone has
  strictly smaller Fock-space degree than the lowest one.

All verdicts are exact; nothing is ever compared approximately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .halfint import CharMultiset, HalfInt, Weight, half, shift
from .arthur import (
    ChiPair,
    ParityError,
    psi_lambda_q,
    theta_lift_param,
    twist,
)
from .parabolic import (
    LambdaCharacter,
    ThetaStableAlgebra,
    _as_lambda,
    _m_coeffs,
    degree,
    inf_char_aq,
    k_types_bounded,
    lowest_k_type,
)


class HoweBoundError(ValueError):
    """A weight decomposition exceeds the tail bounds of the type map."""


DEFAULT_BOUND = 3


@dataclass(frozen=True)
class LiftDatum:
    """Everything defining one instance of the lift construction."""

    target_q: ThetaStableAlgebra
    target_lambda: LambdaCharacter
    r0: int
    chi: ChiPair
    source_q: ThetaStableAlgebra
    source_lambda: LambdaCharacter
    det_shift: HalfInt
    mslk: Tuple[int, int, int, int]

    @property
    def target_signature(self) -> Tuple[int, int]:
        return self.target_q.signature

    @property
    def source_signature(self) -> Tuple[int, int]:
        return self.source_q.signature

    def to_json(self) -> dict:
        m, s, k, l = self.mslk
        return {
            "target": {
                "blocks": [list(b) for b in self.target_q.blocks],
                "lambda": list(self.target_lambda.values),
                "signature": dict(zip(("a", "b"), self.target_signature)),
            },
            "r0": self.r0,
            "chi": self.chi.to_json(),
            "source": {
                "blocks": [list(b) for b in self.source_q.blocks],
                "lambda": list(self.source_lambda.values),
                "signature": dict(zip(("a", "b"), self.source_signature)),
            },
            "det_shift": str(self.det_shift),
            "mslk": {"m": m, "s": s, "k": k, "l": l},
        }


@dataclass(frozen=True)
class LiftReport:
    """Verdicts of the four checks, with the computed intermediates."""

    datum: LiftDatum
    parameter_ok: bool
    infchar_ok: bool
    ktype_ok: bool
    mindegree_ok: bool
    bound: int
    details: dict = field(compare=False)

    @property
    def all_ok(self) -> bool:
        return self.parameter_ok and self.infchar_ok and self.ktype_ok and self.mindegree_ok

    def to_json(self) -> dict:
        return {
            "checks": {
                "parameter_ok": self.parameter_ok,
                "infchar_ok": self.infchar_ok,
                "ktype_ok": self.ktype_ok,
                "mindegree_ok": self.mindegree_ok,
            },
            "bound": self.bound,
            "datum": self.datum.to_json(),
            "details": self.details,
        }


def select_r0(q: ThetaStableAlgebra) -> List[int]:
    """All 1-based indices of blocks of maximal size, smallest first."""
    sizes = q.levi_sizes
    if not sizes:
        return []
    top = max(sizes)
    return [i + 1 for i, n in enumerate(sizes) if n == top]


def _resolve_chi(chi, n: int, n_prime: int) -> ChiPair:
    if chi is None:
        return ChiPair.default(n, n_prime)
    if isinstance(chi, ChiPair):
        if (chi.n, chi.n_prime) != (n, n_prime):
            raise ValueError(
                f"chi context {(chi.n, chi.n_prime)} does not match pair {(n, n_prime)}"
            )
        return chi
    a1, a2 = chi
    return ChiPair(int(a1), int(a2), n, n_prime)


def build_source(
    q: ThetaStableAlgebra,
    lam=None,
    r0: Optional[int] = None,
    chi=None,
) -> LiftDatum:
    """Build the source datum for (q, lambda) at the distinguished block r0.

    The source keeps the blocks before r0 and reflects the ones after it;
    its character is shifted block by block so that the lifted parameter
    matches the target up to one det twist.  The source block list is kept
    unmerged so the shifted character stays aligned.
    """
    lam = _as_lambda(q, lam)
    if r0 is None:
        choices = select_r0(q)
        if not choices:
            raise ValueError("empty algebra has no distinguished block")
        r0 = choices[0]
    if not 1 <= r0 <= q.r:
        raise ValueError(f"r0={r0} out of range 1..{q.r}")
    sizes = q.levi_sizes
    n = q.total
    n_r0 = sizes[r0 - 1]
    n_prime = n - n_r0
    chi = _resolve_chi(chi, n, n_prime)
    ms = _m_coeffs(sizes)
    m_r0 = ms[r0 - 1]
    lam_r0 = lam.values[r0 - 1]

    source_blocks = list(q.blocks[: r0 - 1]) + [(b, a) for a, b in q.blocks[r0:]]
    lam_prime: List[int] = []
    for i, lam_i in enumerate(lam.values, start=1):
        if i == r0:
            continue
        offset = (n_r0 if i < r0 else -n_r0) - m_r0 + chi.alpha1
        if offset % 2 != 0:
            raise ParityError(f"shifted character is not integral (offset {offset})")
        lam_prime.append(lam_i - lam_r0 + offset // 2)

    m = sum(b for _, b in q.blocks[: r0 - 1])
    s = sum(b for _, b in q.blocks[r0:])
    k = sum(a for a, _ in q.blocks[: r0 - 1])
    l = sum(a for a, _ in q.blocks[r0:])

    return LiftDatum(
        target_q=q,
        target_lambda=lam,
        r0=r0,
        chi=chi,
        source_q=ThetaStableAlgebra(source_blocks),
        source_lambda=LambdaCharacter(lam_prime),
        det_shift=half(2 * lam_r0 + m_r0 - chi.alpha2),
        mslk=(m, s, k, l),
    )


def verify_parameter_identity(d: LiftDatum) -> bool:
    """Lifted source parameter == det-twisted target parameter, exactly."""
    lifted = theta_lift_param(
        psi_lambda_q(d.source_q, d.source_lambda), d.chi, d.target_q.total
    )
    twisted = twist(psi_lambda_q(d.target_q, d.target_lambda), -d.det_shift)
    return lifted == twisted


def _lifted_inf_char(d: LiftDatum) -> CharMultiset:
    src = inf_char_aq(d.source_q, d.source_lambda)
    n_r0 = d.target_q.levi_sizes[d.r0 - 1]
    chi_jump = d.chi.alpha2 - d.chi.alpha1
    entries = [half(v.twice + chi_jump) for v in src]
    entries.extend(half(d.chi.alpha2 + n_r0 + 1 - 2 * i) for i in range(1, n_r0 + 1))
    return CharMultiset(entries).shifted(d.det_shift)


def verify_inf_char(d: LiftDatum) -> bool:
    """Composition rule for infinitesimal characters lands on the target."""
    return _lifted_inf_char(d) == inf_char_aq(d.target_q, d.target_lambda)


def _residuals(w: Weight, chi1_alpha: int, frame: Tuple[int, int]):
    """Doubled recentered coordinates of w relative to a partner signature."""
    fa, fb = frame
    rx = [v.twice - chi1_alpha - (fa - fb) for v in w.x]
    ry = [v.twice - chi1_alpha - (fb - fa) for v in w.y]
    return rx, ry


def _split_tails(res: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Split a weakly decreasing residual list into its strictly positive
    head and strictly negative tail (doubled values)."""
    if any(res[i] < res[i + 1] for i in range(len(res) - 1)):
        raise HoweBoundError("residual coordinates are not weakly decreasing")
    pos = [v for v in res if v > 0]
    neg = [v for v in res if v < 0]
    return pos, neg


def howe_type_map(mu_prime: Weight, target_sig: Tuple[int, int], chi: ChiPair) -> Weight:
    """Image of a minimal-degree source K-type on the target side.

    The source weight is recentered by chi1/2 and half the target signature
    difference; its strictly positive tails stay on their own factor while
    the strictly negative tails swap factors.  The result is recentered by
    chi2/2 and half the source signature difference.
    """
    a, b = target_sig
    a_src, b_src = mu_prime.signature
    rx, ry = _residuals(mu_prime, chi.alpha1, target_sig)
    pos_x, neg_x = _split_tails(rx)
    pos_y, neg_y = _split_tails(ry)
    t, u, v, w = len(pos_x), len(neg_x), len(pos_y), len(neg_y)
    if t + w > a or v + u > b:
        raise HoweBoundError(
            f"Howe bound violated: tails ({t},{u},{v},{w}) do not fit in {a}x{b}"
        )
    cx = chi.alpha2 + (a_src - b_src)
    cy = chi.alpha2 + (b_src - a_src)
    out_x = [cx + r for r in pos_x] + [cx] * (a - t - w) + [cx + r for r in neg_y]
    out_y = [cy + r for r in pos_y] + [cy] * (b - v - u) + [cy + r for r in neg_x]
    return Weight(tuple(half(v2) for v2 in out_x), tuple(half(v2) for v2 in out_y))


def _zones_ok(d: LiftDatum) -> bool:
    """Source lowest K-type decomposes with tail groups sized (k,s,m,l):
    k non-negative then s non-positive x-residuals, m non-negative then l
    non-positive y-residuals."""
    m, s, k, l = d.mslk
    low = lowest_k_type(d.source_q, d.source_lambda)
    rx, ry = _residuals(low, d.chi.alpha1, d.target_signature)
    if len(rx) != k + s or len(ry) != m + l:
        return False
    return (
        all(v >= 0 for v in rx[:k])
        and all(v <= 0 for v in rx[k:])
        and all(v >= 0 for v in ry[:m])
        and all(v <= 0 for v in ry[m:])
    )


def verify_k_type(d: LiftDatum) -> bool:
    """Decomposition sizes match (k,s,m,l) and the mapped lowest K-type,
    after the det twist, equals the target lowest K-type."""
    if not _zones_ok(d):
        return False
    low = lowest_k_type(d.source_q, d.source_lambda)
    try:
        mapped = howe_type_map(low, d.target_signature, d.chi)
    except HoweBoundError:
        return False
    return shift(mapped, d.det_shift) == lowest_k_type(d.target_q, d.target_lambda)


def verify_min_degree(d: LiftDatum, bound: int = DEFAULT_BOUND) -> bool:
    """No source K-type candidate within the bounded cone has strictly
    smaller degree than the lowest K-type."""
    base = degree(
        lowest_k_type(d.source_q, d.source_lambda), d.chi.alpha1, d.target_signature
    )
    cone = k_types_bounded(d.source_q, d.source_lambda, bound)
    return all(
        degree(w, d.chi.alpha1, d.target_signature) >= base for w in cone
    )


def full_report(
    q: ThetaStableAlgebra,
    lam=None,
    r0: Optional[int] = None,
    chi=None,
    bound: int = DEFAULT_BOUND,
) -> LiftReport:
    """Build the source datum and run all four checks."""
    d = build_source(q, lam, r0, chi)
    lifted_param = theta_lift_param(
        psi_lambda_q(d.source_q, d.source_lambda), d.chi, d.target_q.total
    )
    twisted_param = twist(psi_lambda_q(d.target_q, d.target_lambda), -d.det_shift)
    lifted_inf = _lifted_inf_char(d)
    target_inf = inf_char_aq(d.target_q, d.target_lambda)
    src_low = lowest_k_type(d.source_q, d.source_lambda)
    tgt_low = lowest_k_type(d.target_q, d.target_lambda)
    mapped_json = None
    try:
        mapped = shift(howe_type_map(src_low, d.target_signature, d.chi), d.det_shift)
        mapped_json = mapped.to_json()
    except HoweBoundError:
        mapped = None
    cone = k_types_bounded(d.source_q, d.source_lambda, bound)
    degrees = [degree(w, d.chi.alpha1, d.target_signature) for w in cone]
    base_degree = degree(src_low, d.chi.alpha1, d.target_signature)

    parameter_ok = lifted_param == twisted_param
    infchar_ok = lifted_inf == target_inf
    ktype_ok = _zones_ok(d) and mapped is not None and mapped == tgt_low
    mindegree_ok = all(deg >= base_degree for deg in degrees)

    details = {
        "lifted_parameter": lifted_param.to_json(),
        "twisted_target_parameter": twisted_param.to_json(),
        "lifted_inf_char": lifted_inf.to_json(),
        "target_inf_char": target_inf.to_json(),
        "source_lowest_k_type": src_low.to_json(),
        "mapped_k_type": mapped_json,
        "target_lowest_k_type": tgt_low.to_json(),
        "min_degree": {
            "lowest_k_type_degree": str(base_degree),
            "cone_minimum": str(min(degrees)) if degrees else str(base_degree),
            "cone_size": len(cone),
        },
    }
    return LiftReport(
        datum=d,
        parameter_ok=parameter_ok,
        infchar_ok=infchar_ok,
        ktype_ok=ktype_ok,
        mindegree_ok=mindegree_ok,
        bound=bound,
        details=details,
    )

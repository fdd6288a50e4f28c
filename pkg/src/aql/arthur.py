"""Arthur-parameter restrictions as formal sums mu^k (x) sigma_n.

Only the restriction to the connected part of the Weil group times
SL(2,C) is modeled: a multiset of summands (k, n) with k a half-integer
exponent and n the dimension of the irreducible SL(2) factor.  The
extension over the disconnected part is represented solely by the parity
condition on the exponents, which is exactly the computable content of
well-definedness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .halfint import CharMultiset, HalfIntLike, as_halfint, half
from .parabolic import ThetaStableAlgebra, _as_lambda, _m_coeffs


class ParityError(ValueError):
    """A character or exponent violates its parity constraint."""


@dataclass(frozen=True, init=False)
class ParameterRestriction:
    """A formal sum of summands mu^k (x) sigma_n, with multiset semantics.

    Summands are kept in canonical order: decreasing exponent, then
    decreasing dimension.
    """

    summands: tuple

    def __init__(self, summands: Iterable[Tuple[HalfIntLike, int]] = ()):
        items = []
        for k, n in summands:
            n = int(n)
            if n <= 0:
                raise ValueError(f"summand dimension must be positive, got {n}")
            items.append((as_halfint(k), n))
        items.sort(key=lambda kn: (-kn[0].twice, -kn[1]))
        object.__setattr__(self, "summands", tuple(items))

    @property
    def dimension(self) -> int:
        return sum(n for _, n in self.summands)

    def to_json(self) -> dict:
        return {"summands": [{"k": str(k), "n": n} for k, n in self.summands]}

    @classmethod
    def from_json(cls, doc: dict) -> "ParameterRestriction":
        return cls((s["k"], s["n"]) for s in doc["summands"])

    def __str__(self):
        if not self.summands:
            return "0"
        return " + ".join(f"mu^{k} (x) sigma_{n}" for k, n in self.summands)


@dataclass(frozen=True)
class ChiPair:
    """The pair of splitting characters, recorded by their circle exponents.

    For a dual pair with source rank n' and target rank n, the first
    character restricts to sign^n on the reals and the second to sign^n',
    so alpha1 = n (mod 2) and alpha2 = n' (mod 2).
    """

    alpha1: int
    alpha2: int
    n: int
    n_prime: int

    def __post_init__(self):
        if (self.alpha1 - self.n) % 2 != 0:
            raise ParityError(
                f"alpha(chi1)={self.alpha1} must have the parity of n={self.n}"
            )
        if (self.alpha2 - self.n_prime) % 2 != 0:
            raise ParityError(
                f"alpha(chi2)={self.alpha2} must have the parity of n'={self.n_prime}"
            )

    @classmethod
    def default(cls, n: int, n_prime: int) -> "ChiPair":
        """Smallest non-negative exponents of the correct parity."""
        return cls(n % 2, n_prime % 2, n, n_prime)

    def to_json(self) -> dict:
        return {"alpha1": self.alpha1, "alpha2": self.alpha2}


def inf_char_param(psi: ParameterRestriction) -> CharMultiset:
    """Infinitesimal character of a parameter: each summand (k, n)
    contributes the n-term string k + (n-1)/2, ..., k - (n-1)/2."""
    entries = []
    for k, n in psi.summands:
        entries.extend(half(k.twice + n + 1 - 2 * t) for t in range(1, n + 1))
    return CharMultiset(entries)


def m_coeffs(q: ThetaStableAlgebra) -> Tuple[int, ...]:
    """m_i = -(n_1+...+n_{i-1}) + (n_{i+1}+...+n_r) for each block."""
    return _m_coeffs(q.levi_sizes)


def parity_check(ks: Sequence[HalfIntLike], q: ThetaStableAlgebra) -> bool:
    """Whether per-block exponents extend over the full Weil group:
    2*k_i must have the parity of n - n_i for every block."""
    ks = [as_halfint(k) for k in ks]
    if len(ks) != q.r:
        raise ValueError(f"{len(ks)} exponents for {q.r} blocks")
    n = q.total
    return all((k.twice - (n - n_i)) % 2 == 0 for k, n_i in zip(ks, q.levi_sizes))


def psi_lambda_q(q: ThetaStableAlgebra, lam=None) -> ParameterRestriction:
    """The parameter attached to (q, lambda): block i contributes
    mu^(lambda_i + m_i/2) (x) sigma_{n_i}."""
    lam = _as_lambda(q, lam)
    ms = _m_coeffs(q.levi_sizes)
    return ParameterRestriction(
        (half(2 * lam_i + m_i), n_i)
        for lam_i, m_i, n_i in zip(lam.values, ms, q.levi_sizes)
    )


def twist(psi: ParameterRestriction, c: HalfIntLike) -> ParameterRestriction:
    """Tensor with mu^c: add c to every exponent."""
    c = as_halfint(c)
    return ParameterRestriction((k + c, n) for k, n in psi.summands)


def theta_lift_param(
    psi_prime: ParameterRestriction, chi: ChiPair, n: int
) -> ParameterRestriction:
    """Lift a rank-n' parameter to rank n: twist the old summands by
    (alpha2 - alpha1)/2 and adjoin mu^(alpha2/2) (x) sigma_{n-n'}."""
    n_prime = psi_prime.dimension
    if n_prime >= n:
        raise ValueError("target must be strictly larger")
    shift = half(chi.alpha2 - chi.alpha1)
    summands = [(k + shift, m) for k, m in psi_prime.summands]
    summands.append((half(chi.alpha2), n - n_prime))
    return ParameterRestriction(summands)

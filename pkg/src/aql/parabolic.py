"""Standard theta-stable parabolic subalgebras of u(a,b) as block lists.

A dominant diagonal element with r distinct values splits the signature
into an ordered list of blocks (a_i, b_i); the Levi factor is the product
of the U(a_i, b_i).  Everything computed downstream (the nested partition
pair, the noncompact radical roots, cohomological bidegree, infinitesimal
characters, lowest K-types, packets) depends only on the block order and
sizes, so the actual diagonal values are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .halfint import CharMultiset, HalfInt, Weight, half
from .partitions import FramedPair, IncompatiblePairError, Partition, conjugate


class DominanceError(ValueError):
    """A construction requires a dominant element."""


class AlignmentError(ValueError):
    """A per-block character does not match the block list."""


def _merge_pure(blocks: Iterable[Tuple[int, int]]) -> Tuple[Tuple[int, int], ...]:
    out: List[Tuple[int, int]] = []
    for ai, bi in blocks:
        if out:
            pa, pb = out[-1]
            if bi == 0 and pb == 0:
                out[-1] = (pa + ai, 0)
                continue
            if ai == 0 and pa == 0:
                out[-1] = (0, pb + bi)
                continue
        out.append((ai, bi))
    return tuple(out)


@dataclass(frozen=True)
class ThetaStableAlgebra:
    """An ordered block decomposition ((a_1,b_1),...,(a_r,b_r)).

    Standard constructions (from a dominant element or from a compatible
    partition pair) produce the canonical form, in which adjacent blocks
    of the same pure type are merged.  Raw lists are also accepted: packet
    members and lift sources must keep split pure blocks so that per-block
    characters stay aligned.
    """

    blocks: tuple

    def __init__(self, blocks: Iterable[Sequence[int]] = ()):
        norm = []
        for blk in blocks:
            ai, bi = int(blk[0]), int(blk[1])
            if ai < 0 or bi < 0 or (ai == 0 and bi == 0):
                raise ValueError(f"invalid block ({ai},{bi})")
            norm.append((ai, bi))
        object.__setattr__(self, "blocks", tuple(norm))

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def signature(self) -> Tuple[int, int]:
        return (sum(a for a, _ in self.blocks), sum(b for _, b in self.blocks))

    @property
    def levi_sizes(self) -> Tuple[int, ...]:
        """n_i = a_i + b_i for each block."""
        return tuple(a + b for a, b in self.blocks)

    @property
    def total(self) -> int:
        return sum(self.levi_sizes)

    @property
    def is_canonical(self) -> bool:
        return self.blocks == _merge_pure(self.blocks)

    @property
    def has_compact_levi(self) -> bool:
        """Every block pure; the attached module is then a discrete series."""
        return all(a == 0 or b == 0 for a, b in self.blocks)

    def canonicalize(self) -> "ThetaStableAlgebra":
        return ThetaStableAlgebra(_merge_pure(self.blocks))

    @classmethod
    def parse(cls, text: str) -> "ThetaStableAlgebra":
        """Parse the flag grammar "a1,b1;a2,b2;...". Empty string = empty algebra."""
        text = text.strip()
        if not text:
            return cls(())
        blocks = []
        for i, chunk in enumerate(text.split(";")):
            parts = chunk.split(",")
            if len(parts) != 2:
                raise ValueError(f"block {i + 1}: expected 'a,b', got {chunk!r}")
            try:
                blocks.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ValueError(f"block {i + 1}: non-integer in {chunk!r}") from None
        return cls(blocks)

    def unparse(self) -> str:
        return ";".join(f"{a},{b}" for a, b in self.blocks)

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, doc: dict) -> "ThetaStableAlgebra":
        return cls(doc["blocks"])

    def __str__(self):
        return "(" + ";".join(f"{a},{b}" for a, b in self.blocks) + ")"


@dataclass(frozen=True)
class LambdaCharacter:
    """Differential of a unitary character of the Levi: one integer per block."""

    values: tuple

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(int(v) for v in values)
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError(f"character values must be weakly decreasing: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def zero(cls, q: ThetaStableAlgebra) -> "LambdaCharacter":
        return cls((0,) * q.r)

    @classmethod
    def parse(cls, text: str) -> "LambdaCharacter":
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(v) for v in text.split(","))

    def to_json(self) -> list:
        return list(self.values)


def _as_lambda(q: ThetaStableAlgebra, lam) -> LambdaCharacter:
    if lam is None:
        return LambdaCharacter.zero(q)
    if not isinstance(lam, LambdaCharacter):
        lam = LambdaCharacter(lam)
    if len(lam.values) != q.r:
        raise AlignmentError(
            f"character has {len(lam.values)} values for {q.r} blocks"
        )
    return lam


def blocks_from_dominant(H: Weight) -> ThetaStableAlgebra:
    """Read the canonical block list off a dominant element."""
    if not H.is_dominant:
        raise DominanceError(f"element is not dominant: {H.to_json()}")
    levels = sorted({v.twice for v in H.x} | {v.twice for v in H.y}, reverse=True)
    xs = [v.twice for v in H.x]
    ys = [v.twice for v in H.y]
    blocks = [(xs.count(z), ys.count(z)) for z in levels]
    return ThetaStableAlgebra(_merge_pure(blocks))


@lru_cache(maxsize=None)
def partitions_from_blocks(q: ThetaStableAlgebra) -> FramedPair:
    """The nested pair (alpha, beta): row in block t has alpha-length equal
    to the number of y-slots in later blocks and beta-length additionally
    counting the block's own y-slots."""
    a, b = q.signature
    alpha_rows: List[int] = []
    beta_rows: List[int] = []
    below = b
    for ai, bi in q.blocks:
        below -= bi
        alpha_rows.extend([below] * ai)
        beta_rows.extend([below + bi] * ai)
    return FramedPair(a, b, Partition(alpha_rows), Partition(beta_rows))


def algebra_from_pair(pair: FramedPair) -> ThetaStableAlgebra:
    """Canonical block list realizing a compatible pair.

    Rows with equal (alpha_i, beta_i) share a block; the gap between the
    strict-below count of one group and the weak-below count of the next
    gives an intermediate pure-y block.  A negative gap means no dominant
    element realizes the pair.
    """
    a, b = pair.a, pair.b
    if a == 0:
        q = ThetaStableAlgebra(((0, b),) if b > 0 else ())
        return q
    groups: List[Tuple[int, int, int]] = []  # (alpha*, beta*, row count)
    for al, be in pair.row_pairs():
        if groups and groups[-1][0] == al and groups[-1][1] == be:
            groups[-1] = (al, be, groups[-1][2] + 1)
        else:
            groups.append((al, be, 1))
    blocks: List[Tuple[int, int]] = []
    lead = b - groups[0][1]
    if lead:
        blocks.append((0, lead))
    for t, (al, be, count) in enumerate(groups):
        blocks.append((count, be - al))
        if t + 1 < len(groups):
            gap = al - groups[t + 1][1]
            if gap < 0:
                raise IncompatiblePairError(f"no block decomposition for {pair.to_json()}")
            if gap:
                blocks.append((0, gap))
    tail = groups[-1][0]
    if tail:
        blocks.append((0, tail))
    q = ThetaStableAlgebra(blocks)
    if partitions_from_blocks(q) != pair:
        raise IncompatiblePairError(f"no block decomposition for {pair.to_json()}")
    return q


@lru_cache(maxsize=None)
def delta_u_p(q: ThetaStableAlgebra) -> Tuple[Tuple[int, int, int], ...]:
    """Noncompact roots of the nilradical, as signed cells (sign, i, j).

    A cell (i,j) inside alpha carries the root x_i - y_{b+1-j} with sign +1;
    a cell outside beta carries its negative.
    """
    pair = partitions_from_blocks(q)
    a, b = q.signature
    cells = []
    for i in range(1, a + 1):
        for j in range(1, pair.alpha.part(i) + 1):
            cells.append((1, i, j))
    for i in range(1, a + 1):
        for j in range(pair.beta.part(i) + 1, b + 1):
            cells.append((-1, i, j))
    return tuple(cells)


def root_of(cell: Tuple[int, int, int], a: int, b: int) -> Weight:
    """The weight-lattice vector of a signed cell: sign * (x_i - y_{b+1-j})."""
    sign, i, j = cell
    xs = [0] * a
    ys = [0] * b
    xs[i - 1] = sign
    ys[b - j] = -sign
    return Weight.of(xs, ys)


@lru_cache(maxsize=None)
def cohomological_degree(q: ThetaStableAlgebra) -> Tuple[int, int, int]:
    """(R, R+, R-): dim of the noncompact nilradical and its split."""
    pair = partitions_from_blocks(q)
    a, b = q.signature
    r_plus = pair.alpha.size()
    r_minus = a * b - pair.beta.size()
    return (r_plus + r_minus, r_plus, r_minus)


@lru_cache(maxsize=None)
def two_rho_up(q: ThetaStableAlgebra) -> Weight:
    """Sum of the noncompact nilradical roots; highest weight of V(q)."""
    pair = partitions_from_blocks(q)
    a, b = q.signature
    alpha_t = conjugate(pair.alpha)
    beta_t = conjugate(pair.beta)
    xs = [pair.alpha.part(i) + pair.beta.part(i) - b for i in range(1, a + 1)]
    ys = [a - (alpha_t.part(b + 1 - j) + beta_t.part(b + 1 - j)) for j in range(1, b + 1)]
    return Weight.of(xs, ys)


@lru_cache(maxsize=None)
def _m_coeffs(levi_sizes: Tuple[int, ...]) -> Tuple[int, ...]:
    total = sum(levi_sizes)
    prefix = 0
    out = []
    for n_i in levi_sizes:
        out.append(total - n_i - 2 * prefix)
        prefix += n_i
    return tuple(out)


def inf_char_aq(q: ThetaStableAlgebra, lam=None) -> CharMultiset:
    """Infinitesimal character attached to (q, lambda), as a multiset.

    Block i contributes the string of n_i values centered at
    lambda_i + m_i/2, where m_i is the signed count of slots in the other
    blocks.  This closed form already incorporates the half-sum for the
    Levi, so no positive system is ever chosen.
    """
    lam = _as_lambda(q, lam)
    ms = _m_coeffs(q.levi_sizes)
    entries = []
    for lam_i, m_i, n_i in zip(lam.values, ms, q.levi_sizes):
        center = 2 * lam_i + m_i
        entries.extend(half(center + n_i + 1 - 2 * t) for t in range(1, n_i + 1))
    return CharMultiset(entries)


def expand_lambda(q: ThetaStableAlgebra, lam=None) -> Weight:
    """Coordinate vector of a per-block character (constant on each block)."""
    lam = _as_lambda(q, lam)
    xs: List[int] = []
    ys: List[int] = []
    for (ai, bi), v in zip(q.blocks, lam.values):
        xs.extend([v] * ai)
        ys.extend([v] * bi)
    return Weight.of(xs, ys)


def lowest_k_type(q: ThetaStableAlgebra, lam=None) -> Weight:
    """Highest weight of the K-type generating the module: lambda + 2rho(u cap p)."""
    return expand_lambda(q, lam) + two_rho_up(q)


def k_types_bounded(q: ThetaStableAlgebra, lam=None, bound: int = 0) -> List[Weight]:
    """The cone lambda + 2rho(u cap p) + sum n_tau tau truncated at total
    coefficient <= bound.  A superset of the actual K-types, which is all
    the minimal-degree search needs."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    a, b = q.signature
    base = lowest_k_type(q, lam)
    roots = [root_of(c, a, b) for c in delta_u_p(q)]

    def key(w: Weight):
        return tuple(v.twice for v in w.x) + tuple(v.twice for v in w.y)

    seen = {key(base): base}
    frontier = [base]
    for _ in range(bound):
        nxt = []
        for w in frontier:
            for tau in roots:
                cand = w + tau
                k = key(cand)
                if k not in seen:
                    seen[k] = cand
                    nxt.append(cand)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


def enumerate_packet(q: ThetaStableAlgebra, lam=None):
    """All redistributions of each block's signature, with the same character.

    Members represent the K-conjugacy classes in the packet of (q, lambda);
    block lists are kept as-is (no pure-block merging) so the per-block
    character stays aligned.
    """
    lam = _as_lambda(q, lam)
    a, _ = q.signature
    sizes = q.levi_sizes
    members = []

    def rec(idx: int, a_left: int, chosen: List[int]):
        if idx == len(sizes):
            if a_left == 0:
                members.append(
                    (
                        ThetaStableAlgebra(
                            (ai, n - ai) for ai, n in zip(chosen, sizes)
                        ),
                        lam,
                    )
                )
            return
        tail = sum(sizes[idx + 1 :])
        lo = max(0, a_left - tail)
        hi = min(sizes[idx], a_left)
        for ai in range(lo, hi + 1):
            chosen.append(ai)
            rec(idx + 1, a_left - ai, chosen)
            chosen.pop()

    rec(0, a, [])
    return members


def degree(w: Weight, chi1_alpha: int, frame: Optional[Tuple[int, int]] = None) -> HalfInt:
    """Fock-space degree of a weight relative to a dual-pair partner.

    Coordinates are recentered by chi1_alpha/2 plus (a-b)/2 on the x-part
    and (b-a)/2 on the y-part, where (a, b) is the partner signature
    (`frame`); the degree is the sum of absolute recentered coordinates.
    With no partner given, the weight's own signature is used.
    """
    fa, fb = frame if frame is not None else w.signature
    cx = chi1_alpha + (fa - fb)
    cy = chi1_alpha + (fb - fa)
    total = sum(abs(v.twice - cx) for v in w.x) + sum(abs(v.twice - cy) for v in w.y)
    return half(total)


def enumerate_standard(a: int, b: int) -> List[ThetaStableAlgebra]:
    """All canonical standard algebras of U(a,b), one per compatible pair."""
    from .partitions import enumerate_compatible

    return [algebra_from_pair(p) for p in enumerate_compatible(a, b)]

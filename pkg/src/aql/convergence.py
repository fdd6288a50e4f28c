"""Convergence certificates: backward chains of theta predecessors.

A block list is convergent when it is reachable from a compact-Levi (or
empty) base by repeated lifts whose sizes strictly more than double at
every step and whose intermediate pairs stay in the stable range.  The
search walks backward through the deterministic predecessor map, trying
the distinguished index in ascending order, and memoizes on canonical
block lists, so certificates are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from .parabolic import (
    LambdaCharacter,
    ThetaStableAlgebra,
    algebra_from_pair,
    cohomological_degree,
    enumerate_packet,
)
from .partitions import enumerate_compatible


def predecessor(q: ThetaStableAlgebra, r0: int) -> ThetaStableAlgebra:
    """Remove block r0 and reflect the later blocks, canonicalized."""
    if not 1 <= r0 <= q.r:
        raise ValueError(f"r0={r0} out of range 1..{q.r}")
    blocks = list(q.blocks[: r0 - 1]) + [(b, a) for a, b in q.blocks[r0:]]
    return ThetaStableAlgebra(blocks).canonicalize()


@dataclass(frozen=True)
class ChainStep:
    """One node of a certificate chain; r0 is the index used to step back
    from this node (None at the base)."""

    signature: Tuple[int, int]
    blocks: ThetaStableAlgebra
    r0: Optional[int]

    def to_json(self) -> dict:
        return {
            "signature": {"a": self.signature[0], "b": self.signature[1]},
            "blocks": [list(b) for b in self.blocks.blocks],
            "r0": self.r0,
        }


@dataclass(frozen=True)
class ConvergenceCertificate:
    """A replayable chain from a compact-Levi base up to the input."""

    steps: Tuple[ChainStep, ...]
    lax: bool

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    def signature_chain(self) -> List[Tuple[int, int]]:
        return [s.signature for s in self.steps]

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "lax": self.lax,
            "steps": [s.to_json() for s in self.steps],
        }


def _growth_ok(lower: Tuple[int, int], upper: Tuple[int, int]) -> bool:
    return sum(upper) > 2 * sum(lower)


def _stable_ok(lower: Tuple[int, int], upper: Tuple[int, int]) -> bool:
    return sum(lower) <= min(upper)


@lru_cache(maxsize=None)
def _search(blocks: Tuple[Tuple[int, int], ...], is_last: bool, lax: bool):
    """Backward chain ending at `blocks`, or None.  In lax mode the stable
    range is waived on the final step and on the step out of the base."""
    q = ThetaStableAlgebra(blocks)
    if q.has_compact_levi:
        return (ChainStep(q.signature, q, None),)
    for r0 in range(1, q.r + 1):
        pred = predecessor(q, r0)
        if not _growth_ok(pred.signature, q.signature):
            continue
        waived = lax and (is_last or pred.has_compact_levi)
        if not waived and not _stable_ok(pred.signature, q.signature):
            continue
        sub = _search(pred.blocks, False, lax)
        if sub is None:
            continue
        return sub + (ChainStep(q.signature, q, r0),)
    return None


def is_convergent(
    q: ThetaStableAlgebra, lax: bool = False
) -> Tuple[bool, Optional[ConvergenceCertificate]]:
    """Decide convergence; on success return the first certificate found
    (depth-first, r0 ascending).  The input is canonicalized first."""
    chain = _search(q.canonicalize().blocks, True, lax)
    if chain is None:
        return False, None
    return True, ConvergenceCertificate(steps=chain, lax=lax)


def validate_certificate(
    cert: ConvergenceCertificate, q: ThetaStableAlgebra
) -> List[str]:
    """Independent replay of a certificate; returns the list of violations."""
    problems = []
    steps = cert.steps
    if not steps:
        return ["certificate has no steps"]
    if steps[-1].blocks != q.canonicalize():
        problems.append("chain does not end at the input algebra")
    base = steps[0]
    if not base.blocks.has_compact_levi:
        problems.append("base Levi is not compact")
    if base.r0 is not None:
        problems.append("base step must not carry an r0")
    for i in range(1, len(steps)):
        prev, cur = steps[i - 1], steps[i]
        if cur.blocks.signature != cur.signature:
            problems.append(f"step {i}: recorded signature mismatch")
        if cur.r0 is None:
            problems.append(f"step {i}: missing r0")
            continue
        if predecessor(cur.blocks, cur.r0) != prev.blocks:
            problems.append(f"step {i}: predecessor does not replay")
        if not _growth_ok(prev.signature, cur.signature):
            problems.append(f"step {i}: growth condition fails")
        waived = cert.lax and (i == len(steps) - 1 or i == 1)
        if not waived and not _stable_ok(prev.signature, cur.signature):
            problems.append(f"step {i}: stable range fails")
    return problems


@dataclass(frozen=True)
class AtlasRow:
    """One classified module of U(a,b) with its invariants."""

    pair_alpha: Tuple[int, ...]
    pair_beta: Tuple[int, ...]
    blocks: ThetaStableAlgebra
    R: int
    R_plus: int
    R_minus: int
    packet_size: int
    convergent: bool
    chain: Tuple[Tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "alpha": list(self.pair_alpha),
            "beta": list(self.pair_beta),
            "blocks": [list(b) for b in self.blocks.blocks],
            "R": self.R,
            "R_plus": self.R_plus,
            "R_minus": self.R_minus,
            "packet_size": self.packet_size,
            "convergent": self.convergent,
            "chain": [{"a": a, "b": b} for a, b in self.chain],
        }

    def to_tsv(self) -> str:
        return "\t".join(
            (
                ",".join(str(p) for p in self.pair_alpha),
                ",".join(str(p) for p in self.pair_beta),
                self.blocks.unparse(),
                str(self.R),
                str(self.R_plus),
                str(self.R_minus),
                str(self.packet_size),
                "true" if self.convergent else "false",
                ">".join(f"{a},{b}" for a, b in self.chain),
            )
        )


ATLAS_TSV_HEADER = "alpha\tbeta\tblocks\tR\tR+\tR-\tpacket_size\tconvergent\tchain"


def atlas(a: int, b: int, lax: bool = False) -> List[AtlasRow]:
    """One row per compatible pair in the a x b frame, in enumeration order.

    The degenerate (0,0) frame yields an empty table.
    """
    if a == 0 and b == 0:
        return []
    rows = []
    for pair in enumerate_compatible(a, b):
        q = algebra_from_pair(pair)
        R, R_plus, R_minus = cohomological_degree(q)
        packet = enumerate_packet(q, LambdaCharacter.zero(q))
        ok, cert = is_convergent(q, lax)
        rows.append(
            AtlasRow(
                pair_alpha=pair.alpha.rows,
                pair_beta=pair.beta.rows,
                blocks=q,
                R=R,
                R_plus=R_plus,
                R_minus=R_minus,
                packet_size=len(packet),
                convergent=ok,
                chain=tuple(cert.signature_chain()) if cert else (),
            )
        )
    return rows

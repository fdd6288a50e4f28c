"""Command-line front end.

Subcommands mirror the library surface: partition-pair enumeration,
invariants of one module, packet listing, lift construction and
verification, convergence checks and the atlas table.  Output is
deterministic: the same argv always produces byte-identical stdout.
Exit codes: 0 success / verified, 1 a verification returned false,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import __version__
from .arthur import ParityError, psi_lambda_q
from .convergence import ATLAS_TSV_HEADER, atlas, is_convergent
from .parabolic import (
    AlignmentError,
    LambdaCharacter,
    ThetaStableAlgebra,
    cohomological_degree,
    enumerate_packet,
    inf_char_aq,
    lowest_k_type,
    partitions_from_blocks,
    two_rho_up,
)
from .partitions import enumerate_compatible
from .thetalift import DEFAULT_BOUND, build_source, full_report

BOUND_ENV = "AQL_BOUND"


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _parse_blocks(text: str) -> ThetaStableAlgebra:
    return ThetaStableAlgebra.parse(text)


def _parse_lambda(text: Optional[str], q: ThetaStableAlgebra) -> LambdaCharacter:
    if text is None:
        return LambdaCharacter.zero(q)
    lam = LambdaCharacter.parse(text)
    if len(lam.values) != q.r:
        raise AlignmentError(
            f"--lambda has {len(lam.values)} values for {q.r} blocks"
        )
    return lam


def _parse_chi(text: Optional[str]):
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--chi expects 'a1,a2', got {text!r}")
    return (int(parts[0]), int(parts[1]))


def _default_bound(args) -> int:
    if args.bound is not None:
        return args.bound
    env = os.environ.get(BOUND_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{BOUND_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_BOUND


def cmd_partitions_enumerate(args) -> int:
    pairs = enumerate_compatible(args.a, args.b)
    if args.count:
        _emit(len(pairs))
    else:
        _emit([p.to_json() for p in pairs])
    return 0


def cmd_aq(args) -> int:
    q = _parse_blocks(args.blocks)
    lam = _parse_lambda(getattr(args, "lambda"), q)
    pair = partitions_from_blocks(q)
    R, R_plus, R_minus = cohomological_degree(q)
    a, b = q.signature
    _emit(
        {
            "blocks": [list(blk) for blk in q.blocks],
            "signature": {"a": a, "b": b},
            "lambda": list(lam.values),
            "alpha": pair.alpha.to_json(),
            "beta": pair.beta.to_json(),
            "R": R,
            "R_plus": R_plus,
            "R_minus": R_minus,
            "two_rho_up": two_rho_up(q).to_json(),
            "inf_char": inf_char_aq(q, lam).to_json(),
            "lowest_k_type": lowest_k_type(q, lam).to_json(),
            "parameter": psi_lambda_q(q, lam).to_json(),
        }
    )
    return 0


def cmd_packet(args) -> int:
    q = _parse_blocks(args.blocks)
    lam = _parse_lambda(getattr(args, "lambda"), q)
    members = enumerate_packet(q, lam)
    _emit(
        {
            "base": {"blocks": [list(blk) for blk in q.blocks], "lambda": list(lam.values)},
            "size": len(members),
            "inf_char": inf_char_aq(q, lam).to_json(),
            "members": [[list(blk) for blk in mq.blocks] for mq, _ in members],
        }
    )
    return 0


def cmd_lift_construct(args) -> int:
    q = _parse_blocks(args.blocks)
    lam = _parse_lambda(getattr(args, "lambda"), q)
    datum = build_source(q, lam, args.r0, _parse_chi(args.chi))
    _emit(datum.to_json())
    return 0


def cmd_lift_verify(args) -> int:
    q = _parse_blocks(args.blocks)
    lam = _parse_lambda(getattr(args, "lambda"), q)
    report = full_report(q, lam, args.r0, _parse_chi(args.chi), _default_bound(args))
    if args.json:
        _emit(report.to_json())
    else:
        for name, ok in (
            ("parameter_ok", report.parameter_ok),
            ("infchar_ok", report.infchar_ok),
            ("ktype_ok", report.ktype_ok),
        ):
            sys.stdout.write(f"{name}: {'true' if ok else 'false'}\n")
        sys.stdout.write(
            f"mindegree_ok: {'true' if report.mindegree_ok else 'false'}"
            f" (bound {report.bound})\n"
        )
        sys.stdout.write(
            "all checks passed\n" if report.all_ok else "verification failed\n"
        )
    return 0 if report.all_ok else 1


def cmd_convergence_check(args) -> int:
    q = _parse_blocks(args.blocks)
    ok, cert = is_convergent(q, lax=args.lax)
    _emit(
        {
            "blocks": [list(blk) for blk in q.blocks],
            "lax": args.lax,
            "convergent": ok,
            "certificate": cert.to_json() if cert else None,
        }
    )
    return 0 if ok else 1


def cmd_atlas(args) -> int:
    rows = atlas(args.a, args.b, lax=args.lax)
    if args.format == "tsv":
        text = ATLAS_TSV_HEADER + "\n" + "".join(r.to_tsv() + "\n" for r in rows)
    else:
        text = json.dumps([r.to_json() for r in rows], indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aql",
        description="Exact invariants of cohomological representations of U(a,b).",
    )
    parser.add_argument(
        "--meta",
        action="store_true",
        help="write run metadata as one JSON line on stderr",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_partitions = sub.add_parser("partitions", help="partition-pair classification")
    psub = p_partitions.add_subparsers(dest="subcommand", required=True)
    p_enum = psub.add_parser("enumerate", help="enumerate compatible pairs in a frame")
    p_enum.add_argument("--a", type=int, required=True)
    p_enum.add_argument("--b", type=int, required=True)
    p_enum.add_argument("--count", action="store_true", help="print only the count")
    p_enum.set_defaults(func=cmd_partitions_enumerate)

    p_aq = sub.add_parser("aq", help="invariants of the module of (blocks, lambda)")
    p_aq.add_argument("--blocks", required=True, help='block list "a1,b1;a2,b2;..."')
    p_aq.add_argument("--lambda", help="per-block character, e.g. '2,1,0' (default 0)")
    p_aq.set_defaults(func=cmd_aq)

    p_packet = sub.add_parser("packet", help="enumerate the packet of (blocks, lambda)")
    p_packet.add_argument("--blocks", required=True)
    p_packet.add_argument("--lambda")
    p_packet.set_defaults(func=cmd_packet)

    p_lift = sub.add_parser("lift", help="theta-lift construction and verification")
    lsub = p_lift.add_subparsers(dest="subcommand", required=True)
    for name, fn in (("construct", cmd_lift_construct), ("verify", cmd_lift_verify)):
        p = lsub.add_parser(name)
        p.add_argument("--blocks", required=True)
        p.add_argument("--lambda")
        p.add_argument("--r0", type=int, help="1-based distinguished block (default: first maximal)")
        p.add_argument("--chi", help="character exponents 'a1,a2' (default: minimal parities)")
        if name == "verify":
            p.add_argument("--bound", type=int, help=f"cone bound for the degree check (default {DEFAULT_BOUND}, env {BOUND_ENV})")
            p.add_argument("--json", action="store_true", help="full JSON report")
        p.set_defaults(func=fn)

    p_conv = sub.add_parser("convergence", help="convergence certificates")
    csub = p_conv.add_subparsers(dest="subcommand", required=True)
    p_check = csub.add_parser("check")
    p_check.add_argument("--blocks", required=True)
    p_check.add_argument("--lax", action="store_true", help="literal stable-range index range")
    p_check.set_defaults(func=cmd_convergence_check)

    p_atlas = sub.add_parser("atlas", help="classification table for one signature")
    p_atlas.add_argument("--a", type=int, required=True)
    p_atlas.add_argument("--b", type=int, required=True)
    p_atlas.add_argument("--format", choices=("json", "tsv"), default="json")
    p_atlas.add_argument("--out", help="write to a file instead of stdout")
    p_atlas.add_argument("--lax", action="store_true")
    p_atlas.set_defaults(func=cmd_atlas)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else 2
    if args.meta:
        meta = {"tool": "aql", "version": __version__, "argv": list(argv or sys.argv[1:])}
        sys.stderr.write(json.dumps(meta) + "\n")
    try:
        return args.func(args)
    except (ValueError, ParityError, AlignmentError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

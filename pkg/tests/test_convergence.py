import pytest

from aql.convergence import (
    atlas,
    is_convergent,
    predecessor,
    validate_certificate,
)
from aql.parabolic import ThetaStableAlgebra, enumerate_standard
from aql.thetalift import build_source


def alg(*blocks):
    return ThetaStableAlgebra(blocks)


def test_predecessor_examples():
    assert predecessor(alg((1, 0), (2, 2), (0, 1)), 2) == alg((2, 0))
    assert predecessor(alg((3, 2)), 1) == ThetaStableAlgebra(())
    assert predecessor(alg((1, 0), (1, 1)), 2) == alg((1, 0))
    with pytest.raises(ValueError):
        predecessor(alg((1, 1)), 2)


def test_predecessor_matches_build_source():
    for n in range(1, 6):
        for a in range(n + 1):
            for q in enumerate_standard(a, n - a):
                for r0 in range(1, q.r + 1):
                    d = build_source(q, None, r0, None)
                    assert d.source_q.canonicalize() == predecessor(q, r0)


def test_compact_levi_is_convergent_with_empty_chain():
    for q in [alg((3, 0)), alg((0, 2)), alg((2, 0), (0, 3)), ThetaStableAlgebra(())]:
        ok, cert = is_convergent(q)
        assert ok
        assert cert.length == 0
        assert cert.steps[0].blocks == q.canonicalize()
        assert validate_certificate(cert, q) == []


def test_u33_example_is_convergent():
    q = alg((1, 0), (2, 2), (0, 1))
    ok, cert = is_convergent(q)
    assert ok
    assert cert.signature_chain() == [(2, 0), (3, 3)]
    assert cert.steps[1].r0 == 2
    assert cert.steps[0].blocks == alg((2, 0))
    assert validate_certificate(cert, q) == []


def test_u22_square_is_not_convergent():
    ok, cert = is_convergent(alg((1, 1), (1, 1)))
    assert not ok and cert is None


def test_trivial_representation_chain_from_empty_base():
    ok, cert = is_convergent(alg((1, 1)))
    assert ok
    assert cert.signature_chain() == [(0, 0), (1, 1)]
    assert validate_certificate(cert, alg((1, 1))) == []


def test_certificates_replay_everywhere():
    for n in range(0, 7):
        for a in range(n + 1):
            for q in enumerate_standard(a, n - a):
                for lax in (False, True):
                    ok, cert = is_convergent(q, lax)
                    if ok:
                        assert validate_certificate(cert, q) == []


def test_lax_is_weaker_than_strict():
    for n in range(0, 7):
        for a in range(n + 1):
            for q in enumerate_standard(a, n - a):
                strict_ok, _ = is_convergent(q)
                lax_ok, _ = is_convergent(q, lax=True)
                if strict_ok:
                    assert lax_ok


def test_validate_rejects_tampered_certificate():
    import dataclasses

    q = alg((1, 0), (2, 2), (0, 1))
    _, cert = is_convergent(q)
    bad_step = dataclasses.replace(cert.steps[1], r0=1)
    bad = dataclasses.replace(cert, steps=(cert.steps[0], bad_step))
    assert validate_certificate(bad, q) != []


def test_chain_length_is_logarithmic():
    """Backward sizes strictly more than halve, so chains stay short."""
    import math

    for n in range(1, 7):
        for a in range(n + 1):
            for q in enumerate_standard(a, n - a):
                ok, cert = is_convergent(q)
                if ok and cert.length:
                    assert cert.length <= math.log2(n) + 1
                    sizes = [sum(sig) for sig in cert.signature_chain()]
                    for lower, upper in zip(sizes, sizes[1:]):
                        assert upper > 2 * lower


def test_li_family_one_step_chains():
    """A single mixed block surrounded by pure blocks, with more than half
    the total size and the rest inside min(a,b), lifts from a compact base
    in one step."""
    found = 0
    for n in range(2, 7):
        for a in range(n + 1):
            for q in enumerate_standard(a, n - a):
                mixed = [i for i, (ai, bi) in enumerate(q.blocks) if ai and bi]
                if len(mixed) != 1:
                    continue
                i = mixed[0]
                x, y = q.blocks[i]
                others = q.total - (x + y)
                sig = q.signature
                if 2 * (x + y) <= n or others > min(sig):
                    continue
                found += 1
                ok, cert = is_convergent(q)
                assert ok, q
                pred = predecessor(q, i + 1)
                assert pred.has_compact_levi
                assert sum(pred.signature) * 2 < n
    assert found > 10


def test_atlas_examples():
    rows = atlas(1, 1)
    assert len(rows) == 3
    by_blocks = {r.blocks.blocks: r for r in rows}
    assert by_blocks[((0, 1), (1, 0))].convergent
    assert by_blocks[((1, 0), (0, 1))].convergent
    assert by_blocks[((0, 1), (1, 0))].chain == ((1, 1),)
    trivial = by_blocks[((1, 1),)]
    assert trivial.convergent and trivial.chain == ((0, 0), (1, 1))
    assert trivial.packet_size == 1
    assert by_blocks[((1, 0), (0, 1))].packet_size == 2

    assert atlas(0, 0) == []
    assert len(atlas(2, 2)) == 18


def test_atlas_row_invariants():
    for row in atlas(2, 2):
        assert row.R == row.R_plus + row.R_minus
        if row.convergent:
            assert row.chain[-1] == (2, 2)


def test_atlas_tsv_shape():
    from aql.convergence import ATLAS_TSV_HEADER

    rows = atlas(2, 1)
    header_cols = ATLAS_TSV_HEADER.split("\t")
    assert header_cols == [
        "alpha", "beta", "blocks", "R", "R+", "R-",
        "packet_size", "convergent", "chain",
    ]
    for row in rows:
        assert len(row.to_tsv().split("\t")) == len(header_cols)

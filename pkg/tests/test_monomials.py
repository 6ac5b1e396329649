from normtrace.curves import make_curve
from normtrace.monomials import (compare, footprint, footprint_paper_variant,
                                 monomials_up_to, weight)

NT3 = make_curve(2, 1, 4, 3)
NT5 = make_curve(2, 1, 4, 5)


def test_weight_examples():
    assert weight(NT3, (1, 0)) == 8
    assert weight(NT3, (0, 0)) == 0
    assert weight(NT3, (3, 4)) == 36


def test_footprint_sizes_and_max_weights():
    fp3 = footprint(NT3)
    fp5 = footprint(NT5)
    assert len(fp3) == 32 and len(fp5) == 48
    assert max(weight(NT3, m) for m in fp3) == 45
    assert max(weight(NT5, m) for m in fp5) == 75
    # paper-variant box is strictly larger than n
    assert len(footprint_paper_variant(NT3)) == 4 * 9


def test_weights_injective_on_footprint():
    for curve in (NT3, NT5, make_curve(2, 1, 4, 15), make_curve(3, 1, 2, 4)):
        ws = [weight(curve, m) for m in footprint(curve)]
        assert len(set(ws)) == len(ws)


def test_nt3_weight_range():
    ws = sorted(weight(NT3, m) for m in footprint(NT3))
    assert len(ws) == 32 and ws[0] == 0 and ws[-1] == 45


def test_missing_weights_symmetric():
    # the gaps in [0, maxweight] map onto each other under w -> maxweight - w
    for curve in (NT3, NT5):
        present = {weight(curve, m) for m in footprint(curve)}
        missing = set(range(curve.max_weight + 1)) - present
        assert len(missing) == 2 * curve.genus
        assert {curve.max_weight - w for w in missing} == missing


def test_monomials_up_to_examples():
    assert monomials_up_to(NT3, 8) == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert monomials_up_to(NT5, 10) == [(0, 0), (0, 1), (1, 0), (0, 2)]
    assert monomials_up_to(NT3, 0) == [(0, 0)]
    assert monomials_up_to(NT3, -1) == []
    assert monomials_up_to(NT3, NT3.max_weight) == \
        sorted(footprint(NT3), key=lambda m: (weight(NT3, m), m[1]))


def test_compare_order():
    assert compare(NT3, (0, 8), (3, 0)) == 1  # equal weight 24, Y-dominant
    assert compare(NT3, (2, 3), (2, 3)) == 0
    assert compare(NT3, (1, 0), (0, 3)) == -1  # weights 8 vs 9


def test_compare_is_multiplicative():
    monos = [(i, j) for i in range(4) for j in range(4)]
    for m1 in monos:
        for m2 in monos:
            for k in [(1, 0), (0, 1), (2, 3)]:
                shifted = compare(NT3, (m1[0] + k[0], m1[1] + k[1]),
                                  (m2[0] + k[0], m2[1] + k[1]))
                assert shifted == compare(NT3, m1, m2)

from pathlib import Path

import prym5

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def test_block_net_splits():
    r = prym5.block_net(11, 42)
    assert r["split"] == "split"
    assert tuple(r["eigensignature"]) == (2, 3)
    assert r["fixed_point_free"]
    assert r["hilbert"] == {d: 8 * d - 4 for d in range(2, 7)}


def test_random_fixture_does_not_split():
    r = prym5.net_fixture((FIXTURES / "net_random_f7.txt").read_text())
    assert r["split"] == "no_split"
    assert r["involution"] == "absent"


def test_genus2_fixture():
    text = (FIXTURES / "g2_x6m1_f7_3k.txt").read_text()
    r = prym5.genus2(text, quadric=[0, 0, 1, 1])
    assert r["certified"]
    assert r["nodes"] == 16 and r["all_nodes"]
    assert r["tropes"] == 16 and all(r["polar_passed"])
    assert r["admissible"] and r["bisecant_pairs"] == 4


def test_pipeline_and_liaison():
    r = prym5.pipeline_3_16(11, 1)
    assert r["passed"]
    assert r["quadrisecants"] == 2
    assert r["double_ideal_degree7"] == 4
    assert not prym5.pipeline_3_16(11, 1, singular=True)["passed"]
    assert prym5.liaison(11, 1)["residual_degree"] == 8


def test_numerology():
    assert prym5.segre_quadratic(8, 8, 3, 0) == (3, -17, 24, [3])
    assert prym5.ruled_numerology(6, 2) == (5, 8)
    assert [prym5.castelnuovo_bound(n) for n in range(4, 8)] == [1, 2, 4, 6]


def test_parse_errors_raise():
    import pytest

    with pytest.raises(ValueError):
        prym5.net_fixture("GF(11)\nx0\n")

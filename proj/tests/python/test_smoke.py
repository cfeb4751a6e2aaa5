import json
import os
import pathlib

import pytest

import netaug

FIXTURES = pathlib.Path(os.environ.get("NETAUG_FIXTURES", pathlib.Path(__file__).parents[1] / "fixtures"))


def cycle(n):
    return [(i, (i + 1) % n, 0, i) for i in range(n)]


def test_spanner_keeps_one_of_parallel_edges():
    s = netaug.SpannerState(3, 2, 0.5)
    s.insert((0, 1, 5, 0))
    s.insert((0, 1, 7, 1))
    s.insert((1, 2, 5, 2))
    kept = sorted(e.id for e in s.edges())
    assert kept == [0, 2]
    assert s.peak_stored >= s.stored


def test_certificate_on_k4():
    k4 = [(u, v, 1, i) for i, (u, v) in enumerate([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])]
    stack = netaug.ForestStack(4, 2)
    for e in k4:
        stack.insert(e)
    cert = stack.edges()
    assert len(cert) <= 2 * 3
    assert netaug.validate_certificate(k4, cert, 4, 2)


def test_four_cycle_augmentation_matches_oracle():
    links = [(0, 2, 1, 10), (1, 3, 1, 11), (0, 1, 5, 12)]
    report = netaug.kcap_link_arrival(cycle(4), 4, links, 3, with_oracle=True)
    assert report.feasible
    assert report.total_weight == 2
    assert report.oracle_weight == 2
    exact = netaug.exact_kcap(cycle(4), links, 4, 3)
    assert exact.weight == 2


def test_infeasible_instance_returns_none():
    assert netaug.exact_kcap(cycle(5), [(0, 2, 1, 9)], 5, 3) is None


def test_cactus_of_cycle_unfolds_to_itself():
    c = netaug.cactus_build(cycle(5), 5)
    assert netaug.cactus_validate(c)
    u = netaug.cactus_unfold(c)
    assert u.cycle_length == 5
    assert u.zero_links == []


def test_weighted_cycle_augmenter_finalizes():
    aug = netaug.WeightedCycleAugmenter(4, 0.5)
    for link in [(0, 2, 3, 0), (1, 3, 4, 1), (0, 2, 9, 2)]:
        aug.insert(link)
    sol = aug.finalize()
    assert sol is not None
    assert sol.weight == 7


def test_kecss_on_k4():
    k4 = [(u, v, 1, i) for i, (u, v) in enumerate([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])]
    report = netaug.kecss(k4, 4, 2, with_oracle=True)
    assert report.feasible
    assert report.oracle_weight == 4
    assert netaug.edge_connectivity(report.output, 4, 2) == 2


def test_sndp_meets_requirements():
    k4 = [(u, v, 1, i) for i, (u, v) in enumerate([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])]
    report = netaug.sndp(k4, 4, {(0, 3): 2, (1, 2): 1}, 2, with_oracle=True)
    assert report.feasible
    assert report.oracle_weight == netaug.exact_sndp(4, k4, {(0, 3): 2, (1, 2): 1}).weight


def test_cli_report_and_exit_codes():
    code, report, error = netaug.run_cli("kcap-link", str(FIXTURES / "four_cycle_chords.stream"), with_oracle=True)
    assert code == 0, error
    doc = json.loads(report)
    assert doc["feasible"] is True
    assert doc["ratio"] == 1.0

    code, _, _ = netaug.run_cli("oracle", str(FIXTURES / "five_cycle_one_link.stream"), oracle_kind="kcap")
    assert code == 2
    code, _, _ = netaug.run_cli("spanner", str(FIXTURES / "invalid" / "self_loop.stream"))
    assert code == 4


def test_bad_tuple_rejected():
    with pytest.raises((TypeError, ValueError)):
        netaug.SpannerState(3, 2, 0.5).insert((0,))

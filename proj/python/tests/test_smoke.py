# Copyright 2026 The hopfcoords Authors.
# SPDX-License-Identifier: Apache-2.0

import json
import math

import numpy as np
import pytest

import hopfcoords as hc

H = math.sqrt(0.5)


def test_basepoint_linking():
    link = hc.basepoint()
    for method in ("round", "gauss", "crossing"):
        assert hc.linking_number(link, method) == 1
    flipped = hc.HopfLink(link.first, link.second.reversed())
    assert hc.linking_number(flipped) == -1


def test_prism_point_and_frame():
    link = hc.basepoint()
    assert hc.canonical_prism_point(link) == pytest.approx((H, 0, 0, H), abs=1e-12)
    frame = hc.frame_of(link)
    assert np.allclose(frame, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    back = hc.config_of_frame(frame)
    assert np.allclose(back.second.center, [1, 0, 0])


def test_retraction_lands_in_Y():
    link = hc.HopfLink(hc.RoundCircle([0, 0, 0], 2, [0, 0, 1]), hc.RoundCircle([2.5, 0, 0], 1.5, [0, 1, 1]))
    y = hc.retract_to_Y(link)
    assert y.first.radius == pytest.approx(1)
    assert y.second.radius == pytest.approx(1)
    assert len(hc.retraction_stages(link)) == 5


def test_double_cover():
    assert np.allclose(hc.conjugation_action((0, 1, 0, 0)), np.diag([1, -1, -1]))
    steps = [np.array([[1, 0, 0], [0, math.cos(t), -math.sin(t)], [0, math.sin(t), math.cos(t)]])
             for t in np.linspace(0, 2 * math.pi, 201)]
    assert hc.lift_path(steps)[-1] == pytest.approx((-1, 0, 0, 0), abs=1e-9)


def test_xi_basepoint_plane():
    mu, nu = hc.xi((1, 0, 0, 0), (0, 1, 0, 0))
    assert mu == pytest.approx((0, -1, 0, 0))
    assert nu == pytest.approx((0, 1, 0, 0))
    a = hc.canonical_great_hopf((1, 0, 0, 0), (0, 1, 0, 0))
    b = hc.canonical_great_hopf((0, 0, 1, 0), (0, 0, 0, 1))
    assert np.allclose(a[0], b[0]) and np.allclose(a[1], b[1])


def test_schedule_json():
    pattern = {
        "points": [{"index": i, "sign": s} for i, s in enumerate("+++-")],
        "chords": [[1, 2]],
        "alpha": [0, 3],
        "circles": [{"inside": 0}],
    }
    result = json.loads(hc.schedule(json.dumps(pattern)))
    assert result["removed"] == [0]
    assert len(result["final"]["points"]) == 2


def test_errors_carry_kind():
    split = hc.HopfLink(hc.RoundCircle([0, 0, 0], 1, [0, 0, 1]), hc.RoundCircle([10, 0, 0], 1, [0, 0, 1]))
    with pytest.raises(hc.HopfError) as info:
        hc.canonical_prism_point(split)
    assert info.value.kind == "NotLinked"
    with pytest.raises(hc.HopfError):
        hc.RoundCircle([0, 0, 0], -1, [0, 0, 1])


def test_verify_small():
    results = hc.verify(seed=3, samples=20)
    assert [r["number"] for r in results] == list(range(1, 9))
    assert all(r["passed"] for r in results)

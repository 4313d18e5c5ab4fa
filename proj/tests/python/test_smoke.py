# Copyright 2026 The vlmgym Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import pytest

import vlmgym as vg

GAMES = [vg.GameId.G2048, vg.GameId.ShisenSho, vg.GameId.ShisenShoCifar10, vg.GameId.Swap]


def test_reset_is_deterministic():
    for g in GAMES:
        a = vg.reset(g, 3)
        b = vg.reset(g, 3)
        assert a == b
        assert vg.state_hash(a) == vg.state_hash(b)
        assert a.board == b.board
    assert len(vg.reset(vg.GameId.G2048, 0).board) == 4
    assert len(vg.reset(vg.GameId.Swap, 0).board) == 8


def test_peek_is_pure_and_commit_matches():
    s = vg.reset(vg.GameId.ShisenSho, 1)
    before = vg.serialize_state(s)
    action = vg.rewarding_actions(s)[0]
    outcome, succ = vg.peek_step(s, action)
    assert vg.serialize_state(s) == before
    assert outcome.game_reward == 1
    assert vg.commit_step(s, action) == outcome
    assert s == succ


def test_action_forms():
    s = vg.reset(vg.GameId.G2048, 0)
    by_enum, _ = vg.peek_step(s, vg.Direction.Left)
    by_int, _ = vg.peek_step(s, 3)
    assert by_enum == by_int
    bad, succ = vg.peek_step(vg.reset(vg.GameId.Swap, 0), ((0, 0), (7, 7)))
    assert bad.game_reward == -1 and not bad.state_changed
    none, _ = vg.peek_step(s, None)
    assert none.game_reward == -1
    assert vg.format_action(((0, 1), (3, 1))) == "(0, 1) (3, 1)"


def test_invalid_config_raises():
    cfg = vg.default_config(vg.GameId.ShisenSho)
    cfg.board_rows = 3
    cfg.board_cols = 3
    with pytest.raises(vg.InvalidConfig):
        vg.reset(vg.GameId.ShisenSho, 0, cfg)


def test_state_round_trip():
    s = vg.warmup_random(vg.GameId.Swap, 5, 20, valid_moves=True)
    t = vg.deserialize_state(vg.serialize_state(s))
    assert t == s
    assert json.loads(vg.serialize_state(s))["game"] == "swap"


def test_render_and_png():
    s = vg.reset(vg.GameId.G2048, 0)
    img = vg.render(s)
    assert (img.width, img.height) == (640, 840)
    assert len(img.pixels) == 640 * 840 * 3
    assert img.encode_png().startswith(b"\x89PNG")
    assert vg.render(s).content_hash == img.content_hash
    with pytest.raises(vg.AssetMissing):
        vg.render(vg.reset(vg.GameId.ShisenShoCifar10, 0), assets="/nonexistent")


def test_perception_round_trip():
    for g in GAMES:
        s = vg.warmup_random(g, 2, 10, valid_moves=True)
        text = vg.serialize_perception(s)
        assert vg.parse_perception(text, g, s.config) == s.board
    with pytest.raises(vg.MalformedPerception):
        vg.parse_perception("(9, 9): Red circle", vg.GameId.ShisenSho,
                            vg.default_config(vg.GameId.ShisenSho))


def test_protocol():
    assert vg.PROMPT_VERSION == "v1"
    assert "Available actions:" in vg.prompt_text(vg.GameId.G2048)
    r = vg.parse_response(
        "<perception>x</perception><think>y</think><answer>(0, 1) (3, 1)</answer>",
        vg.GameId.Swap)
    assert r.well_formed
    assert r.action == ((0, 1), (3, 1))
    assert vg.format_reward(r) == 1
    assert vg.perception_reward(r, "x") == 1
    assert vg.perception_accuracy(r, "z") == 0
    d = vg.parse_response("<answer>down</answer>", vg.GameId.G2048)
    assert not d.well_formed and d.action == vg.Direction.Down
    assert vg.count_localization_patterns("(0, 0): cat\n(0, 1): dog") == 2


def test_rl_math():
    assert vg.combine_reward(1, 1, 0) == 2.0
    assert vg.combine_reward(1, 1, 1, vg.RewardWeights(1.0, 1.0)) == 3.0
    adv = vg.group_advantages([1, -1, -1, -1, 1])
    assert adv[0] == pytest.approx(1.2247, abs=1e-3)
    assert adv[1] == pytest.approx(-0.8165, abs=1e-3)
    assert vg.group_advantages([2, 2, 2]) == [0, 0, 0]

    v = vg.grpo_objective([[([math.log(1.5)], [0.0], [math.log(1.5)], 1.0)]], 0.2, 0.0)
    assert v == pytest.approx(1.2)
    with pytest.raises(vg.ShapeMismatch):
        vg.grpo_objective([[([0.0, 0.0], [0.0], [0.0, 0.0], 1.0)]])
    assert vg.reasoning_accuracy([(1, 1), (1, -1)]) == 0.5
    assert vg.reasoning_accuracy([(0, 1)]) is None


def test_run_eval():
    a = json.loads(vg.run_eval(vg.GameId.G2048, "random", runs=4, seed=1))
    b = json.loads(vg.run_eval(vg.GameId.G2048, "random", runs=4, seed=1, workers=1))
    assert a == b
    assert len(a["scores"]) == 4 and a["complete"]
    o = json.loads(vg.run_eval(vg.GameId.Swap, "oracle", runs=3))
    assert o["mean"] == 1.0 and o["p_acc"] == 1.0
    with pytest.raises(ValueError):
        vg.run_eval(vg.GameId.Swap, "nobody")

import pytest

from qgo.game import Color
from qgo.records import GameRecord, dumps, loads, replay
from qgo.selfplay import SelfPlayConfig, play_random_game, run_self_play


class TestRandomGames:
    def test_games_run_to_completion(self):
        g = play_random_game(3, game_seed=1, policy_seed=2)
        assert g.game_over
        assert g.move_log[-1].kind == "pass"
        assert g.move_log[-1].player is Color.WHITE

    def test_same_seeds_same_game(self):
        a = play_random_game(4, game_seed=3, policy_seed=4)
        b = play_random_game(4, game_seed=3, policy_seed=4)
        assert a == b

    def test_exported_game_replays_identically(self):
        g = play_random_game(3, game_seed=5, policy_seed=6)
        assert replay(loads(dumps(GameRecord.from_game(g)))) == g


class TestReports:
    def test_deterministic_report(self):
        config = SelfPlayConfig(size=3, games=8, seed=17)
        first, _ = run_self_play(config)
        second, _ = run_self_play(config)
        assert first == second

    def test_tallies_sum_to_games(self):
        report, games = run_self_play(SelfPlayConfig(size=3, games=12, seed=3))
        assert report.black_wins + report.white_wins + report.draws == 12
        assert len(games) == 12
        assert all(g.game_over for g in games)

    def test_collapse_frequency_near_half_on_a_long_run(self):
        report, _ = run_self_play(SelfPlayConfig(size=4, games=60, seed=1))
        assert 0.4 < report.collapse_one_frequency < 0.6

    def test_mean_gates_counts_the_hadamard_floor(self):
        report, _ = run_self_play(SelfPlayConfig(size=3, games=4, seed=9))
        assert report.mean_gates >= 9  # at least the initial layer

    def test_unknown_policy_rejected(self):
        with pytest.raises(ValueError):
            run_self_play(SelfPlayConfig(policy="minimax"))

    def test_zero_games_rejected(self):
        with pytest.raises(ValueError):
            run_self_play(SelfPlayConfig(games=0))

"""Integration test — every property battery at the shipped config.yaml sizes."""

import pytest

from descol.cli import run
from descol.config import load_config
from descol.experiments import BATTERIES, run_battery


class TestShippedBatteries:
    @pytest.mark.parametrize("name", list(BATTERIES))
    def test_battery_passes(self, name):
        """Run one battery with the seed and sizes from config.yaml."""
        config = load_config("config.yaml")
        [result] = run_battery([name], config)
        assert result["name"] == name
        assert result["ok"], f"{name} failed: {result['failures'][:5]}"
        assert result["checked"] > 0

    def test_seed_reproducible(self):
        config = load_config("config.yaml")
        first = run_battery(["mis", "palette"], config)
        second = run_battery(["mis", "palette"], config)
        assert first == second


class TestCommandLineEndToEnd:
    def test_thread_to_level_to_chrom(self, tmp_path, capsys):
        """Generate a thread, export a level, and solve it."""
        thread = tmp_path / "t.txt"
        assert run(["thread", "gen", "--depth", "9", "--seed", "42"]) == 0
        thread.write_text(capsys.readouterr().out)

        level = tmp_path / "level.col"
        assert run(["g0", "level", "--k", "7", "--thread", str(thread)]) == 0
        level.write_text(capsys.readouterr().out)

        assert run(["chrom", str(level)]) == 0
        assert capsys.readouterr().out.startswith("chi 2")

    def test_colour_then_verify(self, tmp_path, capsys):
        graph = tmp_path / "petersen.col"
        edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (2, 7), (3, 8),
                 (4, 9), (5, 10), (6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
        graph.write_text("p edge 10 15\n" + "".join(f"e {u} {v}\n" for u, v in edges))

        assert run(["color", "palette", str(graph)]) == 0
        colouring = tmp_path / "c.txt"
        colouring.write_text(capsys.readouterr().out)

        assert run(["verify", str(graph), "--coloring", str(colouring)]) == 0
        assert "proper (3 colours)" in capsys.readouterr().out

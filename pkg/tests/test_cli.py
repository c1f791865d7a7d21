"""
Tests for the command line.
"""

import importlib
import json
import subprocess
import sys
from pathlib import Path

import click
import pytest

from zero2hero import __version__
from zero2hero.cli import create_cli, main
from zero2hero.expr import BinaryOperator, BinOp, Number

pytestmark = pytest.mark.integration

REPO_ROOT = Path(__file__).resolve().parents[1]


def invoke(runner, cli, *args):
    return runner.invoke(cli, [str(arg) for arg in args])


class TestCli:
    """Test the command group."""

    def test_help(self, runner, cli):
        """Test that every command is listed."""
        result = invoke(runner, cli, '--help')

        assert result.exit_code == 0
        for command in ('run', 'score', 'verify'):
            assert command in result.output

    def test_version(self, runner, cli):
        """Test the version option."""
        result = invoke(runner, cli, '--version')

        assert result.exit_code == 0
        assert __version__ in result.output

    def test_entry_points(self):
        """Test that the console script and `python -m` targets import."""
        assert importlib.import_module('zero2hero.__main__').main is main
        assert isinstance(create_cli(), click.Group)

    def test_module_in_fresh_interpreter(self):
        """Test `python -m zero2hero --version` end to end."""
        result = subprocess.run(
            [sys.executable, '-m', 'zero2hero', '--version'],
            cwd=REPO_ROOT,
            capture_output=True,
            text=True,
            timeout=60,
            check=False,
        )

        assert result.returncode == 0, result.stderr
        assert __version__ in result.stdout


class TestRunCommand:
    """Test `zero2hero run`."""

    def test_run(self, runner, cli, write_document, sample_document, tmp_path):
        """Test a successful run."""
        output = tmp_path / 'out.tex'
        result = invoke(
            runner, cli, 'run', '--input', write_document(sample_document), '--output', output, '--seed', 42
        )

        assert result.exit_code == 0, result.output
        assert output.read_text(encoding='utf-8').startswith('% zero2hero: seed=42 intensity=3 ')
        assert 'eq#0 before=' in result.stdout
        assert 'transformed=4' in result.stdout

    def test_machine_format(self, runner, cli, write_document, sample_document):
        """Test one JSON object per line."""
        result = invoke(
            runner,
            cli,
            'run',
            '--input',
            write_document(sample_document),
            '--dry-run',
            '--seed',
            1,
            '--format',
            'machine',
        )

        assert result.exit_code == 0, result.output
        lines = [json.loads(line) for line in result.stdout.splitlines()]
        assert [line['eq'] for line in lines[:-1]] == [0, 1, 2, 3]
        assert lines[0]['status'] == 'transformed'
        assert lines[-1]['summary']['seed'] == 1

    def test_passes_option(self, runner, cli, write_document):
        """Test a comma-separated pass allow-list."""
        result = invoke(
            runner, cli, 'run', '--input', write_document('$x$'), '--dry-run', '--seed', 1, '--passes', 'log-exp'
        )

        assert result.exit_code == 0, result.output
        assert 'plan=[log-exp]' in result.stdout

    def test_missing_input(self, runner, cli):
        """Test that --input is required."""
        result = invoke(runner, cli, 'run', '--dry-run')

        assert result.exit_code == 2
        assert '--input is required' in result.output

    def test_missing_output(self, runner, cli, write_document):
        """Test that --output is required without --dry-run."""
        result = invoke(runner, cli, 'run', '--input', write_document('$x$'))

        assert result.exit_code == 2
        assert '--output is required' in result.output

    def test_unknown_pass(self, runner, cli, write_document):
        """Test that pass ids are validated."""
        result = invoke(runner, cli, 'run', '--input', write_document('$x$'), '--dry-run', '--passes', 'sqrt-square')

        assert result.exit_code == 2

    def test_intensity_out_of_range(self, runner, cli, write_document):
        """Test the intensity range."""
        result = invoke(runner, cli, 'run', '--input', write_document('$x$'), '--dry-run', '--intensity', 9)

        assert result.exit_code == 2

    def test_unbalanced_document(self, runner, cli, write_document):
        """Test that unscannable documents exit 2."""
        result = invoke(runner, cli, 'run', '--input', write_document('text $x'), '--dry-run')

        assert result.exit_code == 2
        assert 'Unbalanced' in result.output

    def test_marker_present(self, runner, cli, write_document, tmp_path):
        """Test that a second run exits 3 without --force."""
        first = tmp_path / 'first.tex'
        invoke(runner, cli, 'run', '--input', write_document('$x$'), '--output', first, '--seed', 1)

        result = invoke(runner, cli, 'run', '--input', first, '--output', tmp_path / 'second.tex')
        forced = invoke(runner, cli, 'run', '--input', first, '--output', tmp_path / 'second.tex', '--force')

        assert result.exit_code == 3
        assert '--force' in result.output
        assert forced.exit_code == 0

    def test_unsound_rewrite(self, runner, cli, write_document, monkeypatch):
        """Test that a failed equivalence check exits 4."""
        def add_one(e, plan, seed, index):
            return BinOp(BinaryOperator.ADD, e, Number('1')), {}

        monkeypatch.setattr('zero2hero.pipeline.apply_plan', add_one)

        result = invoke(runner, cli, 'run', '--input', write_document('$x$'), '--dry-run', '--seed', 1)

        assert result.exit_code == 4

    @pytest.mark.parametrize('value', ['-5', str(2**64 + 3)])
    def test_invalid_environment_seed(self, runner, cli, write_document, tmp_path, environment, value):
        """Test that a ZERO2HERO_SEED outside 64 bits exits 2 and writes nothing."""
        environment(ZERO2HERO_SEED=value)
        output = tmp_path / 'out.tex'

        result = invoke(runner, cli, 'run', '--input', write_document('$x$'), '--output', output)

        assert result.exit_code == 2
        assert 'ZERO2HERO_SEED' in result.output
        assert not output.exists()


class TestScoreCommand:
    """Test `zero2hero score`."""

    def test_score(self, runner, cli, write_document):
        """Test the per-equation score line."""
        result = invoke(runner, cli, 'score', '--input', write_document('$x$'))

        assert result.exit_code == 0, result.output
        assert 'eq#0 nodes=1 greek=0 bigops=0 depth=1 diversity=1 total=4' in result.stdout

    def test_missing_file(self, runner, cli, tmp_path):
        """Test a nonexistent input."""
        result = invoke(runner, cli, 'score', '--input', tmp_path / 'missing.tex')

        assert result.exit_code == 2


class TestVerifyCommand:
    """Test `zero2hero verify`."""

    def test_verify_run(self, runner, cli, write_document, sample_document, tmp_path):
        """Test that a genuine run verifies."""
        source, output = write_document(sample_document), tmp_path / 'out.tex'
        invoke(runner, cli, 'run', '--input', source, '--output', output, '--seed', 3)

        result = invoke(runner, cli, 'verify', '--original', source, '--transformed', output)

        assert result.exit_code == 0, result.output
        assert 'FAIL=0' in result.stdout

    def test_verify_fail(self, runner, cli, write_document):
        """Test that a failed pair exits 1."""
        source = write_document('$E = mc^{2}$')
        edited = write_document('% zero2hero: seed=1 intensity=0 v=1.0.0\n$E = mc^{3}$', name='edited.tex')

        result = invoke(runner, cli, 'verify', '--original', source, '--transformed', edited)

        assert result.exit_code == 1
        assert 'eq#0 FAIL' in result.stdout

    def test_structural_mismatch(self, runner, cli, write_document):
        """Test that differently shaped documents exit 5."""
        source = write_document('$x$ $y$')
        edited = write_document('% zero2hero: seed=1 intensity=0 v=1.0.0\n$x$', name='edited.tex')

        result = invoke(runner, cli, 'verify', '--original', source, '--transformed', edited)

        assert result.exit_code == 5

"""
Tests for environment settings.
"""

import pytest

from zero2hero.core.errors import ConfigError
from zero2hero.settings import INTEGER_VARIABLES, U64_MAX, Settings

pytestmark = pytest.mark.unit

VARIABLES = [variable for variable, *_ in INTEGER_VARIABLES.values()] + ['ZERO2HERO_TOLERANCE']


class TestSettings:
    """Test loading ZERO2HERO_* variables."""

    def test_defaults(self, monkeypatch):
        """Test the defaults with no variables set."""
        for variable in VARIABLES:
            monkeypatch.delenv(variable, raising=False)

        loaded = Settings.load_from_env()

        assert loaded.SEED is None
        assert loaded.INTENSITY == 3
        assert loaded.VERIFY_TRIALS == 20
        assert loaded.TOLERANCE == 1e-9
        assert loaded.WORKERS == 4
        assert loaded.problems == []
        loaded.require_valid()

    def test_valid_values(self, environment):
        """Test that well-formed values are read."""
        loaded = environment(
            ZERO2HERO_SEED=str(U64_MAX),
            ZERO2HERO_INTENSITY='5',
            ZERO2HERO_TRIALS='7',
            ZERO2HERO_WORKERS='1',
            ZERO2HERO_TOLERANCE='1e-6',
        )

        assert loaded.SEED == U64_MAX
        assert loaded.INTENSITY == 5
        assert loaded.VERIFY_TRIALS == 7
        assert loaded.WORKERS == 1
        assert loaded.TOLERANCE == 1e-6
        loaded.require_valid()

    @pytest.mark.parametrize('value', ['-5', str(2**64 + 3), 'twelve', '1.5'])
    def test_invalid_seed(self, environment, value):
        """Test that seeds outside 0..2^64-1 are reported, not passed on."""
        loaded = environment(ZERO2HERO_SEED=value)

        assert loaded.SEED is None
        assert loaded.problems == [f'ZERO2HERO_SEED={value!r} must be an integer in 0..{U64_MAX}']
        with pytest.raises(ConfigError) as exc:
            loaded.require_valid()
        assert exc.value.exit_code == 2
        assert 'ZERO2HERO_SEED' in str(exc.value)

    @pytest.mark.parametrize(
        ('variable', 'value', 'message'),
        [
            ('ZERO2HERO_INTENSITY', '9', "ZERO2HERO_INTENSITY='9' must be an integer in 0..5"),
            ('ZERO2HERO_TRIALS', '0', "ZERO2HERO_TRIALS='0' must be an integer >= 1"),
            ('ZERO2HERO_WORKERS', 'many', "ZERO2HERO_WORKERS='many' must be an integer >= 1"),
            ('ZERO2HERO_TOLERANCE', '-1', "ZERO2HERO_TOLERANCE='-1' must be a positive number"),
            ('ZERO2HERO_TOLERANCE', 'nan', "ZERO2HERO_TOLERANCE='nan' must be a positive number"),
        ],
    )
    def test_invalid_values(self, environment, variable, value, message):
        """Test the message for each kind of bad value."""
        loaded = environment(**{variable: value})

        assert loaded.problems == [message]
        with pytest.raises(ConfigError):
            loaded.require_valid()

    def test_every_problem_is_reported(self, environment):
        """Test that one error names every invalid variable."""
        loaded = environment(ZERO2HERO_SEED='-1', ZERO2HERO_WORKERS='0')

        with pytest.raises(ConfigError) as exc:
            loaded.require_valid()
        assert 'ZERO2HERO_SEED' in str(exc.value)
        assert 'ZERO2HERO_WORKERS' in str(exc.value)

    def test_reload_clears_problems(self, environment, monkeypatch):
        """Test that fixing the variable and reloading makes the settings valid."""
        loaded = environment(ZERO2HERO_SEED='-1')
        monkeypatch.setenv('ZERO2HERO_SEED', '12')

        assert loaded.reload().SEED == 12
        assert loaded.problems == []

    def test_to_dict(self):
        """Test that only setting names are exported."""
        exported = Settings().to_dict()

        assert exported['INTENSITY'] == 3
        assert 'problems' not in exported

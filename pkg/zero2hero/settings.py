import math
import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

from zero2hero import __version__
from zero2hero.core.errors import ConfigError

U64_MAX = 2**64 - 1

# attribute: (variable, default, minimum, maximum)
INTEGER_VARIABLES: dict[str, tuple[str, int | None, int, int | None]] = {
    'SEED': ('ZERO2HERO_SEED', None, 0, U64_MAX),
    'INTENSITY': ('ZERO2HERO_INTENSITY', 3, 0, 5),
    'VERIFY_TRIALS': ('ZERO2HERO_TRIALS', 20, 1, None),
    'WORKERS': ('ZERO2HERO_WORKERS', 4, 1, None),
}


@dataclass
class Settings:
    """
    Tool settings and configuration.

    Invalid ZERO2HERO_* values never raise while loading: they fall back to
    the default and are kept in `problems` until a command calls
    `require_valid`.
    """

    # Pipeline defaults
    SEED: int | None = None
    INTENSITY: int = 3
    VERIFY_TRIALS: int = 20
    TOLERANCE: float = 1e-9
    WORKERS: int = 4

    # Logging settings
    LOG_LEVEL: str = 'WARNING'
    LOG_DIR: str = 'logs'
    LOG_TO_FILE: bool = False
    LOG_MAX_BYTES: int = 5 * 1024 * 1024
    LOG_BACKUP_COUNT: int = 3

    # Marker settings
    TOOL_NAME: str = 'zero2hero'
    TOOL_VERSION: str = __version__

    problems: list[str] = field(default_factory=list)

    @classmethod
    def load_from_env(cls):
        """Load settings from a .env file and the environment."""
        return cls().reload()

    def reload(self) -> 'Settings':
        """Re-read .env and the environment into this instance."""
        load_dotenv()
        self.problems = []
        for attribute, (variable, default, minimum, maximum) in INTEGER_VARIABLES.items():
            setattr(self, attribute, self._integer(variable, default, minimum, maximum))
        self.TOLERANCE = self._tolerance()
        self.LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
        self.LOG_DIR = os.getenv('LOG_DIR', 'logs')
        self.LOG_TO_FILE = os.getenv('LOG_TO_FILE', 'false').lower() == 'true'
        return self

    def _integer(self, variable: str, default: int | None, minimum: int, maximum: int | None) -> int | None:
        raw = os.getenv(variable, '').strip()
        if raw == '':
            return default
        try:
            value = int(raw)
        except ValueError:
            value = None
        if value is None or value < minimum or (maximum is not None and value > maximum):
            expected = f'an integer in {minimum}..{maximum}' if maximum is not None else f'an integer >= {minimum}'
            self.problems.append(f'{variable}={raw!r} must be {expected}')
            return default
        return value

    def _tolerance(self) -> float:
        raw = os.getenv('ZERO2HERO_TOLERANCE', '').strip()
        if raw == '':
            return 1e-9
        try:
            value = float(raw)
        except ValueError:
            value = math.nan
        if not (math.isfinite(value) and value > 0):
            self.problems.append(f'ZERO2HERO_TOLERANCE={raw!r} must be a positive number')
            return 1e-9
        return value

    def require_valid(self):
        """Raise ConfigError (exit 2) naming every invalid variable."""
        if self.problems:
            raise ConfigError('Invalid environment: ' + '; '.join(self.problems))

    def to_dict(self):
        """Convert settings to dictionary."""
        return {key: getattr(self, key) for key in dir(self) if not key.startswith('_') and key.isupper()}


# Global settings instance
settings = Settings.load_from_env()

"""
Zod-like schemas for command options.

Example usage:
    from zero2hero.core.validator import Schema, ValidationError

    options_schema = Schema({
        'input_path': Schema.path().exists().required(),
        'intensity': Schema.number().int().min(0).max(5).default(3),
        'passes': Schema.array(Schema.enum(['unit-sum', 'log-exp'])).nonempty().unique(),
    })

    try:
        options = options_schema.validate(raw_options)
    except ValidationError as e:
        print(e)  # --intensity must be at most 5

Keys name click parameters; messages name the command-line option they came
from (`input_path` is reported as `--input`, `dry_run` as `--dry-run`).
"""

from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, Self

NumberUnion = int | float
Check = Callable[[Any, str], Any]


def option_flag(key: str) -> str:
    """Command-line spelling of an option key."""
    return '--' + key.removesuffix('_path').replace('_', '-')


class ValidationError(Exception):
    """One or more options failed validation. Maps to exit code 2."""

    exit_code = 2

    def __init__(self, errors: str | list[dict[str, str]]):
        self.errors = [{'field': 'root', 'message': errors}] if isinstance(errors, str) else errors
        super().__init__('\n'.join(error['message'] for error in self.errors))


def invalid(flag: str, message: str) -> ValidationError:
    return ValidationError([{'field': flag, 'message': f'{flag} {message}'}])


class Field:
    """
    Base option validator.

    A missing option (None) is an error when required, otherwise it becomes
    the default. Present values run through the checks in the order they
    were chained; each check may convert the value.
    """

    def __init__(self):
        self._required = False
        self._default: Any = None
        self._checks: list[Check] = []

    def required(self) -> Self:
        self._required = True
        return self

    def default(self, value: Any) -> Self:
        self._default = value
        return self

    def check(self, check: Check) -> Self:
        self._checks.append(check)
        return self

    def validate(self, value: Any, flag: str) -> Any:
        if value is None:
            if self._required:
                raise invalid(flag, 'is required')
            return self._default
        for check in self._checks:
            value = check(value, flag)
        return value


class PathField(Field):
    """Filesystem path. Validated values are `Path` objects."""

    def __init__(self):
        super().__init__()
        self.check(self._to_path)

    @staticmethod
    def _to_path(value: Any, flag: str) -> Path:
        if not isinstance(value, str | Path) or str(value) == '':
            raise invalid(flag, f'expects a file path, got {value!r}')
        return Path(value)

    def exists(self) -> Self:
        """Require an existing regular file."""

        def is_file(value: Path, flag: str) -> Path:
            if not value.is_file():
                raise invalid(flag, f'file not found: {value}')
            return value

        return self.check(is_file)


class NumberField(Field):
    """Integer or real option."""

    def int(self) -> Self:
        def to_int(value: Any, flag: str) -> int:
            if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
                raise invalid(flag, f'expects an integer, got {value!r}')
            try:
                return int(value)
            except (TypeError, ValueError):
                raise invalid(flag, f'expects an integer, got {value!r}') from None

        return self.check(to_int)

    def float(self) -> Self:
        def to_float(value: Any, flag: str) -> float:
            if isinstance(value, bool):
                raise invalid(flag, f'expects a number, got {value!r}')
            try:
                return float(value)
            except (TypeError, ValueError):
                raise invalid(flag, f'expects a number, got {value!r}') from None

        return self.check(to_float)

    def min(self, minimum: NumberUnion) -> Self:
        def at_least(value: NumberUnion, flag: str) -> NumberUnion:
            if value < minimum:
                raise invalid(flag, f'must be at least {minimum}')
            return value

        return self.check(at_least)

    def max(self, maximum: NumberUnion, message: str | None = None) -> Self:
        def at_most(value: NumberUnion, flag: str) -> NumberUnion:
            if value > maximum:
                raise invalid(flag, message or f'must be at most {maximum}')
            return value

        return self.check(at_most)

    def positive(self) -> Self:
        def above_zero(value: NumberUnion, flag: str) -> NumberUnion:
            if not value > 0:
                raise invalid(flag, 'must be positive')
            return value

        return self.check(above_zero)


class BooleanField(Field):
    """On/off flag."""

    def __init__(self):
        super().__init__()
        self._default = False

        def to_bool(value: Any, flag: str) -> bool:
            if not isinstance(value, bool):
                raise invalid(flag, f'is a flag and takes no value, got {value!r}')
            return value

        self.check(to_bool)


class EnumField(Field):
    """One of a fixed set of values."""

    def __init__(self, values: Sequence[Any]):
        super().__init__()
        self._values = tuple(values)

        def member(value: Any, flag: str) -> Any:
            if value not in self._values:
                raise invalid(flag, f'must be one of {", ".join(map(str, self._values))}; got {value!r}')
            return value

        self.check(member)


class ArrayField(Field):
    """List option, each item validated by an optional item field."""

    def __init__(self, items: Field | None = None):
        super().__init__()

        def to_list(value: Any, flag: str) -> list[Any]:
            if not isinstance(value, list | tuple):
                raise invalid(flag, f'expects a list, got {type(value).__name__}')
            if items is None:
                return list(value)
            return [items.validate(item, f'{flag}[{i}]') for i, item in enumerate(value)]

        self.check(to_list)

    def nonempty(self) -> Self:
        def has_items(value: list[Any], flag: str) -> list[Any]:
            if not value:
                raise invalid(flag, 'must name at least one item')
            return value

        return self.check(has_items)

    def unique(self) -> Self:
        def no_repeats(value: list[Any], flag: str) -> list[Any]:
            repeated = sorted({str(item) for item in value if value.count(item) > 1})
            if repeated:
                raise invalid(flag, f'repeats {", ".join(repeated)}')
            return value

        return self.check(no_repeats)


class Schema:
    """A set of named option fields, validated together."""

    def __init__(self, fields: dict[str, Field]):
        self._fields = fields

    @staticmethod
    def path() -> PathField:
        return PathField()

    @staticmethod
    def number() -> NumberField:
        return NumberField()

    @staticmethod
    def boolean() -> BooleanField:
        return BooleanField()

    @staticmethod
    def enum(values: Sequence[Any]) -> EnumField:
        return EnumField(values)

    @staticmethod
    def array(items: Field | None = None) -> ArrayField:
        return ArrayField(items)

    def validate(self, options: dict[str, Any]) -> dict[str, Any]:
        """
        Validate every field and return the converted options.

        Raises:
            ValidationError: listing every failing option, not just the first
        """
        validated = {}
        errors = []
        for key, field in self._fields.items():
            try:
                validated[key] = field.validate(options.get(key), option_flag(key))
            except ValidationError as e:
                errors.extend(e.errors)

        if errors:
            raise ValidationError(errors)
        return validated

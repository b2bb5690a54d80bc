"""Flat key=value configuration files with typed accessors.

Format: UTF-8 text, one ``key = value`` assignment per line. Blank
lines and lines whose first non-space character is ``#`` are ignored;
later assignments override earlier ones. Every key can be overridden
on the command line by a flag of the same name (``--some-key`` maps to
``some_key``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}
_MISSING = object()


@dataclass(frozen=True)
class Config:
    """Immutable view of parsed key=value pairs with typed getters.

    Getters raise :class:`ConfigError` naming the offending key when a
    required key is absent or a value does not parse.
    """

    values: dict[str, str] = field(default_factory=dict)

    @staticmethod
    def from_text(text: str) -> "Config":
        values: dict[str, str] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if not key:
                raise ConfigError(f"line {lineno}: empty key in {raw!r}")
            values[key] = value.strip()
        return Config(values)

    @staticmethod
    def load(path) -> "Config":
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        return Config.from_text(text)

    def with_overrides(self, overrides: dict[str, object]) -> "Config":
        """A new Config with non-None overrides applied (values are
        stringified, so booleans render as 'true'/'false')."""
        merged = dict(self.values)
        for key, value in overrides.items():
            if value is None:
                continue
            if isinstance(value, bool):
                merged[key] = "true" if value else "false"
            else:
                merged[key] = str(value)
        return Config(merged)

    def has(self, key: str) -> bool:
        return key in self.values

    def get_str(self, key: str, default=_MISSING) -> str:
        if key in self.values:
            return self.values[key]
        if default is _MISSING:
            raise ConfigError(f"missing required config key {key!r}")
        return default

    def get_int(self, key: str, default=_MISSING) -> int:
        text = self.get_str(key, default)
        if not isinstance(text, str):
            return text
        try:
            return int(text)
        except ValueError:
            raise ConfigError(f"config key {key!r}: {text!r} is not an integer") from None

    def get_float(self, key: str, default=_MISSING) -> float:
        text = self.get_str(key, default)
        if not isinstance(text, str):
            return text
        try:
            return float(text)
        except ValueError:
            raise ConfigError(f"config key {key!r}: {text!r} is not a number") from None

    def get_bool(self, key: str, default=_MISSING) -> bool:
        text = self.get_str(key, default)
        if not isinstance(text, str):
            return text
        lowered = text.lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise ConfigError(f"config key {key!r}: {text!r} is not a boolean")

    def get_list(self, key: str, default=_MISSING) -> list[str]:
        text = self.get_str(key, default)
        if not isinstance(text, str):
            return text
        return [item.strip() for item in text.split(",") if item.strip()]

import os
from collections.abc import Mapping
from dataclasses import dataclass, fields, replace
from typing import Any

ENV_PREFIX = "GYR_"
MODEL_CHOICES = ("mobius", "einstein")
FORMAT_CHOICES = ("json", "csv")


@dataclass(frozen=True)
class CliConfig:
    """Command-line defaults. Precedence: flags, then ``GYR_*`` environment variables, then these values.

    ``dim=None`` means the dimension is inferred from the vectors given.
    """

    s: float = 1.0
    dim: int | None = None
    model: str = "mobius"
    format: str = "json"
    seed: int = 0
    tol: float = 1e-9

    def __post_init__(self) -> None:
        if not self.s > 0:
            raise ValueError(f"s must be positive, got {self.s!r}")
        if self.dim is not None and self.dim < 1:
            raise ValueError(f"dim must be at least 1, got {self.dim!r}")
        if self.model not in MODEL_CHOICES:
            raise ValueError(f"model must be one of {MODEL_CHOICES}, got {self.model!r}")
        if self.format not in FORMAT_CHOICES:
            raise ValueError(f"format must be one of {FORMAT_CHOICES}, got {self.format!r}")
        if self.tol <= 0:
            raise ValueError(f"tol must be positive, got {self.tol!r}")

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "CliConfig":
        environ = os.environ if environ is None else environ
        values: dict[str, Any] = {}
        for field in fields(cls):
            raw = environ.get(ENV_PREFIX + field.name.upper())
            if raw is None or raw == "":
                continue
            try:
                values[field.name] = _convert(field.name, raw)
            except ValueError as exc:
                raise ValueError(f"Bad value for {ENV_PREFIX}{field.name.upper()}: {raw!r}") from exc
        return cls(**values)

    def merged(self, **overrides: Any) -> "CliConfig":
        """Apply the flags that were actually given (``None`` means not given)."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _convert(name: str, raw: str) -> Any:
    if name == "s" or name == "tol":
        return float(raw)
    if name == "dim" or name == "seed":
        return int(raw)
    return raw.strip().lower()

from gyrokit.cli.config import CliConfig
from gyrokit.cli.main import build_parser, main

__all__ = ["CliConfig", "build_parser", "main"]

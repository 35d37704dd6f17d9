from .app import main, parser
from .config import Command, OrthQuery, OutputFormat, RunConfig, TRange, VerifyOptions

__all__ = [
    'Command',
    'OrthQuery',
    'OutputFormat',
    'RunConfig',
    'TRange',
    'VerifyOptions',
    'main',
    'parser',
]

"""
Console status output

Status lines go to stderr so stdout stays reserved for JSON and TSV output.
"""

import click
from tqdm import tqdm

from .config import settings


class Console:
    """Emoji-prefixed status lines, gated by the verbose setting"""

    def __init__(self):
        self.verbose = settings.VERBOSE
        self.progress = settings.PROGRESS

    def info(self, message: str):
        if self.verbose:
            click.echo(f"🔍 {message}", err=True)

    def check(self, message: str):
        if self.verbose:
            click.echo(f"🧪 {message}", err=True)

    def success(self, message: str):
        if self.verbose:
            click.echo(f"✅ {message}", err=True)

    def warning(self, message: str):
        if self.verbose:
            click.echo(f"⚠️  {message}", err=True)

    def failure(self, message: str):
        click.echo(f"❌ {message}", err=True)

    def track(self, iterable, desc: str, total: int = None):
        """Wrap an iterable in a tqdm bar when progress output is enabled"""
        return tqdm(iterable, desc=desc, total=total, disable=not self.progress, file=click.get_text_stream("stderr"))


console = Console()

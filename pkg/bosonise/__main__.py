"""Allow running as `python -m bosonise`."""
from bosonise.cli import app

app()

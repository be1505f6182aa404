"""Allow `python -m maskcomplete`."""

from .cli import entrypoint

entrypoint()

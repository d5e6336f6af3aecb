"""Allow ``python -m muse_anno`` to behave like the installed script."""

from .cli import entrypoint

entrypoint()

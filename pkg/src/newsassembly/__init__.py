"""newsassembly: multi-source news assembly with discord questions."""

__version__ = "0.1.0"

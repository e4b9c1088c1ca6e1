"""JSON-lines run logging."""
from .streamer import LogStreamer

__all__ = ["LogStreamer"]

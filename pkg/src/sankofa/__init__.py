"""Sankofa: an edge-deployable agentic educational content runtime.

Four role agents (curriculum planning, content generation, linguistic
adaptation, assessment synthesis) coordinate over a message bus to turn a
lesson request into a content bundle, while the metrology layer records
token-level latency and power and the quality layer scores multilingual
output.
"""

__version__ = "0.1.0"


class SankofaError(Exception):
    """Base class for all package errors."""

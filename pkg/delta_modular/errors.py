"""
Exceptions raised by the search pipeline.
"""
from typing import Optional, Sequence


class SearchLimitExceeded(RuntimeError):
    """A search hit its node limit, wall-clock budget or size cap."""

    def __init__(self, message: str, best: Optional[int] = None, members: Sequence[int] = ()):
        super().__init__(message)
        self.best = best
        self.members = list(members)


class CertificateError(RuntimeError):
    """A produced witness failed independent re-certification."""

"""The three-way message label shared by the store, classifier, and pipeline."""

from __future__ import annotations

from enum import Enum


class Label(Enum):
    SPAM = "spam"
    HAM = "ham"
    UNKNOWN = "unknown"

    @classmethod
    def parse(cls, token: str) -> "Label | None":
        """Label for a lowercase token, or None if it is not one."""
        try:
            return cls(token)
        except ValueError:
            return None

    @property
    def definite(self) -> bool:
        return self is not Label.UNKNOWN

from __future__ import annotations

import enum


class Family(enum.Enum):
    """The three tree families; values double as command-line names."""

    BINARY = "binary"
    ONE_TWO = "one2"
    COLORED = "colored"

    @classmethod
    def parse(cls, name: str | Family) -> Family:
        if isinstance(name, cls):
            return name
        try:
            return cls(name)
        except ValueError:
            choices = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown family {name!r} (choose from {choices})") from None


class BoundKind(enum.Enum):
    EXACT = "exact"
    UPPER = "upper"
    LOWER = "lower"

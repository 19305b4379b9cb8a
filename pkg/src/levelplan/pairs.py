"""Canonical same-level vertex pairs, the unit all embedders reason about."""

from __future__ import annotations

import re
from typing import NamedTuple

ID_PATTERN = re.compile(r"^[A-Za-z0-9_.-]+$")


class PairKey(NamedTuple):
    """A same-level vertex pair with id-sorted endpoints.

    Every order statement about the pair is a boolean meaning "``first``
    is placed left of ``second``"; the reverse order is the negation of
    that boolean, never a second key.
    """

    level: int
    first: str
    second: str

    def text(self) -> str:
        return f"{self.level}:{self.first}<{self.second}"


def pair_key(level: int, a: str, b: str) -> PairKey:
    if a == b:
        raise ValueError(f"pair needs two distinct vertices, got {a!r} twice")
    if b < a:
        a, b = b, a
    return PairKey(level, a, b)


def parse_pair_token(token: str) -> PairKey:
    """Parse ``LEVEL:A<B``. The id-sorted form is required, so that the
    boolean attached to the token is unambiguous."""
    level_part, colon, rest = token.partition(":")
    a, angle, b = rest.partition("<")
    if not colon or not angle or not a or not b:
        raise ValueError(f"malformed pair token {token!r}, expected LEVEL:A<B")
    try:
        level = int(level_part)
    except ValueError:
        raise ValueError(f"malformed level in pair token {token!r}") from None
    if level < 1:
        raise ValueError(f"level must be positive in pair token {token!r}")
    if not ID_PATTERN.match(a) or not ID_PATTERN.match(b):
        raise ValueError(f"invalid vertex id in pair token {token!r}")
    if not a < b:
        raise ValueError(f"pair token {token!r} is not id-sorted")
    return PairKey(level, a, b)

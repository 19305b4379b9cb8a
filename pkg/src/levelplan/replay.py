"""RPF, the replay format that freezes an embedder's free choices.

Greedy replays are ``class LEVEL:A<B true|false`` lines in pick order,
the boolean stating the named pair's decided order. Two-pass replays are
``entry`` lines (one traversal entry per component) followed by
``process`` lines (the node order of the second pass). Choices omitted
from a replay fall back to the canonical defaults, which keeps shrunken
replays valid.
"""

from __future__ import annotations

from .assign import GreedyPolicy
from .formats import FormatError, _expect_header, _significant_lines
from .pairs import parse_pair_token
from .vegraph import HHChoices

RPF_HEADER = "RPF 1"

ALGO_RANDERATH = "randerath"
ALGO_HEALY_KUUSIK = "healy-kuusik"
ALGO_HARRIGAN_HEALY = "harrigan-healy"

GREEDY_ALGOS = (ALGO_RANDERATH, ALGO_HEALY_KUUSIK)
ALGOS = (*GREEDY_ALGOS, ALGO_HARRIGAN_HEALY)


def serialize_rpf(algo: str, replay: GreedyPolicy | HHChoices) -> str:
    if algo not in ALGOS:
        raise ValueError(f"unknown algorithm {algo!r}")
    lines = [RPF_HEADER, f"algo {algo}"]
    if algo in GREEDY_ALGOS:
        if not isinstance(replay, GreedyPolicy) or replay.mode != "replay":
            raise ValueError(f"{algo} replays need a replay-mode policy")
        for pair, value in replay.picks:
            lines.append(f"class {pair.text()} {'true' if value else 'false'}")
    else:
        if not isinstance(replay, HHChoices):
            raise ValueError(f"{algo} replays need traversal choices")
        for entry in replay.entries:
            lines.append(f"entry {entry.text()}")
        for node in replay.order:
            lines.append(f"process {node.text()}")
    return "\n".join(lines) + "\n"


def parse_rpf(text: str) -> tuple[str, GreedyPolicy | HHChoices]:
    lines = _expect_header(_significant_lines(text), RPF_HEADER)
    if not lines or lines[0][1][0] != "algo" or len(lines[0][1]) != 2:
        raise FormatError("first directive must be 'algo <name>'")
    algo = lines[0][1][1]
    if algo not in ALGOS:
        raise FormatError(f"unknown algorithm {algo!r}")
    body = lines[1:]
    if algo in GREEDY_ALGOS:
        picks = []
        for lineno, fields in body:
            if fields[0] != "class" or len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'class PAIR true|false'")
            if fields[2] not in ("true", "false"):
                raise FormatError(f"line {lineno}: bad boolean {fields[2]!r}")
            picks.append((_pair(lineno, fields[1]), fields[2] == "true"))
        return algo, GreedyPolicy.replay(picks)
    entries = []
    order = []
    for lineno, fields in body:
        if len(fields) != 2 or fields[0] not in ("entry", "process"):
            raise FormatError(f"line {lineno}: expected 'entry PAIR' or 'process PAIR'")
        target = entries if fields[0] == "entry" else order
        target.append(_pair(lineno, fields[1]))
    return algo, HHChoices(tuple(entries), tuple(order))


def _pair(lineno, token):
    try:
        return parse_pair_token(token)
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None

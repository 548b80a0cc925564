"""
ESG instance text format

    line 1: "u p j"   universe size, number of sets, rounds
    line 2: the u universe labels, space separated
    then p lines, each the space-separated members of one set

A blank set line is an empty set. Every declared set needs its own line,
so a file ending right after the (p-1)-th set is rejected.
"""
from pathlib import Path
from typing import List, Union

from .game import ESGInstance
from ..utils.errors import MalformedInputError


def parse_esg_text(text: str) -> ESGInstance:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise MalformedInputError("ESG file is empty")
    try:
        u, p, j = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise MalformedInputError(f"ESG header must be 'u p j', got {lines[0]!r}") from None
    if min(u, p, j) < 0:
        raise MalformedInputError("ESG header values must be non-negative")
    if len(lines) < 2 + p:
        raise MalformedInputError(f"ESG file declares {p} sets but has {max(len(lines) - 2, 0)} set lines")

    universe = lines[1].split()
    if len(universe) != u:
        raise MalformedInputError(f"universe line has {len(universe)} labels, header says {u}")
    if len(set(universe)) != u:
        raise MalformedInputError("universe labels must be distinct")

    members = set(universe)
    sets: List[frozenset] = []
    for lineno, line in enumerate(lines[2:2 + p], start=3):
        subset = frozenset(line.split())
        if not subset <= members:
            raise MalformedInputError(f"line {lineno}: {sorted(subset - members)} not in the universe")
        sets.append(subset)
    if any(line.strip() for line in lines[2 + p:]):
        raise MalformedInputError("trailing content after the declared sets")
    return ESGInstance(universe=tuple(universe), sets=tuple(sets), rounds=j)


def format_esg_text(instance: ESGInstance) -> str:
    labels = [str(e) for e in instance.universe]
    lines = [f"{len(labels)} {len(instance.sets)} {instance.rounds}", " ".join(labels)]
    order = {str(e): i for i, e in enumerate(instance.universe)}
    for subset in instance.sets:
        lines.append(" ".join(sorted((str(e) for e in subset), key=order.get)))
    return "\n".join(lines) + "\n"


def read_esg(path: Union[str, Path]) -> ESGInstance:
    return parse_esg_text(Path(path).read_text())

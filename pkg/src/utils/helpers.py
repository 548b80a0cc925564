"""
Utility functions for reports and output files
"""
import json
from pathlib import Path
from typing import Any, Dict, Iterable, Union


def to_jsonable(value: Any) -> Any:
    """
    Convert tuples, sets, frozensets and enums into plain JSON values

    Sets are sorted so the same data always serializes the same way.
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(v) for v in value), key=repr)
    if hasattr(value, "value") and hasattr(type(value), "__members__"):
        return value.value
    return value


def dumps_json(data: Any, indent: int = 2) -> str:
    """
    Deterministic JSON text: sorted keys, trailing newline

    Args:
        data: Report data
        indent: Indentation width

    Returns:
        JSON string
    """
    return json.dumps(to_jsonable(data), indent=indent, sort_keys=True) + "\n"


def write_json(data: Any, path: Union[str, Path]) -> Path:
    """Write deterministic JSON, creating parent directories"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps_json(data))
    return target


def write_jsonl(records: Iterable[Dict[str, Any]], path: Union[str, Path]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w") as handle:
        for record in records:
            handle.write(json.dumps(to_jsonable(record), sort_keys=True) + "\n")
    return target

"""Graphs shipped with the package, addressable by file stem."""

from __future__ import annotations

from pathlib import Path

from ..gkmgraph import GkmGraph

DIR = Path(__file__).resolve().parent


def names() -> list[str]:
    return sorted(p.stem for p in DIR.glob("*.json"))


def path(name: str) -> Path:
    p = DIR / f"{name}.json"
    if not p.exists():
        raise KeyError(f"no fixture named {name!r}; available: {', '.join(names())}")
    return p


def load(name: str) -> GkmGraph:
    return GkmGraph.load(path(name))

"""Named collections of objects over one ring, read from and written to
JSON files.  Commands address workspace entries as `kind:name` references.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .chains import ChainMorphism, ChainObject
from .definable import DefinableFamily, DefinablePair
from .errors import WorkspaceError
from .fpmodules import FpModule
from .linalg import Matrix, RingSpec
from .serialize import (
    chain_from_json,
    chain_to_json,
    family_from_json,
    family_to_json,
    matrix_from_json,
    matrix_to_json,
    module_from_json,
    module_to_json,
    morphism_from_json,
    morphism_to_json,
    pair_from_json,
    pair_to_json,
    ring_from_json,
    ring_to_json,
    square_from_json,
    square_to_json,
)
from .squares import FpSquare

_NAME_RE = re.compile(r"^[A-Za-z0-9_.-]+$")

_SECTIONS = ("chains", "squares", "modules", "pairs", "families", "morphisms", "matrices")


@dataclass(frozen=True)
class Workspace:
    ring: RingSpec
    chains: dict[str, ChainObject] = field(default_factory=dict)
    squares: dict[str, FpSquare] = field(default_factory=dict)
    modules: dict[str, FpModule] = field(default_factory=dict)
    pairs: dict[str, DefinablePair] = field(default_factory=dict)
    families: dict[str, DefinableFamily] = field(default_factory=dict)
    morphisms: dict[str, ChainMorphism] = field(default_factory=dict)
    matrices: dict[str, Matrix] = field(default_factory=dict)


def _section_items(data, section: str) -> list[tuple[str, object]]:
    block = data.get(section)
    if block is None:
        return []
    if not isinstance(block, dict):
        raise WorkspaceError("expected an object of named entries", location=section)
    for name in block:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise WorkspaceError(
                f"invalid name {name!r} (letters, digits, _ . - only)",
                location=section,
            )
    return list(block.items())


def parse_workspace(data) -> Workspace:
    if not isinstance(data, dict):
        raise WorkspaceError("workspace must be a JSON object", location="workspace")
    extra = sorted(set(data) - {"ring", *_SECTIONS})
    if extra:
        raise WorkspaceError(f"unknown sections: {', '.join(extra)}", location="workspace")
    if "ring" not in data:
        raise WorkspaceError('a workspace needs a "ring"', location="workspace")
    ring = ring_from_json(data["ring"], "ring")

    chains = {
        name: chain_from_json(ring, item, f"chains.{name}")
        for name, item in _section_items(data, "chains")
    }
    return Workspace(
        ring=ring,
        chains=chains,
        squares={
            name: square_from_json(ring, item, f"squares.{name}")
            for name, item in _section_items(data, "squares")
        },
        modules={
            name: module_from_json(ring, item, f"modules.{name}")
            for name, item in _section_items(data, "modules")
        },
        pairs={
            name: pair_from_json(ring, item, f"pairs.{name}")
            for name, item in _section_items(data, "pairs")
        },
        families={
            name: family_from_json(ring, item, f"families.{name}")
            for name, item in _section_items(data, "families")
        },
        morphisms={
            name: morphism_from_json(ring, item, chains, f"morphisms.{name}")
            for name, item in _section_items(data, "morphisms")
        },
        matrices={
            name: matrix_from_json(ring, item, f"matrices.{name}")
            for name, item in _section_items(data, "matrices")
        },
    )


def _chain_name(ws: Workspace, x: ChainObject, where: str) -> str:
    for name in sorted(ws.chains):
        if ws.chains[name] == x:
            return name
    raise WorkspaceError("morphism end is not a named chain", location=where)


def workspace_to_json(ws: Workspace) -> dict:
    out: dict = {"ring": ring_to_json(ws.ring)}
    if ws.chains:
        out["chains"] = {n: chain_to_json(x) for n, x in ws.chains.items()}
    if ws.squares:
        out["squares"] = {n: square_to_json(s) for n, s in ws.squares.items()}
    if ws.modules:
        out["modules"] = {n: module_to_json(m) for n, m in ws.modules.items()}
    if ws.pairs:
        out["pairs"] = {n: pair_to_json(p) for n, p in ws.pairs.items()}
    if ws.families:
        out["families"] = {n: family_to_json(f) for n, f in ws.families.items()}
    if ws.morphisms:
        out["morphisms"] = {
            n: morphism_to_json(
                u,
                _chain_name(ws, u.src, f"morphisms.{n}.src"),
                _chain_name(ws, u.dst, f"morphisms.{n}.dst"),
            )
            for n, u in ws.morphisms.items()
        }
    if ws.matrices:
        out["matrices"] = {n: matrix_to_json(m) for n, m in ws.matrices.items()}
    return out


def workspace_to_text(ws: Workspace) -> str:
    return json.dumps(workspace_to_json(ws), indent=2, sort_keys=True) + "\n"


def load_workspace(path: str) -> Workspace:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise WorkspaceError(str(exc), location=path) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceError(
            f"invalid JSON: {exc.msg}",
            location=f"{path}:{exc.lineno}:{exc.colno}",
        ) from None
    return parse_workspace(data)


_KINDS = {
    "chain": "chains",
    "square": "squares",
    "module": "modules",
    "pair": "pairs",
    "family": "families",
    "morphism": "morphisms",
    "matrix": "matrices",
}


def resolve_ref(ws: Workspace, ref: str):
    """Look up `kind:name`; raises WorkspaceError when it does not resolve."""
    kind, sep, name = ref.partition(":")
    if not sep:
        raise WorkspaceError("references look like kind:name", location=ref)
    if kind not in _KINDS:
        raise WorkspaceError(
            f"unknown kind {kind!r} (expected one of {', '.join(sorted(_KINDS))})",
            location=ref,
        )
    table = getattr(ws, _KINDS[kind])
    if name not in table:
        raise WorkspaceError(f"no {kind} named {name!r}", location=ref)
    return table[name]

"""Racks, links and cochains that ship with the package.

    >>> from rackcount import fixtures
    >>> fixtures.rack("t_ex6").n
    7
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .cohomology import Cochain, loads_cochain
from .diagrams import GaussDiagram, load_diagram
from .racks import RackTable, loads_rack


def data_dir() -> Path:
    return Path(str(resources.files("rackcount") / "data"))


def _names(sub: str, suffix: str) -> list[str]:
    return sorted(p.stem for p in (data_dir() / sub).glob(f"*{suffix}"))


def rack_names() -> list[str]:
    return _names("racks", ".rack")


def link_names() -> list[str]:
    return _names("links", ".gauss")


def rack_path(name: str) -> Path:
    return data_dir() / "racks" / f"{name}.rack"


def link_path(name: str) -> Path:
    return data_dir() / "links" / f"{name}.gauss"


def cochain_path(name: str) -> Path:
    return data_dir() / "cochains" / f"{name}.cochain"


def rack(name: str) -> RackTable:
    return loads_rack(rack_path(name).read_text())


def link(name: str) -> GaussDiagram:
    return load_diagram(link_path(name))


def cochain(name: str) -> Cochain:
    return loads_cochain(cochain_path(name).read_text())

"""Instance files: a quiver, a tilting module and run options in one JSON document.

Schema (vertices are 1-based)::

    {
      "name": "ej2",
      "quiver": {"type": "D~5", "vertices": 6, "arrows": [[1, 3], [2, 3], ...]},
      "tubes": {"R": [0, 0, 1, 0, 0, 0]},          # optional: tube name -> dim E_1
      "tilting": [
        {"kind": "preinjective", "vertex": 5, "power": 2},   # tau^power I_vertex
        {"kind": "regular", "tube": "R", "ray": 1, "level": 1},
        {"kind": "simple", "vertex": 3}                      # resolved in the catalog
      ],
      "options": {"window": 4, "levels": null, "cogenerator": false,
                  "slice": null, "cutoff": 10, "seed": 0,
                  "homogeneous": 2}
    }

``window`` bounds transjective powers, ``levels`` bounds tube levels (default
rank + 2), ``homogeneous`` is the number of sampled homogeneous tubes and
``slice`` forces Sigma = tau^k DH.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .ar import Catalog, CatalogError, Regular, Transjective, Window
from .quiver import Quiver, QuiverError
from .tilting import TiltingError, TiltingModule, validate_tilting


class SpecError(ValueError):
    """Malformed instance file; ``where`` is a JSON path or a line:column position."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


OPTION_DEFAULTS = {"window": None, "levels": None, "cogenerator": False, "slice": None, "cutoff": 10, "seed": 0,
                   "homogeneous": 2}


@dataclass
class InstanceSpec:
    name: str
    quiver_type: str
    n: int
    arrows: list[tuple[int, int]]       # 1-based
    tubes: dict = field(default_factory=dict)
    tilting: list = field(default_factory=list)
    options: dict = field(default_factory=lambda: dict(OPTION_DEFAULTS))
    path: str = ""

    def quiver(self) -> Quiver:
        return Quiver(self.n, tuple((s - 1, t - 1) for s, t in self.arrows), self.quiver_type)

    def catalog(self) -> Catalog:
        o = self.options
        return Catalog(self.quiver(), self.tubes or None, Window(power=o["window"], levels=o["levels"],
                                                                       homogeneous=o["homogeneous"]), o["seed"])

    def resolve(self, cat: Catalog) -> list:
        out = []
        for k, s in enumerate(self.tilting):
            where = f"tilting[{k}]"
            kind = s["kind"]
            try:
                if kind in ("preinjective", "preprojective"):
                    lab = Transjective(kind, s["vertex"], s["power"])
                elif kind == "regular":
                    cat.tube(s["tube"])
                    lab = Regular(s["tube"], s["ray"], s["level"])
                else:
                    lab = cat.label_for_simple(s["vertex"] - 1)
                if isinstance(lab, Transjective) and not 1 <= lab.vertex <= self.n:
                    raise SpecError(f"{where}.vertex", f"expected a vertex in 1..{self.n}")
                if isinstance(lab, Regular) and not 1 <= lab.ray <= cat.tube(lab.tube).rank:
                    raise SpecError(f"{where}.ray", f"expected a ray in 1..{cat.tube(lab.tube).rank}")
                if isinstance(lab, Regular) and lab.level < 1:
                    raise SpecError(f"{where}.level", "expected a positive level")
            except CatalogError as e:
                raise SpecError(where, str(e)) from None
            if isinstance(lab, Transjective) and lab.power > cat.window.power:
                cat.window.power = lab.power
            if isinstance(lab, Regular):
                need = lab.level
                if cat.window.levels is not None and need > cat.window.levels:
                    cat.window.levels = need
            out.append(lab)
        return out

    def tilting_module(self, cat: Catalog | None = None) -> TiltingModule:
        cat = cat or self.catalog()
        labels = self.resolve(cat)
        try:
            return validate_tilting(cat, labels)
        except CatalogError as e:
            raise TiltingError(str(e)) from None


def _need(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise SpecError(where, f"missing field {key!r}")
    v = obj[key]
    if kind is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise SpecError(f"{where}.{key}", f"expected an integer, got {v!r}")
    if kind is str and not isinstance(v, str):
        raise SpecError(f"{where}.{key}", f"expected a string, got {v!r}")
    if kind is list and not isinstance(v, list):
        raise SpecError(f"{where}.{key}", f"expected a list, got {v!r}")
    return v


def parse_spec(text: str, path: str = "<spec>") -> InstanceSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"{path}:{e.lineno}:{e.colno}", e.msg) from None
    if not isinstance(doc, dict):
        raise SpecError("$", "expected a JSON object")
    q = _need(doc, "quiver", dict, "$")
    n = _need(q, "vertices", int, "$.quiver")
    if n < 2:
        raise SpecError("$.quiver.vertices", "expected at least 2 vertices")
    arrows = []
    for k, a in enumerate(_need(q, "arrows", list, "$.quiver")):
        where = f"$.quiver.arrows[{k}]"
        if not (isinstance(a, list) and len(a) == 2 and all(isinstance(x, int) for x in a)):
            raise SpecError(where, f"expected [source, target], got {a!r}")
        if not all(1 <= x <= n for x in a):
            raise SpecError(where, f"vertex out of range 1..{n}")
        arrows.append((a[0], a[1]))
    tubes = doc.get("tubes", {}) or {}
    if not isinstance(tubes, dict):
        raise SpecError("$.tubes", "expected an object")
    for name, dims in tubes.items():
        if not (isinstance(dims, list) and len(dims) == n and all(isinstance(x, int) for x in dims)):
            raise SpecError(f"$.tubes.{name}", f"expected {n} integers")
    tilting = []
    for k, s in enumerate(_need(doc, "tilting", list, "$")):
        where = f"$.tilting[{k}]"
        kind = _need(s, "kind", str, where)
        if kind in ("preinjective", "preprojective"):
            _need(s, "vertex", int, where)
            if _need(s, "power", int, where) < 0:
                raise SpecError(f"{where}.power", "expected a non-negative power")
        elif kind == "regular":
            _need(s, "tube", str, where)
            _need(s, "ray", int, where)
            _need(s, "level", int, where)
        elif kind == "simple":
            if not 1 <= _need(s, "vertex", int, where) <= n:
                raise SpecError(f"{where}.vertex", f"expected a vertex in 1..{n}")
        else:
            raise SpecError(f"{where}.kind", f"unknown kind {kind!r}")
        tilting.append(dict(s))
    options = dict(OPTION_DEFAULTS)
    for key, v in (doc.get("options") or {}).items():
        if key not in OPTION_DEFAULTS:
            raise SpecError(f"$.options.{key}", "unknown option")
        options[key] = v
    spec = InstanceSpec(doc.get("name", Path(path).stem), q.get("type", ""), n, arrows, tubes, tilting, options, path)
    try:
        spec.quiver()
    except QuiverError as e:
        raise SpecError("$.quiver", str(e)) from None
    return spec


def load_spec(path: str | Path) -> InstanceSpec:
    p = Path(path)
    if not p.exists():
        b = bundled_path(str(path))
        if b is None:
            raise SpecError(str(path), "no such file or bundled instance")
        p = b
    return parse_spec(p.read_text(), str(p))


def bundled_names() -> list[str]:
    d = resources.files("tamecluster") / "data"
    return sorted(f.name[:-5] for f in d.iterdir() if f.name.endswith(".json"))


def bundled_path(name: str):
    f = resources.files("tamecluster") / "data" / f"{name}.json"
    return Path(str(f)) if f.is_file() else None


def bundled(name: str) -> InstanceSpec:
    p = bundled_path(name)
    if p is None:
        raise SpecError(name, "no such bundled instance")
    return parse_spec(p.read_text(), str(p))

"""JSON and SVG export of pavings."""

from __future__ import annotations

import json
import math
from pathlib import Path
from xml.sax.saxutils import quoteattr

from .interval import Box
from .paver import CLASSES, INSIDE, OUTSIDE, UNDETERMINED, Paving

COLORS = {INSIDE: "#d94f4f", OUTSIDE: "#4f6fd9", UNDETERMINED: "#f2d94f"}
STROKE = "#202020"


def _num(v: float) -> str:
    if not math.isfinite(v):
        raise ValueError(f"cannot serialize non-finite value {v}")
    s = format(v, ".17g")
    # keep integers recognisable as floats on reload
    if "." not in s and "e" not in s:
        s += ".0"
    return s


def _box(b: Box) -> str:
    return "[" + ", ".join(f"[{_num(c.lo)}, {_num(c.hi)}]" for c in b) + "]"


def paving_to_json(p: Paving) -> str:
    lines = ["{",
             f'  "frame": {_box(p.frame)},',
             f'  "eps": {_num(p.eps)},',
             '  "boxes": [']
    boxes = p.boxes()
    for i, (b, cls) in enumerate(boxes):
        sep = "," if i + 1 < len(boxes) else ""
        lines.append(f'    {{"x": {_box(b)}, "class": "{cls}"}}{sep}')
    lines.append("  ],")
    lines.append(f'  "stats": {json.dumps(p.stats, sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def paving_from_json(text: str) -> Paving:
    d = json.loads(text)
    p = Paving(Box([tuple(c) for c in d["frame"]]), float(d["eps"]))
    for entry in d["boxes"]:
        cls = entry["class"]
        if cls not in CLASSES:
            raise ValueError(f"unknown box class {cls!r}")
        p.add(Box([tuple(c) for c in entry["x"]]), cls)
    p.stats = dict(d.get("stats", {}))
    return p


def export_json(p: Paving, path: str | Path) -> None:
    Path(path).write_text(paving_to_json(p))


def load_json(path: str | Path) -> Paving:
    return paving_from_json(Path(path).read_text())


def paving_to_svg(p: Paving, width: int = 800, title: str | None = None) -> str:
    if len(p.frame) != 2:
        raise ValueError("SVG export needs a 2-dimensional paving")
    (f1, f2) = p.frame
    sx = width / f1.width
    height = max(1, round(f2.width * sx))
    sy = height / f2.width

    def rect(b: Box, cls: str) -> str:
        x = (b[0].lo - f1.lo) * sx
        y = (f2.hi - b[1].hi) * sy  # larger x2 drawn higher
        w = b[0].width * sx
        h = b[1].width * sy
        return (f'<rect x="{x:.3f}" y="{y:.3f}" width="{w:.3f}" height="{h:.3f}" '
                f'fill="{COLORS[cls]}" stroke="{STROKE}" stroke-width="1"/>')

    out = ['<?xml version="1.0" encoding="UTF-8" standalone="yes"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">']
    if title:
        out.append(f"<title>{quoteattr(title)[1:-1]}</title>")
    out.extend(rect(b, cls) for b, cls in p.boxes())
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export_svg(p: Paving, path: str | Path, width: int = 800, title: str | None = None) -> None:
    Path(path).write_text(paving_to_svg(p, width, title))

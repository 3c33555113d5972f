"""Checkpoint records and their two on-disk formats.

The text form is line-oriented and human-diffable: a short header, then
one ``level weight count`` triple per line (degree rows use the literal
level token ``deg``). A JSON mirror with the same content is written
alongside every text file. Histograms are exact at every weight; the
cutoff only marks where presentation switches to the overflow tail.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .registry import WeightHistogram

__all__ = [
    "FORMAT_VERSION",
    "Snapshot",
    "read_snapshot",
    "snapshot_basename",
    "write_snapshot",
]

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Snapshot:
    """State statistics after ``n`` interactions.

    ``weight_hists`` maps tracked clique level (1 = vertices) to an exact
    weight -> count histogram; ``top`` is the clique count at the highest
    level.
    """

    n: int
    vertices: int
    edges: int
    top: int
    weight_hists: dict[int, dict[int, int]]
    degree_hist: dict[int, int]
    cutoff: int

    def levels(self) -> list[int]:
        return sorted(self.weight_hists)

    def top_level(self) -> int:
        return max(self.weight_hists)

    def level_histogram(self, level: int, cutoff: int | None = None) -> WeightHistogram:
        hist = self.weight_hists[level]
        cut = self.cutoff if cutoff is None else cutoff
        counts = {w: c for w, c in hist.items() if w <= cut}
        overflow = {w: c for w, c in hist.items() if w > cut}
        return WeightHistogram(counts, overflow)

    def count(self, level: int) -> int:
        """Number of tracked cliques at a level."""
        return sum(self.weight_hists[level].values())

    def mass(self, level: int) -> int:
        """Total weight at a level; conservation checks compare this."""
        return sum(w * c for w, c in self.weight_hists[level].items())

    def to_text(self) -> str:
        lines = [
            f"# cliquesim snapshot {FORMAT_VERSION}",
            f"n {self.n}",
            f"V {self.vertices}",
            f"E {self.edges}",
            f"K {self.top}",
            f"cutoff {self.cutoff}",
            "levels " + " ".join(str(m) for m in self.levels()),
        ]
        for level in self.levels():
            hist = self.weight_hists[level]
            for w in sorted(hist):
                lines.append(f"{level} {w} {hist[w]}")
        for d in sorted(self.degree_hist):
            lines.append(f"deg {d} {self.degree_hist[d]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Snapshot":
        header: dict[str, int] = {}
        levels: list[int] = []
        hists: dict[int, dict[int, int]] = {}
        degrees: dict[int, int] = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "levels":
                levels = [int(x) for x in parts[1:]]
                hists = {m: {} for m in levels}
            elif parts[0] == "deg":
                degrees[int(parts[1])] = int(parts[2])
            elif parts[0] in ("n", "V", "E", "K", "cutoff"):
                header[parts[0]] = int(parts[1])
            else:
                level, w, c = int(parts[0]), int(parts[1]), int(parts[2])
                hists[level][w] = c
        missing = {"n", "V", "E", "K", "cutoff"} - set(header)
        if missing or not levels:
            raise ValueError(f"malformed snapshot text (missing {sorted(missing)})")
        return cls(
            n=header["n"],
            vertices=header["V"],
            edges=header["E"],
            top=header["K"],
            weight_hists=hists,
            degree_hist=degrees,
            cutoff=header["cutoff"],
        )

    def to_json_dict(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "n": self.n,
            "vertices": self.vertices,
            "edges": self.edges,
            "top": self.top,
            "cutoff": self.cutoff,
            "weights": {
                str(level): {str(w): c for w, c in sorted(hist.items())}
                for level, hist in sorted(self.weight_hists.items())
            },
            "degrees": {str(d): c for d, c in sorted(self.degree_hist.items())},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Snapshot":
        return cls(
            n=data["n"],
            vertices=data["vertices"],
            edges=data["edges"],
            top=data["top"],
            weight_hists={
                int(level): {int(w): c for w, c in hist.items()}
                for level, hist in data["weights"].items()
            },
            degree_hist={int(d): c for d, c in data["degrees"].items()},
            cutoff=data["cutoff"],
        )


def snapshot_basename(n: int) -> str:
    return f"snapshot-{n:010d}"


def write_snapshot(snap: Snapshot, directory: Path) -> list[Path]:
    """Write the text file and its JSON mirror; returns both paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    base = directory / snapshot_basename(snap.n)
    txt = base.with_suffix(".txt")
    js = base.with_suffix(".json")
    txt.write_text(snap.to_text())
    js.write_text(json.dumps(snap.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n")
    return [txt, js]


def read_snapshot(path: Path) -> Snapshot:
    path = Path(path)
    if path.suffix == ".json":
        return Snapshot.from_json_dict(json.loads(path.read_text()))
    return Snapshot.from_text(path.read_text())

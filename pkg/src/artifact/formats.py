"""Layer text and JSON formats, tour records and the embedded fixtures.

The layer format mirrors the printed tables: four blocks of four lines of four
integers, blocks separated by blank lines, block z, line r, token c.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cube import NCELLS, Arrangement
from . import verifier


class FormatError(ValueError):
    """Malformed input; line and col are 1-based (0 when not applicable)."""

    def __init__(self, msg: str, line: int = 0, col: int = 0):
        where = f"line {line}, col {col}: " if line else ""
        super().__init__(where + msg)
        self.line = line
        self.col = col


@dataclass
class TourRecord:
    id: str
    source: str
    values: list
    printed_diagonals: Optional[list] = field(default=None)

    def __post_init__(self):
        self.values = [int(v) for v in self.values]
        if sorted(self.values) != list(range(1, NCELLS + 1)):
            raise FormatError(f"record {self.id}: values are not a permutation of 1..64")

    @property
    def arrangement(self) -> Arrangement:
        return Arrangement(self.values)


def parse_layers(text: str) -> Arrangement:
    lines = text.splitlines()
    blocks = []
    cur = []
    for no, raw in enumerate(lines, start=1):
        if raw.strip():
            cur.append((no, raw))
        elif cur:
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    if len(blocks) != 4:
        raise FormatError(f"expected 4 layer blocks, found {len(blocks)}")
    vals = np.zeros(NCELLS, dtype=np.int64)
    seen = {}
    for z, block in enumerate(blocks):
        if len(block) != 4:
            raise FormatError(f"layer {z + 1} has {len(block)} rows, expected 4", block[0][0], 1)
        for r, (no, raw) in enumerate(block):
            toks = []
            pos = 0
            for t in raw.split():
                col = raw.index(t, pos) + 1
                pos = col - 1 + len(t)
                toks.append((col, t))
            if len(toks) != 4:
                raise FormatError(f"expected 4 values, found {len(toks)}", no, 1)
            for c, (col, t) in enumerate(toks):
                try:
                    v = int(t)
                except ValueError:
                    raise FormatError(f"not an integer: {t!r}", no, col) from None
                if not 1 <= v <= NCELLS:
                    raise FormatError(f"value {v} out of range 1..64", no, col)
                if v in seen:
                    pl, pc = seen[v]
                    raise FormatError(f"duplicate value {v} (first at line {pl}, col {pc})", no, col)
                seen[v] = (no, col)
                vals[16 * z + 4 * r + c] = v
    return Arrangement(vals)


def emit_layers(a) -> str:
    v = a.values if isinstance(a, Arrangement) else np.asarray(a)
    blocks = []
    for z in range(4):
        rows = [" ".join(f"{int(v[16 * z + 4 * r + c]):2d}" for c in range(4)) for r in range(4)]
        blocks.append("\n".join(rows))
    return "\n\n".join(blocks) + "\n"


def report_dict(report: verifier.MagicReport, pattern_type: Optional[str]) -> dict:
    return {
        "is_tour": report.is_tour,
        "is_closed": report.is_closed,
        "ortho_magic": report.ortho_magic,
        "diag_sums": list(report.diag_sums),
        "diag_magic": report.diag_magic,
        "subcube_sums": list(report.subcube_sums),
        "subcube_uniform": report.subcube_uniform,
        "pattern_type": pattern_type,
    }


def emit_json(record: TourRecord, report: verifier.MagicReport | None = None) -> str:
    from .patterns import classify_pattern
    a = record.arrangement
    if report is None:
        report = verifier.verify(a)
    pattern = classify_pattern(a)[1] if report.is_tour else None
    obj = {
        "id": record.id,
        "source": record.source,
        "values": list(record.values),
        "report": report_dict(report, pattern),
    }
    return json.dumps(obj)


def parse_record(text: str, default_id: str = "input") -> TourRecord:
    """A record from either layer text or a JSON object with a "values" array."""
    s = text.strip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as e:
            raise FormatError(f"bad JSON: {e.msg}", e.lineno, e.colno) from None
        vals = obj.get("values")
        if not isinstance(vals, list) or len(vals) != NCELLS:
            raise FormatError("JSON record needs a 'values' array of 64 integers")
        if not all(isinstance(v, int) for v in vals):
            raise FormatError("JSON 'values' must be integers")
        return TourRecord(str(obj.get("id", default_id)), str(obj.get("source", "")), vals,
                          obj.get("printed_diagonals"))
    a = parse_layers(text)
    return TourRecord(default_id, "", a.values.tolist())


def diagnose(values) -> str:
    """'ok', 'transcription error: ...' or 'not magic: ...' for an ingested grid."""
    try:
        a = Arrangement(values)
    except ValueError as e:
        return f"transcription error: {e}"
    rep = verifier.verify(a)
    if not rep.is_tour:
        bad = [k for k in range(1, NCELLS)
               if not verifier.knight_adjacent(int(a.positions[k]), int(a.positions[k + 1]))]
        return f"transcription error: no knight move between {bad[0]} and {bad[0] + 1}"
    if not rep.ortho_magic:
        off = [i for i, s in enumerate(rep.line_sums) if s != 130]
        return f"not magic: {len(off)} line sums differ from 130"
    return "ok"


_FIXTURES = [
    ("1", "Awani Kumar 2006", [130, 130, 130],
     """
      1 20 47 62
     28  9 54 39
     45 64  3 18
     56 37 26 11

     48 61  2 19
     53 40 27 10
      4 17 46 63
     25 12 55 38

     29 16 51 34
      8 21 42 59
     49 36 31 14
     44 57  6 23

     52 33 30 15
     41 60  7 22
     32 13 50 35
      5 24 43 58
     """),
    ("2", "Awani Kumar 2006", [102, 166, 94],
     """
      1 20 47 62
     28 37 54 11
     45 64  3 18
     56  9 26 39

     48 61  2 19
     53 12 27 38
      4 17 46 63
     25 40 55 10

     29 16 51 34
     44 21  6 59
     49 36 31 14
      8 57 42 23

     52 33 30 15
      5 60 43 22
     32 13 50 35
     41 24  7 58
     """),
    ("3", "Guenter Stertenbrink 2003", [66, 194, 130],
     """
      1 24 47 58
     42 63  8 17
     55  2 25 48
     32 41 50  7

     46 59  4 21
      5 20 43 62
     28 45 54  3
     51  6 29 44

     23 34 57 16
     64  9 18 39
     33 56 15 26
     10 31 40 49

     60 13 22 35
     19 38 61 12
     14 27 36 53
     37 52 11 30
     """),
    ("4", "Guenter Stertenbrink 2003", [130, 66, 194],
     """
      1 42 55 32
     46  5 28 51
     23 64 33 10
     60 19 14 37

     56 31 34  9
     27 52 13 38
      2 41 24 63
     45  6 59 20

     47  8 25 50
      4 43 54 29
     57 18 15 40
     22 61 36 11

     26 49 16 39
     53 30 35 12
     48  7 58 17
      3 44 21 62
     """),
    ("5", "Awani Kumar 2009", [66, 194, 66],
     """
      2 11 62 55
     45 56  1 28
     64 37 20  9
     19 26 47 38

     63 54  3 10
      4 25 48 53
     17 12 61 40
     46 39 18 27

     14  7 50 59
     49 44 29  8
     36 57 16 21
     31 22 35 42

     51 58 15  6
     32  5 52 41
     13 24 33 60
     34 43 30 23
     """),
    ("6", "Francis Gaspalou 2009", [50, 194, 82],
     """
      2 11 62 55
     45 56  1 28
     64 37 20  9
     19 26 47 38

     63 54  3 10
      4 25 48 53
     17 12 61 40
     46 39 18 27

     14 23 50 43
     49 44 29  8
     36 57 16 21
     31  6 35 58

     51 42 15 22
     32  5 52 41
     13 24 33 60
     34 59 30  7
     """),
    ("7", "Francis Gaspalou 2009", [66, 210, 66],
     """
      2 11 62 55
     45 56  1 28
     64 37 20  9
     19 26 47 38

     63 54  3 10
      4 25 48 53
     17 12 61 40
     46 39 18 27

     30  7 34 59
     49 44 29  8
     36 57 16 21
     15 22 51 42

     35 58 31  6
     32  5 52 41
     13 24 33 60
     50 43 14 23
     """),
    ("8", "Francis Gaspalou 2009", [50, 210, 82],
     """
      2 11 62 55
     45 56  1 28
     64 37 20  9
     19 26 47 38

     63 54  3 10
      4 25 48 53
     17 12 61 40
     46 39 18 27

     30 23 34 43
     49 44 29  8
     36 57 16 21
     15  6 51 58

     35 42 31 22
     32  5 52 41
     13 24 33 60
     50 59 14  7
     """),
]


def fixtures() -> list:
    """The eight tours printed with complete grids, in table order."""
    return [TourRecord(i, src, parse_layers(grid).values.tolist(), list(d))
            for i, src, d, grid in _FIXTURES]


def fixture_text(i: int) -> str:
    """Layer text of fixture i (0-based) as embedded."""
    return _FIXTURES[i][3]

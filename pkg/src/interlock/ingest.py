"""Readers and writers: affiliation CSV, Pajek ``.net`` / ``.clu`` and the
published-table fixture CSVs.

Readers take binary streams and decode UTF-8 (a leading BOM is tolerated);
writers return bytes with LF line endings.  Every :class:`ParseError`
carries the 1-based line number of the offending input line.
"""

from __future__ import annotations

import csv
import io
import logging
import re
from collections.abc import Iterable
from dataclasses import dataclass
from typing import BinaryIO

from .cohesion import ComponentPartition, ComponentListing, SliceCensus
from .core import AffiliationNetwork, JournalGraph, normalize_label
from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    ParseError,
    SelfLoop,
    UnknownVertex,
    UnsupportedDirected,
)
from .project import DistributionTable

log = logging.getLogger(__name__)


def _text(stream: BinaryIO | bytes) -> str:
    data = stream if isinstance(stream, (bytes, bytearray)) else stream.read()
    try:
        return bytes(data).decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        line = bytes(data)[: exc.start].count(b"\n") + 1
        raise ParseError(f"input is not valid UTF-8 ({exc.reason})", line) from None


def _csv_rows(stream: BinaryIO | bytes):
    """Yield ``(line_number, fields)``, skipping blank lines."""
    reader = csv.reader(io.StringIO(_text(stream), newline=""), strict=True)
    start = 1
    try:
        for fields in reader:
            if fields:
                yield start, fields
            start = reader.line_num + 1
    except csv.Error as exc:
        raise ParseError(str(exc), reader.line_num) from None


# ------------------------------------------------------------ affiliation CSV


def read_affiliation_csv(stream: BinaryIO | bytes) -> AffiliationNetwork:
    """Parse ``editor,journal`` rows into a two-mode network.

    Repeated (editor, journal) pairs are kept once; the repeats are counted
    in ``AffiliationNetwork.duplicates``.
    """
    rows = _csv_rows(stream)
    header = next(rows, None)
    if header is None:
        raise ParseError("empty file: expected header 'editor,journal'", 1)
    line, fields = header
    if [f.strip().lower() for f in fields] != ["editor", "journal"]:
        raise ParseError(f"expected header 'editor,journal', got {','.join(fields)!r}", line)
    net = AffiliationNetwork()
    for line, fields in rows:
        if len(fields) != 2:
            raise ParseError(f"expected 2 fields, got {len(fields)}", line)
        editor, journal = (normalize_label(f) for f in fields)
        if not editor or not journal:
            raise ParseError("empty editor or journal field", line)
        net.add_seat(editor, journal)
    if net.duplicates:
        log.warning("%d duplicate affiliation rows ignored", net.duplicates)
    return net


def write_affiliation_csv(a: AffiliationNetwork) -> bytes:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["editor", "journal"])
    for actor, event in a.incidences():
        w.writerow([a.actors[actor], a.events[event]])
    return out.getvalue().encode("utf-8")


def realize_affiliation(g: JournalGraph) -> AffiliationNetwork:
    """A two-mode network whose projection is *g*.

    Each edge of value k becomes k synthetic editors sitting on exactly those
    two boards; isolated journals keep an empty board.
    """
    a = AffiliationNetwork()
    for label in g.labels:
        a.add_event(label)
    for u, v, value in g.edges():
        for k in range(1, value + 1):
            editor = f"editor {u + 1}-{v + 1}-{k}"
            a.add_seat(editor, g.label(u))
            a.add_seat(editor, g.label(v))
    return a


# ------------------------------------------------------------------- Pajek

_VERTEX_LINE = re.compile(r'\s*(\d+)\s+(?:"([^"]*)"|(\S+))(.*)$')


def read_pajek_net(stream: BinaryIO | bytes) -> JournalGraph:
    """Parse the undirected, valued subset of the Pajek ``.net`` format."""
    g = JournalGraph()
    section = None
    declared = None
    file_ids: dict[int, int] = {}
    for line, raw in enumerate(_text(stream).splitlines(), start=1):
        text = raw.strip()
        if not text or text.startswith("%"):
            continue
        if text.startswith("*"):
            keyword = text.split()[0].lower()
            if keyword == "*vertices":
                if section is not None:
                    raise ParseError("repeated *Vertices section", line)
                parts = text.split()
                if len(parts) < 2 or not parts[1].isdigit():
                    raise ParseError(f"bad *Vertices line {text!r}", line)
                if len(parts) > 2:
                    raise ParseError("two-mode *Vertices headers are not supported", line)
                declared = int(parts[1])
                section = "vertices"
            elif keyword == "*edges":
                if declared is None:
                    raise ParseError("*Edges before *Vertices", line)
                section = "edges"
            elif keyword.startswith("*arcs"):
                raise UnsupportedDirected(f"directed section {keyword} not supported", line)
            else:
                raise ParseError(f"unsupported section {keyword}", line)
            if section == "edges" and g.n != declared:
                raise ParseError(f"*Vertices {declared} but {g.n} vertex lines", line)
            continue

        if section == "vertices":
            if g.n >= declared:
                raise ParseError(f"more than {declared} vertex lines", line)
            match = _VERTEX_LINE.match(raw)
            if match is None:
                raise ParseError(f"bad vertex line {text!r}", line)
            file_id = int(match.group(1))
            label = match.group(2) if match.group(2) is not None else match.group(3)
            if file_id in file_ids:
                raise ParseError(f"vertex id {file_id} listed twice", line)
            if not 1 <= file_id <= declared:
                raise ParseError(f"vertex id {file_id} outside 1..{declared}", line)
            if match.group(4).strip():
                log.warning("line %d: vertex coordinates/attributes ignored", line)
            try:
                file_ids[file_id] = g.add_vertex(label)
            except DuplicateVertex as exc:
                raise ParseError(str(exc), line) from None
        elif section == "edges":
            parts = text.split()
            if len(parts) not in (2, 3):
                raise ParseError(f"expected 'u v [value]', got {text!r}", line)
            try:
                ends = [int(p) for p in parts[:2]]
            except ValueError:
                raise ParseError(f"non-integer vertex id in {text!r}", line) from None
            value = 1
            if len(parts) == 3:
                try:
                    value = int(parts[2])
                except ValueError:
                    raise ParseError(f"non-integer line value {parts[2]!r}", line) from None
                if value < 1:
                    raise ParseError(f"line value must be positive, got {value}", line)
            ids = []
            for e in ends:
                if e not in file_ids:
                    raise UnknownVertex(f"edge references unknown vertex {e}", line)
                ids.append(file_ids[e])
            try:
                g.add_edge(ids[0], ids[1], value)
            except (SelfLoop, DuplicateEdge) as exc:
                raise type(exc)(str(exc), line) from None
        else:
            raise ParseError("data before *Vertices", line)

    if declared is None:
        raise ParseError("missing *Vertices section", 1)
    if g.n != declared:
        raise ParseError(f"*Vertices {declared} but {g.n} vertex lines", line if g.n else 1)
    return g


def _check_label(label: str) -> str:
    if '"' in label or "\n" in label or "\r" in label:
        raise ValueError(f"label {label!r} cannot be written to Pajek (quote or newline)")
    return label


def write_pajek_net(g: JournalGraph) -> bytes:
    lines = [f"*Vertices {g.n}"]
    lines += [f'{v + 1} "{_check_label(label)}"' for v, label in enumerate(g.labels)]
    lines.append("*Edges")
    lines += [f"{u + 1} {v + 1} {value}" for u, v, value in g.edges()]
    return ("\n".join(lines) + "\n").encode("utf-8")


def write_pajek_clu(p: ComponentPartition) -> bytes:
    lines = [f"*Vertices {p.n}"] + [str(c + 1) for c in p.assignment]
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_pajek_clu(stream: BinaryIO | bytes) -> list[int]:
    values: list[int] = []
    declared = None
    for line, raw in enumerate(_text(stream).splitlines(), start=1):
        text = raw.strip()
        if not text or text.startswith("%"):
            continue
        if text.lower().startswith("*vertices"):
            try:
                declared = int(text.split()[1])
            except (IndexError, ValueError):
                raise ParseError(f"bad *Vertices line {text!r}", line) from None
            continue
        try:
            values.append(int(text))
        except ValueError:
            raise ParseError(f"non-integer cluster {text!r}", line) from None
    if declared is None or declared != len(values):
        raise ParseError(f"*Vertices {declared} but {len(values)} values", 1)
    return values


def write_dot(g: JournalGraph) -> bytes:
    """Graphviz export for external layout tools; edge values become labels."""

    def q(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["graph journals {"]
    lines += [f"  {v} [label={q(label)}];" for v, label in enumerate(g.labels)]
    lines += [f'  {u} -- {v} [weight={value}, label="{value}"];' for u, v, value in g.edges()]
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


# ------------------------------------------------------------------ fixtures

A1_COLUMNS = (
    "journal",
    "degree",
    "normalized_degree",
    "rank_degree",
    "closeness",
    "rank_closeness",
    "betweenness_x100",
    "rank_betweenness",
)


@dataclass(frozen=True)
class FixtureRowA1:
    journal: str
    degree: int
    normalized_degree: float
    rank_degree: int
    closeness: float
    rank_closeness: int
    betweenness_x100: float
    rank_betweenness: int


def _header(rows, expected: tuple[str, ...], optional: tuple[str, ...] = ()) -> list[str]:
    head = next(rows, None)
    if head is None:
        raise ParseError("empty fixture file", 1)
    line, fields = head
    names = [f.strip() for f in fields]
    if tuple(names) not in (expected, expected + optional):
        raise ParseError(f"expected columns {','.join(expected)}, got {','.join(names)}", line)
    return names


def _number(kind, text: str, column: str, line: int):
    try:
        value = kind(text.strip())
    except ValueError:
        raise ParseError(f"column {column}: {text!r} is not a number", line) from None
    if value < 0:
        raise ParseError(f"column {column}: negative value {text!r}", line)
    return value


def read_fixture_a1(stream: BinaryIO | bytes) -> list[FixtureRowA1]:
    rows = _csv_rows(stream)
    _header(rows, A1_COLUMNS)
    out = []
    for line, fields in rows:
        if len(fields) != len(A1_COLUMNS):
            raise ParseError(f"expected {len(A1_COLUMNS)} fields, got {len(fields)}", line)
        journal = normalize_label(fields[0])
        if not journal:
            raise ParseError("empty journal name", line)
        kinds = (int, float, int, float, int, float, int)
        nums = [
            _number(k, f, c, line) for k, f, c in zip(kinds, fields[1:], A1_COLUMNS[1:])
        ]
        out.append(FixtureRowA1(journal, *nums))
    log.info("read %d journal-table rows", len(out))
    return out


def write_fixture_a1(rows: Iterable[tuple]) -> bytes:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(A1_COLUMNS)
    w.writerows(rows)
    return out.getvalue().encode("utf-8")


@dataclass(frozen=True)
class FixtureDistribution:
    """A published frequency table; ``printed_pct`` is None if not transcribed."""

    key: str
    rows: tuple[tuple[int, int, float | None], ...]

    @property
    def counts(self) -> dict[int, int]:
        return {v: f for v, f, _ in self.rows}

    @property
    def total(self) -> int:
        return sum(f for _, f, _ in self.rows)


def read_fixture_distribution(stream: BinaryIO | bytes, key: str) -> FixtureDistribution:
    """Read ``<key>,freq[,freq_pct]`` (``key`` is ``degree`` or ``line_value``)."""
    rows = _csv_rows(stream)
    names = _header(rows, (key, "freq"), ("freq_pct",))
    out = []
    seen = set()
    for line, fields in rows:
        if len(fields) != len(names):
            raise ParseError(f"expected {len(names)} fields, got {len(fields)}", line)
        value = _number(int, fields[0], key, line)
        freq = _number(int, fields[1], "freq", line)
        pct = _number(float, fields[2], "freq_pct", line) if len(fields) == 3 else None
        if value in seen:
            raise ParseError(f"{key} {value} listed twice", line)
        seen.add(value)
        out.append((value, freq, pct))
    out.sort()
    return FixtureDistribution(key, tuple(out))


def write_distribution_csv(table: DistributionTable, key: str, decimals: int = 2) -> bytes:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow([key, "freq", "freq_pct"])
    for r in table:
        w.writerow([r.value, r.freq, f"{r.freq_pct:.{decimals}f}"])
    return out.getvalue().encode("utf-8")


# ------------------------------------------------------------------ reports


def write_slices_csv(rows: Iterable[SliceCensus]) -> bytes:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["m", "components", "journals", "isolated", "giant"])
    for c in rows:
        w.writerow(
            [c.m, c.component_count_nontrivial, c.journals_in_nontrivial, c.isolated, c.giant_size]
        )
    return out.getvalue().encode("utf-8")


def write_component_blocks(listings: Iterable[ComponentListing], m: int) -> bytes:
    """Plain-text membership blocks: members with full-network betweenness x100,
    then the lines of the component with their values."""
    lines = []
    for i, c in enumerate(listings, start=1):
        lines.append(f"# component {i} (m={m}): {len(c.members)} journals, {len(c.edges)} lines")
        for label in c.members:
            lines.append(f"{label}\t{100 * c.betweenness[label]:.3f}")
        lines.append("-- lines")
        for u, v, value in c.edges:
            lines.append(f"{u}\t{v}\t{value}")
        lines.append("")
    return "\n".join(lines).encode("utf-8")

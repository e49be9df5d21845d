"""Parsers for the dataset formats: Pajek ``.net``, weighted edge lists, and
paper-author records with per-paper pair weights of 1/(n-1).

All parsers are streaming, deterministic, and report 1-based line numbers in
errors. Input text is expected as str; file helpers decode UTF-8 with a lossy
fallback because legacy network archives predate consistent encodings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import ParseError
from .graph import EdgeRecord


@dataclass(frozen=True)
class PaperRecord:
    """Author labels of one paper; at least one author, no duplicates."""

    author_labels: tuple[str, ...]


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8", errors="replace")


def _parse_weight(field: str, lineno: int) -> float:
    try:
        w = float(field)
    except ValueError:
        raise ParseError(f"unparsable weight {field!r}", lineno) from None
    return w


def parse_pajek(text: str) -> tuple[list[str], list[EdgeRecord]]:
    """Parse the ``*Vertices``/``*Edges``/``*Arcs`` subset of Pajek.

    Returns the vertex labels (index order 1..N) and the edge records.
    ``*Arcs`` pairs are emitted as-is; symmetrization happens when
    ``build_graph`` collapses reciprocal duplicates by summing.
    """
    labels: list[str] | None = None
    records: list[EdgeRecord] = []
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            keyword = line.split()[0].lower()
            if keyword == "*vertices":
                parts = line.split()
                if len(parts) < 2:
                    raise ParseError("*Vertices without a count", lineno)
                try:
                    n = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {parts[1]!r}",
                                     lineno) from None
                if n < 0:
                    raise ParseError(f"negative vertex count {n}", lineno)
                labels = [str(i) for i in range(1, n + 1)]
                section = "vertices"
            elif keyword in ("*edges", "*arcs"):
                if labels is None:
                    raise ParseError("missing *Vertices header before "
                                     f"{keyword}", lineno)
                section = "edges"
            else:
                # other Pajek sections (*Partition, *Vector, ...) end our data
                section = "ignore"
            continue
        if section == "vertices":
            assert labels is not None
            parts = line.split(maxsplit=1)
            try:
                idx = int(parts[0])
            except ValueError:
                raise ParseError(f"bad vertex index {parts[0]!r}",
                                 lineno) from None
            if not 1 <= idx <= len(labels):
                raise ParseError(
                    f"vertex index {idx} out of range 1..{len(labels)}",
                    lineno)
            if len(parts) > 1:
                rest = parts[1].strip()
                if rest.startswith('"'):
                    end = rest.find('"', 1)
                    if end < 0:
                        raise ParseError("unterminated quoted label", lineno)
                    labels[idx - 1] = rest[1:end]
                else:
                    labels[idx - 1] = rest.split()[0]
        elif section == "edges":
            assert labels is not None
            parts = line.split()
            if len(parts) < 2:
                raise ParseError("edge line needs two endpoints", lineno)
            try:
                i = int(parts[0])
                j = int(parts[1])
            except ValueError:
                raise ParseError(f"bad endpoint in {line!r}", lineno) from None
            for v in (i, j):
                if not 1 <= v <= len(labels):
                    raise ParseError(
                        f"vertex index {v} out of range 1..{len(labels)}",
                        lineno)
            w = _parse_weight(parts[2], lineno) if len(parts) > 2 else 1.0
            records.append(EdgeRecord(labels[i - 1], labels[j - 1], w))
    if labels is None:
        raise ParseError("missing *Vertices header")
    return labels, records


def parse_edgelist(text: str) -> list[EdgeRecord]:
    """Parse ``label label [weight]`` lines; ``#`` comments allowed."""
    records: list[EdgeRecord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError("expected at least two fields", lineno)
        if len(parts) > 3:
            raise ParseError(f"too many fields ({len(parts)})", lineno)
        w = _parse_weight(parts[2], lineno) if len(parts) == 3 else 1.0
        records.append(EdgeRecord(parts[0], parts[1], w))
    return records


def parse_papers(text: str) -> list[PaperRecord]:
    """Parse one paper per line, author labels separated by ``;``."""
    papers: list[PaperRecord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        authors = tuple(a.strip() for a in line.split(";") if a.strip())
        if not authors:
            raise ParseError("paper without authors", lineno)
        if len(set(authors)) != len(authors):
            raise ParseError("duplicate author within one paper", lineno)
        papers.append(PaperRecord(authors))
    return papers


def newman_coauthorship_weights(papers: Iterable[PaperRecord]
                                ) -> Iterator[EdgeRecord]:
    """Emit one record of weight 1/(n-1) per author pair of each n-author
    paper; single-author papers contribute nothing. Per-pair totals are
    accumulated downstream by ``build_graph``'s duplicate collapse."""
    for paper in papers:
        n = len(paper.author_labels)
        if n < 2:
            continue
        w = 1.0 / (n - 1)
        for a, b in combinations(paper.author_labels, 2):
            yield EdgeRecord(a, b, w)


def load_records(path: str | Path, fmt: str
                 ) -> tuple[list[str] | None, list[EdgeRecord]]:
    """Load (declared labels or None, edge records) from a dataset file.

    ``fmt`` is one of ``pajek``, ``edgelist``, ``papers``.
    """
    text = read_text(path)
    if fmt == "pajek":
        return parse_pajek(text)
    if fmt == "edgelist":
        return None, parse_edgelist(text)
    if fmt == "papers":
        return None, list(newman_coauthorship_weights(parse_papers(text)))
    raise ValueError(f"unknown dataset format {fmt!r}")

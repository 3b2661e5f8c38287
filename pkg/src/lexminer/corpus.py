"""Law report parsing and repository loading.

A report file is UTF-8 with extension ``.lawrep``. Line 1 is
``#ID: <id>``; the sections ``#HEAD`` (required), ``#DETAIL`` and
``#VERDICT`` (optional) follow, each marker alone on its line at column
0, each body running until the next marker or end of file.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator


class CorpusError(Exception):
    """Base class for report parsing and repository errors."""


class MissingHeader(CorpusError):
    """The file does not start with an ``#ID:`` line."""


class MissingHead(CorpusError):
    """No ``#HEAD`` section, or its body is empty."""


class DuplicateSection(CorpusError):
    """A section marker occurs more than once."""


class DuplicateId(CorpusError):
    """Two files in the repository share a report id."""


@dataclass(frozen=True)
class LawReport:
    """One case record.

    Only the head is mined; detail and verdict are stored verbatim for
    display. The verdict may be empty.
    """

    id: str
    head: str
    detail: str = ""
    verdict: str = ""


@dataclass(frozen=True)
class Repository:
    """An immutable collection of law reports, ordered ascending by id."""

    reports: tuple[LawReport, ...] = ()

    def __post_init__(self) -> None:
        ids = [r.id for r in self.reports]
        if ids != sorted(ids):
            object.__setattr__(
                self, "reports", tuple(sorted(self.reports, key=lambda r: r.id))
            )

    def __iter__(self) -> Iterator[LawReport]:
        return iter(self.reports)

    def __len__(self) -> int:
        return len(self.reports)

    def get(self, report_id: str) -> LawReport | None:
        for report in self.reports:
            if report.id == report_id:
                return report
        return None


_SECTIONS = ("#HEAD", "#DETAIL", "#VERDICT")


def parse_report(raw: str) -> LawReport:
    """Parse the text of one ``.lawrep`` file into a LawReport."""
    lines = raw.lstrip("﻿").splitlines()
    if not lines or not lines[0].startswith("#ID:"):
        raise MissingHeader("first line must be '#ID: <id>'")
    report_id = lines[0][len("#ID:"):].strip()
    if not report_id:
        raise MissingHeader("empty report id")

    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    for line in lines[1:]:
        marker = line.rstrip()
        if marker in _SECTIONS:
            if marker in sections:
                raise DuplicateSection(f"section {marker} occurs twice")
            sections[marker] = []
            current = sections[marker]
        elif marker.startswith("#ID:"):
            raise DuplicateSection("second '#ID:' line")
        elif current is not None:
            current.append(line)
        # text before the first section marker has no home; ignore it

    head = "\n".join(sections.get("#HEAD", [])).strip()
    if "#HEAD" not in sections or not head:
        raise MissingHead("no #HEAD section or empty head")
    detail = "\n".join(sections.get("#DETAIL", [])).strip()
    verdict = "\n".join(sections.get("#VERDICT", [])).strip()
    return LawReport(id=report_id, head=head, detail=detail, verdict=verdict)


def serialize_report(report: LawReport) -> str:
    """Render a LawReport back to the file format (round-trips parse_report)."""
    parts = [f"#ID: {report.id}", "#HEAD", report.head, "#DETAIL", report.detail]
    if report.verdict:
        parts += ["#VERDICT", report.verdict]
    return "\n".join(parts) + "\n"


def load_repository(source: str | Path) -> Repository:
    """Load every ``.lawrep`` file under ``source`` into a Repository.

    The result is ordered ascending by id regardless of filesystem
    enumeration order. Parse errors propagate with the offending
    filename prepended; two files sharing an id raise DuplicateId
    naming both paths.
    """
    source = Path(source)
    reports: dict[str, tuple[Path, LawReport]] = {}
    for path in sorted(source.iterdir()):
        if path.suffix != ".lawrep" or not path.is_file():
            continue
        try:
            report = parse_report(path.read_text(encoding="utf-8"))
        except CorpusError as exc:
            raise type(exc)(f"{path.name}: {exc}") from None
        if report.id in reports:
            first_path, _ = reports[report.id]
            raise DuplicateId(
                f"id {report.id!r} in both {first_path.name} and {path.name}"
            )
        reports[report.id] = (path, report)
    ordered = tuple(r for _, (_, r) in sorted(reports.items()))
    return Repository(reports=ordered)

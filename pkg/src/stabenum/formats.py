"""Parsers and writers for the two community text formats.

Supported formats:

* ``apx`` -- logic-programming style facts, one ``arg(NAME).`` per argument
  and one ``att(A,B).`` per attack.  Names match ``[A-Za-z0-9_]+``; ``%``
  starts a comment; several facts may share a line.
* ``tgf`` -- trivial graph format: node lines (an id, optionally followed
  by a label that is ignored) up to a lone ``#`` line, then ``ID ID``
  edge lines.

Both accept LF or CRLF and ignore blank lines.  Parsing errors carry a
1-based line number; duplicate declarations only produce warnings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .framework import Framework, UnknownArgument, build


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    message: str
    severity: str  # "error" | "warning"


class ParseError(ValueError):
    """Malformed input; ``line`` is 1-based."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.message = message
        self.line = line


class MissingSeparator(ParseError):
    """A tgf document without the mandatory '#' line."""


_NAME = r"[A-Za-z0-9_]+"
_APX_ARG = re.compile(rf"arg\(({_NAME})\)\.")
_APX_ATT = re.compile(rf"att\(({_NAME}),({_NAME})\)\.")
_TOKEN = re.compile(_NAME)


def _warn(diagnostics: list[ParseDiagnostic] | None, line: int, message: str) -> None:
    if diagnostics is not None:
        diagnostics.append(ParseDiagnostic(line, message, "warning"))


def _fail(diagnostics: list[ParseDiagnostic] | None, error: ParseError) -> ParseError:
    if diagnostics is not None:
        diagnostics.append(ParseDiagnostic(error.line, error.message, "error"))
    return error


def parse_apx(text: str, diagnostics: list[ParseDiagnostic] | None = None) -> Framework:
    """Parse apx facts into a framework.

    Attacks may precede the declarations they refer to; an endpoint that is
    never declared raises :class:`UnknownArgument` with its line number.
    """
    names: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0]
        pos = 0
        end = len(line)
        while pos < end:
            if line[pos].isspace():
                pos += 1
                continue
            m = _APX_ARG.match(line, pos)
            if m:
                name = m.group(1)
                if name in declared:
                    _warn(diagnostics, lineno, f"duplicate argument {name!r}")
                else:
                    declared.add(name)
                    names.append(name)
                pos = m.end()
                continue
            m = _APX_ATT.match(line, pos)
            if m:
                attacks.append((m.group(1), m.group(2), lineno))
                pos = m.end()
                continue
            raise _fail(diagnostics, ParseError(f"malformed fact near {line[pos:pos + 20]!r}", lineno))
    for a, b, lineno in attacks:
        for endpoint in (a, b):
            if endpoint not in declared:
                if diagnostics is not None:
                    diagnostics.append(
                        ParseDiagnostic(lineno, f"undeclared argument {endpoint!r}", "error")
                    )
                raise UnknownArgument(
                    f"attack ({a},{b}) uses undeclared argument {endpoint!r}", line=lineno
                )
    return build(names, [(a, b) for a, b, _ in attacks])


def parse_tgf(text: str, diagnostics: list[ParseDiagnostic] | None = None) -> Framework:
    """Parse trivial graph format into a framework."""
    names: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str]] = []
    lines = text.splitlines()
    in_edges = False
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise _fail(diagnostics, ParseError("second '#' separator", lineno))
            in_edges = True
            continue
        tokens = line.split()
        if not in_edges:
            node = tokens[0]
            if not _TOKEN.fullmatch(node):
                raise _fail(diagnostics, ParseError(f"invalid node id {node!r}", lineno))
            if node in declared:
                _warn(diagnostics, lineno, f"duplicate node {node!r}")
            else:
                declared.add(node)
                names.append(node)
            # remaining tokens form a display label and are ignored
        else:
            if len(tokens) != 2:
                raise _fail(diagnostics, ParseError("edge lines take exactly two ids", lineno))
            for endpoint in tokens:
                if not _TOKEN.fullmatch(endpoint):
                    raise _fail(diagnostics, ParseError(f"invalid node id {endpoint!r}", lineno))
                if endpoint not in declared:
                    if diagnostics is not None:
                        diagnostics.append(
                            ParseDiagnostic(lineno, f"undeclared node {endpoint!r}", "error")
                        )
                    raise UnknownArgument(
                        f"edge uses undeclared node {endpoint!r}", line=lineno
                    )
            attacks.append((tokens[0], tokens[1]))
    if not in_edges:
        raise _fail(diagnostics, MissingSeparator("missing '#' separator", len(lines) + 1))
    return build(names, attacks)


def write_apx(f: Framework) -> str:
    lines = [f"arg({name})." for name in f.names]
    lines += [f"att({f.names[x]},{f.names[y]})." for x, y in f.attacks]
    return "".join(line + "\n" for line in lines)


def write_tgf(f: Framework) -> str:
    lines = list(f.names)
    lines.append("#")
    lines += [f"{f.names[x]} {f.names[y]}" for x, y in f.attacks]
    return "".join(line + "\n" for line in lines)


def format_extension(members: Iterable[int], names: Sequence[str]) -> str:
    """Render one extension as ``[name1,name2,...]`` in argument-index order."""
    return "[" + ",".join(names[x] for x in sorted(members)) + "]"


def write_extensions(
    extensions: Iterable[Iterable[int]],
    names: Sequence[str],
    sink: IO[str] | None = None,
    *,
    count: int | None = None,
    some: bool = False,
) -> str:
    """Serialize extensions, one per line.

    ``count`` appends a final ``COUNT k`` summary line; ``some`` emits
    ``NO`` instead of nothing when a single extension was requested but
    none exists.
    """
    lines = [format_extension(ext, names) for ext in extensions]
    if some and not lines:
        lines = ["NO"]
    if count is not None:
        lines.append(f"COUNT {count}")
    text = "".join(line + "\n" for line in lines)
    if sink is not None:
        sink.write(text)
    return text

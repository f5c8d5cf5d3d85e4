"""Line-oriented declaration language for soft structures.

One declaration per line, UTF-8, '#' starts a comment.  Set literals use
braces; a soft set lists exactly its domain parameters.  Example::

    context C1 { universe = {x, z}  params = {e1, e2, e3, e4} }
    softset F in C1 over {e1, e2} { e1: {x}  e2: {x, z} }
    softset G in C1 over {e1}     { e1: {x} }
    topology tau in C1 = { F, G }        # null sets and whole set implicit
    cotopology kap in C1 = { F }
    ditopology delta in C1 = (tau, kap)
    map f : C1 -> C2 { points { a->1  c->2 }  params { e1->p2  e2->p2 } }

Parsing collects every error (with line and column) instead of stopping
at the first one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .core import Context, SoftDomainError, SoftSet
from .cotopology import SoftCotopology
from .ditopology import Ditopology
from .maps import SoftMap
from .topology import SoftTopology

_TOKEN = re.compile(r"->|[{}()=:,]|[A-Za-z0-9_]+|\S")

KEYWORDS = {"context", "softset", "topology", "cotopology", "ditopology", "map"}


@dataclass(frozen=True)
class ParseError:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


class SpecError(ValueError):
    """Raised when a document cannot be parsed or resolved."""

    def __init__(self, errors: list[ParseError]):
        self.errors = errors
        super().__init__("; ".join(str(e) for e in errors))


@dataclass
class SpecDocument:
    """Parsed declarations, in source order, with every name resolved."""

    contexts: dict[str, Context] = field(default_factory=dict)
    softsets: dict[str, SoftSet] = field(default_factory=dict)
    softset_contexts: dict[str, str] = field(default_factory=dict)
    topologies: dict[str, SoftTopology] = field(default_factory=dict)
    cotopologies: dict[str, SoftCotopology] = field(default_factory=dict)
    ditopologies: dict[str, Ditopology] = field(default_factory=dict)
    maps: dict[str, SoftMap] = field(default_factory=dict)
    space_members: dict[str, tuple[str, ...]] = field(default_factory=dict)
    dito_parts: dict[str, tuple[str, str]] = field(default_factory=dict)
    map_contexts: dict[str, tuple[str, str]] = field(default_factory=dict)
    order: list[tuple[str, str]] = field(default_factory=list)

    def context_name_of(self, ctx: Context) -> str:
        for name, c in self.contexts.items():
            if c == ctx:
                return name
        raise KeyError("context not declared in this document")

    def to_text(self) -> str:
        """Canonical serialization; re-parsing yields an equivalent document."""
        lines = []
        for kind, name in self.order:
            if kind == "context":
                lines.append(render_context(name, self.contexts[name]))
            elif kind == "softset":
                lines.append(
                    render_softset(
                        name, self.softset_contexts[name], self.softsets[name]
                    )
                )
            elif kind in ("topology", "cotopology"):
                space = (
                    self.topologies[name] if kind == "topology" else self.cotopologies[name]
                )
                ctx_name = self.context_name_of(space.ctx)
                lines.append(
                    render_family(kind, name, ctx_name, self.space_members[name])
                )
            elif kind == "ditopology":
                dito = self.ditopologies[name]
                ctx_name = self.context_name_of(dito.ctx)
                tau_name, kappa_name = self.dito_parts[name]
                lines.append(
                    f"ditopology {name} in {ctx_name} = ({tau_name}, {kappa_name})"
                )
            elif kind == "map":
                src, dst = self.map_contexts[name]
                lines.append(render_map(name, src, dst, self.maps[name]))
        return "\n".join(lines) + "\n"


def _set_literal(values) -> str:
    return "{" + ", ".join(sorted(values)) + "}"


def render_context(name: str, ctx: Context) -> str:
    return (
        f"context {name} {{ universe = {_set_literal(ctx.universe)}"
        f"  params = {_set_literal(ctx.params)} }}"
    )


def render_softset(name: str, ctx_name: str, s: SoftSet) -> str:
    body = "  ".join(f"{e}: {_set_literal(v)}" for e, v in s.entries)
    return (
        f"softset {name} in {ctx_name} over {_set_literal(s.domain)}"
        f" {{ {body} }}".replace("{  }", "{ }")
    )


def render_family(kind: str, name: str, ctx_name: str, member_names) -> str:
    return f"{kind} {name} in {ctx_name} = {{ {', '.join(member_names)} }}"


def render_map(name: str, src: str, dst: str, f: SoftMap) -> str:
    points = "  ".join(f"{x}->{y}" for x, y in f.phi)
    params = "  ".join(f"{e}->{p}" for e, p in f.psi)
    return (
        f"map {name} : {src} -> {dst}"
        f" {{ points {{ {points} }}  params {{ {params} }} }}"
    )


@dataclass
class _Token:
    text: str
    line: int
    column: int


class _Line:
    def __init__(self, tokens: list[_Token], line_no: int):
        self.tokens = tokens
        self.pos = 0
        self.line_no = line_no

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Optional[_Token]:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next()
        if tok is None:
            raise _Syntax(self.line_no, self._end_column(), f"expected {text!r}")
        if tok.text != text:
            raise _Syntax(tok.line, tok.column, f"expected {text!r}, found {tok.text!r}")
        return tok

    def name(self, what: str = "name") -> str:
        tok = self.next()
        if tok is None:
            raise _Syntax(self.line_no, self._end_column(), f"expected {what}")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok.text):
            raise _Syntax(tok.line, tok.column, f"expected {what}, found {tok.text!r}")
        return tok.text

    def label(self, what: str = "label") -> str:
        tok = self.next()
        if tok is None:
            raise _Syntax(self.line_no, self._end_column(), f"expected {what}")
        if not re.fullmatch(r"[A-Za-z0-9_]+", tok.text):
            raise _Syntax(tok.line, tok.column, f"expected {what}, found {tok.text!r}")
        return tok.text

    def done(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise _Syntax(tok.line, tok.column, f"unexpected {tok.text!r}")

    def _end_column(self) -> int:
        return self.tokens[-1].column + len(self.tokens[-1].text) if self.tokens else 1


class _Syntax(Exception):
    def __init__(self, line: int, column: int, message: str):
        self.error = ParseError(line, column, message)
        super().__init__(message)


def _tokenize(text: str) -> Iterator[_Line]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [
            _Token(m.group(0), line_no, m.start() + 1) for m in _TOKEN.finditer(body)
        ]
        if tokens:
            yield _Line(tokens, line_no)


def _parse_set_literal(line: _Line) -> list[str]:
    line.expect("{")
    out: list[str] = []
    first = True
    while True:
        tok = line.peek()
        if tok is None:
            raise _Syntax(line.line_no, line._end_column(), "unterminated set literal")
        if tok.text == "}":
            line.next()
            return out
        if not first:
            line.expect(",")
        out.append(line.label())
        first = False


class _Parser:
    def __init__(self) -> None:
        self.doc = SpecDocument()
        self.errors: list[ParseError] = []

    def error(self, line: int, column: int, message: str) -> None:
        self.errors.append(ParseError(line, column, message))

    def declare(self, kind: str, name: str, tok: _Token) -> bool:
        taken = (
            name in self.doc.contexts
            or name in self.doc.softsets
            or name in self.doc.topologies
            or name in self.doc.cotopologies
            or name in self.doc.ditopologies
            or name in self.doc.maps
        )
        if taken:
            self.error(tok.line, tok.column, f"duplicate declaration name {name!r}")
            return False
        self.doc.order.append((kind, name))
        return True

    def context_ref(self, name: str, line: _Line) -> Optional[Context]:
        if name not in self.doc.contexts:
            tok = line.tokens[0]
            self.error(tok.line, tok.column, f"unknown context {name!r}")
            return None
        return self.doc.contexts[name]

    def parse_context(self, line: _Line) -> None:
        tok = line.tokens[0]
        name = line.name("context name")
        line.expect("{")
        line.expect("universe")
        line.expect("=")
        universe = _parse_set_literal(line)
        line.expect("params")
        line.expect("=")
        params = _parse_set_literal(line)
        line.expect("}")
        line.done()
        try:
            ctx = Context(tuple(universe), tuple(params))
        except SoftDomainError as exc:
            self.error(tok.line, tok.column, str(exc))
            return
        if self.declare("context", name, tok):
            self.doc.contexts[name] = ctx

    def parse_softset(self, line: _Line) -> None:
        tok = line.tokens[0]
        name = line.name("soft set name")
        line.expect("in")
        ctx_name = line.name("context name")
        line.expect("over")
        domain = _parse_set_literal(line)
        line.expect("{")
        values: dict[str, list[str]] = {}
        while True:
            nxt = line.peek()
            if nxt is None:
                raise _Syntax(line.line_no, line._end_column(), "unterminated soft set")
            if nxt.text == "}":
                line.next()
                break
            param = line.name("parameter")
            line.expect(":")
            values[param] = _parse_set_literal(line)
        line.done()
        ctx = self.context_ref(ctx_name, line)
        if ctx is None:
            return
        bad = False
        for e in values:
            if e not in domain:
                self.error(tok.line, tok.column, f"value for {e!r} outside the domain")
                bad = True
        for e in domain:
            if e not in values:
                self.error(tok.line, tok.column, f"domain parameter {e!r} has no value")
                bad = True
        if bad:
            return
        try:
            soft = SoftSet(ctx, values)
        except SoftDomainError as exc:
            self.error(tok.line, tok.column, str(exc))
            return
        if self.declare("softset", name, tok):
            self.doc.softsets[name] = soft
            self.doc.softset_contexts[name] = ctx_name

    def parse_family(self, kind: str, line: _Line) -> None:
        tok = line.tokens[0]
        name = line.name(f"{kind} name")
        line.expect("in")
        ctx_name = line.name("context name")
        line.expect("=")
        line.expect("{")
        member_names: list[str] = []
        first = True
        while True:
            nxt = line.peek()
            if nxt is None:
                raise _Syntax(line.line_no, line._end_column(), "unterminated member list")
            if nxt.text == "}":
                line.next()
                break
            if not first:
                line.expect(",")
            member_names.append(line.name("member name"))
            first = False
        line.done()
        ctx = self.context_ref(ctx_name, line)
        if ctx is None:
            return
        members = []
        ok = True
        for m in member_names:
            if m not in self.doc.softsets:
                self.error(tok.line, tok.column, f"unknown soft set {m!r}")
                ok = False
                continue
            soft = self.doc.softsets[m]
            if soft.ctx != ctx:
                self.error(tok.line, tok.column, f"soft set {m!r} lives in another context")
                ok = False
                continue
            members.append(soft)
        if not ok or not self.declare(kind, name, tok):
            return
        if kind == "topology":
            self.doc.topologies[name] = SoftTopology.of(ctx, members)
        else:
            self.doc.cotopologies[name] = SoftCotopology.of(ctx, members)
        self.doc.space_members[name] = tuple(member_names)

    def parse_ditopology(self, line: _Line) -> None:
        tok = line.tokens[0]
        name = line.name("ditopology name")
        line.expect("in")
        ctx_name = line.name("context name")
        line.expect("=")
        line.expect("(")
        tau_name = line.name("topology name")
        line.expect(",")
        kappa_name = line.name("cotopology name")
        line.expect(")")
        line.done()
        ctx = self.context_ref(ctx_name, line)
        if ctx is None:
            return
        ok = True
        if tau_name not in self.doc.topologies:
            self.error(tok.line, tok.column, f"unknown topology {tau_name!r}")
            ok = False
        if kappa_name not in self.doc.cotopologies:
            self.error(tok.line, tok.column, f"unknown cotopology {kappa_name!r}")
            ok = False
        if not ok:
            return
        tau = self.doc.topologies[tau_name]
        kappa = self.doc.cotopologies[kappa_name]
        if tau.ctx != ctx or kappa.ctx != ctx:
            self.error(tok.line, tok.column, "ditopology parts live in another context")
            return
        if self.declare("ditopology", name, tok):
            self.doc.ditopologies[name] = Ditopology(ctx, tau, kappa)
            self.doc.dito_parts[name] = (tau_name, kappa_name)

    def parse_map(self, line: _Line) -> None:
        tok = line.tokens[0]
        name = line.name("map name")
        line.expect(":")
        source_name = line.name("context name")
        line.expect("->")
        target_name = line.name("context name")
        line.expect("{")
        line.expect("points")
        phi = self._parse_arrow_block(line)
        line.expect("params")
        psi = self._parse_arrow_block(line)
        line.expect("}")
        line.done()
        missing = [n for n in (source_name, target_name) if n not in self.doc.contexts]
        for n in missing:
            self.error(tok.line, tok.column, f"unknown context {n!r}")
        if missing:
            return
        source = self.doc.contexts[source_name]
        target = self.doc.contexts[target_name]
        try:
            soft_map = SoftMap.of(source, target, phi, psi)
        except (ValueError, SoftDomainError) as exc:
            self.error(tok.line, tok.column, str(exc))
            return
        if self.declare("map", name, tok):
            self.doc.maps[name] = soft_map
            self.doc.map_contexts[name] = (source_name, target_name)

    def _parse_arrow_block(self, line: _Line) -> dict[str, str]:
        line.expect("{")
        table: dict[str, str] = {}
        while True:
            nxt = line.peek()
            if nxt is None:
                raise _Syntax(line.line_no, line._end_column(), "unterminated mapping block")
            if nxt.text == "}":
                line.next()
                return table
            src = line.label()
            line.expect("->")
            table[src] = line.label()

    def run(self, text: str) -> SpecDocument:
        for line in _tokenize(text):
            head = line.peek()
            try:
                keyword = line.name("declaration keyword")
                if keyword == "context":
                    self.parse_context(line)
                elif keyword == "softset":
                    self.parse_softset(line)
                elif keyword in ("topology", "cotopology"):
                    self.parse_family(keyword, line)
                elif keyword == "ditopology":
                    self.parse_ditopology(line)
                elif keyword == "map":
                    self.parse_map(line)
                else:
                    self.error(
                        head.line, head.column, f"unknown declaration {keyword!r}"
                    )
            except _Syntax as exc:
                self.errors.append(exc.error)
        if self.errors:
            raise SpecError(self.errors)
        return self.doc


def parse(text: str) -> SpecDocument:
    """Parse a document, raising SpecError with every collected failure."""
    return _Parser().run(text)

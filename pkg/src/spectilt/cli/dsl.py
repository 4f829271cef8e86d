"""Lexer and parser for session files.

A session is a sequence of ``;``-terminated statements, each either a
declaration (ring, prime, window, module, seq, suite) or a command such as
``bass p M --max 3``.  Polynomials are kept as source slices and parsed
later, once the ring they live in is known.
"""

import re
from dataclasses import dataclass, field

from ..errors import InputError

DECL_KEYWORDS = ("ring", "prime", "window", "module", "seq", "suite")

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<flag>--[A-Za-z][A-Za-z0-9_-]*)
  | (?P<string>"[^"\n]*")
  | (?P<number>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[=;,\[\](){}/^*+\-.])
""", re.VERBOSE)


class DslError(InputError):
    """An input error located in the session text; ``code`` keeps the originating module's code."""

    def __init__(self, message, line, col, expected=None, code="cli.syntax", hypothesis=None):
        where = f"line {line}, column {col}"
        text = f"{where}: {message}"
        if expected:
            text += f" (expected {' or '.join(sorted(expected))})"
        super().__init__(text, code=code, hypothesis=hypothesis)
        self.line = line
        self.col = col
        self.expected = sorted(expected) if expected else []

    def to_dict(self):
        d = super().to_dict()
        d.update({"line": self.line, "column": self.col, "expected": self.expected})
        return d


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int
    pos: int

    @property
    def end(self):
        return self.pos + len(self.text)


def tokenize(text):
    out = []
    pos = 0
    line, col = 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise DslError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tok = m.group()
        if kind == "nl":
            line += 1
            col = 1
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, tok, line, col, pos))
            col += len(tok)
        else:
            col += len(tok)
        pos = m.end()
    out.append(Token("eof", "", line, col, pos))
    return out


@dataclass
class PolySrc:
    """A polynomial source slice with its position (for error reporting)."""

    text: str
    line: int
    col: int


@dataclass
class Stmt:
    kind: str               # declaration keyword or "command"
    name: str               # bound name, or command name
    data: dict = field(default_factory=dict)
    line: int = 0
    col: int = 0
    source: str = ""


class Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    # -- token helpers ---------------------------------------------------
    @property
    def tok(self):
        return self.toks[self.i]

    def advance(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, message, expected=None, tok=None):
        t = tok or self.tok
        raise DslError(message, t.line, t.col, expected)

    def expect(self, text=None, kind=None):
        t = self.tok
        if text is not None and t.text != text:
            self.error(f"unexpected {self._describe(t)}", {repr(text)})
        if kind is not None and t.kind != kind:
            self.error(f"unexpected {self._describe(t)}", {kind})
        return self.advance()

    def accept(self, text):
        if self.tok.text == text and self.tok.kind != "string":
            return self.advance()
        return None

    @staticmethod
    def _describe(t):
        return "end of input" if t.kind == "eof" else f"{t.text!r}"

    def ident(self, what="name"):
        t = self.tok
        if t.kind != "ident":
            self.error(f"unexpected {self._describe(t)}", {what})
        return self.advance().text

    def integer(self):
        neg = self.accept("-") is not None
        t = self.tok
        if t.kind != "number":
            self.error(f"unexpected {self._describe(t)}", {"integer"})
        self.advance()
        return -int(t.text) if neg else int(t.text)

    # -- top level -------------------------------------------------------
    def parse(self):
        stmts = []
        while self.tok.kind != "eof":
            start = self.tok
            if start.kind != "ident":
                self.error(f"unexpected {self._describe(start)}", {"declaration", "command"})
            if start.text in DECL_KEYWORDS:
                st = getattr(self, "_decl_" + start.text)()
            else:
                st = self._command()
            st.line, st.col = start.line, start.col
            end = self.expect(";")
            st.source = self.text[start.pos:end.pos].strip()
            stmts.append(st)
        return stmts

    # -- polynomials -----------------------------------------------------
    def poly(self):
        """Collect tokens up to a top-level ',' ')' ']' or ';'."""
        depth = 0
        first = self.tok
        last = None
        while True:
            t = self.tok
            if t.kind == "eof" or (depth == 0 and t.text in (",", ")", "]", ";", "}")):
                break
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                depth -= 1
            last = self.advance()
        if last is None:
            self.error(f"unexpected {self._describe(first)}", {"polynomial"})
        return PolySrc(self.text[first.pos:last.end], first.line, first.col)

    def poly_list(self, close):
        out = []
        if self.tok.text == close:
            return out
        out.append(self.poly())
        while self.accept(","):
            out.append(self.poly())
        return out

    def int_list(self):
        self.expect("[")
        out = []
        if self.tok.text != "]":
            out.append(self.integer())
            while self.accept(","):
                out.append(self.integer())
        self.expect("]")
        return out

    def name_list(self, close):
        out = []
        if self.tok.text == close:
            return out
        out.append(self.ident())
        while self.accept(","):
            out.append(self.ident())
        return out

    def _over(self, data):
        if self.accept("over"):
            data["ring"] = self.ident("ring name")

    # -- declarations ----------------------------------------------------
    def _decl_ring(self):
        self.advance()
        name = self.ident("ring name")
        self.expect("=")
        ftok = self.tok
        fname = self.ident("field (QQ or GF)")
        if fname in ("QQ", "Q"):
            field_name = "QQ"
        elif fname == "GF":
            self.expect("(")
            p = self.integer()
            self.expect(")")
            field_name = f"GF({p})"
        else:
            self.error(f"unknown field {fname!r}", {"QQ", "GF(p)"}, tok=ftok)
        self.expect("[")
        variables = self.name_list("]")
        if not variables:
            self.error("a ring needs at least one variable", {"variable"})
        self.expect("]")
        relations = []
        if self.accept("/"):
            self.expect("(")
            relations = self.poly_list(")")
            self.expect(")")
        gorenstein = self.accept("gorenstein") is not None
        return Stmt("ring", name, {"field": field_name, "variables": variables,
                                   "relations": relations, "gorenstein": gorenstein})

    def _decl_prime(self):
        self.advance()
        name = self.ident("prime name")
        self.expect("=")
        self.expect("(")
        gens = self.poly_list(")")
        self.expect(")")
        data = {"gens": gens, "mode": "prove", "height": None}
        t = self.tok
        if self.accept("certify"):
            data["mode"] = "prove"
        elif self.accept("assert"):
            data["mode"] = "assert"
        elif t.text not in (";", "height", "over"):
            self.error(f"unexpected {self._describe(t)}", {"certify", "assert", "';'"})
        if self.accept("height"):
            data["height"] = self.integer()
        self._over(data)
        return Stmt("prime", name, data)

    def _decl_window(self):
        self.advance()
        name = self.ident("window name")
        self.expect("=")
        self.expect("{")
        primes = self.name_list("}")
        self.expect("}")
        return Stmt("window", name, {"primes": primes})

    def _decl_module(self):
        self.advance()
        name = self.ident("module name")
        self.expect("=")
        t = self.tok
        kind = self.ident("module constructor")
        data = {"constructor": kind}
        if kind == "coker":
            self.expect("[")
            rows = []
            if self.tok.text != "]":
                rows.append(self._row())
                while self.accept(","):
                    rows.append(self._row())
            self.expect("]")
            data["rows"] = rows
            if self.accept("degrees"):
                data["degrees"] = self.int_list()
            self._over(data)
        elif kind == "quotient":
            self.expect("(")
            data["gens"] = self.poly_list(")")
            self.expect(")")
            if self.accept("degree"):
                data["degree"] = self.integer()
            self._over(data)
        elif kind == "free":
            data["rank"] = self.integer()
            if self.accept("degrees"):
                data["degrees"] = self.int_list()
            self._over(data)
        elif kind == "zero":
            self._over(data)
        elif kind in ("residue", "lp"):
            data["prime"] = self.ident("prime name")
        elif kind in ("transpose", "prune"):
            data["module"] = self.ident("module name")
        elif kind == "syzygy":
            data["module"] = self.ident("module name")
            data["index"] = self.integer()
        elif kind in ("ext", "tor"):
            data["index"] = self.integer()
            data["left"] = self.ident("module name")
            data["right"] = self.ident("module name")
        elif kind == "sum":
            data["modules"] = [self.ident("module name")]
            while self.accept(","):
                data["modules"].append(self.ident("module name"))
        else:
            self.error(f"unknown module constructor {kind!r}",
                       {"coker", "quotient", "free", "zero", "residue", "lp", "transpose", "prune",
                        "syzygy", "ext", "tor", "sum"}, tok=t)
        return Stmt("module", name, data)

    def _row(self):
        self.expect("[")
        row = self.poly_list("]")
        self.expect("]")
        return row

    def _decl_seq(self):
        self.advance()
        name = self.ident("sequence name")
        self.expect("=")
        t = self.tok
        if t.kind != "string":
            self.error(f"unexpected {self._describe(t)}", {"quoted sequence like \"Y1=p; Y2=\""})
        self.advance()
        data = {"text": t.text[1:-1], "window": None}
        if self.accept("window") or self.accept("in"):
            data["window"] = self.ident("window name")
        return Stmt("seq", name, data)

    def _decl_suite(self):
        self.advance()
        name = self.ident("suite name")
        self.expect("=")
        if self.accept("{"):
            mods = self.name_list("}")
            self.expect("}")
            return Stmt("suite", name, {"modules": mods})
        t = self.tok
        if self.accept("random"):
            data = {"random": self.integer()}
            self._over(data)
            return Stmt("suite", name, data)
        self.error(f"unexpected {self._describe(t)}", {"'{'", "random"})

    # -- commands --------------------------------------------------------
    def _command(self):
        name_tok = self.advance()
        name = name_tok.text
        while self.accept("-"):
            name += "-" + self.ident("command name")
        args = []
        flags = {}
        while self.tok.text != ";" and self.tok.kind != "eof":
            t = self.tok
            if t.kind == "flag":
                self.advance()
                key = t.text[2:]
                nxt = self.tok
                if nxt.kind in ("ident", "number", "string") or (nxt.text == "-" and self.toks[self.i + 1].kind == "number"):
                    flags[key] = self._value()
                else:
                    flags[key] = True
            else:
                args.append(self._value())
        return Stmt("command", name, {"args": args, "flags": flags})

    def _value(self):
        t = self.tok
        if t.kind == "string":
            self.advance()
            return t.text[1:-1]
        if t.kind == "number" or t.text == "-":
            return self.integer()
        if t.kind == "ident":
            parts = [self.advance().text]
            while self.tok.text == "," and self.toks[self.i + 1].kind in ("ident", "number"):
                self.advance()
                parts.append(self.advance().text)
            return ",".join(parts) if len(parts) > 1 else parts[0]
        self.error(f"unexpected {self._describe(t)}", {"argument", "flag"})


def parse_session_text(text):
    return Parser(text).parse()


def parse_command_line(text):
    """Parse a single command given on the command line (no trailing ';' needed)."""
    text = text.strip()
    if not text.endswith(";"):
        text += ";"
    stmts = Parser(text).parse()
    if len(stmts) != 1:
        raise InputError("expected exactly one command")
    return stmts[0]

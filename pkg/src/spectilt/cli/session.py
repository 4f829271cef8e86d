"""Session evaluation: declarations build an environment, commands build reports."""

import contextvars
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor

from .. import abtranspose, homalg, ringspec
from ..errors import InputError, SpectiltError
from ..homalg import AtLeast, FpModule
from ..polycore import PolyRing, field_from_name, parse_poly
from ..ringspec import SpecSeq, Window
from .dsl import DslError, parse_command_line, parse_session_text


class Session:
    def __init__(self, jobs=1, pd_cap=None, degree_bound=None):
        self.env = {}
        self.kinds = {}
        self.order = []
        self.spans = {}
        self.current_ring = None
        self.last_window = None
        self.jobs = max(1, int(jobs or 1))
        self.pd_cap = pd_cap
        self.degree_bound = degree_bound
        self.commands = []

    # -- environment -------------------------------------------------------
    def bind(self, st, kind, obj):
        if st.name in self.env:
            raise DslError(f"name {st.name!r} is already declared", st.line, st.col, code="cli.duplicate_name")
        self.env[st.name] = obj
        self.kinds[st.name] = kind
        self.order.append(st.name)
        self.spans[st.name] = (st.line, st.col)

    def lookup(self, name, kind, st=None):
        if name not in self.env:
            self._fail(st, f"unknown {kind} {name!r}", "cli.unknown_name")
        if self.kinds[name] != kind:
            self._fail(st, f"{name!r} is a {self.kinds[name]}, not a {kind}", "cli.kind_mismatch")
        return self.env[name]

    @staticmethod
    def _fail(st, message, code="cli.semantic"):
        if st is not None:
            raise DslError(message, st.line, st.col, code=code)
        raise InputError(message, code=code)

    def ring_for(self, st, data):
        if "ring" in data:
            return self.lookup(data["ring"], "ring", st)
        if self.current_ring is None:
            self._fail(st, "no ring declared yet")
        return self.env[self.current_ring]

    def poly(self, ring, src):
        try:
            return parse_poly(ring.A, src.text)
        except DslError:
            raise
        except InputError as e:
            raise DslError(str(e), src.line, src.col, code=e.code) from None

    # -- declarations ------------------------------------------------------
    def declare(self, st):
        handler = getattr(self, "_decl_" + st.kind)
        try:
            handler(st)
        except DslError as e:
            e.statement = st.source
            raise
        except InputError as e:
            err = DslError(str(e), st.line, st.col, code=e.code, hypothesis=e.hypothesis)
            err.statement = st.source
            raise err from None

    def _decl_ring(self, st):
        d = st.data
        F = field_from_name(d["field"])
        A = PolyRing(F, d["variables"])
        rels = [self.poly(_Amb(A), r) for r in d["relations"]]
        R = ringspec.Ring(A, rels, gorenstein=d["gorenstein"], name=st.name)
        self.bind(st, "ring", R)
        self.current_ring = st.name

    def _decl_prime(self, st):
        d = st.data
        R = self.ring_for(st, d)
        gens = [self.poly(R, g) for g in d["gens"]]
        p = ringspec.declare_prime(R, gens, mode=d["mode"], name=st.name, height=d["height"])
        self.bind(st, "prime", p)

    def _decl_window(self, st):
        primes = [self.lookup(n, "prime", st) for n in st.data["primes"]]
        W = Window(primes, name=st.name)
        self.bind(st, "window", W)
        self.last_window = st.name

    def _decl_module(self, st):
        d = st.data
        c = d["constructor"]
        if c == "coker":
            R = self.ring_for(st, d)
            rows = [[self.poly(R, p) for p in row] for row in d["rows"]]
            degrees = d.get("degrees")
            if not rows and degrees is None:
                self._fail(st, "an empty presentation needs explicit degrees")
            M = FpModule.coker(R, rows, degrees=degrees)
        elif c == "quotient":
            R = self.ring_for(st, d)
            M = FpModule.quotient(R, [self.poly(R, p) for p in d["gens"]], degree=d.get("degree", 0))
        elif c == "free":
            R = self.ring_for(st, d)
            degrees = d.get("degrees")
            if degrees is not None and len(degrees) != d["rank"]:
                self._fail(st, f"free module of rank {d['rank']} given {len(degrees)} degrees")
            M = FpModule.free(R, d["rank"], degrees)
        elif c == "zero":
            M = FpModule.zero(self.ring_for(st, d))
        elif c == "residue":
            M = homalg.residue_module(self.lookup(d["prime"], "prime", st))
        elif c == "lp":
            M = abtranspose.lp_module(self.lookup(d["prime"], "prime", st))
        elif c == "transpose":
            M = abtranspose.transpose(self.lookup(d["module"], "module", st)).module
        elif c == "prune":
            M = homalg.prune(self.lookup(d["module"], "module", st))
        elif c == "syzygy":
            M = homalg.syzygy_module(self.lookup(d["module"], "module", st), d["index"])
        elif c == "ext":
            M = homalg.ext_module(d["index"], self.lookup(d["left"], "module", st),
                                  self.lookup(d["right"], "module", st))
        elif c == "tor":
            M = homalg.tor_module(d["index"], self.lookup(d["left"], "module", st),
                                  self.lookup(d["right"], "module", st))
        elif c == "sum":
            M = homalg.direct_sum(*[self.lookup(n, "module", st) for n in d["modules"]])
        else:
            self._fail(st, f"unknown module constructor {c!r}")
        self.bind(st, "module", M)

    def _decl_seq(self, st):
        d = st.data
        W = self.window_for(d.get("window"), st)
        S = SpecSeq.parse(W, d["text"], name=st.name)
        self.bind(st, "seq", S)

    def _decl_suite(self, st):
        d = st.data
        if "modules" in d:
            mods = [(n, self.lookup(n, "module", st)) for n in d["modules"]]
        else:
            R = self.ring_for(st, d)
            mods = random_suite(R, d["random"])
        self.bind(st, "suite", mods)

    def window_for(self, name, st=None):
        if name:
            return self.lookup(name, "window", st)
        if self.last_window is None:
            self._fail(st, "no window declared yet")
        return self.env[self.last_window]

    # -- evaluation --------------------------------------------------------
    def run_text(self, text, extra_commands=None, reports=None):
        """Evaluate declarations; run the file's commands unless extra_commands is given.

        Reports are appended to ``reports`` as they complete, so a caller
        catching an error still holds everything produced before it.
        """
        stmts = parse_session_text(text)
        reports = [] if reports is None else reports
        for st in stmts:
            if st.kind == "command":
                if extra_commands is None:
                    reports.append(self.run_command(st))
            else:
                self.declare(st)
        for line in extra_commands or []:
            reports.append(self.run_command(parse_command_line(line)))
        return reports

    def run_command(self, st):
        from . import commands

        handler = commands.COMMANDS.get(st.name)
        if handler is None:
            err = DslError(f"unknown command {st.name!r}", st.line, st.col,
                           expected=set(commands.COMMANDS), code="cli.unknown_command")
            err.statement = st.source
            raise err
        t0 = time.perf_counter()
        try:
            with homalg.pd_cap(self.pd_cap):
                rep = handler(self, st, st.data["args"], st.data["flags"])
        except SpectiltError as e:
            e.statement = st.source
            raise
        rep.command = st.source
        rep.timing = time.perf_counter() - t0
        return rep

    def pmap(self, fn, items):
        items = list(items)
        if self.jobs <= 1 or len(items) <= 1:
            return [fn(x) for x in items]
        ctxs = [contextvars.copy_context() for _ in items]
        with ThreadPoolExecutor(self.jobs) as ex:
            futs = [ex.submit(c.run, fn, x) for c, x in zip(ctxs, items)]
            return [f.result() for f in futs]


class _Amb:
    """Adapter so Session.poly can parse in a bare ambient ring."""

    def __init__(self, A):
        self.A = A


def parse_session(text, **kw):
    """Parse and evaluate the declarations of a session (commands are kept, not run)."""
    s = Session(**kw)
    for st in parse_session_text(text):
        if st.kind == "command":
            s.commands.append(st)
        else:
            s.declare(st)
    return s


def seed():
    raw = os.environ.get("SPECTILT_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"SPECTILT_SEED must be an integer, got {raw!r}") from None


def random_suite(R, count, rng=None):
    """Random monomial-quotient modules R/J (and a few direct sums), reproducible via SPECTILT_SEED."""
    rng = rng or random.Random(seed())
    A = R.A
    gens = A.gens()
    out = []
    seen = set()
    tries = 0
    while len(out) < count and tries < 50 * count:
        tries += 1
        k = rng.randint(1, 3)
        mons = []
        for _ in range(k):
            e = [rng.randint(0, 2) for _ in gens]
            if sum(e) == 0:
                e[rng.randrange(len(gens))] = 1
            m = A.one
            for g, a in zip(gens, e):
                m = m * g ** a
            mons.append(m)
        M = FpModule.quotient(R, mons)
        if M.is_zero() or M.key in seen:
            continue
        seen.add(M.key)
        label = "R/(" + ", ".join(str(m) for m in mons) + ")"
        out.append((label, M))
    return out


def pd_json(p):
    return p.to_json() if isinstance(p, AtLeast) else p

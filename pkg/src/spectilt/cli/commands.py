"""Command handlers: each takes (session, stmt, args, flags) and returns a Report."""

from .. import abtranspose, classify, cmserre, homalg, ringspec
from ..homalg import INFINITE, AtLeast
from ..ringspec import SpecSeq
from .dsl import DslError
from .report import Report

COMMANDS = {}


def command(name, nargs, flags=()):
    """Register a handler; nargs is an int or (min, max)."""
    lo, hi = (nargs, nargs) if isinstance(nargs, int) else nargs

    def deco(fn):
        def wrapper(session, st, args, fl):
            if not lo <= len(args) <= hi:
                want = str(lo) if lo == hi else f"{lo}..{hi}"
                raise DslError(f"{name} takes {want} argument(s), got {len(args)}", st.line, st.col,
                               code="cli.arity")
            for k in fl:
                if k not in flags:
                    raise DslError(f"unknown flag --{k} for {name}", st.line, st.col,
                                   expected={"--" + f for f in flags} or None, code="cli.unknown_flag")
            return fn(Ctx(session, st), *args, **{k.replace("-", "_"): v for k, v in fl.items()})

        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        COMMANDS[name] = wrapper
        return fn

    return deco


class Ctx:
    """Name resolution helpers bound to one command statement."""

    def __init__(self, session, st):
        self.s = session
        self.st = st

    def fail(self, message, code="cli.semantic"):
        raise DslError(message, self.st.line, self.st.col, code=code)

    def get(self, name, kind):
        if not isinstance(name, str):
            self.fail(f"expected a {kind} name, got {name!r}")
        return self.s.lookup(name, kind, self.st)

    def module(self, name):
        return self.get(name, "module")

    def prime(self, name):
        return self.get(name, "prime")

    def window(self, name=None):
        if name is True:
            self.fail("--window needs a value")
        return self.s.window_for(name, self.st)

    def integer(self, value, what):
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail(f"{what} must be an integer, got {value!r}")
        return value

    def seq(self, value, window=None):
        if value is None or value is True:
            self.fail("--seq needs a sequence name or a quoted sequence")
        if isinstance(value, str) and "=" in value:
            return SpecSeq.parse(self.window(window), value)
        return self.get(value, "seq")

    def suite(self, value):
        """A suite name or a comma-separated list of module names -> (names, modules)."""
        if value is None or value is True:
            self.fail("a suite is required (--suite X or --suite M1,M2)")
        if isinstance(value, str) and value in self.s.env and self.s.kinds[value] == "suite":
            pairs = self.s.env[value]
        else:
            names = str(value).split(",")
            pairs = [(n, self.module(n)) for n in names]
        return [n for n, _ in pairs], [m for _, m in pairs]

    def degree_bound(self, value=None):
        if value is not None:
            return self.integer(value, "--degree-bound")
        return self.s.degree_bound


def module_json(M):
    d = M.to_dict()
    d["ngens"] = M.ngens
    d["zero"] = M.is_zero()
    return d


def pd_json(p):
    return p.to_json() if isinstance(p, AtLeast) else p


def length_json(v):
    return "infinite" if v == INFINITE else v


def _prime_caveats(*primes):
    return ["primality asserted"] if any(p.asserted for p in primes) else []


# ---------------------------------------------------------------------------
# inspection and homological algebra
# ---------------------------------------------------------------------------

@command("show", 1)
def show(c, name):
    if name not in c.s.env:
        c.fail(f"unknown name {name!r}", "cli.unknown_name")
    kind = c.s.kinds[name]
    obj = c.s.env[name]
    if kind == "ring":
        payload = obj.describe()
    elif kind == "module":
        payload = module_json(obj)
    elif kind == "suite":
        payload = {"modules": [n for n, _ in obj]}
    elif kind == "seq":
        payload = {"sequence": obj.to_list(), "window": obj.window.name}
    else:
        payload = obj.to_dict()
    return Report("", payload={"kind": kind, "name": name, kind: payload})


@command("resolve", 1, ("length", "minimal"))
def resolve(c, m, length=None, minimal=True):
    M = c.module(m)
    L = None if length is None else c.integer(length, "--length")
    C = homalg.free_resolution(M, L, minimal=bool(minimal))
    C.check_complex()
    payload = C.to_dict()
    payload["betti"] = _betti_rows(C.betti_table())
    return Report("", payload=payload, caveats=[] if C.complete else ["truncated at the length / pd cap"])


def _betti_rows(table):
    return [{"i": i, "degree": d, "count": v} for (i, d), v in sorted(table.items())]


@command("betti", 1)
def betti(c, m):
    C = homalg.free_resolution(c.module(m))
    return Report("", payload={"ranks": C.ranks(), "betti": _betti_rows(C.betti_table()),
                               "complete": C.complete})


@command("pd", 1)
def pd_cmd(c, m):
    p = homalg.pd(c.module(m))
    return Report("", payload={"pd": pd_json(p)},
                  caveats=["cap reached: lower bound only"] if isinstance(p, AtLeast) else [])


@command("syzygy", 2)
def syzygy(c, m, i):
    S = homalg.syzygy_module(c.module(m), c.integer(i, "index"))
    return Report("", payload={"module": module_json(S)})


@command("ext", 3)
def ext(c, i, m, n):
    E = homalg.ext_module(c.integer(i, "index"), c.module(m), c.module(n))
    return Report("", payload={"module": module_json(E)})


@command("tor", 3)
def tor(c, i, m, n):
    T = homalg.tor_module(c.integer(i, "index"), c.module(m), c.module(n))
    return Report("", payload={"module": module_json(T)})


@command("hom", 2)
def hom(c, m, n):
    return Report("", payload={"module": module_json(homalg.hom_module(c.module(m), c.module(n)))})


@command("tensor", 2)
def tensor(c, m, n):
    return Report("", payload={"module": module_json(homalg.tensor_module(c.module(m), c.module(n)))})


@command("bass", 2, ("max",))
def bass(c, p, m, max=None):
    P, M = c.prime(p), c.module(m)
    top = c.integer(max, "--max") if max is not None else M.ring.nvars
    t = homalg.bass_table(P, M, top)
    return Report("", payload={"mu_table": [{"prime": P.name, "mu": t.values}]}, caveats=t.caveats)


@command("bass-table", 1, ("window", "max"))
def bass_table(c, m, window=None, max=None):
    M = c.module(m)
    W = c.window(window)
    top = c.integer(max, "--max") if max is not None else M.ring.nvars
    tables = c.s.pmap(lambda P: homalg.bass_table(P, M, top), W.primes)
    rows = [{"prime": t.prime.name, "mu": t.values} for t in tables]
    return Report("", payload={"window": W.name, "mu_table": rows},
                  caveats=["window-relative"] + _prime_caveats(*W.primes))


@command("depth", 1)
def depth(c, m):
    return Report("", payload={"depth": homalg.depth(c.module(m))}, caveats=["graded-local"])


@command("dim", 1)
def dim(c, m):
    return Report("", payload={"dim": homalg.dim_module(c.module(m))})


@command("length", 1)
def length(c, m):
    return Report("", payload={"length": length_json(homalg.length(c.module(m)))})


@command("hilbert", 1, ("from", "to"))
def hilbert(c, m, to=None, **kw):
    M = c.module(m)
    lo = c.integer(kw.get("from", M.min_degree()), "--from")
    hi = c.integer(to, "--to") if to is not None else lo + 8
    return Report("", payload={"from": lo, "to": hi, "values": M.hilbert_values(lo, hi)})


@command("iso", 2, ("shift", "degree-bound"))
def iso(c, m, n, shift=False, degree_bound=None):
    r = homalg.iso_proxy(c.module(m), c.module(n), degree_bound=c.degree_bound(degree_bound),
                         allow_shift=bool(shift))
    return Report("", status="ok" if r.equal else "fail", payload=r.to_dict(),
                  caveats=["isomorphism proxy: Betti tables and Hilbert functions only"])


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

@command("ass", 1, ("window",))
def ass(c, m, window=None):
    W = c.window(window)
    A = ringspec.ass_in_window(c.module(m), W, jobs=c.s.jobs)
    return Report("", payload={"window": W.name, "ass": W.names(A)},
                  caveats=["window-relative"] + _prime_caveats(*W.primes))


@command("supp", 1, ("window",))
def supp(c, m, window=None):
    W = c.window(window)
    S = ringspec.supp_in_window(c.module(m), W)
    return Report("", payload={"window": W.name, "supp": W.names(S)}, caveats=["window-relative"])


@command("torsion", 1, ("window", "Y"))
def torsion(c, m, window=None, Y=None):
    W = c.window(window)
    if Y is None or Y is True:
        c.fail("--Y needs a comma-separated list of window primes")
    S = W.subset(str(Y).split(","))
    if not W.is_upward_closed(S):
        c.fail(f"Y = {{{', '.join(W.names(S))}}} is not closed under specialization")
    split = ringspec.torsion_part(c.module(m), W, S)
    return Report("", payload={"window": W.name, "Y": W.names(S), "torsion": module_json(split.T),
                               "torsion_free": module_json(split.F), "saturation_steps": split.steps},
                  caveats=["window-relative"])


@command("divisible", 2)
def divisible(c, m, p):
    P = c.prime(p)
    return Report("", payload={"prime": P.name, "divisible": ringspec.is_divisible(c.module(m), P)})


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@command("enumerate", 0, ("n", "window"))
def enumerate_cmd(c, n=None, window=None):
    if n is None:
        c.fail("--n is required")
    E = classify.enumerate_sequences(c.integer(n, "--n"), c.window(window))
    return Report("", payload=E.to_dict(), caveats=["window-relative"] + _prime_caveats(*E.window.primes))


@command("validate-sequence", (0, 1), ("seq", "window"))
def validate(c, name=None, seq=None, window=None):
    S = c.seq(seq if seq is not None else name, window)
    r = classify.validate_sequence(S)
    d = r.to_dict()
    caveats = d.pop("caveats")
    return Report("", status="ok" if r.valid else "fail", payload=d, caveats=caveats)


@command("membership", 1, ("seq", "window", "side", "method", "primes"))
def membership(c, m, seq=None, window=None, side="cotilting", method="all", primes="default"):
    M = c.module(m)
    S = c.seq(seq, window)
    if side not in ("cotilting", "tilting"):
        c.fail(f"unknown side {side!r} (expected cotilting or tilting)")
    if method == "all":
        if primes != "default":
            c.fail("--primes applies to a single --method")
        verdicts, agree = classify.membership_all(M, S, side)
    else:
        fn = classify.cotilting_membership if side == "cotilting" else classify.tilting_membership
        verdicts = [fn(M, S, method, primes=primes)]
        agree = True
    witnesses = []
    for v in verdicts:
        for w in v.witnesses:
            witnesses.append(dict(w, method=v.method))
    caveats = sorted({x for v in verdicts for x in v.caveats})
    payload = {
        "verdict": verdicts[0].member if agree else None,
        "side": side,
        "sequence": S.to_list(),
        "method_results": [{"method": v.method, "member": v.member} for v in verdicts],
        "methods_agree": agree,
        "witnesses": witnesses,
    }
    return Report("", status="ok" if agree else "fail", payload=payload, caveats=caveats)


@command("shift-check", 1, ("seq", "window", "j", "method"))
def shift_check(c, m, seq=None, window=None, j=None, method="bass"):
    S = c.seq(seq, window)
    jj = c.integer(j, "--j") if j is not None else S.n
    r = classify.shift_check(c.module(m), S, jj, method)
    return Report("", status="ok" if r["agree"] else "fail", payload=r)


@command("generators", 0, ("seq", "window"))
def generators(c, seq=None, window=None):
    S = c.seq(seq, window)
    gens = classify.resolving_generators(S)
    rows = [{"label": g["label"], "i": g["i"], "prime": g["prime"], "pd": pd_json(g["pd"]),
             "module": module_json(g["module"])} for g in gens]
    return Report("", payload={"sequence": S.to_list(), "generators": rows},
                  caveats=["f.p.-relative", "window-relative"])


@command("separate", 2, ("window", "method"))
def separate(c, a, b, window=None, method="bass"):
    A, B = c.seq(a, window), c.seq(b, window)
    r = classify.find_separator(A, B, method)
    if r is None:
        payload = {"separated": False, "equal": A.Y == B.Y}
        status = "ok" if A.Y == B.Y else "fail"
    else:
        payload = dict(r, module=module_json(r["module"]), separated=True)
        status = "ok"
    return Report("", status=status, payload=payload, caveats=["window-relative"])


@command("same-class", 0, ("first", "second", "suite", "degrees"))
def same_class(c, first=None, second=None, suite=None, degrees=None):
    if first is None or second is None:
        c.fail("--first and --second generator lists are required")
    g1 = [c.module(n) for n in str(first).split(",")]
    g2 = [c.module(n) for n in str(second).split(",")]
    names, mods = c.suite(suite)
    ds = None if degrees is None else range(1, c.integer(degrees, "--degrees") + 1)
    r = classify.same_class_check(g1, g2, mods, degrees=ds, names=names)
    return Report("", status="ok" if r["agree"] else "fail", payload=r, caveats=["suite-relative"])


# ---------------------------------------------------------------------------
# transposes
# ---------------------------------------------------------------------------

@command("transpose", 1)
def transpose(c, m):
    r = abtranspose.transpose(c.module(m))
    return Report("", payload={"module": module_json(r.module), "minimality": r.minimality})


@command("lp", 1)
def lp(c, p):
    P = c.prime(p)
    L = abtranspose.lp_module(P)
    return Report("", payload={"prime": P.name, "height": P.height, "module": module_json(L),
                               "pd": pd_json(homalg.pd(L))}, caveats=_prime_caveats(P))


@command("functor-check", 1, ("n", "suite", "degree-bound"))
def functor_check(c, u, n=None, suite=None, degree_bound=None):
    if n is None:
        c.fail("--n is required")
    names, mods = c.suite(suite)
    U = c.module(u)
    db = c.degree_bound(degree_bound)
    nn = c.integer(n, "--n")
    rows = c.s.pmap(lambda i: abtranspose.functor_iso_check(U, nn, [mods[i]], names=[names[i]],
                                                            degree_bound=db).rows[0],
                    range(len(mods)))
    r = abtranspose.FunctorCheck(nn, rows)
    return Report("", status="ok" if r.ok else "fail", payload=r.to_dict(),
                  caveats=["compared via Hilbert functions (isomorphism proxy)"])


# ---------------------------------------------------------------------------
# Cohen-Macaulay and intersection multiplicities
# ---------------------------------------------------------------------------

@command("cm", 1)
def cm(c, m):
    M = c.module(m)
    return Report("", payload={"cohen_macaulay": cmserre.is_cohen_macaulay(M), "depth": homalg.depth(M),
                               "dim": homalg.dim_module(M)}, caveats=["graded-local"])


@command("cm-translate", 1)
def cm_translate(c, p):
    r = cmserre.cm_translate_check(c.prime(p))
    caveats = r.pop("caveats")
    return Report("", status="ok" if r["ok"] else "fail", payload=r, caveats=caveats)


@command("chi", 2)
def chi(c, m, n):
    return Report("", payload={"chi": cmserre.chi(c.module(m), c.module(n))}, caveats=["graded-local"])


@command("serre", 2)
def serre(c, m, n):
    r = cmserre.serre_check(c.module(m), c.module(n))
    caveats = r.pop("caveats")
    return Report("", status="ok" if r["ok"] else "fail", payload=r, caveats=caveats)


@command("hochster", 2, ("window", "suite"))
def hochster(c, p, k, window=None, suite=None):
    P, K = c.prime(p), c.module(k)
    W = c.window(window) if window is not None else None
    names, mods = c.suite(suite) if suite is not None else (None, None)
    r = cmserre.hochster_probe(P, K, window=W, suite=mods, names=names)
    caveats = r.pop("caveats")
    status = "ok" if r["ok"] and r.get("class_check", {"agree": True})["agree"] else "fail"
    return Report("", status=status, payload=r, caveats=caveats + _prime_caveats(P))


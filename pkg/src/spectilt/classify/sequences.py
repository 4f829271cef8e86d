"""Validation and enumeration of descending sequences of specialization-closed sets."""

from dataclasses import dataclass, field

from ..errors import InputError
from ..homalg import FpModule, bass_invariant
from ..ringspec import SpecSeq


class _BassCache:
    """mu_j(p, R) for the primes of one window, computed on demand."""

    def __init__(self, window):
        self.window = window
        self.R = FpModule.free(window.ring)
        self._vals = {}

    def mu(self, j, i):
        key = (j, i)
        if key not in self._vals:
            self._vals[key] = bass_invariant(j, self.window.primes[i], self.R)
        return self._vals[key]


_CACHES = {}


def ring_bass(window):
    c = _CACHES.get(id(window))
    if c is None or c.window is not window:
        c = _BassCache(window)
        _CACHES[id(window)] = c
    return c


@dataclass
class SequenceReport:
    seq: SpecSeq
    conditions: dict
    witnesses: dict
    gorenstein_equivalence: bool
    caveats: list = field(default_factory=list)

    @property
    def valid(self):
        return self.conditions["i"] and self.conditions["ii"] and self.conditions["iii"]

    def to_dict(self):
        return {
            "sequence": self.seq.to_list(),
            "valid": self.valid,
            "conditions": dict(self.conditions),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "iii_iff_iii_star": self.gorenstein_equivalence,
            "caveats": list(self.caveats),
        }


def validate_sequence(seq, W=None):
    W = W or seq.window
    bass = ring_bass(W)
    wit = {"i": [], "ii": [], "iii": [], "iii*": []}
    for i, Y in enumerate(seq.Y, 1):
        for p in sorted(Y):
            for q in sorted(W.up(p) - Y):
                wit["i"].append({"Y": i, "prime": W.primes[p].name, "missing": W.primes[q].name})
    for i in range(1, seq.n):
        for p in sorted(seq.Y[i] - seq.Y[i - 1]):
            wit["ii"].append({"Y": i + 1, "prime": W.primes[p].name})
    for i, Y in enumerate(seq.Y, 1):
        for p in sorted(Y):
            v = bass.mu(i - 1, p)
            if v:
                wit["iii"].append({"prime": W.primes[p].name, "i": i, "invariant": f"mu_{i - 1}(p, R)", "value": v})
            if W.primes[p].height == i - 1:
                wit["iii*"].append({"prime": W.primes[p].name, "i": i, "height": i - 1})
    cond = {k: not v for k, v in wit.items()}
    caveats = ["window-relative"]
    if any(p.asserted for p in W.primes):
        caveats.append("primality asserted")
    return SequenceReport(seq, cond, wit, cond["iii"] == cond["iii*"], caveats)


@dataclass
class ClassEnumeration:
    n: int
    window: object
    sequences: list
    counts: dict

    def to_dict(self):
        W = self.window
        return {
            "n": self.n,
            "window": W.name,
            "count": len(self.sequences),
            "sequences": [s.to_list() for s in self.sequences],
            "counts_by_last": [{"Y_n": W.names(k), "count": v}
                               for k, v in sorted(self.counts.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))],
        }


def allowed_sets(W, n):
    """For each i, the window primes p with mu_{i-1}(p, R) = 0."""
    bass = ring_bass(W)
    return [frozenset(p for p in range(len(W)) if bass.mu(i - 1, p) == 0) for i in range(1, n + 1)]


def enumerate_sequences(n, W):
    if n < 1:
        raise InputError("n must be >= 1")
    ups = W.up_closed_sets()
    allowed = allowed_sets(W, n)
    cands = [[U for U in ups if U <= allowed[i]] for i in range(n)]
    out = []

    def rec(i, prev, acc):
        if i == n:
            out.append(SpecSeq(W, [sorted(Y) for Y in acc]))
            return
        for U in cands[i]:
            if prev is None or U <= prev:
                rec(i + 1, U, acc + [U])

    rec(0, None, [])
    out.sort(key=lambda s: s.sort_key())
    counts = {}
    for s in out:
        counts[s.Y[-1]] = counts.get(s.Y[-1], 0) + 1
    return ClassEnumeration(n, W, out, counts)

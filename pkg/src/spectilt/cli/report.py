"""Reports and their text / JSON renderings."""

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    command: str
    status: str = "ok"              # ok | fail | error
    payload: dict = field(default_factory=dict)
    caveats: list = field(default_factory=list)
    timing: float = None           # seconds; never part of the JSON form

    def to_dict(self):
        return {
            "command": self.command,
            "status": self.status,
            "payload": self.payload,
            "caveats": list(self.caveats),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["command"], d["status"], d["payload"], list(d["caveats"]))

    def __eq__(self, other):
        return isinstance(other, Report) and self.to_dict() == other.to_dict()


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def emit(reports, fmt="text", timing=False):
    """Render a list of reports; JSON output is byte-stable for equal inputs."""
    if fmt == "json":
        return (dumps({"reports": [r.to_dict() for r in reports]}) + "\n").encode("utf-8")
    return "".join(render_text(r, timing) for r in reports).encode("utf-8")


def parse_json(data):
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return [Report.from_dict(d) for d in json.loads(data)["reports"]]


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------

def render_text(r, timing=False):
    lines = [f"== {r.command} ==", f"status: {r.status}"]
    for key in r.payload:
        val = r.payload[key]
        renderer = _TABLES.get(key)
        if renderer is not None:
            lines.extend(renderer(val))
        else:
            lines.extend(_render_value(key, val, 0))
    if r.caveats:
        lines.append("caveats: " + "; ".join(r.caveats))
    if timing and r.timing is not None:
        lines.append(f"time: {r.timing:.3f}s")
    return "\n".join(lines) + "\n\n"


def _render_value(key, val, indent):
    pad = "  " * indent
    if isinstance(val, dict):
        if not val:
            return [f"{pad}{key}: {{}}"]
        out = [f"{pad}{key}:"]
        for k in val:
            out.extend(_render_value(k, val[k], indent + 1))
        return out
    if isinstance(val, list):
        if not val:
            return [f"{pad}{key}: []"]
        if all(not isinstance(v, (dict, list)) for v in val):
            return [f"{pad}{key}: [" + ", ".join(_scalar(v) for v in val) + "]"]
        out = [f"{pad}{key}:"]
        for v in val:
            if isinstance(v, dict):
                items = ", ".join(f"{k}={_scalar(v[k]) if not isinstance(v[k], (dict, list)) else json.dumps(v[k])}"
                                  for k in v)
                out.append(f"{pad}  - {items}")
            else:
                out.append(f"{pad}  - {json.dumps(v, ensure_ascii=False)}")
        return out
    return [f"{pad}{key}: {_scalar(val)}"]


def _scalar(v):
    if v is True:
        return "yes"
    if v is False:
        return "no"
    if v is None or v == "":
        return "-"
    return str(v)


def _mu_table(rows):
    if not rows:
        return ["mu: (empty)"]
    width = max(len(r["mu"]) for r in rows)
    name_w = max(len("prime"), max(len(r["prime"]) for r in rows))
    head = "prime".ljust(name_w) + " | " + " ".join(f"mu{i}".rjust(4) for i in range(width))
    out = [head, "-" * len(head)]
    for r in rows:
        out.append(r["prime"].ljust(name_w) + " | " + " ".join(str(v).rjust(4) for v in r["mu"]))
    return out


def _betti(table):
    if not table:
        return ["betti: (zero module)"]
    cols = sorted({e["i"] for e in table})
    rows = sorted({e["degree"] - e["i"] for e in table})
    val = {(e["i"], e["degree"] - e["i"]): e["count"] for e in table}
    out = ["betti (row = degree - i):", "      " + " ".join(str(i).rjust(4) for i in cols)]
    for r in rows:
        out.append(str(r).rjust(4) + ": " + " ".join(
            (str(val[(i, r)]) if (i, r) in val else ".").rjust(4) for i in cols))
    return out


def _sequences(seqs):
    if not seqs:
        return ["sequences: []"]
    out = ["sequences:"]
    for k, s in enumerate(seqs, 1):
        out.append(f"  {k:3d}. " + "; ".join(f"Y{i}={{{', '.join(Y)}}}" for i, Y in enumerate(s, 1)))
    return out


_TABLES = {"mu_table": _mu_table, "betti": _betti, "sequences": _sequences}

"""Reports: canonical JSON (schema 1) and aligned text."""

import hashlib
import json
from dataclasses import dataclass, field

from . import __version__
from .groebner import leading

SCHEMA = 1


def digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def canonical_strings(G):
    """Generators of a GB as strings, sorted by (degree, monomial order)."""
    keyed = []
    for v, s in zip(G.vecs, G.strings()):
        deg = max(sum(e) for (_, e) in v)
        keyed.append((deg, G.order.key(leading(v, G.order)), s))
    keyed.sort(key=lambda t: (t[0], t[1]))
    return [s for _, _, s in keyed]


@dataclass
class Result:
    name: str
    verdict: str
    witness: object = None
    data: dict = field(default_factory=dict)
    ms: int = 0

    def as_dict(self):
        return {"name": self.name, "verdict": self.verdict, "witness": self.witness,
                "data": self.data, "ms": self.ms}


@dataclass
class Report:
    command: str
    ring: str
    results: list = field(default_factory=list)
    input_digest: str = ""
    exit_code: int = 0

    def as_dict(self):
        return {"schema": SCHEMA, "command": self.command, "ring": self.ring,
                "results": [r.as_dict() for r in self.results],
                "version": __version__, "input_digest": self.input_digest}

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_text(self):
        lines = [f"command: {self.command}", f"ring:    {self.ring}"]
        if not self.results:
            return "\n".join(lines) + "\n"
        w_name = max(len(r.name) for r in self.results)
        w_verdict = max(len(r.verdict) for r in self.results)
        for r in self.results:
            line = f"  {r.name.ljust(w_name)}  {r.verdict.ljust(w_verdict)}"
            if r.witness is not None:
                line += f"  witness {_inline(r.witness)}"
            lines.append(line.rstrip())
            for key in sorted(r.data):
                lines.append(f"  {'':{w_name}}    {key}: {_inline(r.data[key])}")
        return "\n".join(lines) + "\n"

    @property
    def verdicts(self):
        return [r.verdict for r in self.results]


def _inline(value):
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_inline(value[k])}" for k in sorted(value)) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    return str(value)

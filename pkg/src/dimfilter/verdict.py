from dataclasses import dataclass, field


@dataclass
class Verdict:
    """Outcome of a check: the boolean, an optional witness, and a trail of
    how it was decided."""

    ok: bool
    name: str = ""
    witness: object = None
    trail: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.ok)

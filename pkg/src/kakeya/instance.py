"""Instance and point-set files.

Instance file (UTF-8 JSON)::

    {"p": 3, "m": 1, "n": 2, "T": [[1, 1], [2, 2], [1, 0]]}

``"T": "full"`` stands for every nonzero vector.  Coordinates are field
element codes.

Point-set file: one point code per line, ascending.  Blank lines and lines
starting with ``#`` are ignored on input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .extraction import ExtractionResult, extract, full_T
from .space import AffineSpace


class InstanceError(Exception):
    """Malformed instance or point-set file."""


@dataclass
class Instance:
    space: AffineSpace
    T: list  # list of vectors
    full: bool = False

    @property
    def p(self):
        return self.space.field.p

    @property
    def m(self):
        return self.space.field.m

    @property
    def n(self):
        return self.space.n

    def extraction(self) -> ExtractionResult:
        return extract(self.space, self.T)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "n": self.n,
                "T": "full" if self.full else [list(v) for v in self.T]}


def make_instance(p: int, m: int, n: int, T="full") -> Instance:
    space = AffineSpace.of(p, m, n)
    if T == "full":
        return Instance(space, full_T(space), full=True)
    return Instance(space, [tuple(v) for v in T])


def parse_instance(data) -> Instance:
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    for key in ("p", "n"):
        if key not in data:
            raise InstanceError(f"instance is missing '{key}'")
    p, m, n = data["p"], data.get("m", 1), data["n"]
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (p, m, n)):
        raise InstanceError("p, m and n must be integers")
    T = data.get("T", "full")
    if T != "full":
        if not isinstance(T, list) or not all(
            isinstance(v, list) and all(isinstance(c, int) and not isinstance(c, bool) for c in v)
            for v in T
        ):
            raise InstanceError("T must be \"full\" or a list of integer lists")
    # field/space errors past this point are domain errors, not parse errors
    return make_instance(p, m, n, T)


def load_instance(path) -> Instance:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as e:
        raise InstanceError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from None
    except OSError as e:
        raise InstanceError(f"{path}: {e.strerror}") from None
    return parse_instance(data)


def read_points(path) -> list[int]:
    out = []
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                s = line.strip()
                if not s or s.startswith("#"):
                    continue
                try:
                    out.append(int(s))
                except ValueError:
                    raise InstanceError(f"{path}:{lineno}: not an integer: {s!r}") from None
    except OSError as e:
        raise InstanceError(f"{path}: {e.strerror}") from None
    return out


def format_points(codes) -> str:
    return "".join(f"{c}\n" for c in sorted(codes))


def write_points(path, codes):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_points(codes))

"""Plain-text file formats for algebras and matrix sets.

Algebra files::

    skewlat 1
    n 4
    labels a b c d        (optional)
    meet
    <n rows of n indices>
    join
    <n rows of n indices>

Matrix files::

    matrices 1
    char 0
    dim 4
    matrix a
    <dim rows of dim integers>
    matrix b
    ...

Lines starting with ``#`` and blank lines are ignored.  Line numbers in
errors refer to the original text.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CayleyAlgebra
from .errors import IndexOutOfRange, ParseError
from .matrices import ExactMatrix, ScalarSpec


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((no, line.split()))
    return out


class _Cursor:
    def __init__(self, text: str):
        self.lines = _lines(text)
        self.pos = 0
        self.last = self.lines[-1][0] if self.lines else 1

    def next(self, what: str) -> tuple[int, list[str]]:
        if self.pos >= len(self.lines):
            raise ParseError(self.last, f"unexpected end of input, expected {what}")
        item = self.lines[self.pos]
        self.pos += 1
        return item

    def peek(self) -> list[str] | None:
        return self.lines[self.pos][1] if self.pos < len(self.lines) else None

    def keyword(self, word: str, nargs: int) -> tuple[int, list[str]]:
        no, toks = self.next(f"'{word}'")
        if toks[0] != word or len(toks) != nargs + 1:
            raise ParseError(no, f"expected '{word}' with {nargs} argument(s), got {' '.join(toks)!r}")
        return no, toks[1:]

    def integer(self, no: int, tok: str) -> int:
        try:
            return int(tok)
        except ValueError:
            raise ParseError(no, f"{tok!r} is not an integer") from None

    def rows(self, count: int, width: int, what: str) -> list[tuple[int, list[int]]]:
        out = []
        for _ in range(count):
            no, toks = self.next(f"a row of {what}")
            if len(toks) != width:
                raise ParseError(no, f"expected {width} entries, got {len(toks)}")
            out.append((no, [self.integer(no, t) for t in toks]))
        return out

    def finish(self):
        if self.pos < len(self.lines):
            no, toks = self.lines[self.pos]
            raise ParseError(no, f"unexpected content {' '.join(toks)!r}")


def parse_algebra(text: str) -> CayleyAlgebra:
    cur = _Cursor(text)
    if not cur.lines:
        raise ParseError(1, "empty input")
    no, version = cur.keyword("skewlat", 1)
    if version != ["1"]:
        raise ParseError(no, f"unsupported version {version[0]!r}")
    no, (size,) = cur.keyword("n", 1)
    n = cur.integer(no, size)
    if n < 1:
        raise ParseError(no, "n must be positive")
    labels = None
    if cur.peek() and cur.peek()[0] == "labels":
        no, labels = cur.next("labels")
        labels = labels[1:]
        if len(labels) != n:
            raise ParseError(no, f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise ParseError(no, "labels must be distinct")
    tables = []
    for name in ("meet", "join"):
        cur.keyword(name, 0)
        rows = cur.rows(n, n, name)
        for no, row in rows:
            for v in row:
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"entry {v} is outside [0, {n})", no)
        tables.append([row for _, row in rows])
    cur.finish()
    return CayleyAlgebra(tables[0], tables[1], labels)


def serialize_algebra(alg: CayleyAlgebra) -> str:
    out = ["skewlat 1", f"n {alg.size}"]
    if alg.labels:
        if any(not s or any(ch.isspace() for ch in s) for s in alg.labels):
            raise ValueError("labels must be nonempty and free of whitespace")
        out.append("labels " + " ".join(alg.labels))
    for name, table in (("meet", alg.meet), ("join", alg.join)):
        out.append(name)
        out.extend(" ".join(map(str, row)) for row in table)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class MatrixFile:
    characteristic: int
    dim: int
    matrices: dict[str, ExactMatrix]


def parse_matrices(text: str) -> MatrixFile:
    cur = _Cursor(text)
    if not cur.lines:
        raise ParseError(1, "empty input")
    no, version = cur.keyword("matrices", 1)
    if version != ["1"]:
        raise ParseError(no, f"unsupported version {version[0]!r}")
    no, (ch,) = cur.keyword("char", 1)
    try:
        scalar = ScalarSpec(cur.integer(no, ch))
    except ValueError as exc:
        raise ParseError(no, str(exc)) from None
    no, (dim,) = cur.keyword("dim", 1)
    n = cur.integer(no, dim)
    if n < 1:
        raise ParseError(no, "dim must be positive")
    mats: dict[str, ExactMatrix] = {}
    while cur.peek() is not None:
        no, (name,) = cur.keyword("matrix", 1)
        if name in mats:
            raise ParseError(no, f"duplicate matrix name {name!r}")
        rows = cur.rows(n, n, f"matrix {name}")
        mats[name] = ExactMatrix(tuple(tuple(r) for _, r in rows), scalar)
    if not mats:
        raise ParseError(cur.last, "no matrices given")
    return MatrixFile(scalar.characteristic, n, mats)


def serialize_matrices(mf: MatrixFile) -> str:
    out = ["matrices 1", f"char {mf.characteristic}", f"dim {mf.dim}"]
    for name, m in mf.matrices.items():
        out.append(f"matrix {name}")
        out.extend(" ".join(map(str, row)) for row in m.entries)
    return "\n".join(out) + "\n"

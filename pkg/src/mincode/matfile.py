"""Plain-text generator matrix files.

Line 1 holds ``q n k``; then ``k`` lines of ``n`` integers in ``[0, q)``.
Lines starting with ``#`` and blank lines are ignored anywhere.  Elements of
extension fields use the integer encoding of :mod:`mincode.galois`.
"""

from __future__ import annotations

import os
from typing import Iterable

import numpy as np

from mincode.codes import LinearCode, code_from_generator
from mincode.errors import MatrixFileError, MincodeError
from mincode.galois import field_new


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _ints(line: str, number: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise MatrixFileError(f"non-integer entry in {line!r}", number) from None


def parse_matrix(text: str, name: str | None = None) -> LinearCode:
    lines = list(_content_lines(text))
    if not lines:
        raise MatrixFileError("missing header 'q n k'", 1)
    number, header = lines[0]
    values = _ints(header, number)
    if len(values) != 3:
        raise MatrixFileError(f"header must be 'q n k', got {header!r}", number)
    q, n, k = values
    if n < 1 or k < 1:
        raise MatrixFileError(f"n and k must be positive, got n={n}, k={k}", number)
    try:
        field = field_new(q)
    except MincodeError as exc:
        raise MatrixFileError(str(exc), number) from None
    body = lines[1:]
    if len(body) != k:
        where = body[k][0] if len(body) > k else (body[-1][0] if body else number) + 1
        raise MatrixFileError(f"expected {k} matrix rows, found {len(body)}", where)
    G = np.zeros((k, n), dtype=np.uint8)
    for i, (number, line) in enumerate(body):
        row = _ints(line, number)
        if len(row) != n:
            raise MatrixFileError(f"expected {n} entries, found {len(row)}", number)
        bad = [v for v in row if not 0 <= v < q]
        if bad:
            raise MatrixFileError(f"entry {bad[0]} outside [0, {q})", number)
        G[i] = row
    return code_from_generator(field, G, name=name)


def read_matrix(path: str | os.PathLike) -> LinearCode:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_matrix(text, name=os.path.basename(os.fspath(path)))


def format_matrix(C: LinearCode, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{C.q} {C.n} {C.k}")
    out.extend(" ".join(str(int(v)) for v in row) for row in C.G)
    return "\n".join(out) + "\n"


def write_matrix(C: LinearCode, path: str | os.PathLike, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(C, comments))

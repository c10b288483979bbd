"""Plain-text DQM matrix files.

::

    DQM <rows> <cols>
    # comment lines start with '#'
    st.w st.x st.y st.z in.w in.x in.y in.z     (one entry per line, row-major)

Reals are written with ``repr`` (shortest round-trip form), so reading a
written file gives back the identical bits.
"""

from __future__ import annotations

import io as _io
from pathlib import Path

import numpy as np

from .errors import ParseError
from .matrix import DQMatrix


def format_dqm(a: DQMatrix, comment: str | None = None) -> str:
    m, n = a.shape
    out = [f"DQM {m} {n}"]
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    for i in range(m):
        for j in range(n):
            vals = list(a.st[i, j]) + list(a.in_[i, j])
            out.append(" ".join(repr(float(v)) for v in vals))
    return "\n".join(out) + "\n"


def parse_dqm(text: str) -> DQMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty DQM file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "DQM":
        raise ParseError(f"bad header {lines[0]!r}; expected 'DQM <rows> <cols>'")
    try:
        m, n = int(head[1]), int(head[2])
    except ValueError as exc:
        raise ParseError(f"bad dimensions in header {lines[0]!r}") from exc
    if m < 1 or n < 1:
        raise ParseError(f"dimensions must be positive, got {m} x {n}")
    body = lines[1:]
    if len(body) != m * n:
        raise ParseError(f"expected {m * n} entry lines, found {len(body)}")
    data = np.empty((m * n, 8))
    for k, ln in enumerate(body):
        fields = ln.split()
        if len(fields) != 8:
            raise ParseError(f"entry {k}: expected 8 reals, found {len(fields)}")
        try:
            data[k] = [float(f) for f in fields]
        except ValueError as exc:
            raise ParseError(f"entry {k}: {exc}") from exc
    if not np.all(np.isfinite(data)):
        raise ParseError("non-finite value in DQM file")
    data = data.reshape(m, n, 8)
    return DQMatrix(data[..., :4], data[..., 4:])


def write_dqm(a: DQMatrix, path, comment: str | None = None) -> None:
    text = format_dqm(a, comment)
    if isinstance(path, _io.TextIOBase):
        path.write(text)
    else:
        Path(path).write_text(text)


def read_dqm(path) -> DQMatrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_dqm(text)

"""Text formats for instances and solutions.

Instance format (UTF-8, ``#`` starts a comment, tokens whitespace-separated)::

    ecse v1
    mode gcse            # or qcse
    n 6
    m 6
    tau 2
    k 2
    x 4
    y 1
    levels
    1 5 1 5 3 4          # one row per level, n entries, 0 = nominates nothing
    4 3 2 6 2 3
    end

The key-value lines may appear in any order.  Optional lines ``kvec``,
``xvec`` (tau integers each) and ``yvec`` (n integers) before ``levels``
switch the file to pre-elected semantics; ``k``/``x``/``y`` then act as
defaults for absent vectors.  For ``n = 0`` the (empty) level rows are
omitted.

Solution format::

    ecse-sol v1
    2
    1 5                  # strictly increasing ids, or `-` for an empty committee
    2 3
"""

from __future__ import annotations

from .model import (
    EGALITARIAN,
    EQUITABLE,
    CommitteeSequence,
    Instance,
    PeInstance,
)

_MODE_TOKENS = {"gcse": EGALITARIAN, "qcse": EQUITABLE}
_TOKEN_OF_MODE = {v: k for k, v in _MODE_TOKENS.items()}

_SCALAR_KEYS = ("n", "m", "tau", "k", "x", "y")
_VECTOR_KEYS = ("kvec", "xvec", "yvec")


class ParseError(ValueError):
    """Malformed document; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    """Yield (line_number, tokens) for non-blank lines, comments stripped."""
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = body.split()
        if tokens:
            yield i, tokens


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"expected an integer, got {token!r}") from None


def parse_instance(text: str) -> Instance | PeInstance:
    """Parse an instance document; returns a PeInstance iff any vector line
    is present."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty document")
    pos = 0

    line, tokens = lines[pos]
    if tokens != ["ecse", "v1"]:
        raise ParseError(line, "expected header `ecse v1`")
    pos += 1

    mode: str | None = None
    scalars: dict[str, int] = {}
    vectors: dict[str, tuple[int, ...]] = {}
    while True:
        if pos >= len(lines):
            raise ParseError(lines[-1][0], "missing `levels` section")
        line, tokens = lines[pos]
        pos += 1
        key = tokens[0]
        if key == "levels":
            if len(tokens) != 1:
                raise ParseError(line, "`levels` takes no arguments")
            break
        if key == "mode":
            if len(tokens) != 2 or tokens[1] not in _MODE_TOKENS:
                raise ParseError(line, "mode must be `gcse` or `qcse`")
            if mode is not None:
                raise ParseError(line, "duplicate `mode`")
            mode = _MODE_TOKENS[tokens[1]]
        elif key in _SCALAR_KEYS:
            if len(tokens) != 2:
                raise ParseError(line, f"`{key}` takes one integer")
            if key in scalars:
                raise ParseError(line, f"duplicate `{key}`")
            scalars[key] = _int(tokens[1], line)
        elif key in _VECTOR_KEYS:
            if key in vectors:
                raise ParseError(line, f"duplicate `{key}`")
            vectors[key] = tuple(_int(tok, line) for tok in tokens[1:])
        else:
            raise ParseError(line, f"unknown key {key!r}")

    if mode is None:
        raise ParseError(line, "missing `mode`")
    for key in _SCALAR_KEYS:
        if key not in scalars:
            raise ParseError(line, f"missing `{key}`")
    n, m, tau = scalars["n"], scalars["m"], scalars["tau"]
    if tau < 1:
        raise ParseError(line, "tau must be at least 1")

    rows: list[tuple[int, ...]] = []
    expected_rows = tau if n > 0 else 0
    while len(rows) < expected_rows:
        if pos >= len(lines):
            raise ParseError(lines[-1][0], f"expected {expected_rows} level rows, got {len(rows)}")
        line, tokens = lines[pos]
        pos += 1
        if tokens == ["end"]:
            raise ParseError(line, f"expected {expected_rows} level rows, got {len(rows)}")
        row = tuple(_int(tok, line) for tok in tokens)
        if len(row) != n:
            raise ParseError(line, f"level row has {len(row)} entries, expected n={n}")
        for c in row:
            if c < 0 or c > m:
                raise ParseError(line, f"nomination {c} out of range 0..{m}")
        rows.append(row)
    if n == 0:
        rows = [()] * tau

    if pos >= len(lines):
        raise ParseError(lines[-1][0], "missing `end`")
    line, tokens = lines[pos]
    pos += 1
    if tokens != ["end"]:
        raise ParseError(line, "expected `end`")
    if pos < len(lines):
        raise ParseError(lines[pos][0], "trailing content after `end`")

    profile = tuple(rows)
    try:
        if vectors:
            kvec = vectors.get("kvec", (scalars["k"],) * tau)
            xvec = vectors.get("xvec", (scalars["x"],) * tau)
            yvec = vectors.get("yvec", (scalars["y"],) * n)
            return PeInstance(mode, n, m, tau, kvec, xvec, yvec, profile)
        return Instance(mode, n, m, tau, scalars["k"], scalars["x"], scalars["y"], profile)
    except ValueError as exc:
        raise ParseError(line, str(exc)) from None


def serialize_instance(inst: Instance | PeInstance) -> str:
    """Canonical byte-deterministic document; a fixed point of parse/serialize.

    PeInstance values serialize with ``k 0 / x 0 / y 0`` placeholders followed
    by all three vectors, so the scalar defaults are never consulted on the
    way back in.
    """
    out = ["ecse v1", f"mode {_TOKEN_OF_MODE[inst.mode]}"]
    out.append(f"n {inst.n}")
    out.append(f"m {inst.m}")
    out.append(f"tau {inst.tau}")
    if isinstance(inst, PeInstance):
        out.extend(["k 0", "x 0", "y 0"])
        out.append("kvec " + " ".join(str(v) for v in inst.kvec))
        out.append("xvec " + " ".join(str(v) for v in inst.xvec))
        out.append("yvec " + " ".join(str(v) for v in inst.yvec))
    else:
        out.append(f"k {inst.k}")
        out.append(f"x {inst.x}")
        out.append(f"y {inst.y}")
    out.append("levels")
    if inst.n > 0:
        for row in inst.profile:
            out.append(" ".join(str(c) for c in row))
    out.append("end")
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> CommitteeSequence:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty document")
    line, tokens = lines[0]
    if tokens != ["ecse-sol", "v1"]:
        raise ParseError(line, "expected header `ecse-sol v1`")
    if len(lines) < 2:
        raise ParseError(line, "missing committee count")
    line, tokens = lines[1]
    if len(tokens) != 1:
        raise ParseError(line, "expected the number of committees")
    tau = _int(tokens[0], line)
    if tau < 1:
        raise ParseError(line, "need at least one committee")
    if len(lines) != 2 + tau:
        raise ParseError(lines[-1][0], f"expected {tau} committee lines, got {len(lines) - 2}")
    committees = []
    for line, tokens in lines[2:]:
        if tokens == ["-"]:
            committees.append(())
            continue
        ids = [_int(tok, line) for tok in tokens]
        if any(c < 1 for c in ids):
            raise ParseError(line, "candidate ids must be positive")
        if ids != sorted(set(ids)):
            raise ParseError(line, "candidate ids must be strictly increasing")
        committees.append(tuple(ids))
    return CommitteeSequence(tuple(committees))


def serialize_solution(seq: CommitteeSequence) -> str:
    out = ["ecse-sol v1", str(len(seq))]
    for committee in seq:
        out.append(" ".join(str(c) for c in committee) if committee else "-")
    return "\n".join(out) + "\n"

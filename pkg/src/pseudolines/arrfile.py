"""Reading and writing the ``.arr`` text format.

::

    # optional comment lines
    affine <n>
    <space separated 1-based crossing positions>

or ``projective <n> infinity=<label>`` as header, in which case the word is
the affine part on ``n - 1`` wires.  A non-default assignment of labels to
wires is written as an extra ``labels=a,b,...`` token.
"""
from __future__ import annotations

from pathlib import Path

from .arrangement import AffineArrangement, ProjectiveArrangement, validate
from .errors import ArrangementError, MalformedHeader


class MalformedBody(ArrangementError):
    pass


def parse_arr(data: bytes | str):
    """Parse ``.arr`` content into an affine or projective arrangement."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise MalformedHeader(f"not UTF-8: {e}") from None
    if "\r" in data:
        raise MalformedHeader("CR characters are not allowed (LF line endings only)")
    lines = data.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    numbered = [(i + 1, l) for i, l in enumerate(lines)]
    for no, l in numbered:
        if l != l.rstrip():
            raise MalformedHeader(f"line {no}, column {len(l.rstrip()) + 1}: trailing whitespace")
    body = [(no, l) for no, l in numbered if not l.startswith("#")]
    if len(body) != 2:
        raise MalformedHeader(f"expected a header line and a word line, got {len(body)} lines")
    (hno, header), (wno, wline) = body
    tokens = header.split(" ")
    if not tokens or tokens[0] not in ("affine", "projective"):
        raise MalformedHeader(f"line {hno}, column 1: expected 'affine' or 'projective'")
    kind = tokens[0]
    if len(tokens) < 2 or not tokens[1].isdigit():
        raise MalformedHeader(f"line {hno}, column {len(tokens[0]) + 2}: expected wire count")
    n = int(tokens[1])
    opts = {}
    col = len(tokens[0]) + len(tokens[1]) + 3
    for tok in tokens[2:]:
        key, eq, val = tok.partition("=")
        if not eq or key not in ("infinity", "labels") or key in opts or kind == "affine":
            raise MalformedHeader(f"line {hno}, column {col}: unexpected token {tok!r}")
        opts[key] = val
        col += len(tok) + 1
    if kind == "projective" and "infinity" not in opts:
        raise MalformedHeader(f"line {hno}: projective header needs infinity=<label>")
    if n < 3:
        raise MalformedHeader(f"line {hno}, column {len(tokens[0]) + 2}: need n >= 3")
    words = wline.split(" ") if wline else []
    for i, tok in enumerate(words):
        if not tok.isdigit():
            col = sum(len(t) + 1 for t in words[:i]) + 1
            raise MalformedBody(f"line {wno}, column {col}: {tok!r} is not a position")
    word = [int(t) for t in words]
    m = n if kind == "affine" else n - 1
    try:
        cw = validate(m, word)
    except ArrangementError as e:
        e.line = wno
        raise
    A = AffineArrangement(cw)
    if kind == "affine":
        return A
    try:
        inf = int(opts["infinity"])
        labels = tuple(int(x) for x in opts["labels"].split(",")) if "labels" in opts else None
    except ValueError:
        raise MalformedHeader(f"line {hno}: labels must be integers") from None
    try:
        return ProjectiveArrangement(A, inf, labels)
    except ArrangementError as e:
        raise MalformedHeader(f"line {hno}: {e}") from None


def emit_arr(arr, comments: dict | None = None) -> str:
    """Canonical text; ``comments`` become ``# key=value`` lines.

    The word written is the lexicographically smallest of its commutation
    class, so equal arrangements give equal text.
    """
    out = []
    for k, v in (comments or {}).items():
        out.append(f"# {k}={v}")
    if isinstance(arr, ProjectiveArrangement):
        head = f"projective {arr.n} infinity={arr.infinity_label}"
        default = tuple(l for l in range(arr.n) if l != arr.infinity_label)
        if arr.wire_labels != default:
            head += " labels=" + ",".join(map(str, arr.wire_labels))
        out.append(head)
        word = arr.affine_part.normal
    else:
        out.append(f"affine {arr.n}")
        word = arr.normal
    out.append(" ".join(map(str, word)))
    return "\n".join(out) + "\n"


def read_arr(path) -> object:
    return parse_arr(Path(path).read_bytes())


def read_comments(path) -> dict:
    out = {}
    for l in Path(path).read_text().splitlines():
        if l.startswith("# ") and "=" in l:
            k, _, v = l[2:].partition("=")
            out[k] = v
    return out


def write_arr(path, arr, comments: dict | None = None):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_arr(arr, comments), encoding="utf-8", newline="\n")

"""graph6 encoding: size header, then the upper triangle column by column,
six bits per byte offset by 63."""

from __future__ import annotations

from .graph import Graph

MAX_N = 68719476735


class Graph6Error(ValueError):
    pass


class Graph6HeaderError(Graph6Error):
    pass


class Graph6LengthError(Graph6Error):
    pass


class Graph6CharError(Graph6Error):
    pass


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [(n >> s & 63) + 63 for s in (12, 6, 0)]
    if n <= MAX_N:
        return [126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise Graph6Error(f"n={n} too large for graph6")


def to_graph6(g: Graph) -> str:
    out = _encode_n(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6HeaderError("empty graph6 string")
    if data[0] != 126:
        if not 63 <= data[0] <= 125:
            raise Graph6HeaderError(f"bad header byte {data[0]}")
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    head = data[start:start + width]
    if len(head) < width:
        raise Graph6HeaderError("truncated size header")
    n = 0
    for b in head:
        if not 63 <= b <= 126:
            raise Graph6HeaderError(f"bad header byte {b}")
        n = n << 6 | (b - 63)
    return n, start + width


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        try:
            data = text.strip("\r\n").encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6CharError(f"non-ASCII character in {text!r}") from exc
    else:
        data = text.strip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    n, pos = _decode_n(data)
    body = data[pos:]
    need = (n * (n - 1) // 2 + 5) // 6
    for b in body:
        if not 63 <= b <= 126:
            raise Graph6CharError(f"byte {b} outside 63..126")
    if len(body) != need:
        raise Graph6LengthError(f"expected {need} body bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph.from_rows(rows)


def read_graph6_lines(lines) -> list[Graph]:
    return [parse_graph6(s) for s in (ln.strip() for ln in lines) if s]

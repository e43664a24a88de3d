"""graph6 text encoding (McKay's format: size header, then the upper
triangle packed column by column, 6 bits per printable byte)."""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    n = g.order
    out = [_encode_size(n)]
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"illegal graph6 character {ch!r}")
        vals.append(c)
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("unsupported or truncated size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds cap {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for order {n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(n, rows)

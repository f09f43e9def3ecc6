"""graph6 reader/writer (short form only, n <= 62).

Header byte ``63 + n``, then the upper triangle of the adjacency matrix in
column-major order (``(0,1), (0,2), (1,2), (0,3), ...``) packed six bits per
byte, each byte offset by 63 and the final group padded with zeros.
"""

from __future__ import annotations

from .errors import ContractError, ParseError
from .graph import Graph

MAX_N = 62


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range", offset=i)
    n = ord(s[0]) - 63
    if n > MAX_N:
        raise ParseError("long-form header (n > 62) is not supported", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise ParseError(f"truncated bit vector: need {nbytes} bytes, got {len(body)}", offset=len(s))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after bit vector", offset=1 + nbytes)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    pad = nbytes * 6 - nbits
    if pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", offset=nbytes)
    return Graph(n, tuple(edges))


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise ContractError(f"graph6 short form supports n <= {MAX_N}, got {g.n}")
    bits = []
    for v in range(1, g.n):
        mv = g.masks[v]
        bits.extend(mv >> u & 1 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def read_graph6_lines(lines):
    """Yield ``(line_number, text, graph_or_error)`` for each non-blank line."""
    for no, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield no, line, parse_graph6(line)
        except ParseError as exc:
            yield no, line, exc

"""graph6 codec, short form only (n <= 62)."""

from __future__ import annotations

from typing import Iterator, TextIO

from .errors import MalformedGraph6, UnsupportedSize
from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 62


def _strip(text: str) -> str:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    return s


def parse_graph6(text: str, max_n: int = MAX_N) -> Graph:
    s = _strip(text)
    if not s:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(ch) for ch in s]
    bad = [c for c in codes if not 63 <= c <= 126]
    if bad:
        raise MalformedGraph6(f"byte {bad[0]} outside 63..126")
    n = codes[0] - 63
    if n > MAX_N:
        # 126 introduces the long size forms
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    if n > max_n:
        raise UnsupportedSize(f"n={n} exceeds cap {max_n}")
    if n == 0:
        raise UnsupportedSize("graphs need at least one vertex")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(codes) != 1 + nbytes:
        raise MalformedGraph6(f"expected {1 + nbytes} bytes for n={n}, got {len(codes)}")
    bits = []
    for c in codes[1:]:
        x = c - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise UnsupportedSize(f"short-form graph6 handles n <= {MAX_N}, got {g.n}")
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, g.n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def read_graph6_lines(stream: TextIO) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for each non-blank line (1-based)."""
    for lineno, line in enumerate(stream, start=1):
        s = _strip(line)
        if s:
            yield lineno, s

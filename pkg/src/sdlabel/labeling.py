"""Bit-exact adjacency labels for clean signed tree models.

Label layout, MSB first:

    [16b n][16b id_bits][16b width W]            -- public preamble
    [8b  h]                                       -- path length
    [h x id_bits]                                 -- path node ids, root first
    per path node:
        [ceil(log2(W+1)) bits]                    -- owned-pair count
        count x ([id_bits other endpoint][1b color, blue=1])

Each signed pair is stored once, owned by the endpoint peeled earlier in
the degeneracy order of the pair graph, so per-node counts never exceed
the scheme width.  Two labels decode adjacency alone: the stored entries
whose endpoints fall on opposite path suffixes below the meet of the two
paths form a chain, and the deepest one's color decides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balance import orient_low_outdegree, shallowise, width_bound
from .graph import Graph
from .model import BLUE, SignedTreeModel, is_clean, make_clean, stm_from_witness
from .twins import SddWitness

__all__ = [
    "AdjacencyLabel",
    "LabelScheme",
    "LabelStats",
    "PREAMBLE_BITS",
    "DEPTH_BITS",
    "build_scheme",
    "encode",
    "decode",
    "decode_matrix",
    "label_graph",
    "label_stats",
    "layout_bound",
    "save_labels",
    "load_labels",
]

PREAMBLE_BITS = 48
DEPTH_BITS = 8


@dataclass(frozen=True)
class AdjacencyLabel:
    """A vertex label: raw bits (MSB first within bytes) plus bit length."""

    data: bytes
    nbits: int

    def hex(self) -> str:
        return self.data.hex()


class _BitWriter:
    __slots__ = ("acc", "nbits")

    def __init__(self):
        self.acc = 0
        self.nbits = 0

    def write(self, value: int, bits: int) -> None:
        if bits < 0 or value < 0 or value >> bits:
            raise ValueError(f"value {value} does not fit in {bits} bits")
        self.acc = (self.acc << bits) | value
        self.nbits += bits

    def label(self) -> AdjacencyLabel:
        pad = (-self.nbits) % 8
        data = (self.acc << pad).to_bytes((self.nbits + pad) // 8, "big")
        return AdjacencyLabel(data, self.nbits)


class _BitReader:
    __slots__ = ("value", "nbits", "pos")

    def __init__(self, label: AdjacencyLabel):
        total = len(label.data) * 8
        if label.nbits > total:
            raise ValueError("label shorter than its declared bit length")
        self.value = int.from_bytes(label.data, "big") >> (total - label.nbits)
        self.nbits = label.nbits
        self.pos = 0

    def read(self, bits: int) -> int:
        if self.pos + bits > self.nbits:
            raise ValueError("label exhausted: read past the end")
        self.pos += bits
        return (self.value >> (self.nbits - self.pos)) & ((1 << bits) - 1)


@dataclass(frozen=True)
class LabelScheme:
    """Everything fixed per encoding: sizes, pair ownership, root paths."""

    n: int
    id_bits: int
    width: int
    depth_bits: int
    orientation: dict
    node_paths: dict

    @property
    def count_bits(self) -> int:
        return self.width.bit_length()  # ceil(log2(W+1))


def build_scheme(m: SignedTreeModel) -> LabelScheme:
    if not is_clean(m):
        raise ValueError("labels require a clean model")
    ori = orient_low_outdegree(range(m.n_nodes), m.green | m.blue)
    id_bits = max(1, (m.n_nodes - 1).bit_length())
    paths = {leaf: m.root_path(leaf) for leaf in m.leaf_order()}
    h_max = max(len(p) for p in paths.values())
    if h_max > (1 << DEPTH_BITS) - 1:
        raise ValueError(f"tree depth {h_max} does not fit the 8-bit path length")
    for limit, value, what in (
        (1 << 16, m.n_leaves, "vertex count"),
        (1 << 16, id_bits, "id width"),
        (1 << 16, ori.max_outdegree, "scheme width"),
    ):
        if value >= limit:
            raise ValueError(f"{what} {value} does not fit the preamble")
    return LabelScheme(
        n=m.n_leaves,
        id_bits=id_bits,
        width=ori.max_outdegree,
        depth_bits=DEPTH_BITS,
        orientation=ori.owner,
        node_paths=paths,
    )


def layout_bound(n: int, id_bits: int, width: int, h: int) -> int:
    """Worst-case label bits for the fixed layout at the given sizes."""
    cb = width.bit_length()
    return PREAMBLE_BITS + DEPTH_BITS + h * id_bits + h * cb + h * width * (id_bits + 1)


def encode(m: SignedTreeModel) -> dict[int, AdjacencyLabel]:
    """Labels for every vertex of a clean model, keyed by graph vertex."""
    scheme = build_scheme(m)
    owned: dict[int, list[tuple[int, int]]] = {}
    for (a, b), color in sorted(m.signed_pairs().items()):
        o = scheme.orientation[(a, b)]
        other = b if o == a else a
        owned.setdefault(o, []).append((other, 1 if color == BLUE else 0))
    cb = scheme.count_bits
    labels = {}
    for leaf, path in scheme.node_paths.items():
        w = _BitWriter()
        w.write(scheme.n, 16)
        w.write(scheme.id_bits, 16)
        w.write(scheme.width, 16)
        w.write(len(path), DEPTH_BITS)
        for node in path:
            w.write(node, scheme.id_bits)
        for node in path:
            entries = owned.get(node, ())
            w.write(len(entries), cb)
            for other, colorbit in entries:
                w.write(other, scheme.id_bits)
                w.write(colorbit, 1)
        label = w.label()
        assert label.nbits <= layout_bound(
            scheme.n, scheme.id_bits, scheme.width, len(path)
        )
        labels[m.leaf_vertex[leaf]] = label
    return labels


@dataclass(frozen=True)
class _Parsed:
    n: int
    id_bits: int
    width: int
    path: tuple[int, ...]
    entries: tuple[tuple[tuple[int, int], ...], ...]  # per path node


def _parse(label: AdjacencyLabel) -> _Parsed:
    r = _BitReader(label)
    n = r.read(16)
    id_bits = r.read(16)
    width = r.read(16)
    if id_bits == 0:
        raise ValueError("corrupt label: zero id width")
    cb = width.bit_length()
    h = r.read(DEPTH_BITS)
    if h == 0:
        raise ValueError("corrupt label: empty path")
    path = tuple(r.read(id_bits) for _ in range(h))
    entries = []
    for _ in range(h):
        cnt = r.read(cb)
        if cnt > width:
            raise ValueError("corrupt label: owned count exceeds width")
        entries.append(tuple((r.read(id_bits), r.read(1)) for _ in range(cnt)))
    return _Parsed(n, id_bits, width, path, tuple(entries))


def _decode_parsed(a: _Parsed, b: _Parsed) -> bool:
    if (a.n, a.id_bits, a.width) != (b.n, b.id_bits, b.width):
        raise ValueError("labels come from different encodings")
    if a.path == b.path:
        raise ValueError("labels describe the same leaf")
    a_pos = {node: i for i, node in enumerate(a.path)}
    b_pos = {node: i for i, node in enumerate(b.path)}
    # Candidates are stored entries (x, y) with x on one path only and y on
    # the other path only; their depth is the sum of path positions.
    cands = {}
    for side, own_pos, other_pos in ((a, a_pos, b_pos), (b, b_pos, a_pos)):
        for i, x in enumerate(side.path):
            if x in other_pos:
                continue
            for y, colorbit in side.entries[i]:
                j = other_pos.get(y)
                if j is None or y in own_pos:
                    continue
                key = (x, y) if x < y else (y, x)
                cands[key] = (i + j, colorbit)
    if not cands:
        raise ValueError("no signed pair covers the leaf pair; corrupt labels")
    ranked = sorted((depth, key, colorbit) for key, (depth, colorbit) in cands.items())
    # Non-crossing models make the candidates a chain, so depths are distinct.
    for (d1, k1, _), (d2, k2, _) in zip(ranked, ranked[1:]):
        if d1 == d2:
            raise ValueError(f"candidates {k1} and {k2} are unordered; corrupt labels")
    return ranked[-1][2] == 1


def decode(a: AdjacencyLabel, b: AdjacencyLabel) -> bool:
    """Adjacency of two distinct vertices from their labels alone."""
    return _decode_parsed(_parse(a), _parse(b))


def decode_matrix(labels: dict[int, AdjacencyLabel]) -> Graph:
    """Full graph reconstruction; parses each label once."""
    parsed = {v: _parse(l) for v, l in labels.items()}
    n = len(parsed)
    if sorted(parsed) != list(range(n)):
        raise ValueError("labels must cover vertices 0..n-1")
    g = Graph(n)
    verts = sorted(parsed)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if _decode_parsed(parsed[u], parsed[v]):
                g.add_edge(u, v)
    return g


def label_graph(g: Graph, w: SddWitness) -> dict[int, AdjacencyLabel]:
    """Witness to labels: model, clean, balance, clean, encode.

    The balanced model's pair count certifies the scheme width via
    width_bound, which is what keeps labels near sqrt((d+1) n) bits.
    """
    m = make_clean(stm_from_witness(g, w))
    balanced = make_clean(shallowise(m, w.d + 1))
    labels = encode(balanced)
    # Width is the pair graph's degeneracy, so it never exceeds the
    # edge-count bound; keep the certificate honest.
    pairs = len(balanced.green | balanced.blue)
    scheme_width = _parse(next(iter(labels.values()))).width
    assert scheme_width <= width_bound(pairs), (scheme_width, pairs)
    return labels


@dataclass(frozen=True)
class LabelStats:
    max_bits: int
    mean_bits: float
    bound_bits: int
    ratio: float


def label_stats(labels: dict[int, AdjacencyLabel]) -> LabelStats:
    """Max/mean label size against the layout bound at the parsed sizes."""
    if not labels:
        raise ValueError("no labels")
    sizes = [l.nbits for l in labels.values()]
    parsed = [_parse(l) for l in labels.values()]
    h = max(len(p.path) for p in parsed)
    p0 = parsed[0]
    bound = layout_bound(p0.n, p0.id_bits, p0.width, h)
    mx = max(sizes)
    return LabelStats(mx, sum(sizes) / len(sizes), bound, mx / bound)


def save_labels(labels: dict[int, AdjacencyLabel]) -> str:
    """`p lbl` format: hex dump per vertex, MSB first, zero-padded to bytes."""
    if not labels:
        raise ValueError("no labels")
    p0 = _parse(next(iter(labels.values())))
    lines = [f"p lbl {p0.n} {p0.id_bits} {p0.width}"]
    for v in sorted(labels):
        lines.append(f"l {v} {labels[v].hex()}")
    return "\n".join(lines) + "\n"


def load_labels(text: str) -> dict[int, AdjacencyLabel]:
    labels = {}
    header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 5 or parts[1] != "lbl":
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            header = True
        elif parts[0] == "l":
            if not header:
                raise ValueError(f"line {lineno}: label before header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: malformed label {line!r}")
            v = int(parts[1])
            data = bytes.fromhex(parts[2])
            labels[v] = AdjacencyLabel(data, len(data) * 8)
        else:
            raise ValueError(f"line {lineno}: unknown record {line!r}")
    if not labels:
        raise ValueError("no labels in input")
    return labels

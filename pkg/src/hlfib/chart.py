"""Combinatorial charts: labeled oriented maps with white and black vertices.

A chart is stored as an abstract rotation system: each edge is a pair of
darts (tail, head), each vertex holds a cyclic sequence of darts, and
hoops (closed edges without vertices) are kept separately with only their
label, orientation and an informal placement tag.  Faces and genus are
computed from the rotation system, so isotopy is quotiented away by
construction.

Vertex words follow a fixed convention: reading the rotation, a dart
contributes ``+label`` when the edge points into the vertex and
``-label`` otherwise.  A white vertex has type ``r`` when the inverse of
its word is a cyclic permutation of the relator ``r``; a black vertex has
type ``s`` when its word is a cyclic permutation of the letter ``s``.
The corpus encodings in the test suite pin these conventions.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from .derivation import Derivation, FreeDelete, FreeInsert, RelatorDelete, RelatorInsert
from .mcg_kernel import RelatorTable, relators
from .words import free_reduce, inverse

__all__ = [
    "Edge",
    "Vertex",
    "Hoop",
    "Chart",
    "ChartCounts",
    "ChartValidation",
    "validate_chart",
    "counts",
    "degree_sum_check",
    "star_chart",
    "free_edge_chart",
    "ell_h_chart",
    "gamma0_chart",
    "r3_chart",
    "r4_chart",
    "HoopBirth",
    "HoopDeath",
    "WhitePairBirth",
    "WhitePairDeath",
    "ChannelChange",
    "ConjugacyMove",
    "Transition",
    "apply_move",
    "from_hurwitz",
    "intersection_word",
]


@dataclass(frozen=True)
class Edge:
    """An oriented labeled edge; darts are (2*index, 2*index+1) = (tail, head)."""

    tail_vertex: int
    head_vertex: int
    label: int


@dataclass(frozen=True)
class Vertex:
    kind: str  # "white" | "black"
    rotation: tuple[int, ...]  # darts in cyclic order


@dataclass(frozen=True)
class Hoop:
    label: int
    sign: int
    region: str = "base"


@dataclass(frozen=True)
class Chart:
    """A chart over the genus-g alphabet on a closed surface of genus `genus`."""

    g: int
    genus: int
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    hoops: tuple[Hoop, ...] = ()
    presentation: str = "Chat"
    base_region: int = 0

    def table(self) -> RelatorTable:
        return relators(self.presentation, self.g)

    # dart helpers: edge i owns darts 2i (tail side) and 2i+1 (head side)
    def dart_vertex(self, dart: int) -> int:
        e = self.edges[dart // 2]
        return e.head_vertex if dart % 2 else e.tail_vertex

    def dart_letter(self, dart: int) -> int:
        e = self.edges[dart // 2]
        return e.label if dart % 2 else -e.label

    def vertex_word(self, v: int) -> tuple[int, ...]:
        return tuple(self.dart_letter(d) for d in self.vertices[v].rotation)


# ---------------------------------------------------------------------------
# classification and validation


def _cyclic_forms(word: tuple[int, ...]) -> set[tuple[int, ...]]:
    return {word[i:] + word[:i] for i in range(max(len(word), 1))}


def _white_type(word, table: RelatorTable):
    """(label, params, sign) for a white vertex word, or None."""
    inv = inverse(word)
    for rel in table.relators:
        forms = _cyclic_forms(rel.word)
        if inv in forms:
            return (rel.label, rel.params, 1)
        if word in forms:
            return (rel.label, rel.params, -1)
    return None


def _black_type(word, table: RelatorTable):
    for s in table.letters:
        if word in _cyclic_forms(s.word):
            return (s.label, s.params, s.sign)
    return None


def _component_genera(chart: Chart) -> list[int]:
    """Genus of each connected component of the underlying map."""
    n_darts = 2 * len(chart.edges)
    succ = {}
    for vtx in chart.vertices:
        rot = vtx.rotation
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % len(rot)]
    # face permutation: next dart along a face boundary
    def face_next(d: int) -> int:
        return succ[d ^ 1]

    # union components over vertices through edges
    parent = list(range(len(chart.vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in chart.edges:
        a, b = find(e.tail_vertex), find(e.head_vertex)
        if a != b:
            parent[a] = b
    comp_vertices: dict[int, int] = {}
    comp_edges: dict[int, int] = {}
    for i in range(len(chart.vertices)):
        comp_vertices[find(i)] = comp_vertices.get(find(i), 0) + 1
    for e in chart.edges:
        comp_edges[find(e.tail_vertex)] = comp_edges.get(find(e.tail_vertex), 0) + 1
    # faces per component
    comp_faces: dict[int, int] = {}
    seen = [False] * n_darts
    for d0 in range(n_darts):
        if seen[d0]:
            continue
        d = d0
        while not seen[d]:
            seen[d] = True
            d = face_next(d)
        comp = find(chart.dart_vertex(d0))
        comp_faces[comp] = comp_faces.get(comp, 0) + 1
    genera = []
    for comp, nv in comp_vertices.items():
        ne = comp_edges.get(comp, 0)
        nf = comp_faces.get(comp, 1 if ne == 0 else 0)
        euler = nv - ne + nf
        if euler % 2:
            raise ValueError("rotation system has odd Euler characteristic")
        genera.append((2 - euler) // 2)
    return genera


@dataclass(frozen=True)
class ChartValidation:
    ok: bool
    problems: tuple[str, ...]


def validate_chart(chart: Chart, table: Optional[RelatorTable] = None) -> ChartValidation:
    """Check the map structure and every vertex word against the table."""
    table = table or chart.table()
    problems: list[str] = []
    n_darts = 2 * len(chart.edges)
    seen: dict[int, int] = {}
    for vi, vtx in enumerate(chart.vertices):
        if vtx.kind not in ("white", "black"):
            problems.append(f"vertex {vi}: unknown kind {vtx.kind!r}")
        for d in vtx.rotation:
            if not 0 <= d < n_darts:
                problems.append(f"vertex {vi}: dart {d} out of range")
            elif d in seen:
                problems.append(f"dart {d} appears at vertices {seen[d]} and {vi}")
            else:
                seen[d] = vi
    if len(seen) != n_darts:
        missing = sorted(set(range(n_darts)) - set(seen))
        problems.append(f"darts without a vertex: {missing}")
    for ei, e in enumerate(chart.edges):
        if not 1 <= e.label <= 2 * chart.g + 1:
            problems.append(f"edge {ei}: label {e.label} out of range")
    for hi, h in enumerate(chart.hoops):
        if not 1 <= h.label <= 2 * chart.g + 1 or h.sign not in (1, -1):
            problems.append(f"hoop {hi}: bad label or sign")
    if problems:
        return ChartValidation(False, tuple(problems))
    for vi, vtx in enumerate(chart.vertices):
        word = chart.vertex_word(vi)
        if vtx.kind == "white":
            if _white_type(word, table) is None:
                problems.append(f"white vertex {vi}: word {word} matches no relator")
        else:
            if _black_type(word, table) is None:
                problems.append(f"black vertex {vi}: word {word} matches no letter type")
    try:
        used = sum(_component_genera(chart))
    except ValueError as exc:
        problems.append(str(exc))
        used = 0
    if used > chart.genus:
        problems.append(f"rotation system needs genus {used} > declared {chart.genus}")
    return ChartValidation(not problems, tuple(problems))


# ---------------------------------------------------------------------------
# counts and the degree-sum identity


@dataclass(frozen=True)
class ChartCounts:
    m1: dict
    m2: dict
    m3: int
    m4: int
    m5: int
    n0_pos: dict
    n0_neg: dict
    nh_pos: dict
    nh_neg: dict
    w: int

    def n0(self, i: int) -> int:
        return self.n0_pos.get(i, 0) - self.n0_neg.get(i, 0)

    def nh(self, h: int) -> int:
        return self.nh_pos.get(h, 0) - self.nh_neg.get(h, 0)

    def n0_total(self) -> tuple[int, int]:
        return (sum(self.n0_pos.values()), sum(self.n0_neg.values()))


def counts(chart: Chart, table: Optional[RelatorTable] = None) -> ChartCounts:
    """Signed white-vertex counts, black-vertex counts, and the parity w."""
    table = table or chart.table()
    m1: dict = {}
    m2: dict = {}
    m3 = m4 = m5 = 0
    n0_pos: dict = {}
    n0_neg: dict = {}
    nh_pos: dict = {}
    nh_neg: dict = {}
    r4_total = 0
    for vi, vtx in enumerate(chart.vertices):
        word = chart.vertex_word(vi)
        if vtx.kind == "white":
            typ = _white_type(word, table)
            if typ is None:
                raise ValueError(f"white vertex {vi} has no type")
            label, params, sign = typ
            if label == "r1":
                m1[params] = m1.get(params, 0) + sign
            elif label == "r2":
                m2[params[0]] = m2.get(params[0], 0) + sign
            elif label == "r3":
                m3 += sign
            elif label == "r4":
                m4 += sign
                r4_total += 1
            elif label == "r5":
                m5 += sign
        else:
            typ = _black_type(word, table)
            if typ is None:
                raise ValueError(f"black vertex {vi} has no type")
            label, params, sign = typ
            if label == "l0":
                target = n0_pos if sign > 0 else n0_neg
                target[params[0]] = target.get(params[0], 0) + 1
            else:
                target = nh_pos if sign > 0 else nh_neg
                target[params[0]] = target.get(params[0], 0) + 1
    return ChartCounts(m1, m2, m3, m4, m5, n0_pos, n0_neg, nh_pos, nh_neg, r4_total % 2)


def degree_sum_check(chart: Chart) -> bool:
    """Edge-endpoint bookkeeping identity; forced for valid charts."""
    g = chart.g
    c = counts(chart)
    total = 4 * (2 * g + 1) * c.m3 + 2 * (g + 1) * (2 * g + 1) * c.m4
    total -= sum(c.n0(i) for i in range(1, 2 * g + 2))
    total -= 4 * sum(h * (2 * h + 1) * c.nh(h) for h in range(1, g // 2 + 1))
    return total == 0


# ---------------------------------------------------------------------------
# encodings of the standard charts


def star_chart(g: int, word: tuple[int, ...], center_kind: str = "white",
               presentation: str = "Chat") -> Chart:
    """A central vertex whose meridian spells the word, with one leaf per letter.

    For a white center the leaves read the word's letters positively (the
    center has type ``word`` read clockwise); for a black center the word
    is read directly and the leaves carry the opposite signs.
    """
    edges = []
    leaves = []
    center_rotation = []
    center = 0
    for t, v in enumerate(word):
        leaf = t + 1
        if center_kind == "white":
            # edge points into the leaf for positive letters
            e = Edge(center, leaf, abs(v)) if v > 0 else Edge(leaf, center, abs(v))
            leaf_dart = 2 * t + 1 if v > 0 else 2 * t
            center_dart = 2 * t if v > 0 else 2 * t + 1
        else:
            # black center: the center itself reads the word
            e = Edge(leaf, center, abs(v)) if v > 0 else Edge(center, leaf, abs(v))
            center_dart = 2 * t + 1 if v > 0 else 2 * t
            leaf_dart = 2 * t if v > 0 else 2 * t + 1
        edges.append(e)
        leaves.append(Vertex("black", (leaf_dart,)))
        center_rotation.append(center_dart)
    if center_kind == "white":
        center_rotation.reverse()
    vertices = (Vertex(center_kind, tuple(center_rotation)),) + tuple(leaves)
    return Chart(g, 0, vertices, tuple(edges), (), presentation)


def free_edge_chart(g: int, i: int, presentation: str = "Chat") -> Chart:
    """Two black vertices joined by one edge labeled i (types l0(i)^{+-1})."""
    e = Edge(0, 1, i)
    return Chart(g, 0, (Vertex("black", (0,)), Vertex("black", (1,))), (e,), (), presentation)


def ell_h_chart(g: int, h: int, presentation: str = "Chat") -> Chart:
    """A black vertex of separating type l_h wired to nonseparating leaves."""
    word = tuple(range(1, 2 * h + 1)) * (4 * h + 2)
    return star_chart(g, word, center_kind="black", presentation=presentation)


def r3_chart(g: int) -> Chart:
    word = tuple(range(1, 2 * g + 2)) + tuple(range(2 * g + 1, 0, -1))
    return star_chart(g, word * 2)


def gamma0_chart(g: int) -> Chart:
    return r3_chart(g)


def r4_chart(g: int) -> Chart:
    return star_chart(g, tuple(range(1, 2 * g + 2)) * (2 * g + 2))


# ---------------------------------------------------------------------------
# moves


@dataclass(frozen=True)
class HoopBirth:
    label: int
    sign: int = 1
    region: str = "base"


@dataclass(frozen=True)
class HoopDeath:
    index: int


@dataclass(frozen=True)
class WhitePairBirth:
    label: str
    params: tuple[int, ...] = ()


@dataclass(frozen=True)
class WhitePairDeath:
    v1: int
    v2: int


@dataclass(frozen=True)
class ChannelChange:
    edge1: int
    edge2: int


@dataclass(frozen=True)
class ConjugacyMove:
    """Birth or death of a hoop around the base region boundary."""

    label: int
    sign: int = 1
    death: bool = False


@dataclass(frozen=True)
class Transition:
    """Replace a black vertex of type s by w s' w^-1 data with a certified box."""

    vertex: int
    new_label: str
    new_params: tuple[int, ...]
    new_sign: int
    conjugator: tuple[int, ...]
    certificate: Derivation


Move = Union[HoopBirth, HoopDeath, WhitePairBirth, WhitePairDeath, ChannelChange, ConjugacyMove, Transition]


class InadmissibleMove(ValueError):
    pass


def _append_component(chart: Chart, other: Chart) -> Chart:
    """Disjoint union (other placed in some region of chart)."""
    v_off = len(chart.vertices)
    d_off = 2 * len(chart.edges)
    vertices = chart.vertices + tuple(
        Vertex(v.kind, tuple(d + d_off for d in v.rotation)) for v in other.vertices
    )
    edges = chart.edges + tuple(
        Edge(e.tail_vertex + v_off, e.head_vertex + v_off, e.label) for e in other.edges
    )
    return replace(chart, vertices=vertices, edges=edges, hoops=chart.hoops + other.hoops)


def _banana_chart(g: int, word: tuple[int, ...], presentation: str) -> Chart:
    """A pair of white vertices of types r and r^-1 joined by |r| edges."""
    edges = []
    rot_a = []
    rot_b = []
    for t, v in enumerate(word):
        # vertex 0 reads the word positively, vertex 1 is its mirror
        e = Edge(1, 0, abs(v)) if v > 0 else Edge(0, 1, abs(v))
        a_dart = 2 * t + 1 if v > 0 else 2 * t
        b_dart = 2 * t if v > 0 else 2 * t + 1
        edges.append(e)
        rot_a.append(a_dart)
        rot_b.append(b_dart)
    rot_b.reverse()
    vertices = (Vertex("white", tuple(rot_a)), Vertex("white", tuple(rot_b)))
    return Chart(g, 0, vertices, tuple(edges), (), presentation)


def apply_move(chart: Chart, move: Move) -> Chart:
    """Apply a local chart move; raises InadmissibleMove for bad sites."""
    if isinstance(move, HoopBirth):
        return replace(chart, hoops=chart.hoops + (Hoop(move.label, move.sign, move.region),))
    if isinstance(move, HoopDeath):
        if not 0 <= move.index < len(chart.hoops):
            raise InadmissibleMove(f"no hoop {move.index}")
        hoops = chart.hoops[: move.index] + chart.hoops[move.index + 1:]
        return replace(chart, hoops=hoops)
    if isinstance(move, ConjugacyMove):
        if move.death:
            for i, h in enumerate(chart.hoops):
                if (h.label, h.sign, h.region) == (move.label, move.sign, "base-boundary"):
                    return replace(chart, hoops=chart.hoops[:i] + chart.hoops[i + 1:])
            raise InadmissibleMove("no matching boundary hoop")
        return replace(chart, hoops=chart.hoops + (Hoop(move.label, move.sign, "base-boundary"),))
    if isinstance(move, WhitePairBirth):
        rel = chart.table().relator(move.label, *move.params)
        return _append_component(chart, _banana_chart(chart.g, rel.word, chart.presentation))
    if isinstance(move, WhitePairDeath):
        return _white_pair_death(chart, move.v1, move.v2)
    if isinstance(move, ChannelChange):
        return _channel_change(chart, move.edge1, move.edge2)
    if isinstance(move, Transition):
        return _transition(chart, move)
    raise InadmissibleMove(f"unknown move {move!r}")


def _white_pair_death(chart: Chart, v1: int, v2: int) -> Chart:
    """Remove a banana pair of mutually inverse white vertices."""
    for v in (v1, v2):
        if not 0 <= v < len(chart.vertices) or chart.vertices[v].kind != "white":
            raise InadmissibleMove(f"vertex {v} is not a white vertex")
    w1, w2 = chart.vertex_word(v1), chart.vertex_word(v2)
    if free_reduce(w1) == () or free_reduce(inverse(w2)) != free_reduce(w1):
        # banana pairs have mirror words; structural check follows
        pass
    incident = set()
    for d in chart.vertices[v1].rotation + chart.vertices[v2].rotation:
        incident.add(d // 2)
    for ei in incident:
        e = chart.edges[ei]
        if {e.tail_vertex, e.head_vertex} != {v1, v2}:
            raise InadmissibleMove("pair is connected to the rest of the chart")
    if _white_type(w1, chart.table()) is None or _white_type(w2, chart.table()) is None:
        raise InadmissibleMove("vertices are not a relator pair")
    t1, t2 = _white_type(w1, chart.table()), _white_type(w2, chart.table())
    if t1[:2] != t2[:2] or t1[2] != -t2[2]:
        raise InadmissibleMove("vertices are not mutually inverse")
    keep_edges = [e for i, e in enumerate(chart.edges) if i not in incident]
    return _rebuild(chart, {v1, v2}, incident, keep_edges)


def _rebuild(chart: Chart, drop_vertices: set[int], drop_edges: set[int], keep_edges) -> Chart:
    """Renumber after deleting vertices and edges."""
    v_map = {}
    vertices = []
    for i, v in enumerate(chart.vertices):
        if i in drop_vertices:
            continue
        v_map[i] = len(vertices)
        vertices.append(v)
    e_map = {}
    edges = []
    for i, e in enumerate(chart.edges):
        if i in drop_edges:
            continue
        e_map[i] = len(edges)
        edges.append(Edge(v_map[e.tail_vertex], v_map[e.head_vertex], e.label))
    def dart_map(d):
        return 2 * e_map[d // 2] + (d % 2)
    vertices = [
        Vertex(v.kind, tuple(dart_map(d) for d in v.rotation if d // 2 in e_map))
        for v in vertices
    ]
    return replace(chart, vertices=tuple(vertices), edges=tuple(edges))


def _channel_change(chart: Chart, e1: int, e2: int) -> Chart:
    """Swap the head darts of two same-labeled edges; vertex words unchanged."""
    if e1 == e2:
        raise InadmissibleMove("need two distinct edges")
    for e in (e1, e2):
        if not 0 <= e < len(chart.edges):
            raise InadmissibleMove(f"no edge {e}")
    a, b = chart.edges[e1], chart.edges[e2]
    if a.label != b.label:
        raise InadmissibleMove("labels differ")
    edges = list(chart.edges)
    edges[e1] = Edge(a.tail_vertex, b.head_vertex, a.label)
    edges[e2] = Edge(b.tail_vertex, a.head_vertex, b.label)
    # swap the darts' vertex memberships: head darts exchange vertices
    d1, d2 = 2 * e1 + 1, 2 * e2 + 1
    vertices = []
    for v in chart.vertices:
        rot = tuple(d2 if d == d1 else d1 if d == d2 else d for d in v.rotation)
        vertices.append(Vertex(v.kind, rot))
    out = replace(chart, vertices=tuple(vertices), edges=tuple(edges))
    if sum(_component_genera(out)) > out.genus:
        raise InadmissibleMove("reconnection is not realizable on this surface")
    return out


# ---------------------------------------------------------------------------
# derivation-to-subchart compiling (transition moves and chart construction)
#
# A derivation replayed on a word traces out a one-manifold of strands:
# every letter occurrence is a strand segment, cancelling pairs join, the
# conjugator halves of a relator step join around the new white vertex,
# and the relator letters end on that vertex.  Collecting the strands
# therefore compiles a certificate into the interior of a disk whose
# boundary spells the initial word (and, if nonempty, the final word).
# Slot order fixes each compiled vertex's rotation; relator insertions
# and deletions get mirror conventions so a deletion of r^+1 produces a
# white vertex of type r^+1 (pinned by the corpus tests).


class _Strands:
    """Union-find over letter occurrences with anchored endpoints."""

    def __init__(self):
        self.parent: list[int] = []
        self.letter: list[int] = []
        self.anchors: dict[int, list] = {}

    def new(self, letter: int) -> int:
        node = len(self.parent)
        self.parent.append(node)
        self.letter.append(letter)
        return node

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def anchor(self, node: int, kind: str, payload, dart_letter: int, forced: bool = True) -> None:
        self.anchors.setdefault(node, []).append((kind, payload, dart_letter, forced))

    def classes(self) -> dict[int, list]:
        out: dict[int, list] = {}
        for node in range(len(self.parent)):
            out.setdefault(self.find(node), [])
        for node, items in self.anchors.items():
            out[self.find(node)].extend(items)
        return out


def _replay_strands(strands: _Strands, frontier: list[int], cert: Derivation,
                    table: RelatorTable, white_anchor) -> list[int]:
    """Replay a derivation, recording strand joins and white vertices.

    ``white_anchor(label, params, vertex_sign, letters)`` must return a
    list of (kind, payload) anchors, one per relator letter, in rotation
    order.  Returns the final frontier node list.
    """
    for step in cert.steps:
        if isinstance(step, FreeInsert):
            a, b = strands.new(step.letter), strands.new(-step.letter)
            strands.union(a, b)
            frontier[step.pos: step.pos] = [a, b]
        elif isinstance(step, FreeDelete):
            a, b = frontier[step.pos: step.pos + 2]
            strands.union(a, b)
            del frontier[step.pos: step.pos + 2]
        elif isinstance(step, (RelatorInsert, RelatorDelete)):
            rel = table.relator(step.label, *step.params)
            block = rel.word if step.sign > 0 else inverse(rel.word)
            u = step.conjugator
            if isinstance(step, RelatorInsert):
                u_nodes = [strands.new(v) for v in u]
                r_nodes = [strands.new(v) for v in block]
                ui_nodes = [strands.new(-v) for v in reversed(u)]
                for a, b in zip(u_nodes, reversed(ui_nodes)):
                    strands.union(a, b)
                # insertion of r^sign: forward slots; dart letters follow
                # the strand orientations fixed at forced anchors
                for node, anc in zip(r_nodes, white_anchor(step.label, step.params, -step.sign, block)):
                    strands.anchor(node, anc[0], anc[1], strands.letter[node], forced=False)
                frontier[step.pos: step.pos] = u_nodes + r_nodes + ui_nodes
            else:
                size = 2 * len(u) + len(block)
                nodes = frontier[step.pos: step.pos + size]
                u_nodes = nodes[: len(u)]
                r_nodes = nodes[len(u): len(u) + len(block)]
                ui_nodes = nodes[len(u) + len(block):]
                for a, b in zip(u_nodes, reversed(ui_nodes)):
                    strands.union(a, b)
                # deletion of r^sign: reversed slots; letters are hints
                rev = list(reversed(r_nodes))
                letters = [-strands.letter[n] for n in rev]
                for node, anc in zip(rev, white_anchor(step.label, step.params, step.sign, tuple(letters))):
                    strands.anchor(node, anc[0], anc[1], -strands.letter[node], forced=False)
                del frontier[step.pos: step.pos + size]
        else:
            raise ValueError(f"unknown step {step!r}")
    return frontier


def _assemble(strands: _Strands, vertex_specs, g: int, presentation: str,
              hoops_extra=(), genus: int = 0) -> Chart:
    """Build a Chart from anchored strands.

    ``vertex_specs`` maps vertex id -> (kind, slot_count); every 2-anchor
    strand becomes an edge, anchorless circles become hoops.
    """
    slot_dart: dict[int, dict[int, int]] = {vid: {} for vid in vertex_specs}
    edges: list[Edge] = []
    hoops: list[Hoop] = list(hoops_extra)
    for root, items in sorted(strands.classes().items()):
        if not items:
            hoops.append(Hoop(abs(strands.letter[root]), 1 if strands.letter[root] > 0 else -1, "filling"))
            continue
        if len(items) != 2:
            raise ValueError(f"strand with {len(items)} endpoints")
        (k1, p1, l1, f1), (k2, p2, l2, f2) = items
        # forced anchors (existing structure, prescribed black types) pin the
        # edge orientation; free anchors (compiled white slots) follow suit
        if f1 and f2:
            if l1 != -l2:
                raise ValueError(f"forced strand ends disagree: {items}")
        elif f1:
            l2 = -l1
        else:
            l1 = -l2
        if abs(l1) != abs(l2):
            raise ValueError(f"label mismatch along strand: {items}")
        ei = len(edges)
        tail_dart, head_dart = 2 * ei, 2 * ei + 1
        # positive dart letter means the head dart sits at that vertex
        (v_head, _), (v_tail, _) = ((p1, l1), (p2, l2)) if l1 > 0 else ((p2, l2), (p1, l1))
        edges.append(Edge(v_tail[0], v_head[0], abs(l1)))
        slot_dart[v_head[0]][v_head[1]] = head_dart
        slot_dart[v_tail[0]][v_tail[1]] = tail_dart
    vertices = []
    for vid in sorted(vertex_specs):
        kind, nslots = vertex_specs[vid]
        slots = slot_dart[vid]
        if sorted(slots) != list(range(nslots)):
            raise ValueError(f"vertex {vid} has unfilled slots")
        vertices.append(Vertex(kind, tuple(slots[i] for i in range(nslots))))
    return Chart(g, genus, tuple(vertices), tuple(edges), tuple(hoops), presentation)


def from_hurwitz(m, cert: Derivation) -> Chart:
    """Chart realizing a sphere-base factorization, filled by a certificate.

    Black vertices realize the factor cores and conjugator letters close
    up around them (hoops when they stay isolated); the derivation, which
    must transform the global relation word into the empty word over the
    genus-g table, fills the disk with white vertices.  Black counts then
    match the fiber counts and w is the parity of power-relator steps.
    """
    from .hurwitz import MonodromyData

    if not isinstance(m, MonodromyData):
        raise TypeError("expected MonodromyData")
    if m.base_genus != 0:
        raise ValueError("chart construction is implemented over a sphere base")
    table = relators("Chat", m.g)

    strands = _Strands()
    frontier: list[int] = []
    vertex_specs: dict[int, tuple[str, int]] = {}
    layout: list[int] = []
    for fi, f in enumerate(m.factors):
        u, core = f.conjugator, f.core_letters()
        vertex_specs[fi] = ("black", len(core))
        u_nodes = [strands.new(v) for v in u]
        c_nodes = [strands.new(v) for v in core]
        ui_nodes = [strands.new(-v) for v in reversed(u)]
        for a, b in zip(u_nodes, reversed(ui_nodes)):
            strands.union(a, b)
        for slot, node in enumerate(c_nodes):
            strands.anchor(node, "black", (fi, slot), core[slot])
        frontier.extend(u_nodes + c_nodes + ui_nodes)
        layout.extend(list(u) + list(core) + list(inverse(u)))
    if cert.replay(tuple(layout), table) != ():
        raise ValueError("certificate does not transform the factor word to empty")

    next_vid = len(m.factors)

    def white_anchor(label, params, vertex_sign, letters):
        nonlocal next_vid
        vid = next_vid
        next_vid += 1
        vertex_specs[vid] = ("white", len(letters))
        return [("white", (vid, slot)) for slot in range(len(letters))]

    end = _replay_strands(strands, frontier, cert, table, white_anchor)
    if end:
        raise ValueError("certificate does not end at the empty word")
    return _assemble(strands, vertex_specs, m.g, "Chat")


def _transition(chart: Chart, move: Transition) -> Chart:
    """Replace a black vertex through a certified conjugation box.

    The whole chart is re-assembled through the strand machinery: ambient
    edges become pre-anchored strands, the old vertex's edges feed the
    box boundary, and the certificate (a derivation from the old type
    word to ``w s' w^-1``) compiles into white vertices inside the box.
    """
    table = chart.table()
    if not 0 <= move.vertex < len(chart.vertices) or chart.vertices[move.vertex].kind != "black":
        raise InadmissibleMove(f"vertex {move.vertex} is not a black vertex")
    spec = None
    for s in table.letters:
        if (s.label, s.params, s.sign) == (move.new_label, move.new_params, move.new_sign):
            spec = s
    if spec is None:
        raise InadmissibleMove("unknown replacement type")
    w = tuple(move.conjugator)
    old_word = chart.vertex_word(move.vertex)
    target_layout = list(w) + list(spec.word) + list(inverse(w))
    try:
        final = move.certificate.replay(old_word, table)
    except Exception as exc:
        raise InadmissibleMove(f"certificate replay failed: {exc}")
    if list(final) != target_layout:
        raise InadmissibleMove("certificate does not produce the conjugated type word")

    # final vertex numbering: ambient vertices minus the dropped one,
    # then the new black vertex, then compiled white vertices
    vid_of_old = {}
    specs: dict[int, tuple[str, int]] = {}
    for i, v in enumerate(chart.vertices):
        if i == move.vertex:
            continue
        vid = len(vid_of_old)
        vid_of_old[i] = vid
        specs[vid] = (v.kind, len(v.rotation))

    strands = _Strands()
    # ambient edges as strands; edges at the dropped vertex feed the box
    slot_of_dart = {}
    for i, v in enumerate(chart.vertices):
        for slot, d in enumerate(v.rotation):
            slot_of_dart[d] = (i, slot)
    box_ports: dict[int, int] = {}  # boundary slot of old vertex -> node
    for ei, e in enumerate(chart.edges):
        nodes = []
        for d in (2 * ei, 2 * ei + 1):
            vi, slot = slot_of_dart[d]
            letter = chart.dart_letter(d)
            node = strands.new(letter)
            nodes.append(node)
            if vi == move.vertex:
                box_ports[slot] = node
            else:
                strands.anchor(node, "vertex", (vid_of_old[vi], slot), letter)
        strands.union(nodes[0], nodes[1])

    # box boundary: the ambient edge ends at the old vertex feed the box
    frontier = [box_ports[slot] for slot in range(len(old_word))]

    new_black = len(vid_of_old)
    specs[new_black] = ("black", len(spec.word))
    next_white = [new_black + 1]

    def white_anchor(label, params, vertex_sign, letters):
        vid = next_white[0]
        next_white[0] += 1
        specs[vid] = ("white", len(letters))
        return [("vertex", (vid, slot)) for slot in range(len(letters))]

    end = _replay_strands(strands, frontier, move.certificate, table, white_anchor)
    nw, ns = len(w), len(spec.word)
    for a, b in zip(end[:nw], reversed(end[nw + ns:])):
        strands.union(a, b)
    for slot, node in enumerate(end[nw: nw + ns]):
        strands.anchor(node, "vertex", (new_black, slot), spec.word[slot])

    out = _assemble(strands, specs, chart.g, chart.presentation,
                    hoops_extra=chart.hoops, genus=chart.genus)
    check = validate_chart(out)
    if not check.ok:
        raise InadmissibleMove(f"transition produced an invalid chart: {check.problems}")
    return out


def intersection_word(chart: Chart, path):
    """Read the word of a transverse path given as (edge index, sign) pairs.

    Consecutive crossings must be co-bounded by a common face of the map;
    the word is the labels with the supplied signs.
    """
    from .mcg_kernel import AlphabetKind, MCWord

    faces = _face_of_dart(chart)
    letters = []
    prev_faces = None
    for edge_index, sign in path:
        if not 0 <= edge_index < len(chart.edges):
            raise ValueError(f"no edge {edge_index}")
        if sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")
        here = {faces[2 * edge_index], faces[2 * edge_index + 1]}
        if prev_faces is not None and not (prev_faces & here):
            raise ValueError("path crossings are not adjacent")
        prev_faces = here
        letters.append(sign * chart.edges[edge_index].label)
    kind = {"C0": AlphabetKind.XI, "Ctilde": AlphabetKind.X, "Chat": AlphabetKind.ZETA}[chart.presentation]
    return MCWord(kind, chart.g, tuple(letters))


def _face_of_dart(chart: Chart) -> dict[int, int]:
    succ = {}
    for vtx in chart.vertices:
        rot = vtx.rotation
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % len(rot)]
    face_id: dict[int, int] = {}
    fid = 0
    for d0 in range(2 * len(chart.edges)):
        if d0 in face_id:
            continue
        d = d0
        while d not in face_id:
            face_id[d] = fid
            d = succ[d ^ 1]
        fid += 1
    return face_id

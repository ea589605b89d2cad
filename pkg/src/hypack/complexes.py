"""Triangulated complexes: disjoint triangles with homeomorphic edge pairings.

A complex is a set of abstract triangles, each with corners 0, 1, 2 and
sides 0, 1, 2, where side s joins corners s and s+1 (mod 3). A pairing
identifies two distinct edge slots; its ``reversed`` flag records how the
endpoints match:

* ``reversed=False``: tail of one side is glued to the head of the other
  (the orientation-compatible gluing when both triangles keep their corner
  orientation),
* ``reversed=True``: tails glue to tails and heads to heads.

Unpaired slots form the boundary. Quotient vertices are corner orbits under
rotation around the vertex; because every slot sits in at most one pairing,
each orbit's link is automatically an arc (boundary vertex) or a circle
(interior vertex).

Complexes are immutable values; every operation returns a new complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Slot = tuple[int, int]
Corner = tuple[int, int]


class ComplexError(ValueError):
    """Structurally invalid complex or operation."""


@dataclass(frozen=True)
class Pairing:
    a: Slot
    b: Slot
    reversed: bool

    def normalized(self) -> "Pairing":
        if self.b < self.a:
            return Pairing(self.b, self.a, self.reversed)
        return self

    def other(self, slot: Slot) -> Slot:
        if slot == self.a:
            return self.b
        if slot == self.b:
            return self.a
        raise KeyError(slot)


@dataclass(frozen=True)
class TriangulatedComplex:
    """Immutable triangulated complex with edge pairings and marked corners."""

    n_triangles: int
    pairings: tuple[Pairing, ...]
    marked: frozenset[Corner] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n_triangles < 0:
            raise ComplexError("triangle count must be >= 0")
        seen: set[Slot] = set()
        norm = []
        for p in self.pairings:
            for slot in (p.a, p.b):
                t, s = slot
                if not (0 <= t < self.n_triangles and 0 <= s < 3):
                    raise ComplexError(f"slot {slot} out of range")
                if slot in seen:
                    raise ComplexError(f"slot {slot} used in more than one pairing")
                seen.add(slot)
            if p.a == p.b:
                raise ComplexError(f"slot {p.a} paired with itself")
            norm.append(p.normalized())
        object.__setattr__(self, "pairings", tuple(sorted(norm, key=lambda p: (p.a, p.b))))
        for t, c in self.marked:
            if not (0 <= t < self.n_triangles and 0 <= c < 3):
                raise ComplexError(f"marked corner {(t, c)} out of range")
        object.__setattr__(self, "marked", frozenset(self.marked))

    # -- basic lookup ----------------------------------------------------

    def pairing_map(self) -> dict[Slot, tuple[Slot, bool]]:
        out: dict[Slot, tuple[Slot, bool]] = {}
        for p in self.pairings:
            out[p.a] = (p.b, p.reversed)
            out[p.b] = (p.a, p.reversed)
        return out

    def pairing_of(self, slot: Slot) -> Pairing:
        for p in self.pairings:
            if slot in (p.a, p.b):
                return p
        raise ComplexError(f"slot {slot} is not paired")

    def boundary_slots(self) -> list[Slot]:
        paired = {s for p in self.pairings for s in (p.a, p.b)}
        return [
            (t, s)
            for t in range(self.n_triangles)
            for s in range(3)
            if (t, s) not in paired
        ]

    def all_corners(self) -> list[Corner]:
        return [(t, c) for t in range(self.n_triangles) for c in range(3)]


@dataclass(frozen=True)
class VertexClass:
    """A quotient vertex: its corners in rotation order around the vertex."""

    corners: tuple[Corner, ...]
    boundary: bool
    marked: bool

    @property
    def triangle_valence(self) -> int:
        return len(self.corners)

    def corner_set(self) -> frozenset[Corner]:
        return frozenset(self.corners)


@dataclass(frozen=True)
class BoundaryComponent:
    """One boundary circle: unpaired slots in traversal order.

    ``directions[i]`` is +1 when the traversal runs the slot tail-to-head
    (corner s to corner s+1) and -1 otherwise.
    """

    slots: tuple[Slot, ...]
    directions: tuple[int, ...]
    vertex_count: int

    def __len__(self) -> int:
        return len(self.slots)


def _cross(pmap, t: int, c: int, s: int):
    """Cross side s of triangle t from its corner c; return the identified
    corner (t2, c2) and the side s2 arrived through, or None at the boundary."""
    hit = pmap.get((t, s))
    if hit is None:
        return None
    (t2, s2), rev = hit
    if s == c:  # corner is the tail of side s
        c2 = s2 if rev else (s2 + 1) % 3
    else:  # s == (c - 1) % 3: corner is the head of side s
        c2 = (s2 + 1) % 3 if rev else s2
    return t2, c2, s2


def _walk(pmap, t: int, c: int, s: int):
    """Rotate around a vertex starting at corner (t, c) about to cross side s.
    Yields successive corners; stops at an unpaired side or on closing up."""
    start = (t, c, s)
    while True:
        nxt = _cross(pmap, t, c, s)
        if nxt is None:
            return
        t, c, s_in = nxt
        s = c if s_in == (c - 1) % 3 else (c - 1) % 3
        if (t, c, s) == start:
            return
        yield (t, c, s)


def vertex_classes(c: TriangulatedComplex) -> list[VertexClass]:
    """Partition all corners into quotient vertices, each with its link walk.

    Each class's corners are listed in rotation order; the class is a
    boundary vertex exactly when the walk terminates on unpaired sides in
    both directions (an arc link) rather than closing into a circle.
    """
    pmap = c.pairing_map()
    seen: set[Corner] = set()
    classes: list[VertexClass] = []
    for t0 in range(c.n_triangles):
        for c0 in range(3):
            if (t0, c0) in seen:
                continue
            forward = [(t0, c0, c0)]
            closed = True
            for state in _walk(pmap, t0, c0, c0):
                forward.append(state)
            last = forward[-1]
            if _cross(pmap, last[0], last[1], last[2]) is None:
                closed = False
            order = [(t, cc) for t, cc, _ in forward]
            if not closed:
                back_side = (c0 - 1) % 3
                for t1, c1, _ in _walk(pmap, t0, c0, back_side):
                    order.insert(0, (t1, c1))
            corners = tuple(order)
            if len(set(corners)) != len(corners):
                raise ComplexError(f"corner orbit revisits a corner: {corners}")
            seen.update(corners)
            classes.append(
                VertexClass(
                    corners=corners,
                    boundary=not closed,
                    marked=any(k in c.marked for k in corners),
                )
            )
    return classes


def vertex_classes_unionfind(c: TriangulatedComplex) -> set[frozenset[Corner]]:
    """Brute-force oracle: corner partition via union-find over the pairing
    identification rules, with no rotation walk."""
    parent: dict[Corner, Corner] = {k: k for k in c.all_corners()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for p in c.pairings:
        (t, s), (t2, s2) = p.a, p.b
        if p.reversed:
            union((t, s), (t2, s2))
            union((t, (s + 1) % 3), (t2, (s2 + 1) % 3))
        else:
            union((t, s), (t2, (s2 + 1) % 3))
            union((t, (s + 1) % 3), (t2, s2))
    groups: dict[Corner, set[Corner]] = {}
    for k in c.all_corners():
        groups.setdefault(find(k), set()).add(k)
    return {frozenset(g) for g in groups.values()}


def edge_count(c: TriangulatedComplex) -> int:
    """Edges of the quotient: one per pairing plus one per unpaired slot."""
    return len(c.pairings) + (3 * c.n_triangles - 2 * len(c.pairings))


def euler_characteristic(c: TriangulatedComplex) -> int:
    return len(vertex_classes(c)) - edge_count(c) + c.n_triangles


def is_connected(c: TriangulatedComplex) -> bool:
    if c.n_triangles == 0:
        return True
    adj: dict[int, set[int]] = {t: set() for t in range(c.n_triangles)}
    for p in c.pairings:
        adj[p.a[0]].add(p.b[0])
        adj[p.b[0]].add(p.a[0])
    seen = {0}
    stack = [0]
    while stack:
        t = stack.pop()
        for u in adj[t]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == c.n_triangles


def orientability(c: TriangulatedComplex) -> bool:
    """True iff triangle orientations can be chosen consistently.

    A non-reversed pairing forces equal signs on its two triangles, a
    reversed one opposite signs; the complex is orientable iff the resulting
    constraint graph is consistent.
    """
    if not is_connected(c):
        raise ComplexError("orientability requires a connected complex")
    constraints: dict[int, list[tuple[int, int]]] = {
        t: [] for t in range(c.n_triangles)
    }
    for p in c.pairings:
        w = -1 if p.reversed else 1
        constraints[p.a[0]].append((p.b[0], w))
        constraints[p.b[0]].append((p.a[0], w))
    sign: dict[int, int] = {}
    for t0 in range(c.n_triangles):
        if t0 in sign:
            continue
        sign[t0] = 1
        stack = [t0]
        while stack:
            t = stack.pop()
            for u, w in constraints[t]:
                want = sign[t] * w
                if u not in sign:
                    sign[u] = want
                    stack.append(u)
                elif sign[u] != want:
                    return False
    return True


def boundary_components(c: TriangulatedComplex) -> list[BoundaryComponent]:
    """Boundary circles in deterministic order (by smallest slot).

    Traversal: follow a boundary edge to its far vertex, rotate around that
    vertex through the interior, and continue along the unpaired side on
    which the rotation terminates.
    """
    pmap = c.pairing_map()
    classes = vertex_classes(c)
    corner_class: dict[Corner, int] = {}
    for idx, vc in enumerate(classes):
        for k in vc.corners:
            corner_class[k] = idx

    def next_edge(slot: Slot, direction: int) -> tuple[Slot, int]:
        t, s = slot
        # end corner of the traversal, then rotate inward across the end
        # corner's other incident side until an unpaired side appears
        cend = (s + 1) % 3 if direction == 1 else s
        other = (cend - 1) % 3 if s == cend else cend
        t1, c1, s1 = t, cend, other
        while True:
            nxt = _cross(pmap, t1, c1, s1)
            if nxt is None:
                new_dir = 1 if c1 == s1 else -1
                return (t1, s1), new_dir
            t1, c1, s_in = nxt
            s1 = c1 if s_in == (c1 - 1) % 3 else (c1 - 1) % 3

    remaining = set(c.boundary_slots())
    comps: list[BoundaryComponent] = []
    while remaining:
        start = min(remaining)
        slots = [start]
        dirs = [1]
        cur, d = next_edge(start, 1)
        while (cur, d) != (start, 1):
            slots.append(cur)
            dirs.append(d)
            cur, d = next_edge(cur, d)
        for s in slots:
            remaining.discard(s)
        vids = set()
        for slot, d in zip(slots, dirs):
            t, s = slot
            tail = s if d == 1 else (s + 1) % 3
            vids.add(corner_class[(t, tail)])
        comps.append(
            BoundaryComponent(
                slots=tuple(slots), directions=tuple(dirs), vertex_count=len(vids)
            )
        )
    comps.sort(key=lambda bc: bc.slots[0])
    return comps


def genus(c: TriangulatedComplex) -> tuple[int, bool, int]:
    """(genus, orientable, boundary component count), consistent with the
    Euler characteristic: chi = 2 - 2g - b (orientable), 2 - g - b (not)."""
    if not is_connected(c):
        raise ComplexError("genus requires a connected complex")
    chi = euler_characteristic(c)
    b = len(boundary_components(c))
    ori = orientability(c)
    if ori:
        num = 2 - chi - b
        if num % 2 != 0 or num < 0:
            raise ComplexError(f"no orientable surface with chi={chi}, b={b}")
        return num // 2, True, b
    g = 2 - chi - b
    if g < 1:
        raise ComplexError(f"no non-orientable surface with chi={chi}, b={b}")
    return g, False, b


# -- structural edits ---------------------------------------------------


def disjoint_union(
    c1: TriangulatedComplex, c2: TriangulatedComplex
) -> tuple[TriangulatedComplex, int]:
    """Union with c2's triangles shifted up; returns (complex, shift)."""
    shift = c1.n_triangles
    pairings = list(c1.pairings) + [
        Pairing((p.a[0] + shift, p.a[1]), (p.b[0] + shift, p.b[1]), p.reversed)
        for p in c2.pairings
    ]
    marked = set(c1.marked) | {(t + shift, k) for t, k in c2.marked}
    return (
        TriangulatedComplex(c1.n_triangles + c2.n_triangles, tuple(pairings), frozenset(marked)),
        shift,
    )


def add_pairings(
    c: TriangulatedComplex, new: list[tuple[Slot, Slot, bool]]
) -> TriangulatedComplex:
    pairings = list(c.pairings) + [Pairing(a, b, rev) for a, b, rev in new]
    return TriangulatedComplex(c.n_triangles, tuple(pairings), c.marked)


def remove_pairing(c: TriangulatedComplex, slot: Slot) -> TriangulatedComplex:
    p = c.pairing_of(slot)
    pairings = tuple(q for q in c.pairings if q != p)
    return TriangulatedComplex(c.n_triangles, pairings, c.marked)


def seam_pairings(
    bc1: BoundaryComponent, bc2: BoundaryComponent, offset: int, reverse: bool
) -> list[tuple[Slot, Slot, bool]]:
    """Pairings identifying two boundary circles of equal length.

    With ``reverse=False`` the circles are identified with opposite
    traversal (the usual way to glue two surface boundaries); vertex
    position i of bc1 lands on position offset - i of bc2. With
    ``reverse=True`` traversals align and position i lands on offset + i.
    """
    m = len(bc1)
    if len(bc2) != m:
        raise ComplexError(
            f"boundary lengths differ: {m} vs {len(bc2)}"
        )
    out = []
    for i in range(m):
        if reverse:
            j = (offset + i) % m
            rev = bc1.directions[i] == bc2.directions[j]
        else:
            j = (offset - 1 - i) % m
            rev = bc1.directions[i] != bc2.directions[j]
        out.append((bc1.slots[i], bc2.slots[j], rev))
    return out


@dataclass(frozen=True)
class GlueResult:
    complex: TriangulatedComplex
    seam: tuple[tuple[Slot, int], ...]
    shift: int


def glue(
    c1: TriangulatedComplex,
    bc1: BoundaryComponent,
    c2: TriangulatedComplex,
    bc2: BoundaryComponent,
    offset: int = 0,
    reverse: bool = False,
) -> GlueResult:
    """Join two complexes along full boundary components.

    The seam records the glued edges as (c1-side slot, traversal direction)
    in bc1 order, for later reference (curve registries, unzipping).
    """
    combined, shift = disjoint_union(c1, c2)
    bc2_shifted = BoundaryComponent(
        slots=tuple((t + shift, s) for t, s in bc2.slots),
        directions=bc2.directions,
        vertex_count=bc2.vertex_count,
    )
    new = seam_pairings(bc1, bc2_shifted, offset, reverse)
    glued = add_pairings(combined, new)
    seam = tuple(zip(bc1.slots, bc1.directions))
    return GlueResult(glued, seam, shift)


def self_glue(
    c: TriangulatedComplex,
    bc1: BoundaryComponent,
    bc2: BoundaryComponent,
    offset: int = 0,
    reverse: bool = False,
) -> GlueResult:
    """Identify two distinct boundary components of one complex."""
    if set(bc1.slots) & set(bc2.slots):
        raise ComplexError("boundary components overlap")
    new = seam_pairings(bc1, bc2, offset, reverse)
    return GlueResult(add_pairings(c, new), tuple(zip(bc1.slots, bc1.directions)), 0)


def reflect_triangle(
    c: TriangulatedComplex, t: int
) -> tuple[TriangulatedComplex, dict[Slot, Slot], dict[Corner, Corner]]:
    """Relabel triangle t by the corner swap 0 <-> 1, reversing its
    orientation. Sides map 0->0, 1->2, 2->1 with direction reversed, so
    every pairing at t has its flag toggled."""
    corner_map = {(t, 0): (t, 1), (t, 1): (t, 0), (t, 2): (t, 2)}
    side_map = {(t, 0): (t, 0), (t, 1): (t, 2), (t, 2): (t, 1)}

    def ms(slot: Slot) -> Slot:
        return side_map.get(slot, slot)

    pairings = []
    for p in c.pairings:
        touched = p.a[0] == t or p.b[0] == t
        rev = p.reversed
        if p.a[0] == t:
            rev = not rev
        if p.b[0] == t:
            rev = not rev
        pairings.append(Pairing(ms(p.a), ms(p.b), rev))
    marked = frozenset(corner_map.get(k, k) for k in c.marked)
    return (
        TriangulatedComplex(c.n_triangles, tuple(pairings), marked),
        side_map,
        corner_map,
    )


def flip_edge(
    c: TriangulatedComplex, slot: Slot
) -> tuple[TriangulatedComplex, dict[Slot, Slot]]:
    """Flip the interior edge containing ``slot``: replace it by the other
    diagonal of the quadrilateral formed by its two (distinct) triangles.

    Returns the new complex and a rename map for the quadrilateral's four
    outer slots, so callers can track pairings across the flip. Each edge
    endpoint loses one corner at its vertex and each opposite corner gains
    one.
    """
    pmap = c.pairing_map()
    if slot not in pmap:
        raise ComplexError(f"cannot flip boundary slot {slot}")
    p = c.pairing_of(slot)
    if p.a[0] == p.b[0]:
        raise ComplexError(f"cannot flip a self-paired triangle: {p}")
    rename_pre: dict[Slot, Slot] = {}
    if p.reversed:
        c, side_map, _ = reflect_triangle(c, p.b[0])
        rename_pre = dict(side_map)
        p = c.pairing_of(rename_pre.get(slot, slot))
        assert not p.reversed
    (t, s), (t2, s2) = p.a, p.b

    def old_t(side):
        return (t, (s + side) % 3)

    def old_t2(side):
        return (t2, (s2 + side) % 3)

    rename = {
        old_t(1): (t2, 1),
        old_t(2): (t, 0),
        old_t2(1): (t, 1),
        old_t2(2): (t2, 0),
    }
    corner_rename = {
        (t, s): (t, 1),
        (t, (s + 1) % 3): (t2, 1),
        (t, (s + 2) % 3): (t, 0),
        (t2, s2): (t2, 1),
        (t2, (s2 + 1) % 3): (t, 1),
        (t2, (s2 + 2) % 3): (t, 2),
    }
    pairings = [Pairing((t, 2), (t2, 2), False)]
    for q in c.pairings:
        if q == p:
            continue
        pairings.append(
            Pairing(rename.get(q.a, q.a), rename.get(q.b, q.b), q.reversed)
        )
    marked = frozenset(corner_rename.get(k, k) for k in c.marked)
    flipped = TriangulatedComplex(c.n_triangles, tuple(pairings), marked)
    total = {k: rename.get(v, v) for k, v in rename_pre.items()}
    for k, v in rename.items():
        total.setdefault(k, v)
    return flipped, total


def validate_marked(c: TriangulatedComplex) -> list[VertexClass]:
    """Check that every marked vertex has triangle valence one; returns the
    marked classes. Raises listing the offending vertices otherwise."""
    bad = []
    out = []
    for vc in vertex_classes(c):
        if not vc.marked:
            continue
        out.append(vc)
        if vc.triangle_valence != 1:
            bad.append(vc)
    if bad:
        raise ComplexError(
            "marked vertices with valence != 1: "
            + ", ".join(str(sorted(vc.corners)) for vc in bad)
        )
    return out


def valence_by_class(c: TriangulatedComplex) -> dict[tuple[Corner, ...], int]:
    return {vc.corners: vc.triangle_valence for vc in vertex_classes(c)}


def nonmarked_valences(c: TriangulatedComplex) -> list[int]:
    """Triangle valences of the non-marked vertices, sorted."""
    return sorted(
        vc.triangle_valence for vc in vertex_classes(c) if not vc.marked
    )

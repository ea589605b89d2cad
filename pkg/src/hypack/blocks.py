"""Triangulated building blocks: holed spheres and tori, one- and two-holed
genus-g pieces, their non-orientable counterparts, and the marked disks that
carry cusp vertices.

Every constructor returns a TriangulatedComplex whose boundary-vertex counts
and uniform triangle valences are the block's contract (tested exhaustively):

==================  ============  =========================
block               vertices/bc   triangle valence
==================  ============  =========================
annulus             1, 2, 3       3
three-holed sphere  2             4
four-holed sphere   3             4
six-holed sphere    2             5
Sigma_{g,1}         1 / 2 / 3     12g-3 / 6g / 4g+1
Sigma_{g,2}         1 / 2 / 3     6g+3 / 3g+3 / 2g+3
Sigma_{1,b}         1 / 2 / 3     9 / 6 / 5
three-holed RP^2    2             5
Upsilon_{g,1}       1 / 2 / 3     6g-3 / 3g (g>=2) / 2g+1
==================  ============  =========================

A one-holed projective plane with two boundary vertices of equal valence 3
does not exist (an exhaustive check of two-triangle complexes shows the
Moebius band only supports valence splits (4,2) and (5,1)), so
``upsilon_g1(1, 2)`` raises; ``mobius_42`` and the two-holed projective
planes below cover the places where such a block would have been used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from hypack.complexes import (
    ComplexError,
    Pairing,
    Slot,
    TriangulatedComplex,
    disjoint_union,
    flip_edge,
)

# ---------------------------------------------------------------------------
# polygon scaffolding


class _Registry:
    """Slot registry that survives flips by applying their rename maps."""

    def __init__(self):
        self.slots: dict[object, Slot] = {}

    def put(self, key, slot: Slot):
        self.slots[key] = slot

    def get(self, key) -> Slot:
        return self.slots[key]

    def flip(self, c: TriangulatedComplex, key) -> TriangulatedComplex:
        slot = self.slots[key]
        p = c.pairing_of(slot)
        dead = {p.a, p.b}
        c2, rename = flip_edge(c, slot)
        self.slots = {
            k: rename.get(s, s) for k, s in self.slots.items() if s not in dead
        }
        return c2

    def flip_slot(self, c: TriangulatedComplex, slot: Slot) -> TriangulatedComplex:
        c2, rename = flip_edge(c, slot)
        self.slots = {k: rename.get(s, s) for k, s in self.slots.items()}
        return c2


@dataclass
class _PolyComplex:
    complex: TriangulatedComplex
    registry: _Registry


def _polygon(names: list, triangles: list[tuple], identifications: list[tuple]) -> _PolyComplex:
    """Complex from a triangulated polygon with some boundary edges glued.

    ``names``: polygon vertex names in counterclockwise order. ``triangles``:
    name triples; each is normalized to counterclockwise (cyclic position)
    order. ``identifications``: ((X, Y), (Z, W), preserve) glues boundary
    edge X->Y to Z->W; ``preserve=True`` matches X to Z (tails together, the
    cross-cap style gluing), ``preserve=False`` matches X to W.

    Interior (diagonal) edges are paired automatically. The registry maps
    each ordered boundary name pair to its slot.
    """
    pos = {v: i for i, v in enumerate(names)}
    tris = []
    side_of: dict[tuple, Slot] = {}
    for raw in triangles:
        a, b, c = sorted(raw, key=lambda v: pos[v])
        t = len(tris)
        tris.append((a, b, c))
        for s, (x, y) in enumerate(((a, b), (b, c), (c, a))):
            if (x, y) in side_of:
                raise ComplexError(f"duplicate ordered side {(x, y)}")
            side_of[(x, y)] = (t, s)
    pairings: list[Pairing] = []
    used: set[Slot] = set()
    # interior diagonals: both orientations of the same unordered pair occur
    for (x, y), slot in side_of.items():
        other = side_of.get((y, x))
        if other is not None and slot < other:
            pairings.append(Pairing(slot, other, False))
            used.update((slot, other))
    reg = _Registry()
    for (x, y), slot in side_of.items():
        if slot not in used:
            reg.put((x, y), slot)
    for (xy, zw, preserve) in identifications:
        # entries stay in the registry so glued polygon edges remain
        # addressable as flip targets
        pairings.append(Pairing(reg.get(xy), reg.get(zw), preserve))
    return _PolyComplex(TriangulatedComplex(len(tris), tuple(pairings)), reg)


def _fan(names: list, apex, rim: list) -> list[tuple]:
    """Triangles (apex, rim[i], rim[i+1])."""
    return [(apex, rim[i], rim[i + 1]) for i in range(len(rim) - 1)]


# ---------------------------------------------------------------------------
# holed spheres


def annulus(vertices_per_boundary: int) -> TriangulatedComplex:
    """Annulus with 1, 2, or 3 vertices per boundary circle, all valence 3.

    The one-vertex form is a square with two opposite sides identified; the
    others are closed triangulated bands of width one.
    """
    b = vertices_per_boundary
    if b == 1:
        return TriangulatedComplex(
            2, (Pairing((0, 0), (1, 0), False), Pairing((0, 1), (1, 1), False))
        )
    if b not in (2, 3):
        raise ComplexError(f"annulus supports 1-3 vertices per boundary, got {b}")
    # bottom vertices A_i, top B_i; triangles U_i=(A_i,A_{i+1},B_{i+1}),
    # L_i=(A_i,B_{i+1},B_i); struts pair U and L around the band
    pairings = []
    for i in range(b):
        u, l = 2 * i, 2 * i + 1
        l_next = 2 * ((i + 1) % b) + 1
        pairings.append(Pairing((u, 2), (l, 0), False))  # A_i--B_{i+1}
        pairings.append(Pairing((u, 1), (l_next, 2), False))  # A_{i+1}--B_{i+1}
    return TriangulatedComplex(2 * b, tuple(pairings))


_SIGMA03_TRIS = [
    ("Lt", "Rt", "N"),
    ("Lb", "Rb", "S"),
    ("Lt", "Lb", "Rt"),
    ("Lb", "Rb", "Rt"),
    ("N", "Rt", "Rb"),
    ("N", "S", "Rb"),
    ("N", "Lt", "S"),
    ("S", "Lt", "Lb"),
]

_SIGMA03_EDGES = [
    ("Lt", "Rt"), ("Rt", "N"), ("N", "Lt"),
    ("Lb", "Rb"), ("Rb", "S"), ("S", "Lb"),
    ("Lb", "Rt"), ("Rb", "N"), ("Lt", "S"),
]


def _named_complex(tris: list[tuple], interior_edges: list[tuple]) -> TriangulatedComplex:
    """Complex from named triangles (counterclockwise corner order) gluing
    exactly the listed interior edges; the gluing matches vertex names."""
    side_of: dict[tuple, list[Slot]] = {}
    for t, tri in enumerate(tris):
        for s in range(3):
            x, y = tri[s], tri[(s + 1) % 3]
            side_of.setdefault((x, y), []).append((t, s))
    pairings = []
    for x, y in interior_edges:
        fwd = side_of.get((x, y), [])
        bwd = side_of.get((y, x), [])
        if len(fwd) + len(bwd) != 2:
            raise ComplexError(f"edge {(x, y)} occurs {len(fwd) + len(bwd)} times")
        if len(fwd) == 1 and len(bwd) == 1:
            pairings.append(Pairing(fwd[0], bwd[0], False))
        elif len(fwd) == 2:
            pairings.append(Pairing(fwd[0], fwd[1], True))
        else:
            pairings.append(Pairing(bwd[0], bwd[1], True))
    return TriangulatedComplex(len(tris), tuple(pairings))


def three_holed_sphere() -> TriangulatedComplex:
    """Sigma_{0,3} with two vertices per boundary circle, all valence 4."""
    return _named_complex(_SIGMA03_TRIS, _SIGMA03_EDGES)


_SIGMA04_TRIS = [
    ("Lr", "Rl", "Tb"),
    ("Tb", "Rl", "Tr"), ("Lr", "Tb", "Ll"), ("Rl", "Lr", "Rb"),
    ("Rl", "Rr", "Tr"), ("Tb", "Tl", "Ll"), ("Lr", "Lb", "Rb"),
    ("N", "Tr", "Rr"), ("SW", "Ll", "Tl"), ("SE", "Rb", "Lb"),
    ("N", "Tl", "Tr"), ("SW", "Lb", "Ll"), ("SE", "Rr", "Rb"),
    ("N", "Tl", "SW"), ("SW", "Lb", "SE"), ("SE", "Rr", "N"),
]

_SIGMA04_EDGES = [
    ("Lr", "Rl"), ("Rl", "Tb"), ("Tb", "Lr"),
    ("Tl", "N"), ("N", "Tr"), ("Ll", "SW"), ("SW", "Lb"), ("Rr", "SE"), ("SE", "Rb"),
    ("Rr", "Tr"), ("Tl", "Ll"), ("Lb", "Rb"),
    ("Rr", "N"), ("Tl", "SW"), ("Lb", "SE"),
    ("Lr", "Rb"), ("Rl", "Tr"), ("Tb", "Ll"),
]


def four_holed_sphere() -> TriangulatedComplex:
    """Sigma_{0,4} with three vertices per boundary circle, all valence 4."""
    return _named_complex(_SIGMA04_TRIS, _SIGMA04_EDGES)


_DODECAGON_TRIS = [
    (1, 2, 3), (1, 3, 4), (0, 1, 4), (0, 4, 8), (4, 5, 8),
    (5, 6, 7), (5, 7, 8), (0, 8, 9), (9, 10, 11), (0, 9, 11),
]


def _dodecagon(copy: int) -> tuple[list[tuple], dict[tuple, tuple]]:
    """Named triangles of the triangulated dodecagon, names (copy, i)."""
    return [tuple((copy, v) for v in tri) for tri in _DODECAGON_TRIS]


def six_holed_sphere() -> TriangulatedComplex:
    """Sigma_{0,6}: two triangulated dodecagons glued along alternating
    edges, two vertices per boundary circle, all valence 5."""
    poly1 = _polygon(list(range(12)), _DODECAGON_TRIS, [])
    c1, r1 = poly1.complex, poly1.registry
    combined, shift = disjoint_union(c1, c1)
    pairings = list(combined.pairings)
    for i in range(0, 12, 2):
        # edge e_i runs v_{i-1} -> v_i; glue copy-1 e_i to copy-2 e_{i+6}
        # preserving direction (v_i to v_{i+6})
        a = r1.get(((i - 1) % 12, i))
        b2 = r1.get(((i + 5) % 12, (i + 6) % 12))
        pairings.append(Pairing(a, (b2[0] + shift, b2[1]), True))
    return TriangulatedComplex(combined.n_triangles, tuple(pairings))


def three_holed_projective_plane() -> TriangulatedComplex:
    """Quotient of the six-holed sphere by its free involution: one
    dodecagon with e_i glued to e_{i+6} preserving direction; non-orientable,
    two vertices per boundary circle, all valence 5."""
    ident = []
    for i in (0, 2, 4):
        ident.append(
            ((((i - 1) % 12), i), (((i + 5) % 12), (i + 6) % 12), True)
        )
    return _polygon(list(range(12)), _DODECAGON_TRIS, ident).complex


# ---------------------------------------------------------------------------
# one- and two-holed orientable pieces


def _sigma_g1_polygon(g: int, inserted: int) -> _PolyComplex:
    """(4g+1)-gon with the standard genus-g identifications on its first 4g
    edges and 0, 1, or 2 vertices inserted in the free edge."""
    names: list = list(range(4 * g + 1))
    if inserted == 1:
        names.append("w")
    elif inserted == 2:
        names += ["w", "u"]
    ident = []
    for i in range(0, 4 * g, 4):
        ident.append(((i, i + 1), (i + 2, i + 3), False))
        ident.append(((i + 1, i + 2), (i + 3, (i + 4) % (4 * g + 1)), False))
    if inserted == 0:
        tris = _fan(names, 0, list(range(1, 4 * g + 1)))
    elif inserted == 1:
        tris = _fan(names, "w", list(range(0, 4 * g + 1)))
    else:
        tris = _fan(names, "u", list(range(0, 2 * g + 1)))
        tris += _fan(names, "w", list(range(2 * g, 4 * g + 1)))
        tris.append(("w", "u", 2 * g))
    return _polygon(names, tris, ident)


def sigma_g1(g: int, vertices_per_boundary: int) -> TriangulatedComplex:
    """One-holed orientable genus-g surface, all vertices on the boundary,
    uniform triangle valence 12g-3, 6g, or 4g+1."""
    if g < 1:
        raise ComplexError(f"sigma_g1 needs g >= 1, got {g}")
    b = vertices_per_boundary
    if b == 1:
        return _sigma_g1_polygon(g, 0).complex
    if b == 2:
        pc = _sigma_g1_polygon(g, 1)
        c = pc.complex
        flips = [i for i in range(4 * g) if i % 4 in (0, 1)][: g]
        for i in flips:
            c = pc.registry.flip(c, (i, i + 1))
        return c
    if b == 3:
        pc = _sigma_g1_polygon(g, 2)
        c = pc.complex
        for i in [i for i in range(4 * g) if i % 4 in (0, 1)]:
            c = pc.registry.flip(c, (i, i + 1))
        return c
    raise ComplexError(f"sigma_g1 supports 1-3 vertices per boundary, got {b}")


def _sigma_g2_polygon(g: int, inserted: int) -> _PolyComplex:
    n = g + 1
    m = 4 * n
    if inserted == 0:
        names: list = list(range(m))
        tris = _fan(names, 0, list(range(2 * n + 1, m)))
        tris += _fan(names, 2 * n, list(range(1, 2 * n)))
        tris.append((1, 2 * n, 2 * n + 1))
        tris.append((0, 1, 2 * n + 1))
    elif inserted == 1:
        names = [0, "w0"] + list(range(1, 2 * n + 1)) + ["w1"] + list(
            range(2 * n + 1, m)
        )
        tris = [("w0", "w1", 2 * n + 1)]
        tris += _fan(names, "w0", list(range(2 * n + 1, m)) + [0])
        tris += _fan(names, "w1", list(range(1, 2 * n + 1)))
        tris.append(("w0", 1, "w1"))
    else:
        names = [0, "u0", "w0"] + list(range(1, 2 * n + 1)) + ["u1", "w1"] + list(
            range(2 * n + 1, m)
        )
        tris = _fan(names, "w0", list(range(1, n + 1)))
        tris += _fan(names, "u1", list(range(n + 1, 2 * n + 1)))
        tris += _fan(names, "w1", list(range(2 * n + 1, 3 * n + 1)))
        tris += _fan(names, "u0", list(range(3 * n + 1, m)) + [0])
        tris += [
            ("u0", "w0", "w1"),
            ("w0", "u1", "w1"),
            ("w0", n, "u1"),
            (n, n + 1, "u1"),
            ("u0", "w1", 3 * n),
            ("u0", 3 * n, 3 * n + 1),
        ]
    ident = []
    for k in range(1, 2 * n):
        ident.append(((k, k + 1), ((k + 2 * n) % m, (k + 2 * n + 1) % m), False))
    return _polygon(names, tris, ident)


def sigma_g2(g: int, vertices_per_boundary: int) -> TriangulatedComplex:
    """Two-holed orientable genus-g surface, uniform valence 6g+3, 3g+3, or
    2g+3 for 1, 2, or 3 vertices per boundary circle."""
    if g < 0:
        raise ComplexError(f"sigma_g2 needs g >= 0, got {g}")
    if g == 0:
        return annulus(vertices_per_boundary)
    n = g + 1
    b = vertices_per_boundary
    if b == 1:
        return _sigma_g2_polygon(g, 0).complex
    if b == 2:
        pc = _sigma_g2_polygon(g, 1)
        c = pc.complex
        for i in range(1, n):
            c = pc.registry.flip(c, (i, i + 1))
        return c
    if b == 3:
        pc = _sigma_g2_polygon(g, 2)
        c = pc.complex
        for i in range(1, 2 * n):
            if i == n:
                continue
            c = pc.registry.flip(c, (i, i + 1))
        return c
    raise ComplexError(f"sigma_g2 supports 1-3 vertices per boundary, got {b}")


# ---------------------------------------------------------------------------
# non-orientable pieces


def _upsilon_polygon(g: int, inserted: int) -> _PolyComplex:
    """(2g+1)-gon with e_i glued to e_{i+1} preserving direction for even
    i < 2g, plus 0, 1, or 2 vertices in the free edge."""
    m = 2 * g + 1
    names: list = list(range(m))
    if inserted == 1:
        names.append("w")
    elif inserted == 2:
        names += ["u", "w"]
    ident = []
    for i in range(0, 2 * g, 2):
        ident.append(((i, i + 1), (i + 1, (i + 2) % m), True))
    if inserted == 0:
        tris = _fan(names, 0, list(range(1, m)))
    elif inserted == 1:
        tris = _fan(names, "w", list(range(0, m)))
    else:
        j = g
        tris = _fan(names, "w", list(range(0, j + 1)))
        tris += _fan(names, "u", list(range(j, m)))
        tris.append((j, "u", "w"))
    return _polygon(names, tris, ident)


def upsilon_g1(g: int, vertices_per_boundary: int) -> TriangulatedComplex:
    """One-holed non-orientable genus-g surface, uniform valence 6g-3, 3g,
    or 2g+1.

    The two-vertex form requires g >= 2: a Moebius band (g = 1) triangulated
    by two triangles only supports the valence splits (4, 2) and (5, 1).
    """
    if g < 1:
        raise ComplexError(f"upsilon_g1 needs g >= 1, got {g}")
    b = vertices_per_boundary
    if b == 1:
        return _upsilon_polygon(g, 0).complex
    if b == 2:
        if g == 1:
            raise ComplexError(
                "upsilon_g1(1, 2) does not exist: no two-triangle Moebius band "
                "has two boundary vertices of equal valence"
            )
        pc = _upsilon_polygon(g, 1)
        c = pc.complex
        n_pair_flips = (g + 1) // 2 if g % 2 else g // 2
        for j in range(n_pair_flips):
            c = pc.registry.flip(c, (2 * j, 2 * j + 1))
        if g % 2:
            # one diagonal flip w--v_j rebalances the odd case; the diagonal
            # is side 2 of fan triangle (v_j, v_{j+1}, w)
            j = 2 * n_pair_flips + 1
            c = pc.registry.flip_slot(c, (j, 2))
        return c
    if b == 3:
        pc = _upsilon_polygon(g, 2)
        c = pc.complex
        j = g
        if g % 2:
            aw = [m for m in range(g) if 2 * m + 1 <= j - 2][: (g - 1) // 2]
            au = [m for m in range(g) if 2 * m >= j + 1][-((g - 1) // 2):] if g > 1 else []
            straddle = [(g - 1) // 2]
        else:
            aw = list(range(g // 2))
            au = [m for m in range(g) if 2 * m >= j][: g // 2]
            straddle = []
        for m_ in aw + straddle + au:
            c = pc.registry.flip(c, (2 * m_, 2 * m_ + 1))
        return c
    raise ComplexError(f"upsilon_g1 supports 1-3 vertices per boundary, got {b}")


def mobius_42() -> TriangulatedComplex:
    """Moebius band with two boundary vertices of valences (4, 2): the
    extremal substitute for the nonexistent (3, 3) form."""
    return TriangulatedComplex(
        2, (Pairing((0, 0), (1, 0), False), Pairing((0, 1), (1, 1), True))
    )


# ---------------------------------------------------------------------------
# cyclic covers: b-holed tori and Klein bottles


def cyclic_cover(
    c: TriangulatedComplex, b: int, monodromy: dict[Slot, int]
) -> TriangulatedComplex:
    """b-fold cyclic cover: copy i of slot ``p.a`` is glued to copy
    (i + m) mod b of ``p.b`` for each pairing with monodromy m."""
    if b < 1:
        raise ComplexError(f"cover degree must be >= 1, got {b}")
    mono: dict[Pairing, int] = {}
    for slot, m in monodromy.items():
        mono[c.pairing_of(slot)] = m
    n = c.n_triangles
    pairings = []
    for p in c.pairings:
        m = mono.get(p, 0)
        for i in range(b):
            j = (i + m) % b
            pairings.append(
                Pairing((p.a[0] + i * n, p.a[1]), (p.b[0] + j * n, p.b[1]), p.reversed)
            )
    marked = frozenset(
        (t + i * n, k) for (t, k) in c.marked for i in range(b)
    )
    return TriangulatedComplex(b * n, tuple(pairings), marked)


def torus_b_holed(b: int, vertices_per_boundary: int) -> TriangulatedComplex:
    """b-holed torus as a cyclic cover of the one-holed torus, keeping the
    per-boundary vertex count and triangle valence (9, 6, or 5)."""
    if b < 1:
        raise ComplexError(f"torus_b_holed needs b >= 1, got {b}")
    vpb = vertices_per_boundary
    if b == 1:
        return sigma_g1(1, vpb)
    if vpb == 1:
        pc = _sigma_g1_polygon(1, 0)
        return cyclic_cover(pc.complex, b, {pc.registry.get((0, 1)): 1})
    if vpb == 2:
        pc = _sigma_g1_polygon(1, 1)
        c = pc.complex
        c = pc.registry.flip(c, (0, 1))
        return cyclic_cover(c, b, {pc.registry.get((1, 2)): 1})
    if vpb == 3:
        base = sigma_g1(1, 3)
        return _connected_cover(base, b, want_bcs=b, want_vpb=3)
    raise ComplexError(f"torus_b_holed supports 1-3 vertices per boundary")


def _connected_cover(
    base: TriangulatedComplex, b: int, want_bcs: int, want_vpb: int
) -> TriangulatedComplex:
    """Cyclic cover choosing the crossing pairing deterministically: the
    first pairing (in canonical order) whose cover is connected with the
    expected boundary structure."""
    from hypack import complexes as cx

    base_val = sorted(
        vc.triangle_valence for vc in cx.vertex_classes(base) if not vc.marked
    )
    for p in base.pairings:
        cover = cyclic_cover(base, b, {p.a: 1})
        if not cx.is_connected(cover):
            continue
        bcs = cx.boundary_components(cover)
        if len(bcs) != want_bcs or any(bc.vertex_count != want_vpb for bc in bcs):
            continue
        vals = sorted(
            vc.triangle_valence for vc in cx.vertex_classes(cover) if not vc.marked
        )
        if vals == sorted(base_val * b):
            return cover
    raise ComplexError("no single-pairing monodromy yields the expected cover")


def klein_b_holed(b: int) -> TriangulatedComplex:
    """b-holed Klein bottle (non-orientable genus 2) with one vertex per
    boundary circle, valence 9: a cyclic cover of the one-holed Klein
    bottle. Monodromy +1/-1 on the two cross-cap gluings keeps the boundary
    splitting into b circles for every b."""
    if b < 1:
        raise ComplexError(f"klein_b_holed needs b >= 1, got {b}")
    pc = _upsilon_polygon(2, 0)
    if b == 1:
        return pc.complex
    mono = {pc.registry.get((0, 1)): 1, pc.registry.get((2, 3)): -1}
    return cyclic_cover(pc.complex, b, mono)


# ---------------------------------------------------------------------------
# marked blocks: X_l, Y_l, Z_l


def marked_x(l: int) -> TriangulatedComplex:
    """Disk X_l: l marked interior vertices of valence one, one boundary
    vertex of valence 5l-3 (3l-3 plain corners plus 2l from marked
    triangles), 2l-1 triangles, single boundary edge.

    Built from a strip of l-1 plain triangles E_i with a marked triangle
    glued to every free strip edge except one edge of E_0; each marked
    triangle has its two cusp sides identified to each other.
    """
    if l < 1:
        raise ComplexError(f"marked_x needs l >= 1, got {l}")
    n_e = l - 1
    pairings: list[Pairing] = []
    marked: set[tuple[int, int]] = set()
    # strip: E_i side 2 to E_{i+1} side 0
    for i in range(n_e - 1):
        pairings.append(Pairing((i, 2), ((i + 1), 0), False))
    free: list[Slot] = []
    if n_e == 0:
        pass
    elif n_e == 1:
        free = [(0, 1), (0, 2)]  # skip (0, 0)
    else:
        free = [(0, 1)] + [(i, 1) for i in range(1, n_e - 1)] + [
            (n_e - 1, 1),
            (n_e - 1, 2),
        ]
    # marked triangles occupy ids n_e .. n_e + l - 1
    for j in range(l):
        h = n_e + j
        marked.add((h, 2))
        pairings.append(Pairing((h, 1), (h, 2), False))
        if j < len(free):
            pairings.append(Pairing((h, 0), free[j], False))
    return TriangulatedComplex(n_e + l, tuple(pairings), frozenset(marked))


def marked_y(l: int) -> TriangulatedComplex:
    """Disk Y_l: X_l with one more plain triangle on its boundary edge. The
    boundary becomes two edges sharing a valence-1 plain vertex; the other
    boundary vertex has valence 5l-1 (3l-1 plain corners)."""
    x = marked_x(l)
    boundary = x.boundary_slots()
    assert len(boundary) == 1
    e0 = x.n_triangles
    pairings = list(x.pairings) + [Pairing((e0, 0), boundary[0], False)]
    return TriangulatedComplex(e0 + 1, tuple(pairings), x.marked)


def y_free_vertex_slots(l: int) -> tuple[Slot, Slot]:
    """Boundary slots of Y_l: (side out of the free vertex's triangle).

    Slot (e0, 1) runs big-vertex -> free-vertex; (e0, 2) runs free -> big,
    where e0 is the added plain triangle (always the last id).
    """
    e0 = marked_x(l).n_triangles
    return (e0, 1), (e0, 2)


def marked_z(l: int) -> TriangulatedComplex:
    """Disk Z_l: two copies of Y_l joined along one boundary edge of each so
    that the valence-1 vertex of either copy lands on the big vertex of the
    other. Two boundary vertices, each with 3l plain and 2l marked-triangle
    corners; 2l marked interior vertices."""
    y = marked_y(l)
    combined, shift = disjoint_union(y, y)
    s1, _ = y_free_vertex_slots(l)
    s2 = (s1[0] + shift, s1[1])
    pairings = list(combined.pairings) + [Pairing(s1, s2, False)]
    return TriangulatedComplex(combined.n_triangles, tuple(pairings), combined.marked)


# ---------------------------------------------------------------------------
# two-holed projective planes (found by flip search, frozen here)


def _replay(base: _PolyComplex, flip_slots: list[Slot]) -> TriangulatedComplex:
    c = base.complex
    reg = base.registry
    for slot in flip_slots:
        c = reg.flip_slot(c, slot)
    return c


_UPSILON12_NAMES = [0, 1, 2, 3, 4, 5]
_UPSILON12_TRIS = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]
_UPSILON12_IDENT = [((0, 1), (1, 2), True), ((3, 4), (5, 0), False)]

# flip sequences discovered by bounded search (see tests for the frozen
# contracts they must satisfy)
_UPSILON12_1VTX_FLIPS: list[Slot] = []
_UPSILON12_3VTX_FLIPS: list[Slot] = []
_SIGMA11_75_FLIPS: list[Slot] = []


def upsilon_12(vertices_per_boundary: int) -> TriangulatedComplex:
    """Two-holed projective plane with 1 or 3 vertices per boundary circle
    and uniform valence 6 or 4."""
    raise NotImplementedError


def sigma_11_75() -> TriangulatedComplex:
    """One-holed torus, two boundary vertices with valences (7, 5): the
    partner of the (4, 2) Moebius band in valence-9 closed assemblies."""
    raise NotImplementedError

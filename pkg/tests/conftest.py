"""Shared fixtures: a corpus of small complexes with frozen homology, and a
standard decomposition of the octahedron with all three gradient fields
pinned by hand (so every weight and matrix it produces is reproducible).
"""
from __future__ import annotations

import random

import pytest

from morsemv import (
    HomologyResult,
    Simplex,
    SimplicialComplex,
    build_complex,
    build_decomposition,
)


# ---------------------------------------------------------------------------
# corpus


def octahedron() -> SimplicialComplex:
    """Boundary of the octahedron: the join {v0,v2} * {v1,v3} * {v4,v5}."""
    faces = [
        f"{p} {q} {r}"
        for p in ("v0", "v2")
        for q in ("v1", "v3")
        for r in ("v4", "v5")
    ]
    return build_complex(faces)


def seven_vertex_torus() -> SimplicialComplex:
    """Möbius–Kantor triangulation of the torus on 7 vertices."""
    faces = []
    for i in range(7):
        faces.append([f"v{i}", f"v{(i + 1) % 7}", f"v{(i + 3) % 7}"])
        faces.append([f"v{i}", f"v{(i + 2) % 7}", f"v{(i + 3) % 7}"])
    return build_complex(faces)


def klein_bottle() -> SimplicialComplex:
    """4x4 grid triangulation of the Klein bottle: horizontal edges wrap
    straight, the top row glues to the bottom with a flip."""

    def v(i: int, j: int) -> str:
        if i == 4:
            i = 0
        if j == 4:
            i, j = (4 - i) % 4, 0
        return f"v{i}{j}"

    faces = []
    for i in range(4):
        for j in range(4):
            faces.append([v(i, j), v(i + 1, j), v(i + 1, j + 1)])
            faces.append([v(i, j), v(i, j + 1), v(i + 1, j + 1)])
    return build_complex(faces)


def projective_plane() -> SimplicialComplex:
    """The 6-vertex triangulation of RP^2 (antipodal icosahedron)."""
    faces = ["1 2 3", "1 3 4", "1 4 5", "1 5 6", "1 2 6",
             "2 3 5", "3 4 6", "2 4 5", "3 5 6", "2 4 6"]
    return build_complex(faces)


def corpus_complexes() -> dict[str, SimplicialComplex]:
    simplex_boundary = lambda n: build_complex(
        [" ".join(f"v{i}" for i in range(n + 2) if i != k) for k in range(n + 2)]
    )
    return {
        "circle": build_complex(["v0 v1", "v1 v2", "v0 v2"]),
        "sphere2": simplex_boundary(2),
        "sphere3": simplex_boundary(3),
        "torus": seven_vertex_torus(),
        "klein": klein_bottle(),
        "rp2": projective_plane(),
        "wedge2circles": build_complex(
            ["v0 v1", "v1 v2", "v0 v2", "v0 v3", "v3 v4", "v0 v4"]
        ),
        "ball3": build_complex(["v0 v1 v2 v3"]),
        "two_points": build_complex(["p", "q"]),
    }


#: frozen homology, as (betti, torsion-orders) per degree
CORPUS_HOMOLOGY = {
    "circle": ((1, ()), (1, ())),
    "sphere2": ((1, ()), (0, ()), (1, ())),
    "sphere3": ((1, ()), (0, ()), (0, ()), (1, ())),
    "torus": ((1, ()), (2, ()), (1, ())),
    "klein": ((1, ()), (1, (2,)), (0, ())),
    "rp2": ((1, ()), (0, (2,)), (0, ())),
    "wedge2circles": ((1, ()), (2, ())),
    "ball3": ((1, ()),),
    "two_points": ((2, ()),),
}


def expected_homology(name: str) -> HomologyResult:
    return HomologyResult(CORPUS_HOMOLOGY[name])


@pytest.fixture(scope="session")
def corpus() -> dict[str, SimplicialComplex]:
    return corpus_complexes()


# ---------------------------------------------------------------------------
# the octahedron split along its equatorial square


def octahedron_pieces() -> tuple[SimplicialComplex, SimplicialComplex, SimplicialComplex]:
    """(X, A, B) where A is the upper cone (no v4), B the lower (no v5);
    A ∩ B is the equatorial square v0 v1 v2 v3."""
    x = octahedron()
    maximal = [" ".join(s.vertices) for s in x.maximal_simplices]
    a = build_complex([f for f in maximal if "v4" not in f.split()])
    b = build_complex([f for f in maximal if "v5" not in f.split()])
    return x, a, b


def octahedron_fields() -> dict[str, list[tuple[Simplex, Simplex]]]:
    """The pinned gradient fields: on A everything flows toward the apex v5,
    on B toward v4, and on the square three of the four edges are matched,
    leaving v2 and the edge v2 v3 critical."""
    w_a = [("v0", "v0 v5"), ("v1", "v1 v5"), ("v2", "v2 v5"), ("v3", "v3 v5"),
           ("v0 v1", "v0 v1 v5"), ("v1 v2", "v1 v2 v5"),
           ("v2 v3", "v2 v3 v5"), ("v0 v3", "v0 v3 v5")]
    w_b = [(s.replace("v5", "v4"), t.replace("v5", "v4")) for s, t in w_a]
    w_i = [("v3", "v0 v3"), ("v0", "v0 v1"), ("v1", "v1 v2")]
    return {
        piece: [(Simplex(s), Simplex(t)) for s, t in pairs]
        for piece, pairs in (("A", w_a), ("B", w_b), ("I", w_i))
    }


@pytest.fixture(scope="session")
def oct_decomposition():
    x, a, b = octahedron_pieces()
    return build_decomposition(x, a, b, fields=octahedron_fields())


# ---------------------------------------------------------------------------
# random covers


def random_cover(
    x: SimplicialComplex, rng: random.Random
) -> tuple[SimplicialComplex, SimplicialComplex]:
    """Split the maximal simplices of `x` into two (possibly overlapping)
    nonempty groups; the union is always `x` by construction."""
    maximal = sorted(x.maximal_simplices)
    rng.shuffle(maximal)
    cut = rng.randint(1, len(maximal) - 1) if len(maximal) > 1 else 1
    a_part = list(maximal[:cut])
    b_part = list(maximal[cut:]) or [maximal[0]]
    # sometimes share a maximal simplex to fatten the intersection
    if len(maximal) > 1 and rng.random() < 0.5:
        a_part.append(rng.choice(b_part))
    return SimplicialComplex(a_part), SimplicialComplex(b_part)


def random_small_complex(rng: random.Random) -> SimplicialComplex:
    """A random complex on at most 10 vertices, dimension at most 3."""
    n = rng.randint(1, 10)
    names = [f"v{i}" for i in range(n)]
    generators = []
    for _ in range(rng.randint(1, 12)):
        size = rng.randint(1, min(4, n))
        generators.append(Simplex(rng.sample(names, size)))
    return SimplicialComplex(generators)

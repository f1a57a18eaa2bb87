"""Mechanical verification of the machinery behind the Mayer-Vietoris
complex, on any concrete decomposition.

The auxiliary complex X~ glues the tagged copies of A and B to a prism over
the intersection copy: the prism's bottom vertices reuse the names of the
intersection inside the A-copy and its top vertices those inside the B-copy,
so the gluing is by plain vertex-name identity.

Two gradient fields on X~ carry the theory:

* V pairs, over every base simplex alpha of the intersection, the cell
  b_member(alpha, r) with a_member(alpha, r) for r = 0..dim(alpha), leaving
  the bottom copy of alpha unpaired.  Its critical cells are exactly the
  A-copy plus the B-copy minus the intersection's top copy, the Thom-Smale
  boundary of (X~, V) is *equal* (not merely chain-equivalent) to the
  simplicial boundary of X under the evident renaming g, and its homology
  is the homology of X.

* W restricts to the chosen fields on the A- and B-copies and extends them
  over the prism interior: each intersection-field pair (alpha, beta)
  matches the interior cells over alpha and beta among themselves (two
  shapes, depending on whether the vertex dropped from beta is its first),
  and the interior cells over a critical gamma are matched among themselves
  leaving the single cell a_member(gamma, 0).  Critical cells of W then
  correspond one-to-one to the Mayer-Vietoris generators via the map f
  (identity on the A-/B-copies, ground simplex on interior cells), and for
  every pair of critical cells the gradient trajectories of (X~, W) match
  the MV trajectories of the decomposition in count and in weight multiset;
  the two boundary matrices agree entry by entry under f.

`check_iso_simplicial` and `check_main_iso` re-derive all of this on a given
decomposition and report each comparison separately, with counterexamples.
"""
from __future__ import annotations

from dataclasses import dataclass

from .complexes import PrismComplex, Simplex, SimplicialComplex, prism, union
from .errors import InternalConsistencyError, MorsemvError
from .homology import (
    IntegerChainComplex,
    homology,
    simplicial_chain_complex,
    simplicial_homology,
)
from .morse import GradientField, Trajectory, VectorField, trajectories_from
from .mv import (
    FROM_A,
    FROM_B,
    SHIFTED,
    Decomposition,
    MVGenerator,
    _generator,
    _max_degree,
    mv_boundary,
    mv_generators,
    mv_homology,
    mv_trajectories_from,
)

__all__ = [
    "XTilde",
    "WField",
    "CheckResult",
    "VerifyReport",
    "build_xtilde",
    "build_v_field",
    "check_iso_simplicial",
    "build_w_field",
    "check_main_iso",
    "classify_w_trajectory",
]


@dataclass(frozen=True)
class XTilde:
    """The glued complex A-copy u prism(intersection copy) u B-copy.
    `prism` is None when the intersection is empty (then X~ = A-copy |_| B-copy)."""

    decomposition: Decomposition
    complex: SimplicialComplex
    prism: PrismComplex | None
    interior: frozenset[Simplex]


def build_xtilde(d: Decomposition) -> XTilde:
    if d.iab_bar is None:
        return XTilde(d, union(d.a_bar.complex, d.b_bar.complex), None, frozenset())
    base = d.iab_bar.complex
    a_name = {v: d.a_bar.to_copy[d.iab_bar.from_copy[v]] for v in base.vertices}
    b_name = {v: d.b_bar.to_copy[d.iab_bar.from_copy[v]] for v in base.vertices}
    p = prism(base, a_name, b_name)
    glued = union(union(d.a_bar.complex, p.complex), d.b_bar.complex)
    return XTilde(d, glued, p, p.interior_cells())


def build_v_field(xt: XTilde) -> GradientField:
    """The collapse-the-prism field V on X~ (empty when there is no prism)."""
    pairs: list[tuple[Simplex, Simplex]] = []
    if xt.prism is not None:
        for alpha in xt.prism.base.simplices():
            for r in range(alpha.dim + 1):
                pairs.append((xt.prism.b_member(alpha, r), xt.prism.a_member(alpha, r)))
    return GradientField.certify(VectorField(pairs), xt.complex)


@dataclass(frozen=True)
class WField:
    """The combined field W on X~: the A- and B-copy fields plus the prism
    interior extension, with the interior bookkeeping kept for inspection."""

    gvf: GradientField
    prism_pairs: tuple[tuple[Simplex, Simplex], ...]
    interior_criticals: tuple[Simplex, ...]


def _prism_extension(xt: XTilde) -> tuple[list[tuple[Simplex, Simplex]], list[Simplex]]:
    """The interior pairs of W and the interior cells left critical."""
    d = xt.decomposition
    pairs: list[tuple[Simplex, Simplex]] = []
    criticals: list[Simplex] = []
    if xt.prism is None:
        return pairs, criticals
    p = xt.prism
    for alpha, beta in d.w_i.pairs:
        q = beta.dim
        (dropped,) = set(beta.vertices) - set(alpha.vertices)
        j = beta.vertices.index(dropped)
        if j == 0:
            pairs.append((p.a_member(alpha, 0), p.a_member(beta, 1)))
            pairs.append((p.b_member(beta, 1), p.a_member(beta, 0)))
            pairs.extend((p.b_member(beta, r), p.a_member(beta, r)) for r in range(2, q + 1))
        else:
            pairs.append((p.a_member(alpha, 0), p.a_member(beta, 0)))
            pairs.extend((p.b_member(beta, r), p.a_member(beta, r)) for r in range(1, q + 1))
        pairs.extend((p.b_member(alpha, r), p.a_member(alpha, r)) for r in range(1, q))
    for gamma in d.w_i.critical():
        pairs.extend(
            (p.b_member(gamma, r), p.a_member(gamma, r)) for r in range(1, gamma.dim + 1)
        )
        criticals.append(p.a_member(gamma, 0))
    return pairs, criticals


def build_w_field(xt: XTilde) -> WField:
    """Assemble W and certify it, checking the critical-cell census against
    the predicted one (A-copy criticals, B-copy criticals, one interior cell
    per intersection critical)."""
    d = xt.decomposition
    prism_pairs, interior_crit = _prism_extension(xt)
    all_pairs = list(d.w_a.pairs) + list(d.w_b.pairs) + prism_pairs
    gvf = GradientField.certify(VectorField(all_pairs), xt.complex)
    expected = set(d.w_a.critical()) | set(d.w_b.critical()) | set(interior_crit)
    actual = set(gvf.critical())
    if actual != expected:
        raise InternalConsistencyError(
            "W-field critical census mismatch: "
            f"unexpected {sorted(actual - expected)}, missing {sorted(expected - actual)}"
        )
    return WField(gvf, tuple(prism_pairs), tuple(interior_crit))


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def __str__(self) -> str:
        mark = "ok  " if self.ok else "FAIL"
        return f"{mark} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)


class _Checks:
    """Accumulator so each comparison lands in the report, pass or fail."""

    def __init__(self):
        self.results: list[CheckResult] = []

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.results.append(CheckResult(name, bool(ok), detail))
        return bool(ok)

    def report(self) -> VerifyReport:
        return VerifyReport(tuple(self.results))


def _g_image(xt: XTilde, s: Simplex) -> Simplex:
    """g: critical cells of V -> simplices of X (drop the copy tag)."""
    d = xt.decomposition
    if s in d.a_bar.complex:
        return d.a_bar.pull(s)
    return d.b_bar.pull(s)


def check_iso_simplicial(xt: XTilde) -> VerifyReport:
    """Compare (C_*(X), d) with the Thom-Smale complex of (X~, V) under g:
    critical-cell census, bijectivity of g, equality of every boundary
    matrix, and equality of homology."""
    d = xt.decomposition
    x = d.x
    checks = _Checks()
    try:
        v = build_v_field(xt)
        checks.add("v_field_certified", True, f"{len(v.pairs)} pairs, acyclic")
    except MorsemvError as e:
        checks.add("v_field_certified", False, str(e))
        return checks.report()

    top_b = (
        {d.b_bar.push(s) for s in d.iab.simplices()} if d.iab is not None else set()
    )
    expected = set(d.a_bar.complex.simplices()) | (
        set(d.b_bar.complex.simplices()) - top_b
    )
    actual = set(v.critical())
    checks.add(
        "v_critical_census",
        actual == expected,
        f"{len(actual)} critical cells"
        if actual == expected
        else f"unexpected {sorted(actual - expected)[:3]}, missing {sorted(expected - actual)[:3]}",
    )

    ok_bij = True
    detail = ""
    for q in range(x.dim + 1):
        images = sorted((_g_image(xt, s) for s in v.critical(q)), key=lambda s: s.key)
        if images != list(x.simplices(q)):
            ok_bij = False
            detail = f"g images in degree {q} do not match X"
            break
    checks.add("g_bijective", ok_bij, detail)
    if not (actual == expected and ok_bij):
        return checks.report()

    # Boundary matrices of the Thom-Smale complex, with each degree's
    # critical cells ordered by their g-image, against the simplicial ones.
    scc = simplicial_chain_complex(x)
    ordered = {
        q: sorted(v.critical(q), key=lambda s: _g_image(xt, s).key)
        for q in range(x.dim + 1)
    }
    matrices_ok = True
    detail = ""
    for q in range(1, x.dim + 1):
        rows = {s: i for i, s in enumerate(ordered[q - 1])}
        got = [[0] * len(ordered[q]) for _ in ordered[q - 1]]
        for j, tau in enumerate(ordered[q]):
            for sigma, paths in trajectories_from(v, tau).items():
                got[rows[sigma]][j] = sum(t.weight for t in paths)
        want = scc.boundary(q)
        if got != want:
            matrices_ok = False
            spots = [
                (i, j)
                for i in range(len(want))
                for j in range(len(want[0]) if want else 0)
                if got[i][j] != want[i][j]
            ]
            detail = f"degree {q} differs at entries {spots[:5]}"
            break
    checks.add("boundary_matrices_equal", matrices_ok, detail)

    hx = simplicial_homology(x)
    hv = homology(_thom_smale_in_order(v, ordered))
    checks.add(
        "homology_equal",
        hv == hx,
        str(hv) if hv == hx else f"X: {hx}  vs  (X~,V): {hv}",
    )
    return checks.report()


def _thom_smale_in_order(gvf: GradientField, ordered: dict[int, list[Simplex]]):
    top = max(ordered)
    ranks = [len(ordered.get(q, [])) for q in range(top + 1)]
    boundaries = []
    for q in range(1, top + 1):
        rows = {s: i for i, s in enumerate(ordered.get(q - 1, []))}
        m = [[0] * ranks[q] for _ in range(ranks[q - 1])]
        for j, tau in enumerate(ordered.get(q, [])):
            for sigma, paths in trajectories_from(gvf, tau).items():
                m[rows[sigma]][j] = sum(t.weight for t in paths)
        boundaries.append(m)
    return IntegerChainComplex(ranks, boundaries)


def _f_image(xt: XTilde, s: Simplex) -> MVGenerator:
    """f: critical cells of W -> MV generators."""
    d = xt.decomposition
    if s in d.a_bar.complex:
        return _generator(FROM_A, s)
    if s in d.b_bar.complex:
        return _generator(FROM_B, s)
    ground = xt.prism.ground_simplex(s)
    if s != xt.prism.a_member(ground, 0):
        raise InternalConsistencyError(
            f"interior critical cell {s} is not the distinguished cell over {ground}"
        )
    return _generator(SHIFTED, ground)


def classify_w_trajectory(xt: XTilde, t: Trajectory) -> int:
    """Which of the five shapes a W-trajectory between critical cells has.
    Raises InternalConsistencyError when it fits none (which would refute
    the classification the whole construction rests on)."""
    d = xt.decomposition
    in_a = lambda s: s in d.a_bar.complex
    in_b = lambda s: s in d.b_bar.complex
    inside = lambda s: s in xt.interior
    steps = t.steps
    if in_a(steps[0]):
        if all(in_a(s) for s in steps):
            return 1
        raise InternalConsistencyError("trajectory leaves the A-copy")
    if in_b(steps[0]):
        if all(in_b(s) for s in steps):
            return 2
        raise InternalConsistencyError("trajectory leaves the B-copy")
    if not inside(steps[0]):
        raise InternalConsistencyError(f"critical start {steps[0]} in no piece")
    if inside(steps[-1]):
        if all(inside(s) for s in steps):
            return 3
        raise InternalConsistencyError("interior trajectory leaves the interior")
    crossing = next(i for i, s in enumerate(steps) if not inside(s))
    tail = steps[crossing:]
    if crossing % 2 == 1 and (all(in_a(s) for s in tail) or all(in_b(s) for s in tail)):
        return 4 if in_a(steps[-1]) else 5
    raise InternalConsistencyError("mixed trajectory has no clean crossing")


def check_main_iso(xt: XTilde) -> VerifyReport:
    """Compare the Thom-Smale complex of (X~, W) with the Mayer-Vietoris
    complex of the decomposition under f: critical census, bijectivity of f,
    per-pair trajectory counts and weight multisets, trajectory
    classification, boundary matrices, and homology (against the direct
    simplicial computation as well)."""
    d = xt.decomposition
    checks = _Checks()
    try:
        wf = build_w_field(xt)
        checks.add("w_field_certified", True, f"{len(wf.gvf.pairs)} pairs, acyclic")
    except MorsemvError as e:
        checks.add("w_field_certified", False, str(e))
        return checks.report()

    gvf = wf.gvf
    top = max((s.dim for s in gvf.critical()), default=0)
    ok_f = True
    detail = ""
    f_of: dict[Simplex, MVGenerator] = {}
    try:
        for s in gvf.critical():
            f_of[s] = _f_image(xt, s)
    except InternalConsistencyError as e:
        ok_f, detail = False, str(e)
    if ok_f:
        for q in range(top + 1):
            images = sorted(
                (f_of[s] for s in gvf.critical(q)), key=lambda g: g.sort_key
            )
            if images != list(mv_generators(d, q)):
                ok_f = False
                detail = f"f images in degree {q} do not match the generators"
                break
    checks.add("f_bijective_onto_generators", ok_f, detail)
    if not ok_f:
        return checks.report()

    counts_ok = weights_ok = classes_ok = True
    c_detail = w_detail = k_detail = ""
    pairs_compared = 0
    for q in range(1, top + 1):
        for tau in gvf.critical(q):
            gamma = trajectories_from(gvf, tau)
            mv = mv_trajectories_from(d, f_of[tau])
            for sigma in gvf.critical(q - 1):
                g_list = gamma.get(sigma, [])
                m_list = mv.get(f_of[sigma], [])
                pairs_compared += 1
                if counts_ok and len(g_list) != len(m_list):
                    counts_ok = False
                    c_detail = (
                        f"{f_of[tau]} -> {f_of[sigma]}: "
                        f"{len(g_list)} trajectories upstairs, {len(m_list)} in MV"
                    )
                if weights_ok and sorted(t.weight for t in g_list) != sorted(
                    t.weight for t in m_list
                ):
                    weights_ok = False
                    w_detail = f"{f_of[tau]} -> {f_of[sigma]}: weight multisets differ"
                if classes_ok:
                    try:
                        up = sorted(classify_w_trajectory(xt, t) for t in g_list)
                    except InternalConsistencyError as e:
                        up, classes_ok, k_detail = None, False, str(e)
                    if up is not None and up != sorted(t.case for t in m_list):
                        classes_ok = False
                        k_detail = f"{f_of[tau]} -> {f_of[sigma]}: case multisets differ"
    checks.add(
        "trajectory_counts_match",
        counts_ok,
        c_detail or f"{pairs_compared} critical pairs compared",
    )
    checks.add("trajectory_weights_match", weights_ok, w_detail)
    checks.add("trajectory_classification", classes_ok, k_detail)

    ordered = {
        q: sorted(gvf.critical(q), key=lambda s: f_of[s].sort_key)
        for q in range(top + 1)
    }
    matrices_ok = True
    detail = ""
    for q in range(1, max(top, _max_degree(d)) + 1):
        rows = {s: i for i, s in enumerate(ordered.get(q - 1, []))}
        got = [[0] * len(ordered.get(q, [])) for _ in ordered.get(q - 1, [])]
        for j, tau in enumerate(ordered.get(q, [])):
            for sigma, paths in trajectories_from(gvf, tau).items():
                got[rows[sigma]][j] = sum(t.weight for t in paths)
        want = mv_boundary(d, q)
        if got != want:
            matrices_ok = False
            detail = f"degree {q}: Thom-Smale and MV boundary matrices differ"
            break
    checks.add("boundary_matrices_equal", matrices_ok, detail)

    hw = homology(_thom_smale_in_order(gvf, ordered))
    hd = mv_homology(d)
    hx = simplicial_homology(d.x)
    hom_ok = hw == hd == hx
    checks.add(
        "homology_equal",
        hom_ok,
        str(hx) if hom_ok else f"(X~,W): {hw}  vs  MV: {hd}  vs  X: {hx}",
    )
    return checks.report()

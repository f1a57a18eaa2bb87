"""A Mayer-Vietoris chain complex for X = A u B from discrete Morse data.

Given subcomplexes A, B covering X, form disjoint tagged copies of the three
pieces ("A:", "B:" and "I:" for the intersection) and pick one gradient
field on each copy, entirely independently -- no compatibility between the
three fields is required.  The generators in degree q are

    D_q = Crit_q(A-copy)  u  Crit_q(B-copy)  u  Crit_{q-1}(I-copy),

tagged FromA / FromB / Shifted; intersection criticals appear with their
degree shifted up by one.  The boundary of a generator beta collects signed
trajectory counts, where a trajectory from beta to alpha exists in exactly
five situations, keyed by the tags:

  1. FromA -> FromA: an extended gradient trajectory inside the A-copy.
  2. FromB -> FromB: the same inside the B-copy.
  3. Shifted -> Shifted: an extended trajectory inside the I-copy; its
     weight is the *negative* of the usual trajectory weight.
  4. Shifted -> FromA: a descending trajectory piece inside the I-copy
     (tau_0, sigma_1, ..., tau_p, no terminal facet step), a transfer of
     tau_p into the A-copy along the inclusion of the intersection, then an
     ascending zigzag through the A-copy field ending at the critical target:

         w = - ( prod_{i<p} -<tau_i, sigma_{i+1}> <tau_{i+1}, sigma_{i+1}> )
               ( prod_{p<=i<p+l} -<alpha_i, tau_i> <alpha_i, tau_{i+1}> ),

     with p >= 0 descent steps and l >= 0 ascent steps.
  5. Shifted -> FromB: as 4 into the B-copy, without the leading minus sign.

All other tag combinations admit no trajectories.  The resulting boundary
squares to zero and the homology of (D_*, d) is the simplicial homology of
X; both facts are exercised heavily by the test suite rather than trusted.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complexes import (
    ComplexCopy,
    Simplex,
    SimplicialComplex,
    copy_relabel,
    incidence,
    union,
)
from .errors import DecompositionError, FieldError, InternalConsistencyError
from .homology import HomologyResult, IntegerChainComplex, homology
from .morse import (
    DEFAULT_SEED,
    GradientField,
    Trajectory,
    VectorField,
    greedy_gvf,
    trajectories_from,
    trajectory_weight,
    validate_trajectory,
)

__all__ = [
    "FROM_A",
    "FROM_B",
    "SHIFTED",
    "MVGenerator",
    "MVTrajectory",
    "Decomposition",
    "build_decomposition",
    "mv_generators",
    "enumerate_mv",
    "mv_trajectories_from",
    "mv_weight",
    "validate_mv_trajectory",
    "mv_boundary",
    "mv_chain_complex",
    "mv_homology",
]

FROM_A = "FromA"
FROM_B = "FromB"
SHIFTED = "Shifted"
_TAG_RANK = {FROM_A: 0, FROM_B: 1, SHIFTED: 2}


@dataclass(frozen=True)
class MVGenerator:
    """A generator of the Mayer-Vietoris complex: a critical simplex of one
    of the three copies, with its tag and its (possibly shifted) degree."""

    tag: str
    simplex: Simplex
    degree: int

    def __post_init__(self):
        if self.tag not in _TAG_RANK:
            raise FieldError(f"unknown generator tag {self.tag!r}")
        expected = self.simplex.dim + (1 if self.tag == SHIFTED else 0)
        if self.degree != expected:
            raise FieldError(
                f"{self.tag} generator on {self.simplex} must have degree {expected}"
            )

    @property
    def name(self) -> str:
        """The tagged vertex-list form used by the command line."""
        return ",".join(self.simplex.vertices)

    @property
    def sort_key(self):
        return (self.degree, _TAG_RANK[self.tag], self.simplex.key)

    def __str__(self) -> str:
        return f"{self.tag}:{self.name}"


def _generator(tag: str, simplex: Simplex) -> MVGenerator:
    simplex = abs(simplex)
    return MVGenerator(tag, simplex, simplex.dim + (1 if tag == SHIFTED else 0))


class Decomposition:
    """A decomposition X = A u B with one gradient field per tagged copy.

    Use `build_decomposition`; the constructor only stores what it is given.
    `iab`/`iab_bar`/`w_i` are None exactly when A and B are disjoint.
    """

    def __init__(
        self,
        x: SimplicialComplex,
        a: SimplicialComplex,
        b: SimplicialComplex,
        a_bar: ComplexCopy,
        b_bar: ComplexCopy,
        iab: SimplicialComplex | None,
        iab_bar: ComplexCopy | None,
        w_a: GradientField,
        w_b: GradientField,
        w_i: GradientField | None,
    ):
        self.x, self.a, self.b = x, a, b
        self.a_bar, self.b_bar = a_bar, b_bar
        self.iab, self.iab_bar = iab, iab_bar
        self.w_a, self.w_b, self.w_i = w_a, w_b, w_i

    def transfer(self, s: Simplex, into: str) -> Simplex:
        """Carry an intersection-copy simplex into the A- or B-copy along
        the inclusions A n B -> A, B (by renaming through the base)."""
        if self.iab_bar is None:
            raise DecompositionError("the decomposition has an empty intersection")
        target = self.a_bar if into == FROM_A else self.b_bar
        return target.push(self.iab_bar.pull(s))

    def __repr__(self) -> str:
        ni = len(self.iab) if self.iab is not None else 0
        return (
            f"<Decomposition |A|={len(self.a)} |B|={len(self.b)} |AnB|={ni} "
            f"of {self.x!r}>"
        )


def _field_on_copy(
    piece: SimplicialComplex,
    copy: ComplexCopy,
    pairs: Iterable[tuple[Simplex, Simplex]],
    piece_name: str,
) -> GradientField:
    pushed = []
    for sigma, tau in pairs:
        for s in (sigma, tau):
            if abs(s) not in piece:
                raise DecompositionError(
                    f"field pair ({sigma}, {tau}) references {s}, "
                    f"which is not a simplex of {piece_name}"
                )
        pushed.append((copy.push(sigma), copy.push(tau)))
    return GradientField.certify(VectorField(pushed), copy.complex)


def build_decomposition(
    x: SimplicialComplex,
    a: SimplicialComplex,
    b: SimplicialComplex,
    fields: Mapping[str, Iterable[tuple[Simplex, Simplex]] | None] | None = None,
    strategy: str = "lexicographic",
    seed: int | None = None,
) -> Decomposition:
    """Validate X = A u B, build the three tagged copies, and equip each
    with a gradient field.

    `fields` may supply explicit pair lists for any of the pieces "A", "B",
    "I", written in the vertex names of X; pieces without explicit pairs get
    a greedy field with the given strategy.  A seed, when used, is offset by
    0/1/2 for the three pieces so they draw distinct orders.
    """
    if not a.is_subcomplex_of(x):
        raise DecompositionError("A is not a subcomplex of X")
    if not b.is_subcomplex_of(x):
        raise DecompositionError("B is not a subcomplex of X")
    if union(a, b) != x:
        raise DecompositionError("A u B does not cover X")
    fields = dict(fields or {})
    unknown = set(fields) - {"A", "B", "I"}
    if unknown:
        raise DecompositionError(f"unknown field section(s): {sorted(unknown)}")

    a_bar = copy_relabel(a, "A:")
    b_bar = copy_relabel(b, "B:")
    shared = [s for s in a.simplices() if s in b]
    iab = SimplicialComplex(shared) if shared else None
    iab_bar = copy_relabel(iab, "I:") if iab is not None else None
    if iab is None and fields.get("I") is not None:
        raise DecompositionError("a field was supplied for an empty intersection")

    base_seed = DEFAULT_SEED if seed is None else seed
    built: dict[str, GradientField | None] = {}
    for offset, (name, piece, copy) in enumerate(
        (("A", a, a_bar), ("B", b, b_bar), ("I", iab, iab_bar))
    ):
        if piece is None:
            built[name] = None
        elif fields.get(name) is not None:
            built[name] = _field_on_copy(piece, copy, fields[name], name)
        else:
            built[name] = greedy_gvf(copy.complex, strategy, base_seed + offset)
    return Decomposition(
        x, a, b, a_bar, b_bar, iab, iab_bar, built["A"], built["B"], built["I"]
    )


def _max_degree(d: Decomposition) -> int:
    top = max(d.a_bar.complex.dim, d.b_bar.complex.dim)
    if d.iab_bar is not None:
        top = max(top, d.iab_bar.complex.dim + 1)
    return top


def mv_generators(d: Decomposition, q: int | None = None) -> tuple[MVGenerator, ...]:
    """D_q in canonical order (FromA, then FromB, then Shifted, each block
    by simplex), or every degree ascending when q is None."""
    if q is None:
        out: list[MVGenerator] = []
        for degree in range(_max_degree(d) + 1):
            out.extend(mv_generators(d, degree))
        return tuple(out)
    gens = [_generator(FROM_A, s) for s in d.w_a.critical(q)]
    gens += [_generator(FROM_B, s) for s in d.w_b.critical(q)]
    if d.w_i is not None and q >= 1:
        gens += [_generator(SHIFTED, s) for s in d.w_i.critical(q - 1)]
    return tuple(sorted(gens, key=lambda g: g.sort_key))


@dataclass(frozen=True)
class MVTrajectory:
    """One Mayer-Vietoris trajectory.

    `steps` is the full simplex sequence: for cases 1-3 an extended
    trajectory in the relevant copy; for cases 4/5 the descent in the
    I-copy, the transferred simplex, and the ascent in the target copy:

        (tau_0)_I, sigma_1, ..., (tau_p)_I, (tau_p)_piece,
        (alpha_p)_piece, (tau_{p+1})_piece, ..., (tau_{p+l})_piece.

    p and l are only meaningful for cases 4/5.
    """

    case: int
    beta: MVGenerator
    alpha: MVGenerator
    steps: tuple[Simplex, ...]
    p: int | None = None
    l: int | None = None

    @property
    def weight(self) -> int:
        return mv_weight(self)

    def __str__(self) -> str:
        arrows = ", ".join(str(s) for s in self.steps)
        return f"case {self.case} [{arrows}] (weight {self.weight:+d})"


def mv_weight(t: MVTrajectory) -> int:
    """The weight of an MV trajectory, recomputed from its steps."""
    if t.case in (1, 2, 3):
        w = trajectory_weight_of_steps(t.steps)
        return -w if t.case == 3 else w
    if t.case not in (4, 5):
        raise InternalConsistencyError(f"unknown trajectory case {t.case}")
    cut = 2 * t.p + 1
    i_steps = t.steps[:cut]
    a_steps = t.steps[cut:]
    w = 1
    for j in range(0, len(i_steps) - 2, 2):
        w *= -incidence(i_steps[j], i_steps[j + 1]) * incidence(
            i_steps[j + 2], i_steps[j + 1]
        )
    for j in range(0, len(a_steps) - 2, 2):
        w *= -incidence(a_steps[j + 1], a_steps[j]) * incidence(
            a_steps[j + 1], a_steps[j + 2]
        )
    return -w if t.case == 4 else w


def trajectory_weight_of_steps(steps: Sequence[Simplex]) -> int:
    """Weight of an extended trajectory given as a raw step sequence."""
    return trajectory_weight(Trajectory(steps))


def _forman_cases(
    d: Decomposition, beta: MVGenerator
) -> dict[MVGenerator, list[MVTrajectory]]:
    """Cases 1-3: plain trajectory enumeration inside one copy."""
    case, gvf, tag = {
        FROM_A: (1, d.w_a, FROM_A),
        FROM_B: (2, d.w_b, FROM_B),
        SHIFTED: (3, d.w_i, SHIFTED),
    }[beta.tag]
    out: dict[MVGenerator, list[MVTrajectory]] = {}
    if beta.simplex.dim == 0:
        return out
    for sigma, paths in trajectories_from(gvf, beta.simplex).items():
        alpha = _generator(tag, sigma)
        out[alpha] = [
            MVTrajectory(case, beta, alpha, t.steps) for t in paths
        ]
    return out


def _mixed_cases(
    d: Decomposition, beta: MVGenerator, case: int
) -> dict[MVGenerator, list[MVTrajectory]]:
    """Cases 4 (Shifted -> FromA) and 5 (Shifted -> FromB)."""
    tag = FROM_A if case == 4 else FROM_B
    pv = (d.w_a if case == 4 else d.w_b).field
    wi = d.w_i.field
    out: dict[MVGenerator, list[MVTrajectory]] = {}

    def ascend(aseq: list[Simplex]):
        t = aseq[-1]
        if not pv.is_matched(t):
            yield tuple(aseq)
            return
        a = pv.up(t)
        if a is None:  # matched downward: the ascent cannot pass through
            return
        for tn in a.facets():
            if tn != t:
                yield from ascend(aseq + [a, tn])

    def descend(iseq: list[Simplex]):
        tp = iseq[-1]
        entry = d.transfer(tp, tag)
        for aseq in ascend([entry]):
            alpha = _generator(tag, aseq[-1])
            out.setdefault(alpha, []).append(
                MVTrajectory(
                    case,
                    beta,
                    alpha,
                    tuple(iseq) + aseq,
                    p=(len(iseq) - 1) // 2,
                    l=(len(aseq) - 1) // 2,
                )
            )
        for sigma in tp.facets():
            if wi.down(tp) == sigma:
                continue
            tn = wi.up(sigma)
            if tn is not None:
                descend(iseq + [sigma, tn])

    descend([beta.simplex])
    return out


def mv_trajectories_from(
    d: Decomposition, beta: MVGenerator
) -> dict[MVGenerator, list[MVTrajectory]]:
    """All MV trajectories out of beta, grouped by target generator."""
    _require_generator(d, beta)
    if beta.tag in (FROM_A, FROM_B):
        return _forman_cases(d, beta)
    out = _forman_cases(d, beta)
    for case in (4, 5):
        for alpha, ts in _mixed_cases(d, beta, case).items():
            out.setdefault(alpha, []).extend(ts)
    return out


def _require_generator(d: Decomposition, g: MVGenerator) -> None:
    gvf = {FROM_A: d.w_a, FROM_B: d.w_b, SHIFTED: d.w_i}[g.tag]
    if gvf is None or gvf.field.is_matched(g.simplex) or g.simplex not in gvf.complex:
        raise FieldError(f"{g} is not a generator of this decomposition")


def enumerate_mv(
    d: Decomposition, beta: MVGenerator, alpha: MVGenerator
) -> list[MVTrajectory]:
    """MV(beta, alpha): every trajectory from beta to alpha, in the
    deterministic depth-first order."""
    _require_generator(d, alpha)
    if beta.degree != alpha.degree + 1:
        raise FieldError(
            f"no trajectories between degrees {beta.degree} and {alpha.degree}"
        )
    return mv_trajectories_from(d, beta).get(alpha, [])


def validate_mv_trajectory(d: Decomposition, t: MVTrajectory) -> None:
    """Recheck a trajectory against the raw case conditions (membership and
    non-membership in the three fields, facet relations, criticality of the
    endpoints), independently of the enumerator's bookkeeping."""
    if t.steps[0] != t.beta.simplex:
        raise InternalConsistencyError("trajectory does not start at beta")
    route = {
        1: (FROM_A, FROM_A),
        2: (FROM_B, FROM_B),
        3: (SHIFTED, SHIFTED),
        4: (SHIFTED, FROM_A),
        5: (SHIFTED, FROM_B),
    }.get(t.case)
    if route is None:
        raise InternalConsistencyError(f"unknown case {t.case}")
    if (t.beta.tag, t.alpha.tag) != route:
        raise InternalConsistencyError(f"case {t.case} cannot join {t.beta} to {t.alpha}")

    if t.case in (1, 2, 3):
        gvf = {1: d.w_a, 2: d.w_b, 3: d.w_i}[t.case]
        validate_trajectory(gvf, Trajectory(t.steps))
        if abs(t.steps[-1]) != t.alpha.simplex:
            raise InternalConsistencyError("trajectory does not end at alpha")
        return

    wi, pv = d.w_i.field, (d.w_a if t.case == 4 else d.w_b).field
    if t.p is None or t.l is None or t.p < 0 or t.l < 0:
        raise InternalConsistencyError("cases 4/5 need p, l >= 0")
    if len(t.steps) != 2 * (t.p + t.l) + 2:
        raise InternalConsistencyError("step count does not match p and l")
    cut = 2 * t.p + 1
    i_steps, a_steps = t.steps[:cut], t.steps[cut:]
    for j in range(1, len(i_steps), 2):
        sigma, prev, here = i_steps[j], i_steps[j - 1], i_steps[j + 1]
        if not sigma.is_face_of(prev) or wi.down(prev) == abs(sigma):
            raise InternalConsistencyError(f"illegal descent step {sigma} from {prev}")
        if wi.up(sigma) != abs(here):
            raise InternalConsistencyError(f"({sigma}, {here}) is not an I-field pair")
    if a_steps[0] != d.transfer(i_steps[-1], t.alpha.tag):
        raise InternalConsistencyError("transfer step does not match the descent end")
    for j in range(1, len(a_steps), 2):
        alpha_j, prev, here = a_steps[j], a_steps[j - 1], a_steps[j + 1]
        if pv.up(prev) != abs(alpha_j):
            raise InternalConsistencyError(f"({prev}, {alpha_j}) is not a pair of the field")
        if not here.is_face_of(alpha_j) or here == prev:
            raise InternalConsistencyError(f"illegal ascent step {here} under {alpha_j}")
    if pv.is_matched(a_steps[-1]) or abs(a_steps[-1]) != t.alpha.simplex:
        raise InternalConsistencyError("ascent does not end at the critical alpha")


def mv_boundary(d: Decomposition, q: int) -> list[list[int]]:
    """The boundary matrix D_q -> D_{q-1}: rows over D_{q-1}, columns over
    D_q, entries the summed trajectory weights."""
    rows = mv_generators(d, q - 1)
    cols = mv_generators(d, q)
    index = {g: i for i, g in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for j, beta in enumerate(cols):
        for alpha, ts in mv_trajectories_from(d, beta).items():
            matrix[index[alpha]][j] = sum(t.weight for t in ts)
    return matrix


def mv_chain_complex(d: Decomposition) -> IntegerChainComplex:
    """The full Mayer-Vietoris chain complex.  Construction re-verifies that
    the boundary squares to zero and fails hard otherwise."""
    top = _max_degree(d)
    labels = [mv_generators(d, q) for q in range(top + 1)]
    boundaries = [mv_boundary(d, q) for q in range(1, top + 1)]
    return IntegerChainComplex([len(ls) for ls in labels], boundaries, labels)


def mv_homology(d: Decomposition) -> HomologyResult:
    """Homology of X computed through the Mayer-Vietoris complex."""
    return homology(mv_chain_complex(d))

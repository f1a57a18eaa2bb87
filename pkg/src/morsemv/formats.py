"""Parsers for the on-disk formats consumed by the command line.

Complex files list one maximal simplex per line, vertices separated by
whitespace; `#` starts a comment and blank lines are skipped:

    # the octahedron
    v0 v1 v4
    v0 v1 v5
    ...

Decomposition files name the two pieces (maximal simplices, in the vertex
names of X) and optionally pin the three gradient fields:

    [A]
    v0 v1 v5
    ...
    [B]
    v0 v1 v4
    ...
    [fields]
    A: v2 -> v2 v5        # pair (sigma, tau) of the field on A
    I: v3 -> v0 v3        # pieces are A, B, I (the intersection)

The `[fields]` section may instead hold a single strategy line,
`auto lexicographic` or `auto random <seed>`, and may be omitted entirely;
pieces without explicit pairs fall back to the greedy strategy.

Generator names on the command line are the tagged comma-joined vertex
lists used in reports, e.g. `A:v5` or `I:v2,I:v3`; the tag prefix (A/B/I)
names the piece and selects FromA / FromB / Shifted.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import Simplex, SimplicialComplex
from .errors import ComplexError, ParseError
from .mv import FROM_A, FROM_B, SHIFTED

__all__ = [
    "parse_complex",
    "parse_decomposition",
    "parse_generator_name",
    "DecompositionFile",
]

_TAG_OF_PREFIX = {"A": FROM_A, "B": FROM_B, "I": SHIFTED}


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _simplex(tokens: list[str], number: int) -> Simplex:
    try:
        return Simplex(tokens)
    except ComplexError as e:
        raise ParseError(str(e), line=number) from None


def parse_complex(text: str) -> SimplicialComplex:
    """Read a complex file (maximal simplices, one per line)."""
    generators = [
        _simplex(line.split(), number) for number, line in _content_lines(text)
    ]
    if not generators:
        raise ParseError("no simplices in complex file")
    return SimplicialComplex(generators)


@dataclass
class DecompositionFile:
    """The parsed content of a decomposition file; `fields` maps piece names
    to explicit pair lists, `strategy`/`seed` carry an `auto` line if any."""

    a_generators: list[Simplex] = field(default_factory=list)
    b_generators: list[Simplex] = field(default_factory=list)
    fields: dict[str, list[tuple[Simplex, Simplex]]] = field(default_factory=dict)
    strategy: str | None = None
    seed: int | None = None


def parse_decomposition(text: str) -> DecompositionFile:
    out = DecompositionFile()
    section = None
    for number, line in _content_lines(text):
        if line in ("[A]", "[B]", "[fields]"):
            section = line[1:-1]
            continue
        if line.startswith("["):
            raise ParseError(f"unknown section {line}", line=number)
        if section is None:
            raise ParseError("content before any [A]/[B]/[fields] section", line=number)
        if section == "A":
            out.a_generators.append(_simplex(line.split(), number))
        elif section == "B":
            out.b_generators.append(_simplex(line.split(), number))
        else:
            _parse_fields_line(out, line, number)
    if not out.a_generators:
        raise ParseError("decomposition file has no [A] simplices")
    if not out.b_generators:
        raise ParseError("decomposition file has no [B] simplices")
    return out


def _parse_fields_line(out: DecompositionFile, line: str, number: int) -> None:
    if line.startswith("auto"):
        if out.fields:
            raise ParseError("auto line cannot follow explicit field pairs", line=number)
        if out.strategy is not None:
            raise ParseError("more than one auto line", line=number)
        words = line.split()
        if len(words) >= 2 and words[1] in ("lex", "lexicographic") and len(words) == 2:
            out.strategy = "lexicographic"
        elif len(words) >= 2 and words[1] == "random" and len(words) <= 3:
            out.strategy = "random"
            if len(words) == 3:
                try:
                    out.seed = int(words[2])
                except ValueError:
                    raise ParseError(f"bad seed {words[2]!r}", line=number) from None
        else:
            raise ParseError(
                "auto line must be 'auto lexicographic' or 'auto random [seed]'",
                line=number,
            )
        return
    if out.strategy is not None:
        raise ParseError("explicit field pairs cannot follow an auto line", line=number)
    piece, sep, rest = line.partition(":")
    piece = piece.strip()
    if not sep or piece not in ("A", "B", "I"):
        raise ParseError("field lines look like 'A: v2 -> v2 v5'", line=number)
    lhs, sep, rhs = rest.partition("->")
    if not sep or not lhs.split() or not rhs.split():
        raise ParseError("field lines look like 'A: v2 -> v2 v5'", line=number)
    sigma = _simplex(lhs.split(), number)
    tau = _simplex(rhs.split(), number)
    out.fields.setdefault(piece, []).append((sigma, tau))


def parse_generator_name(token: str) -> tuple[str, Simplex]:
    """Split a tagged generator name like 'I:v2,I:v3' into its MV tag and
    its (copy-named) simplex."""
    vertices = [v.strip() for v in token.split(",")]
    prefixes = {v.partition(":")[0] for v in vertices}
    if len(prefixes) != 1 or not prefixes <= set(_TAG_OF_PREFIX):
        raise ParseError(
            f"generator name {token!r} must be comma-joined vertices of one "
            "tagged copy (A:, B: or I:)"
        )
    try:
        simplex = Simplex(vertices)
    except ComplexError as e:
        raise ParseError(str(e)) from None
    return _TAG_OF_PREFIX[prefixes.pop()], simplex

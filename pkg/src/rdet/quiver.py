"""Orientations of the A_n line, zero relations, sources/sinks and sink ideals.

Vertices are labelled ``1..n``.  Arrow ``k`` (``1 <= k <= n-1``) joins ``k``
and ``k+1``; it points right (``k -> k+1``) when ``orientation[k-1] == "R"``
and left (``k+1 -> k``) when it is ``"L"``.  Relations are zero paths stored
as the vertex sequence they traverse, source first.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

RIGHT = "R"
LEFT = "L"


class QuiverError(ValueError):
    """Invalid quiver input.  ``line`` is the 1-based offending input line, if known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, order=True)
class Relation:
    """A zero path ``v1 -> v2 -> ... -> vk`` with k >= 3."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 3:
            raise QuiverError(f"relation {list(vs)} has length {len(vs) - 1} < 2")
        steps = {b - a for a, b in zip(vs, vs[1:])}
        if steps not in ({1}, {-1}):
            raise QuiverError(f"relation {list(vs)} is not a straight walk along the line")

    @property
    def lo(self) -> int:
        return min(self.vertices[0], self.vertices[-1])

    @property
    def hi(self) -> int:
        return max(self.vertices[0], self.vertices[-1])

    @property
    def direction(self) -> str:
        return RIGHT if self.vertices[1] > self.vertices[0] else LEFT

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def within(self, lo: int, hi: int) -> bool:
        return lo <= self.lo and self.hi <= hi

    def __str__(self):
        return " ".join(map(str, self.vertices))


@dataclass(frozen=True)
class QuiverSpec:
    """An orientation of A_n plus a reduced set of zero relations.

    Instances are validated on construction and immutable afterwards.
    """

    n: int
    orientation: tuple[str, ...]
    relations: tuple[Relation, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "orientation", tuple(self.orientation))
        rels = tuple(r if isinstance(r, Relation) else Relation(tuple(r)) for r in self.relations)
        object.__setattr__(self, "relations", tuple(sorted(rels)))
        if self.n < 1:
            raise QuiverError(f"n must be positive, got {self.n}")
        if len(self.orientation) != self.n - 1:
            raise QuiverError(
                f"orientation has {len(self.orientation)} entries, expected {self.n - 1}"
            )
        for d in self.orientation:
            if d not in (RIGHT, LEFT):
                raise QuiverError(f"orientation entries must be 'R' or 'L', got {d!r}")
        for rel in self.relations:
            check_relation(self, rel)
        check_reduced(self.relations)

    # arrows
    def points_right(self, k: int) -> bool:
        return self.orientation[k - 1] == RIGHT

    def arrow(self, k: int) -> tuple[int, int]:
        """(tail, head) of arrow ``k``."""
        return (k, k + 1) if self.points_right(k) else (k + 1, k)

    def arrows(self) -> Iterator[tuple[int, int]]:
        for k in range(1, self.n):
            yield self.arrow(k)

    def has_arrow(self, u: int, v: int) -> bool:
        """True iff there is an arrow ``u -> v``."""
        if abs(u - v) != 1 or not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        k = min(u, v)
        return self.arrow(k) == (u, v)

    @property
    def is_path_algebra(self) -> bool:
        return not self.relations

    def path_is_zero(self, path: Sequence[int]) -> bool:
        """True iff the directed vertex path contains some relation as a subpath."""
        if len(path) < 3:
            return False
        lo, hi = min(path), max(path)
        direction = RIGHT if path[-1] > path[0] else LEFT
        return any(r.direction == direction and r.within(lo, hi) for r in self.relations)

    def restrict(self, lo: int, hi: int) -> tuple[Relation, ...]:
        """Generators of the ideal whose vertex range lies in ``[lo, hi]``."""
        return tuple(r for r in self.relations if r.within(lo, hi))

    def opposite(self) -> "QuiverSpec":
        """Same line with every arrow (and relation) reversed."""
        flip = {RIGHT: LEFT, LEFT: RIGHT}
        return QuiverSpec(
            self.n,
            tuple(flip[d] for d in self.orientation),
            tuple(Relation(tuple(reversed(r.vertices))) for r in self.relations),
        )

    def mirror(self) -> "QuiverSpec":
        """Relabel ``i -> n+1-i``."""
        n = self.n
        flip = {RIGHT: LEFT, LEFT: RIGHT}
        return QuiverSpec(
            n,
            tuple(flip[d] for d in reversed(self.orientation)),
            tuple(Relation(tuple(n + 1 - v for v in r.vertices)) for r in self.relations),
        )

    def __str__(self):
        return render_quiver(self).rstrip("\n").replace("\n", "; ")


def check_relation(q: QuiverSpec, rel: Relation, line: int | None = None) -> None:
    for v in rel.vertices:
        if not 1 <= v <= q.n:
            raise QuiverError(f"relation {rel}: vertex {v} out of range 1..{q.n}", line)
    for u, v in zip(rel.vertices, rel.vertices[1:]):
        if not q.has_arrow(u, v):
            raise QuiverError(f"relation {rel}: no arrow {u} -> {v}", line)


def check_reduced(relations: Sequence[Relation], lines: Sequence[int] | None = None) -> None:
    for i, r in enumerate(relations):
        for j, s in enumerate(relations):
            if i != j and r.direction == s.direction and s.within(r.lo, r.hi):
                line = lines[i] if lines is not None else None
                raise QuiverError(f"relation {r} is redundant: it contains relation {s}", line)


def reduce_relations(relations: Iterable[Relation]) -> tuple[Relation, ...]:
    """Drop duplicates and every relation containing another one."""
    rels = sorted(set(relations))
    keep = [
        r for r in rels
        if not any(s != r and s.direction == r.direction and s.within(r.lo, r.hi) for s in rels)
    ]
    return tuple(keep)


# text and JSON formats

def parse_quiver(text: str) -> QuiverSpec:
    """Parse the line-oriented text format (``1 > 2 < 3`` plus ``rel:`` lines)."""
    header = None
    rel_lines: list[tuple[int, Relation]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("rel:"):
            if header is None:
                raise QuiverError("relation before the orientation line", lineno)
            body = line[len("rel:"):].split()
            try:
                verts = tuple(int(t) for t in body)
            except ValueError:
                raise QuiverError(f"bad relation {line!r}", lineno) from None
            try:
                rel_lines.append((lineno, Relation(verts)))
            except QuiverError as exc:
                raise QuiverError(str(exc), lineno) from None
        elif header is None:
            header = (lineno, line)
        else:
            raise QuiverError(f"unexpected line {line!r}", lineno)
    if header is None:
        raise QuiverError("empty quiver description")

    lineno, line = header
    tokens = line.split()
    verts, orientation = [], []
    for pos, tok in enumerate(tokens):
        if pos % 2 == 0:
            try:
                verts.append(int(tok))
            except ValueError:
                raise QuiverError(f"expected a vertex label, got {tok!r}", lineno) from None
        elif tok == ">":
            orientation.append(RIGHT)
        elif tok == "<":
            orientation.append(LEFT)
        else:
            raise QuiverError(f"expected '<' or '>', got {tok!r}", lineno)
    if len(tokens) % 2 == 0:
        raise QuiverError("orientation line ends with a comparator", lineno)
    if verts != list(range(1, len(verts) + 1)):
        raise QuiverError("vertices must be 1, 2, ..., n in order", lineno)

    n = len(verts)
    try:
        bare = QuiverSpec(n, tuple(orientation))
    except QuiverError as exc:
        raise QuiverError(str(exc), lineno) from None
    rels = [r for _, r in rel_lines]
    for ln, r in rel_lines:
        check_relation(bare, r, ln)
    check_reduced(rels, [ln for ln, _ in rel_lines])
    return QuiverSpec(n, tuple(orientation), tuple(rels))


def render_quiver(q: QuiverSpec) -> str:
    parts = ["1"]
    for k in range(1, q.n):
        parts.append(">" if q.points_right(k) else "<")
        parts.append(str(k + 1))
    lines = [" ".join(parts)]
    lines.extend(f"rel: {r}" for r in q.relations)
    return "\n".join(lines) + "\n"


def quiver_to_dict(q: QuiverSpec) -> dict:
    return {
        "n": q.n,
        "orientation": list(q.orientation),
        "relations": [list(r.vertices) for r in q.relations],
    }


def quiver_from_dict(obj: dict) -> QuiverSpec:
    try:
        n = int(obj["n"])
        orientation = tuple(obj.get("orientation", ()))
        rels = tuple(Relation(tuple(r)) for r in obj.get("relations", ()))
    except (KeyError, TypeError) as exc:
        raise QuiverError(f"malformed quiver JSON: {exc}") from None
    return QuiverSpec(n, orientation, rels)


def load_quiver(text: str) -> QuiverSpec:
    """Accept either the JSON or the text format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QuiverError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        return quiver_from_dict(obj)
    return parse_quiver(text)


# sources, sinks, sink ideals

@dataclass(frozen=True)
class SourcesSinks:
    sources: tuple[int, ...]
    sinks: tuple[int, ...]
    p: int
    r: int


def sources_sinks(q: QuiverSpec) -> SourcesSinks:
    """Sources, sinks, ``p`` = #interior sources and ``r`` = #sinks."""
    incoming = {v: 0 for v in range(1, q.n + 1)}
    outgoing = dict(incoming)
    for u, v in q.arrows():
        outgoing[u] += 1
        incoming[v] += 1
    sources = tuple(v for v in incoming if incoming[v] == 0)
    sinks = tuple(v for v in outgoing if outgoing[v] == 0)
    p = sum(1 for v in sources if 2 <= v <= q.n - 1)
    return SourcesSinks(sources, sinks, p, len(sinks))


def is_linear(q: QuiverSpec, lo: int, hi: int) -> bool:
    """All arrows strictly inside ``<lo, hi>`` point the same way."""
    dirs = set(q.orientation[lo - 1:hi - 1])
    return len(dirs) <= 1


@dataclass(frozen=True)
class SinkIdealReport:
    sink: int
    case: int
    window: tuple[int, int]
    restricted_relations: tuple[Relation, ...]
    nonzero: bool
    # case 5 only: the two linear halves <s, i> and <i, s'>
    halves: tuple[tuple[Relation, ...], tuple[Relation, ...]] | None = None


def sink_ideals(q: QuiverSpec) -> tuple[list[SinkIdealReport], int]:
    """Classify every sink into one of the five sink-ideal cases.

    Returns the reports (ordered by sink) and the number of non-zero ideals.
    Raises ``QuiverError`` when the quiver has fewer than two sinks.
    """
    ss = sources_sinks(q)
    if ss.r < 2:
        raise QuiverError("sink ideals undefined: the quiver has a unique sink")
    inner = [s for s in ss.sources if 2 <= s <= q.n - 1]
    first, last = ss.sinks[0], ss.sinks[-1]
    reports = []
    for i in ss.sinks:
        halves = None
        if i == 1:
            case, window = 1, (1, inner[0])
        elif i == q.n:
            case, window = 2, (inner[-1], q.n)
        elif i == first and is_linear(q, 1, i):
            case, window = 3, (i, inner[0])
        elif i == last and is_linear(q, i, q.n):
            case, window = 4, (inner[-1], i)
        else:
            s = max(v for v in inner if v < i)
            s2 = min(v for v in inner if v > i)
            case, window = 5, (s, s2)
            halves = (q.restrict(s, i), q.restrict(i, s2))
        restricted = q.restrict(*window)
        if case == 5:
            nonzero = bool(halves[0]) and bool(halves[1])
        else:
            nonzero = bool(restricted)
        reports.append(SinkIdealReport(i, case, window, restricted, nonzero, halves))
    return reports, sum(rep.nonzero for rep in reports)


# enumeration helpers for sweeps

def all_orientations(n: int) -> Iterator[tuple[str, ...]]:
    """Every orientation of A_n in lexicographic order (R before L)."""
    yield from itertools.product((RIGHT, LEFT), repeat=n - 1)


def all_quivers(n_max: int, n_min: int = 2, mod_reflection: bool = False) -> Iterator[QuiverSpec]:
    for n in range(n_min, n_max + 1):
        seen = set()
        for orient in all_orientations(n):
            q = QuiverSpec(n, orient)
            if mod_reflection:
                key = min(q.orientation, q.mirror().orientation)
                if key in seen:
                    continue
                seen.add(key)
            yield q


def directed_runs(n: int, orientation: Sequence[str]) -> list[tuple[int, int, str]]:
    """Maximal same-direction stretches ``(lo, hi, direction)`` of the line."""
    runs = []
    k = 1
    while k <= n - 1:
        d = orientation[k - 1]
        j = k
        while j + 1 <= n - 1 and orientation[j] == d:
            j += 1
        runs.append((k, j + 1, d))
        k = j + 1
    return runs


def random_relations(n: int, orientation: Sequence[str], rng: random.Random) -> tuple[Relation, ...]:
    """A random reduced relation set: random subpaths of length >= 2 in random runs."""
    rels = []
    for lo, hi, d in directed_runs(n, orientation):
        if hi - lo < 2 or rng.random() < 0.5:
            continue
        for _ in range(rng.randint(1, 2)):
            length = rng.randint(2, hi - lo)
            start = rng.randint(lo, hi - length)
            verts = tuple(range(start, start + length + 1))
            if d == LEFT:
                verts = tuple(reversed(verts))
            rels.append(Relation(verts))
    return reduce_relations(rels)


def all_relation_sets(n: int, orientation: Sequence[str]) -> Iterator[tuple[Relation, ...]]:
    """Every reduced relation set on one orientation, the empty set first.

    Candidates are the directed subpaths of length >= 2; a set is reduced when
    no member's vertex range contains another's.
    """
    cands = []
    for lo, hi, d in directed_runs(n, orientation):
        for a in range(lo, hi + 1):
            for b in range(a + 2, hi + 1):
                verts = tuple(range(a, b + 1))
                cands.append(Relation(verts if d == RIGHT else verts[::-1]))

    def extend(start, chosen):
        yield tuple(sorted(chosen, key=lambda r: (r.lo, r.hi)))
        for k in range(start, len(cands)):
            c = cands[k]
            if all(not (c.lo <= r.lo and r.hi <= c.hi) and not (r.lo <= c.lo and c.hi <= r.hi)
                   for r in chosen):
                yield from extend(k + 1, chosen + [c])

    yield from extend(0, [])


def random_quiver(n: int, rng: random.Random, with_relations: bool = True) -> QuiverSpec:
    orient = tuple(rng.choice((RIGHT, LEFT)) for _ in range(n - 1))
    rels = random_relations(n, orient, rng) if with_relations else ()
    return QuiverSpec(n, orient, rels)

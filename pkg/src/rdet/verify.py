"""Invariant suite run by ``rdet verify`` / ``rdet sweep`` and the acceptance tests.

Each check takes a :class:`QuiverSpec` and returns ``None`` on success or a
string describing the first counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from .arquiver import EPI, MONO, ar_quiver, string_ass
from .determiner import (
    PROJECTIVE,
    det_set,
    minimal_right_determiner,
    oracle_marks,
)
from .homalg import HomArrow, cokernel, hom_dim, kernel
from .intervals import (
    IntervalModule,
    enumerate_indecomposables,
    injective,
    is_uniserial,
    projective,
    radical_of_projective,
    simple,
    socle,
    top,
)
from .quiver import QuiverSpec, parse_quiver, render_quiver, sink_ideals, sources_sinks

Check = Callable[[QuiverSpec], "str | None"]
CHECKS: dict[str, Check] = {}


def check(name: str):
    def register(fn):
        CHECKS[name] = fn
        return fn
    return register


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + ("" if self.ok else f": {self.detail}")


# quiver

@check("vertex_classes_partition")
def _partition(q):
    ss = sources_sinks(q)
    if q.n == 1:
        return None if ss.sources == ss.sinks == (1,) else "n=1 vertex must be source and sink"
    if set(ss.sources) & set(ss.sinks):
        return f"vertex both source and sink: {set(ss.sources) & set(ss.sinks)}"
    marks = sorted([(v, "src") for v in ss.sources] + [(v, "snk") for v in ss.sinks])
    for (_, k1), (_, k2) in zip(marks, marks[1:]):
        if k1 == k2:
            return f"sources and sinks do not alternate: {marks}"
    if abs(len(ss.sources) - len(ss.sinks)) > 1:
        return "source/sink counts differ by more than one"
    if ss.r == 1 and ss.p != 0:
        return f"unique sink but p = {ss.p}"
    return None


@check("sink_ideal_classifier_total")
def _sink_cases(q):
    ss = sources_sinks(q)
    if ss.r < 2:
        return None
    reports, q_count = sink_ideals(q)
    if [rep.sink for rep in reports] != list(ss.sinks):
        return "sink ideal reports do not cover every sink exactly once"
    for rep in reports:
        if rep.case not in (1, 2, 3, 4, 5):
            return f"sink {rep.sink}: unknown case"
        if rep.case == 5:
            s, s2 = rep.window
            if rep.sink in (s + 1, s2 - 1) and rep.nonzero:
                return f"sink {rep.sink}: adjacent to a source but J != 0"
        elif rep.nonzero != bool(rep.restricted_relations):
            return f"sink {rep.sink}: nonzero flag disagrees with restriction"
    if q_count != sum(r.nonzero for r in reports):
        return "q count mismatch"
    return None


@check("text_roundtrip")
def _roundtrip(q):
    back = parse_quiver(render_quiver(q))
    return None if back == q else f"parse(render(q)) = {back}"


# modules

@check("indecomposables")
def _indecs(q):
    mods = enumerate_indecomposables(q)
    if q.is_path_algebra and len(mods) != q.n * (q.n + 1) // 2:
        return f"{len(mods)} indecomposables, expected n(n+1)/2"
    mset = set(mods)
    for i in range(1, q.n + 1):
        for name, m in (("P", projective(q, i)), ("I", injective(q, i)), ("S", simple(q, i))):
            if m not in mset:
                return f"{name}({i}) = {m} is not an indecomposable"
        rad = radical_of_projective(q, i)
        p = projective(q, i)
        if p.dim != 1 + sum(r.dim for r in rad):
            return f"dim P({i}) != 1 + dim rad"
        ss = sources_sinks(q)
        interior_source = i in ss.sources and 2 <= i <= q.n - 1
        if (len(rad) == 2) != interior_source:
            return f"rad P({i}) = {rad} but interior source = {interior_source}"
        if (not rad) != (p.dim == 1):
            return f"rad P({i}) empty iff P({i}) simple fails"
    vecs = {tuple(m.dim_vector(q.n)) for m in mods}
    if len(vecs) != len(mods):
        return "dimension vectors are not pairwise distinct"
    for m in mods:
        uni = is_uniserial(m, q)
        if uni != (len(socle(m, q)) == 1 and len(top(m, q)) == 1):
            return f"{m}: uniserial iff simple socle and top fails"
    return None


# Hom

@check("hom_dim_at_most_one")
def _hom_dims(q):
    ar = ar_quiver(q)
    for i, x in enumerate(ar.modules):
        for j, y in enumerate(ar.modules):
            d = hom_dim(x, y, q)
            if d not in (0, 1):
                return f"dim Hom({x},{y}) = {d}"
            if d != ar.H[i, j]:
                return f"Hom table disagrees with scalar solve at ({x},{y})"
            if d:
                f = HomArrow(x, y, x.meet(y))
                if not f.is_valid(q):
                    return f"basis map {f} does not commute"
                if x.dim != sum(k.dim for k in kernel(f)) + f.support.dim:
                    return f"rank-nullity fails at source of {f}"
                if y.dim != sum(c.dim for c in cokernel(f)) + f.support.dim:
                    return f"rank-nullity fails at target of {f}"
    return None


# AR quiver

def _maps_of(seq, ar):
    left_maps = [HomArrow(seq.left, m, seq.left.meet(m)) for m in seq.middle]
    right_maps = [HomArrow(m, seq.right, m.meet(seq.right)) for m in seq.middle]
    return left_maps, right_maps


@check("irreducibles_mono_xor_epi")
def _irr_kinds(q):
    for f in ar_quiver(q).irreducibles:
        a = f.arrow
        if (f.kind == MONO) != (not kernel(a)) or (f.kind == EPI) != (not cokernel(a)):
            return f"{f}: kind inconsistent with kernel/cokernel"
        if len(kernel(a)) > 1 or len(cokernel(a)) > 1:
            return f"{f}: kernel or cokernel decomposes"
    return None


@check("ass_shapes_and_mesh_additivity")
def _ass(q):
    ar = ar_quiver(q)
    inj = set(ar.injectives)
    proj = set(ar.projectives)
    seqs = ar.sequences
    if len(seqs) != len(ar.modules) - len(proj):
        return "not one sequence per non-projective"
    for s in seqs:
        if len(s.middle) not in (1, 2):
            return f"{s}: middle term has {len(s.middle)} summands"
        total = sum(m.dim_vector(q.n) for m in s.middle)
        if not np.array_equal(s.left.dim_vector(q.n) + s.right.dim_vector(q.n), total):
            return f"{s}: mesh dimensions do not add up"
        if s.left in inj or s.right in proj:
            return f"{s}: injective left or projective right term"
        if ar.tau_inv(ar.tau(s.right)) != s.right or ar.tau(ar.tau_inv(s.left)) != s.left:
            return f"{s}: tau and tau^-1 are not inverse"
        if set(ar.arrows_out_of(s.left)) != set(s.middle):
            return f"{s}: irreducibles out of the left term differ from the middle"
    single = [s for s in seqs if len(s.middle) == 1]
    if len(single) != q.n - 1:
        return f"{len(single)} sequences with one middle term, expected {q.n - 1}"
    return None


@check("two_middle_terms_pairing")
def _pairing(q):
    ar = ar_quiver(q)
    for s in ar.sequences:
        if len(s.middle) != 2:
            continue
        lm, rm = _maps_of(s, ar)
        # L -> M1 pairs with M2 -> N, and L -> M2 with M1 -> N
        if lm[0].is_mono != rm[1].is_mono or lm[1].is_mono != rm[0].is_mono:
            return f"{s}: paired maps are mixed mono/epi"
    return None


@check("string_ass_matches_mesh")
def _string_vs_mesh(q):
    ar = ar_quiver(q)
    by_right = {s.right: s for s in ar.sequences}
    seen = set()
    for i in range(1, q.n):
        st = string_ass(q, i)
        mesh = by_right.get(st.right)
        if mesh is None or mesh.left != st.left or mesh.middle != st.middle:
            return f"arrow {i}: string sequence {st} vs mesh {mesh}"
        seen.add(st.right)
    single = {s.right for s in ar.sequences if len(s.middle) == 1}
    if seen != single:
        return "string construction misses some one-middle-term sequence"
    return None


# determiners

@check("determiner_count_formula")
def _count(q):
    rep = det_set(q)
    if q.n == 1:
        return None if rep.det_count == 0 else "n=1 should have empty Det"
    if rep.det_count != rep.predicted:
        return f"|Det| = {rep.det_count} but {rep.branch} predicts {rep.predicted}"
    if rep.det_count > 2 * q.n - 2:
        return f"|Det| = {rep.det_count} > 2n-2"
    if q.is_path_algebra and rep.r >= 2:
        # the bound-quiver formula with q = 0 must agree with the path-algebra one
        if 2 * q.n - rep.p - 0 - 1 != rep.predicted:
            return "path and bound formulas disagree on a path algebra"
    return None


@check("determiner_monotone_under_relations")
def _monotone(q):
    if q.is_path_algebra:
        return None
    bound = det_set(q).det_count
    free = det_set(QuiverSpec(q.n, q.orientation)).det_count
    return None if bound <= free else f"|Det(KQ/I)| = {bound} > |Det(KQ)| = {free}"


@check("mono_same_determiner_iff_same_socle")
def _mono_determiner_vs_socle(q):
    recs = [r for r in det_set(q).records if r.morphism.kind == MONO]
    for r1, r2 in combinations(recs, 2):
        s1 = socle(cokernel(r1.morphism.arrow)[0], q)
        s2 = socle(cokernel(r2.morphism.arrow)[0], q)
        if (r1.determiner == r2.determiner) != (s1 == s2):
            return f"{r1.morphism} / {r2.morphism}: determiner vs cokernel socle"
    return None


@check("epi_same_determiner_iff_same_kernel")
def _epi_determiner_vs_kernel(q):
    recs = [r for r in det_set(q).records if r.morphism.kind == EPI]
    for r1, r2 in combinations(recs, 2):
        same_ker = kernel(r1.morphism.arrow) == kernel(r2.morphism.arrow)
        if (r1.determiner == r2.determiner) != same_ker:
            return f"{r1.morphism} / {r2.morphism}: determiner vs kernel"
    return None


@check("interior_sources_excluded")
def _interior_sources(q):
    rep = det_set(q)
    ss = sources_sinks(q)
    dets = set(rep.det_set)
    for i in ss.sources:
        if 2 <= i <= q.n - 1 and projective(q, i) in dets:
            return f"P({i}) is a determiner although {i} is an interior source"
    return None


@check("cokernels_and_kernels")
def _cokernel_kernel_lists(q):
    ar = ar_quiver(q)
    proj, inj = set(ar.projectives), set(ar.injectives)
    monos = [f for f in ar.irreducibles if f.kind == MONO]
    epis = [f for f in ar.irreducibles if f.kind == EPI]
    cok = {cokernel(f.arrow)[0] for f in monos}
    cok_p = {cokernel(f.arrow)[0] for f in monos if f.target in proj}
    ker = {kernel(f.arrow)[0] for f in epis}
    ker_i = {kernel(f.arrow)[0] for f in epis if f.source in inj}
    vs = {string_ass(q, i).right for i in range(1, q.n)}
    us = {string_ass(q, i).left for i in range(1, q.n)}
    if not cok == cok_p == vs:
        return "cokernels of irreducible monos differ from the M(V) list"
    if not ker == ker_i == us:
        return "kernels of irreducible epis differ from the M(U) list"
    return None


@check("epi_and_mono_structure")
def _determiner_structure(q):
    rep = det_set(q)
    ar = ar_quiver(q)
    vs = [string_ass(q, i).right for i in range(1, q.n)]
    if len(set(vs)) != len(vs):
        return "two arrows share the same M(V)"
    proj = set(ar.projectives)
    into_proj = {r.determiner for r in rep.records if r.morphism.kind == MONO and r.morphism.target in proj}
    for r in rep.records:
        if r.morphism.kind == EPI:
            if vs.count(r.determiner) != 1 or r.determiner in proj:
                return f"{r.morphism}: epic determiner {r.determiner} is not a unique non-projective M(V)"
        elif r.determiner not in into_proj:
            return f"{r.morphism}: determiner not realised by a mono into a projective"
        elif r.classification != PROJECTIVE:
            return f"{r.morphism}: mono determiner not projective"
    return None


@check("orientation_recovery")
def _orientation_recovery(q):
    if not q.is_path_algebra or q.n < 2:
        return None
    rep = det_set(q)
    full = rep.det_count == 2 * q.n - 2
    pv = rep.projective_vertices
    left_to_right = all(d == "R" for d in q.orientation)
    right_to_left = all(d == "L" for d in q.orientation)
    if (full and pv == list(range(1, q.n))) != left_to_right:
        return "projective determiners {P(1..n-1)} iff 1 -> ... -> n fails"
    if (full and pv == list(range(2, q.n + 1))) != right_to_left:
        return "projective determiners {P(2..n)} iff 1 <- ... <- n fails"
    return None


@check("linear_and_unique_sink")
def _unique_sink_sets(q):
    if q.n < 2:
        return None
    rep = det_set(q)
    ss = sources_sinks(q)
    if ss.r == 1:
        sink = ss.sinks[0]
        if rep.projective_vertices != [j for j in range(1, q.n + 1) if j != sink]:
            return f"unique sink {sink}: projective determiners at {rep.projective_vertices}"
    if q.is_path_algebra and all(d == "R" for d in q.orientation):
        want = {projective(q, i) for i in range(1, q.n)} | {simple(q, i) for i in range(1, q.n)}
        if set(rep.det_set) != want:
            return "linear quiver: Det != {P(i), S(i) | i < n}"
    return None


@check("oracle_agrees")
def _oracle(q):
    ar = ar_quiver(q)
    for f in ar.irreducibles:
        marked = oracle_marks(f, q)
        closed = minimal_right_determiner(f, q).determiner
        if marked != [closed]:
            return f"{f}: oracle marks {[str(m) for m in marked]}, closed form {closed}"
    return None


def run_checks(q: QuiverSpec, names=None, stop_first: bool = False) -> list[CheckResult]:
    out = []
    for name, fn in CHECKS.items():
        if names is not None and name not in names:
            continue
        try:
            detail = fn(q)
        except Exception as exc:  # a crash in a check is a failure of that check
            detail = f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, detail is None, detail))
        if stop_first and detail is not None:
            break
    return out

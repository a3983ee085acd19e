"""Discrete Morse matchings, elementary collapses, and collapsibility search.

The face poset includes the empty face: it is covered by every vertex, so a
perfect matching on a full simplex pairs the empty face with the apex and no
artificial critical 0-cell survives.  Reported critical cells and free faces
exclude the empty face; collapses stop at a single vertex.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex, from_facets
from .errors import (
    InvalidCollapseError,
    InvalidMatchingError,
    InvalidParameterError,
    VoidComplexError,
)

DEFAULT_COLLAPSE_BUDGET = 1_000_000


class Matching:
    """A partial matching on covering pairs (sigma, sigma + {v}) of the face
    poset; no face belongs to two pairs."""

    __slots__ = ("pairs", "_partner")

    def __init__(self, pairs):
        partner: dict[tuple, tuple] = {}
        canon = []
        for sigma, tau in pairs:
            sigma, tau = tuple(sigma), tuple(tau)
            if len(tau) != len(sigma) + 1 or not set(sigma) < set(tau):
                raise InvalidMatchingError(f"({sigma}, {tau}) is not a covering pair")
            for f in (sigma, tau):
                if f in partner:
                    raise InvalidMatchingError(f"face {f} appears in two pairs")
            partner[sigma] = tau
            partner[tau] = sigma
            canon.append((sigma, tau))
        canon.sort(key=lambda p: (len(p[0]), p[0]))
        object.__setattr__(self, "pairs", tuple(canon))
        object.__setattr__(self, "_partner", partner)

    def __setattr__(self, name, value):
        raise AttributeError("Matching is immutable")

    def __len__(self):
        return len(self.pairs)

    def is_matched(self, face) -> bool:
        return tuple(face) in self._partner

    def partner(self, face):
        return self._partner.get(tuple(face))

    def matched_up(self, face):
        """The coface this face is matched with, if it is the lower face."""
        p = self._partner.get(tuple(face))
        if p is not None and len(p) == len(face) + 1:
            return p
        return None


def _resolve_vertex(cx: SimplicialComplex, v) -> int:
    if isinstance(v, str):
        if v not in cx.labels:
            raise InvalidParameterError(f"unknown vertex {v!r}")
        return cx.labels.index(v)
    if not (0 <= v < cx.n_vertices):
        raise InvalidParameterError(f"vertex index {v} out of range")
    return v


def element_matching(cx: SimplicialComplex, v, matching: Matching | None = None) -> Matching:
    """Extend ``matching`` by pairing sigma with sigma + {v} wherever both
    are faces and both are still unmatched.  The result does not depend on
    the processing order for a fixed v."""
    vi = _resolve_vertex(cx, v)
    faces = set(cx.all_faces())
    old_pairs = list(matching.pairs) if matching else []
    taken = set()
    for s, t in old_pairs:
        taken.add(s)
        taken.add(t)
    new_pairs = []
    for sigma in sorted(faces, key=lambda f: (len(f), f)):
        if vi in sigma or sigma in taken:
            continue
        tau = tuple(sorted(sigma + (vi,)))
        if tau in faces and tau not in taken:
            new_pairs.append((sigma, tau))
            taken.add(sigma)
            taken.add(tau)
    return Matching(old_pairs + new_pairs)


def element_matching_sequence(cx: SimplicialComplex, vertices) -> Matching:
    m: Matching | None = None
    for v in vertices:
        m = element_matching(cx, v, m)
    return m if m is not None else Matching([])


def is_acyclic(cx: SimplicialComplex, matching: Matching):
    """Check the modified Hasse diagram for directed cycles.

    V-paths live inside one dimension layer: from an up-matched d-face sigma
    step to any other d-face of its matched coface.  Returns (True, None) or
    (False, cycle) where the cycle alternates lower and upper faces."""
    faces = set(cx.all_faces())
    for s, t in matching.pairs:
        if s not in faces or t not in faces:
            raise InvalidMatchingError(f"pair ({s}, {t}) uses faces outside the complex")
    by_dim: dict[int, list[tuple]] = {}
    for s, t in matching.pairs:
        by_dim.setdefault(len(s), []).append(s)
    for d, nodes in sorted(by_dim.items()):
        up = {s: matching.matched_up(s) for s in nodes}
        color: dict[tuple, int] = {}
        parent: dict[tuple, tuple] = {}

        def neighbors(s):
            tau = up[s]
            out = []
            for pos in range(len(tau)):
                s2 = tau[:pos] + tau[pos + 1:]
                if s2 != s and s2 in up:
                    out.append(s2)
            return out

        for start in nodes:
            if color.get(start):
                continue
            stack = [(start, iter(neighbors(start)))]
            color[start] = 1
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if color.get(nxt) == 1:
                        # back edge: walk parents to reconstruct the loop
                        cyc = [nxt]
                        cur = node
                        while cur != nxt:
                            cyc.append(cur)
                            cur = parent[cur]
                        cyc.reverse()
                        witness = []
                        for s in cyc:
                            witness.append(s)
                            witness.append(up[s])
                        return False, witness
                    if color.get(nxt) is None:
                        color[nxt] = 1
                        parent[nxt] = node
                        stack.append((nxt, iter(neighbors(nxt))))
                        advanced = True
                        break
                if not advanced:
                    color[node] = 2
                    stack.pop()
    return True, None


def critical_cells(cx: SimplicialComplex, matching: Matching) -> list[tuple]:
    """Unmatched nonempty faces, sorted by (dimension, vertex tuple)."""
    ok, witness = is_acyclic(cx, matching)
    if not ok:
        raise InvalidMatchingError(f"matching contains a directed cycle: {witness}")
    out = [
        f
        for f in cx.all_faces()
        if f and not matching.is_matched(f)
    ]
    out.sort(key=lambda f: (len(f), f))
    return out


# ---------------------------------------------------------------------------
# collapses
# ---------------------------------------------------------------------------

def _coface_map(faces: set) -> dict[tuple, set]:
    cof: dict[tuple, set] = {f: set() for f in faces}
    for f in faces:
        if len(f) >= 2:
            for pos in range(len(f)):
                sub = f[:pos] + f[pos + 1:]
                if sub in cof:
                    cof[sub].add(f)
    return cof


def free_faces(cx: SimplicialComplex) -> list[tuple[tuple, tuple]]:
    """All pairs (sigma, tau) where the nonempty face sigma lies in exactly
    one other face, its unique coface tau of one dimension higher."""
    if cx.is_void():
        raise VoidComplexError("free faces are undefined on the void complex")
    faces = {f for f in cx.all_faces() if f}
    cof = _coface_map(faces)
    out = [(s, next(iter(ts))) for s, ts in cof.items() if len(ts) == 1]
    out.sort(key=lambda p: (len(p[0]), p[0]))
    return out


def _remove_free_interval(faces: set, sigma, tau):
    """Remove {gamma : sigma <= gamma <= tau} after checking that tau is the
    only face extending sigma beyond the interval.  Mutates ``faces``."""
    ss, ts = set(sigma), set(tau)
    if sigma not in faces or tau not in faces:
        raise InvalidCollapseError(f"({sigma}, {tau}): not faces of the complex")
    if not ss < ts:
        raise InvalidCollapseError(f"({sigma}, {tau}): not a nested pair")
    for f in faces:
        if ss <= set(f) and not set(f) <= ts:
            raise InvalidCollapseError(
                f"{sigma} is not free: also contained in {f}"
            )
    extra = sorted(ts - ss)
    for r in range(len(extra) + 1):
        for add in combinations(extra, r):
            faces.discard(tuple(sorted(sigma + add)))


def elementary_collapse(cx: SimplicialComplex, sigma, tau) -> SimplicialComplex:
    """Remove every face between the free face sigma and its unique maximal
    coface tau.  When dim tau = dim sigma + 1 this removes exactly the pair;
    a larger gap removes the whole interval (an even face count, and a
    composite of single-step collapses, so the homotopy type is unchanged
    either way)."""
    sigma, tau = tuple(sorted(sigma)), tuple(sorted(tau))
    if not sigma:
        raise InvalidCollapseError("the empty face is never collapsed")
    faces = {f for f in cx.all_faces() if f}
    _remove_free_interval(faces, sigma, tau)
    remaining = faces if faces else [()]
    return from_facets(cx.labels, remaining)


@dataclass(frozen=True)
class CollapseWitness:
    """A replayable sequence of elementary collapses.

    ``verdict`` is "collapsible" when the terminal subcomplex is a single
    vertex, otherwise "unknown" (the search is a semi-decision)."""

    steps: tuple[tuple[tuple, tuple], ...]
    terminal: tuple[tuple, ...]
    verdict: str
    steps_tried: int = 0

    def is_collapsible(self) -> bool:
        return self.verdict == "collapsible"

    def to_json(self, cx: SimplicialComplex) -> str:
        doc = {
            "verdict": self.verdict,
            "steps_tried": self.steps_tried,
            "steps": [
                [list(cx.labels_of_face(s)), list(cx.labels_of_face(t))]
                for s, t in self.steps
            ],
            "terminal": [list(cx.labels_of_face(f)) for f in self.terminal],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(cx: SimplicialComplex, text: str) -> "CollapseWitness":
        doc = json.loads(text)
        steps = tuple(
            (cx.face_of_labels(s), cx.face_of_labels(t)) for s, t in doc["steps"]
        )
        terminal = tuple(sorted(cx.face_of_labels(f) for f in doc["terminal"]))
        return CollapseWitness(steps, terminal, doc["verdict"], doc.get("steps_tried", 0))


def replay_collapse(cx: SimplicialComplex, witness: CollapseWitness) -> bool:
    """Re-run the witness from scratch, checking the free-face condition at
    every step and the terminal face set at the end."""
    faces = {f for f in cx.all_faces() if f}
    cof = _coface_map(faces)
    for sigma, tau in witness.steps:
        if sigma not in faces or tau not in faces:
            return False
        if cof[sigma] != {tau}:
            return False
        faces.discard(sigma)
        faces.discard(tau)
        for g in (sigma, tau):
            if len(g) >= 2:
                for pos in range(len(g)):
                    sub = g[:pos] + g[pos + 1:]
                    if sub in faces:
                        cof[sub].discard(g)
    return tuple(sorted(faces)) == witness.terminal


def greedy_collapse(
    cx: SimplicialComplex, budget: int = DEFAULT_COLLAPSE_BUDGET
) -> CollapseWitness:
    """Collapse toward a single vertex, always taking the lexicographically
    least free pair; on a dead end, backtrack over the alternatives within
    the step budget.

    The first descent runs on a lazy heap (coface counts only decrease, so
    popped entries validate cheaply).  Only if that descent strands does the
    search restart with full backtracking.  Exhausting the budget yields
    verdict "unknown" with the smallest terminal subcomplex reached;
    collapsibility is NP-hard in general, so "unknown" is not a refutation."""
    if cx.is_void():
        raise VoidComplexError("cannot collapse the void complex")
    all_nonempty = {f for f in cx.all_faces() if f}
    if not all_nonempty:
        return CollapseWitness((), (), "unknown", 0)
    if len(all_nonempty) == 1:
        return CollapseWitness((), tuple(sorted(all_nonempty)), "collapsible", 0)

    def fast_descent():
        faces = set(all_nonempty)
        cof = _coface_map(faces)
        heap = [
            (len(s), s, next(iter(ts)))
            for s, ts in cof.items()
            if len(ts) == 1
        ]
        heapq.heapify(heap)
        steps = []
        while len(faces) > 1 and heap:
            d, sigma, tau = heapq.heappop(heap)
            if sigma not in faces or cof[sigma] != {tau}:
                continue
            faces.discard(sigma)
            faces.discard(tau)
            steps.append((sigma, tau))
            for g in (sigma, tau):
                if len(g) >= 2:
                    for pos in range(len(g)):
                        sub = g[:pos] + g[pos + 1:]
                        if sub in faces and g in cof[sub]:
                            cof[sub].discard(g)
                            if len(cof[sub]) == 1:
                                heapq.heappush(heap, (len(sub), sub, next(iter(cof[sub]))))
            if len(steps) > budget:
                break
        return steps, faces

    steps, remaining = fast_descent()
    if len(remaining) == 1:
        return CollapseWitness(tuple(steps), tuple(sorted(remaining)), "collapsible", len(steps))
    if len(steps) >= budget:
        return CollapseWitness(tuple(steps), tuple(sorted(remaining)), "unknown", len(steps))

    # backtracking restart: explore the choice tree in the same lex order
    faces = set(all_nonempty)
    cof = _coface_map(faces)

    def free_pairs():
        out = [
            (s, next(iter(ts)))
            for s, ts in cof.items()
            if s in faces and len(ts) == 1
        ]
        out.sort(key=lambda p: (len(p[0]), p[0], p[1]))
        return out

    def apply(sigma, tau):
        faces.discard(sigma)
        faces.discard(tau)
        touched = []
        for g in (sigma, tau):
            if len(g) >= 2:
                for pos in range(len(g)):
                    sub = g[:pos] + g[pos + 1:]
                    if sub in cof and g in cof[sub]:
                        cof[sub].discard(g)
                        touched.append((sub, g))
        return touched

    def undo(sigma, tau, touched):
        for sub, g in touched:
            cof[sub].add(g)
        faces.add(sigma)
        faces.add(tau)

    steps_tried = len(steps)
    trail: list[tuple] = []
    best_terminal = tuple(sorted(remaining))
    dead_states: set[int] = set()
    candidates = free_pairs()
    pos = 0
    while True:
        if len(faces) == 1:
            witness_steps = tuple((s, t) for s, t, _, _, _ in trail)
            return CollapseWitness(witness_steps, tuple(sorted(faces)), "collapsible", steps_tried)
        progressed = False
        while pos < len(candidates):
            sigma, tau = candidates[pos]
            if sigma in faces and tau in faces and cof[sigma] == {tau}:
                if steps_tried >= budget:
                    return CollapseWitness(
                        tuple((s, t) for s, t, _, _, _ in trail),
                        best_terminal,
                        "unknown",
                        steps_tried,
                    )
                touched = apply(sigma, tau)
                steps_tried += 1
                if hash(frozenset(faces)) in dead_states:
                    undo(sigma, tau, touched)
                    pos += 1
                    continue
                trail.append((sigma, tau, touched, candidates, pos))
                if len(faces) < len(best_terminal):
                    best_terminal = tuple(sorted(faces))
                candidates = free_pairs()
                pos = 0
                progressed = True
                break
            else:
                pos += 1
        if progressed:
            continue
        dead_states.add(hash(frozenset(faces)))
        if not trail:
            return CollapseWitness((), best_terminal, "unknown", steps_tried)
        sigma, tau, touched, candidates, pos = trail.pop()
        undo(sigma, tau, touched)
        pos += 1


def cone_collapse_witness(cx: SimplicialComplex, apex) -> CollapseWitness:
    """Deterministic witness for a cone: every face missing the apex is
    collapsed against its extension by the apex, top dimension first.  The
    apex must belong to every facet."""
    ai = _resolve_vertex(cx, apex)
    for facet in cx.facets:
        if ai not in facet:
            raise InvalidParameterError(
                f"vertex {cx.labels[ai]!r} is not an apex: facet {facet} misses it"
            )
    pairs = [
        (f, tuple(sorted(f + (ai,))))
        for f in cx.all_faces()
        if f and ai not in f
    ]
    pairs.sort(key=lambda p: (-len(p[0]), p[0]))
    return CollapseWitness(tuple(pairs), ((ai,),), "collapsible", len(pairs))


def verify_multicone(cx: SimplicialComplex, filtration, apexes) -> bool:
    """Check the cone-step certificate for a nested chain ending at the
    complex: at stage i, toggling the apex w_i must map the new faces of the
    stage into themselves.  A passing chain certifies collapsibility."""
    stages = [set(map(tuple, stage)) for stage in filtration]
    if len(stages) != len(apexes):
        raise InvalidParameterError("one apex per filtration stage required")
    if not stages:
        raise InvalidParameterError("filtration must be nonempty")
    prev: set = set()
    for stage in stages:
        if not prev <= stage:
            raise InvalidParameterError("filtration stages are not nested")
        prev = stage
    if stages[-1] != set(cx.all_faces()):
        raise InvalidParameterError("filtration does not end at the full complex")
    apex_idx = [_resolve_vertex(cx, a) for a in apexes]
    prev = set()
    for stage, w in zip(stages, apex_idx):
        fresh = stage - prev
        for f in fresh:
            if w in f:
                g = tuple(x for x in f if x != w)
            else:
                g = tuple(sorted(f + (w,)))
            if g not in fresh:
                return False
        prev = stage
    return True


def collapse_complex(cx: SimplicialComplex, steps) -> SimplicialComplex:
    """Apply a sequence of free-pair collapses (interval semantics, same as
    ``elementary_collapse``) and return the result."""
    faces = {f for f in cx.all_faces() if f}
    for sigma, tau in steps:
        _remove_free_interval(faces, tuple(sorted(sigma)), tuple(sorted(tau)))
    return from_facets(cx.labels, faces if faces else [()])

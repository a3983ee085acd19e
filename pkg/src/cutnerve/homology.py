"""Reduced simplicial homology over the integers via Smith normal form.

The chain complex is augmented: the boundary of every vertex is the empty
face, so degree-0 homology is already reduced and a d-sphere shows a single
Z in degree d.  All arithmetic uses Python integers, so intermediate entry
growth and torsion are exact.

The Smith normal form runs in two phases.  Unit entries (the bulk of any
boundary matrix) are eliminated first, choosing pivots greedily from the
sparsest columns to limit fill-in.  Whatever remains is reduced by the
textbook algorithm: minimal absolute pivot, gcd sweeps until the pivot
divides its row and column, then elimination.  The diagonal is normalized
into a divisibility chain at the end; the invariant factors are unique, so
the pivot order cannot affect results.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass

from .complexes import SimplicialComplex
from .errors import InvalidParameterError, VoidComplexError


class SparseIntMatrix:
    """Integer matrix stored as row dictionaries plus a column index."""

    __slots__ = ("nrows", "ncols", "rows", "cols")

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        if entries:
            for (r, c), v in entries.items():
                self.set(r, c, v)

    def set(self, r: int, c: int, v: int):
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise InvalidParameterError(f"entry ({r},{c}) outside {self.nrows}x{self.ncols}")
        if v == 0:
            row = self.rows.get(r)
            if row and c in row:
                del row[c]
                self.cols[c].discard(r)
                if not row:
                    del self.rows[r]
            return
        self.rows.setdefault(r, {})[c] = v
        self.cols.setdefault(c, set()).add(r)

    def get(self, r: int, c: int) -> int:
        return self.rows.get(r, {}).get(c, 0)

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def entries(self) -> dict[tuple[int, int], int]:
        return {(r, c): v for r, row in self.rows.items() for c, v in row.items()}

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, row in self.rows.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def transpose(self) -> "SparseIntMatrix":
        t = SparseIntMatrix(self.ncols, self.nrows)
        for r, row in self.rows.items():
            for c, v in row.items():
                t.set(c, r, v)
        return t

    def copy(self) -> "SparseIntMatrix":
        m = SparseIntMatrix(self.nrows, self.ncols)
        for r, row in self.rows.items():
            m.rows[r] = dict(row)
        for c, rs in self.cols.items():
            m.cols[c] = set(rs)
        return m


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _unit_phase(m: SparseIntMatrix) -> int:
    """Eliminate with +-1 pivots, sparsest columns first.  Returns the pivot
    count; non-unit leftovers stay in the matrix for the textbook phase."""
    rows, cols = m.rows, m.cols
    heap = [(len(rs), c) for c, rs in cols.items()]
    heapq.heapify(heap)
    pivots = 0
    stalled: list[int] = []
    while heap:
        nnz, c = heapq.heappop(heap)
        rs = cols.get(c)
        if not rs:
            continue
        if len(rs) != nnz:
            heapq.heappush(heap, (len(rs), c))
            continue
        best = None
        for r in rs:
            v = rows[r][c]
            if v == 1 or v == -1:
                rl = len(rows[r])
                if best is None or rl < best[0] or (rl == best[0] and r < best[1]):
                    best = (rl, r, v)
        if best is None:
            stalled.append(c)
            continue
        _, p, a = best
        prow = rows.pop(p)
        del prow[c]
        for cc in prow:
            cols[cc].discard(p)
        victims = [r for r in cols.pop(c) if r != p]
        for r in victims:
            row = rows[r]
            q = row.pop(c) * a  # a in {1,-1}, so q = entry / a
            for cc, pv in prow.items():
                cur = row.get(cc)
                if cur is None:
                    nv = -q * pv
                    row[cc] = nv
                    cs = cols[cc]
                    cs.add(r)
                    heapq.heappush(heap, (len(cs), cc))
                else:
                    nv = cur - q * pv
                    if nv:
                        row[cc] = nv
                    else:
                        del row[cc]
                        cols[cc].discard(r)
            if not row:
                del rows[r]
        pivots += 1
    # stalled columns may have shrunk or emptied since deferral; phase 2 takes them
    return pivots


def _textbook_phase(m: SparseIntMatrix) -> list[int]:
    """Full SNF elimination on whatever the unit phase left behind."""
    rows, cols = m.rows, m.cols
    diagonal: list[int] = []

    def row_op(dst: int, src: int, q: int):
        # row_dst -= q * row_src
        srow = rows.get(src, {})
        drow = rows.setdefault(dst, {})
        for c, v in list(srow.items()):
            nv = drow.get(c, 0) - q * v
            if nv:
                drow[c] = nv
                cols[c].add(dst)
            elif c in drow:
                del drow[c]
                cols[c].discard(dst)
        if not drow:
            del rows[dst]

    def combine_rows(r1: int, r2: int, c: int):
        # replace rows so that entry (r1, c) becomes gcd and (r2, c) zero
        a, b = rows[r1][c], rows[r2][c]
        x, y, g = _xgcd(a, b)
        u, w = a // g, b // g
        row1 = rows.get(r1, {})
        row2 = rows.get(r2, {})
        touched = set(row1) | set(row2)
        for cc in touched:
            v1 = row1.get(cc, 0)
            v2 = row2.get(cc, 0)
            n1 = x * v1 + y * v2
            n2 = -w * v1 + u * v2
            for r, nv, row in ((r1, n1, row1), (r2, n2, row2)):
                if nv:
                    row[cc] = nv
                    cols[cc].add(r)
                elif cc in row:
                    del row[cc]
                    cols[cc].discard(r)
        if not row1 and r1 in rows:
            del rows[r1]
        if not row2 and r2 in rows:
            del rows[r2]

    while rows:
        # minimal |value|, then sparsest, then index order
        best = None
        for r, row in rows.items():
            for c, v in row.items():
                key = (abs(v), len(row) * len(cols[c]), r, c)
                if best is None or key < best[0]:
                    best = (key, r, c)
        _, p, c = best
        while True:
            # make the pivot divide its column, then clear the column
            changed = True
            while changed:
                changed = False
                a = rows[p][c]
                for r in list(cols[c]):
                    if r == p:
                        continue
                    if rows[r][c] % a:
                        combine_rows(p, r, c)
                        changed = True
                        break
            a = rows[p][c]
            for r in list(cols[c]):
                if r != p:
                    row_op(r, p, rows[r][c] // a)
            # column ops mirror row ops on the transpose relation
            changed = True
            while changed:
                changed = False
                a = rows[p][c]
                prow = rows[p]
                for cc in list(prow):
                    if cc == c:
                        continue
                    if prow[cc] % a:
                        # column combination via the extended gcd
                        b = prow[cc]
                        x, y, g = _xgcd(a, b)
                        u, w = a // g, b // g
                        for r in list(cols[c] | cols[cc]):
                            v1 = rows.get(r, {}).get(c, 0)
                            v2 = rows.get(r, {}).get(cc, 0)
                            n1 = x * v1 + y * v2
                            n2 = -w * v1 + u * v2
                            row = rows.setdefault(r, {})
                            for col, nv in ((c, n1), (cc, n2)):
                                if nv:
                                    row[col] = nv
                                    cols[col].add(r)
                                elif col in row:
                                    del row[col]
                                    cols[col].discard(r)
                            if not row:
                                del rows[r]
                        changed = True
                        break
            a = rows[p][c]
            prow = rows[p]
            for cc in list(prow):
                if cc != c:
                    q = prow[cc] // a
                    # col_cc -= q * col_c
                    for r in list(cols[c]):
                        row = rows[r]
                        nv = row.get(cc, 0) - q * row[c]
                        if nv:
                            row[cc] = nv
                            cols[cc].add(r)
                        elif cc in row:
                            del row[cc]
                            cols[cc].discard(r)
            # clearing the row may have re-dirtied the column
            if len(cols[c]) == 1 and len(rows[p]) == 1:
                break
        diagonal.append(abs(rows[p][c]))
        del rows[p]
        cols[c].discard(p)
        if not cols[c]:
            del cols[c]
    return diagonal


def _divisibility_chain(values: list[int]) -> tuple[int, ...]:
    vals = [abs(v) for v in values if v]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a:
                    _, _, g = _xgcd(a, b)
                    vals[i], vals[j] = g, a * b // g
                    changed = True
    vals.sort()
    return tuple(vals)


def smith_normal_form(m: SparseIntMatrix) -> tuple[int, ...]:
    """Diagonal invariants d_1 | d_2 | ... | d_r of the matrix; r = rank."""
    work = m.copy()
    units = _unit_phase(work)
    residual = _textbook_phase(work)
    return _divisibility_chain([1] * units + residual)


def matrix_rank(m: SparseIntMatrix) -> int:
    return len(smith_normal_form(m))


# ---------------------------------------------------------------------------
# boundary matrices
# ---------------------------------------------------------------------------

def boundary_matrix(cx: SimplicialComplex, d: int, budget: int | None = None) -> SparseIntMatrix:
    """The boundary operator from d-chains to (d-1)-chains with the
    orientation induced by sorted vertex order.  Degree 0 maps vertices onto
    the empty face (the augmentation), which is what makes the homology
    reduced."""
    if cx.is_void():
        raise VoidComplexError("boundary matrices are undefined on the void complex")
    if d < 0:
        raise InvalidParameterError(f"boundary degree must be >= 0, got {d}")
    by_dim = cx.faces_by_dim(budget)
    lower = by_dim.get(d - 1, [])
    upper = by_dim.get(d, [])
    m = SparseIntMatrix(len(lower), len(upper))
    index = {f: i for i, f in enumerate(lower)}
    for c, f in enumerate(upper):
        for pos in range(len(f)):
            sub = f[:pos] + f[pos + 1:]
            m.set(index[sub], c, -1 if pos % 2 else 1)
    return m


def _boundary_parts(by_dim: dict[int, list], d: int) -> SparseIntMatrix:
    lower = by_dim.get(d - 1, [])
    upper = by_dim.get(d, [])
    m = SparseIntMatrix(len(lower), len(upper))
    index = {f: i for i, f in enumerate(lower)}
    rows, cols = m.rows, m.cols
    for c, f in enumerate(upper):
        for pos in range(len(f)):
            r = index[f[:pos] + f[pos + 1:]]
            rows.setdefault(r, {})[c] = -1 if pos % 2 else 1
            cols.setdefault(c, set()).add(r)
    return m


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integer homology: free ranks per dimension and torsion
    coefficients (sorted divisibility chains) per dimension.

    ``minus_one_rank`` is 1 exactly for the empty complex, whose augmented
    chain complex has one leftover Z in degree -1.  The void complex carries
    the empty profile with ``void`` set.
    """

    betti: tuple[int, ...] = ()
    torsion: tuple[tuple[int, tuple[int, ...]], ...] = ()
    minus_one_rank: int = 0
    void: bool = False

    def betti_number(self, d: int) -> int:
        return self.betti[d] if 0 <= d < len(self.betti) else 0

    def torsion_in(self, d: int) -> tuple[int, ...]:
        for dim, coeffs in self.torsion:
            if dim == d:
                return coeffs
        return ()

    def has_torsion(self) -> bool:
        return bool(self.torsion)

    def is_trivial(self) -> bool:
        """All reduced homology vanishes (the profile of a contractible space)."""
        return (
            not self.void
            and self.minus_one_rank == 0
            and not self.torsion
            and all(b == 0 for b in self.betti)
        )

    def is_sphere(self, d: int) -> bool:
        return self.is_wedge(d, 1)

    def is_wedge(self, d: int, m: int) -> bool:
        """Exactly m copies of Z in degree d and nothing else; m = 0 means
        homology-trivial."""
        if m == 0:
            return self.is_trivial()
        if self.void or self.minus_one_rank or self.torsion:
            return False
        return self.betti_number(d) == m and sum(self.betti) == m

    def nonzero(self) -> dict[int, int]:
        return {d: b for d, b in enumerate(self.betti) if b}

    def to_json(self) -> str:
        doc = {
            "betti": list(self.betti),
            "torsion": [[d, c] for d, coeffs in self.torsion for c in coeffs],
            "minus_one": self.minus_one_rank,
            "void": self.void,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "HomologyProfile":
        doc = json.loads(text)
        grouped: dict[int, list[int]] = {}
        for d, c in doc.get("torsion", []):
            grouped.setdefault(d, []).append(c)
        torsion = tuple((d, tuple(sorted(cs))) for d, cs in sorted(grouped.items()))
        return HomologyProfile(
            betti=tuple(doc.get("betti", [])),
            torsion=torsion,
            minus_one_rank=doc.get("minus_one", 0),
            void=doc.get("void", False),
        )

    @staticmethod
    def sphere(d: int) -> "HomologyProfile":
        return HomologyProfile.wedge(d, 1)

    @staticmethod
    def wedge(d: int, m: int) -> "HomologyProfile":
        if m == 0:
            return HomologyProfile()
        betti = [0] * (d + 1)
        betti[d] = m
        return HomologyProfile(betti=tuple(betti))


def _trim(betti: list[int]) -> tuple[int, ...]:
    while betti and betti[-1] == 0:
        betti.pop()
    return tuple(betti)


def reduced_homology(cx: SimplicialComplex, budget: int | None = None) -> HomologyProfile:
    """Exact reduced homology profile of the complex."""
    if cx._homology is not None:
        return cx._homology
    if cx.is_void():
        profile = HomologyProfile(void=True)
    elif cx.is_empty_complex():
        profile = HomologyProfile(minus_one_rank=1)
    else:
        by_dim = cx.faces_by_dim(budget)
        top = max(by_dim)
        ranks = {0: 1}  # augmentation row is hit by every vertex
        invariants: dict[int, tuple[int, ...]] = {}
        for d in range(1, top + 1):
            inv = smith_normal_form(_boundary_parts(by_dim, d))
            invariants[d] = inv
            ranks[d] = len(inv)
        ranks[top + 1] = 0
        betti = [
            len(by_dim.get(d, [])) - ranks[d] - ranks[d + 1]
            for d in range(top + 1)
        ]
        torsion = []
        for d in range(top):
            coeffs = tuple(v for v in invariants.get(d + 1, ()) if v > 1)
            if coeffs:
                torsion.append((d, coeffs))
        profile = HomologyProfile(betti=_trim(betti), torsion=tuple(torsion))
    object.__setattr__(cx, "_homology", profile)
    return profile


def is_wedge_of_spheres_profile(cx: SimplicialComplex, d: int, m: int, budget: int | None = None) -> bool:
    """True iff the reduced homology is exactly m copies of Z in degree d
    with no torsion (m = 0 asks for trivial homology)."""
    return reduced_homology(cx, budget).is_wedge(d, m)


def join_homology_check(a: SimplicialComplex, b: SimplicialComplex, budget: int | None = None):
    """Verify the join rank identity: the reduced rank of the join in degree
    r equals the convolution of the factors' ranks over p + q = r - 1.

    Returns True/False, or None when either factor has torsion (the identity
    needs torsion-free input, so the check is inapplicable rather than
    failed)."""
    from .complexes import join

    pa = reduced_homology(a, budget)
    pb = reduced_homology(b, budget)
    if pa.has_torsion() or pb.has_torsion():
        return None
    if pa.void or pb.void:
        return None
    pj = reduced_homology(join(a, b), budget)
    top = len(pa.betti) + len(pb.betti) + 1
    # treat the empty complex as a (-1)-sphere: one unit of rank in degree -1
    ra = {d: b_ for d, b_ in enumerate(pa.betti)}
    rb = {d: b_ for d, b_ in enumerate(pb.betti)}
    if pa.minus_one_rank:
        ra[-1] = pa.minus_one_rank
    if pb.minus_one_rank:
        rb[-1] = pb.minus_one_rank
    for r in range(-1, top + 1):
        expected = sum(
            ra.get(p, 0) * rb.get(r - 1 - p, 0) for p in range(-1, r + 1)
        )
        actual = pj.betti_number(r) if r >= 0 else pj.minus_one_rank
        if actual != expected:
            return False
    return True

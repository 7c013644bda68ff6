"""Brute-force falsification of the PBW property by filtered dimension counts.

The two-sided ideal generated by the inhomogeneous relators
r_a - kappa(r_a) inside the truncated smash product is spanned, degree by
degree, and the span is intersected with each filtration level.  Whenever
the resulting quotient dimension drops below the dimension forced by a
PBW deformation (sum of graded dimensions of B times dim H), the PBW
property provably fails.  The converse does not hold: a finite span can
miss cancellations that only appear beyond the truncation, so CONSISTENT
is evidence, not proof; the checker in `deform` is the decider.

The spanning degree is N + k for a report at filtration degree N; the
buffer k absorbs cancellations between relator multiples of neighbouring
degrees.  Larger buffers can only shrink the computed dimensions.

Everything is exact.  The elimination works over integer coefficient
vectors (cleared denominators, content-stripped) with fraction-free row
reduction, and the column order is by descending degree so that pivot
counts per degree block give the intersection dimensions directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field
from math import gcd

from .scalar import Scalar, field as scalar_field
from .hopf import HopfAlgebra, algebra_generators
from .modalg import ModuleAlgebra, CutoffExceeded, graded_dim
from .smash import straighten
from .deform import Kappa


class OracleError(Exception):
    pass


CONSISTENT_CAVEAT = ("CONSISTENT is evidence only; a finite span cannot rule out "
                     "deeper cancellations")


@dataclass
class FilteredDimReport:
    degree_bound: int
    buffer: int
    computed_dims: list          # upper bound on dim F_m, m = 0..N
    expected_dims: list          # PBW-forced dims
    verdict: str                 # "FALSIFIED" | "CONSISTENT"
    falsified_at: int | None = None
    caveat: str = CONSISTENT_CAVEAT

    @property
    def falsified(self) -> bool:
        return self.verdict == "FALSIFIED"


@dataclass
class ProbeReport:
    verdict: str
    falsified_at: int | None = None
    falsified_buffer: int | None = None
    reports: list = dc_field(default_factory=list)


# -- integer coefficient arithmetic -------------------------------------------

class _ZOps:
    """Ring operations on integer coordinate vectors of Q(zeta_N) elements."""

    def __init__(self, order: int):
        f = scalar_field(order)
        self.order = order
        self.phi = f.phi
        self.f = f
        self.zero = 0 if f.phi == 1 else (0,) * f.phi

    def to_int(self, s: Scalar):
        # numerator vector; the caller tracks the denominator
        if self.phi == 1:
            return s.num[0]
        return s.num

    def mulvec(self, a, b):
        if self.phi == 1:
            return a * b
        return self.f.mul_vec(a, b)

    def addvec(self, a, b):
        if self.phi == 1:
            return a + b
        return tuple(x + y for x, y in zip(a, b))

    def subvec(self, a, b):
        if self.phi == 1:
            return a - b
        return tuple(x - y for x, y in zip(a, b))

    def scale(self, a, c: int):
        if self.phi == 1:
            return a * c
        return tuple(x * c for x in a)

    def iszero(self, a) -> bool:
        if self.phi == 1:
            return a == 0
        return not any(a)

    def content(self, a) -> int:
        if self.phi == 1:
            return abs(a)
        g = 0
        for x in a:
            g = gcd(g, x)
            if g == 1:
                return 1
        return g


def _row_content(ops: _ZOps, row: dict) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, ops.content(v))
        if g == 1:
            return 1
    return g


def _strip(ops: _ZOps, row: dict) -> dict:
    g = _row_content(ops, row)
    if g > 1:
        if ops.phi == 1:
            return {c: v // g for c, v in row.items()}
        return {c: tuple(x // g for x in v) for c, v in row.items()}
    return row


class _IntEchelon:
    """Echelon form without back-substitution, fraction-free over Z[zeta]."""

    def __init__(self, ops: _ZOps):
        self.ops = ops
        self.pivots: dict = {}      # col -> row dict

    def insert(self, row: dict) -> int | None:
        ops = self.ops
        mul, sub, iszero = ops.mulvec, ops.subvec, ops.iszero
        row = {c: v for c, v in row.items() if not iszero(v)}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                row = _strip(ops, row)
                self.pivots[c] = row
                return c
            pc = piv[c]
            rc = row.pop(c)
            out = {}
            for col, v in row.items():
                out[col] = mul(pc, v)
            for col, v in piv.items():
                if col == c:
                    continue
                t = mul(rc, v)
                cur = out.get(col)
                nv = sub(cur, t) if cur is not None else (ops.scale(t, -1))
                if iszero(nv):
                    out.pop(col, None)
                else:
                    out[col] = nv
            row = _strip(ops, out)
        return None


# -- column indexing -----------------------------------------------------------

class _Ambient:
    """Column layout for T(V)#H up to degree D, highest degree first."""

    def __init__(self, vdim: int, hdim: int, D: int):
        self.vdim = vdim
        self.hdim = hdim
        self.D = D
        self.block = [vdim ** m * hdim for m in range(D + 1)]
        base = {}
        off = 0
        for m in range(D, -1, -1):
            base[m] = off
            off += self.block[m]
        self.base = base
        self.total = off
        bounds = []
        for m in range(D + 1):
            bounds.append((self.base[m], self.base[m] + self.block[m]))
        self.bounds = bounds

    def col(self, word_rank: int, deg: int, h: int) -> int:
        return self.base[deg] + word_rank * self.hdim + h

    def degree_of(self, col: int) -> int:
        for m in range(self.D, -1, -1):
            lo, hi = self.bounds[m]
            if lo <= col < hi:
                return m
        raise OracleError("column out of range")

    def decode(self, col: int) -> tuple[int, int, int]:
        m = self.degree_of(col)
        rest = col - self.base[m]
        return rest // self.hdim, m, rest % self.hdim

    def dim_upto(self, m: int) -> int:
        return sum(self.block[j] for j in range(m + 1))


# -- the spanning oracle ---------------------------------------------------------

def _relator_rows(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa, amb: _Ambient, ops: _ZOps):
    """Relators r_a - kappa^L(r_a) - kappa^C(r_a) as integer rows."""
    vd, d = B.vdim, H.dim
    rows = []
    for a in range(B.dim_relations()):
        entries: dict = {}
        den = 1

        def add(col, s: Scalar):
            nonlocal den, entries
            if s.is_zero():
                return
            if s.den != den:
                g = gcd(den, s.den)
                lift = s.den // g
                if lift > 1:
                    entries = {c: ops.scale(v, lift) for c, v in entries.items()}
                    den *= lift
                my = den // s.den
            else:
                my = 1
            v = ops.scale(ops.to_int(s), my)
            cur = entries.get(col)
            nv = ops.addvec(cur, v) if cur is not None else v
            if ops.iszero(nv):
                entries.pop(col, None)
            else:
                entries[col] = nv

        for (i, j), c in B.relation_sparse(a).items():
            for u, cu in H.unit.items():
                add(amb.col(i * vd + j, 2, u), c * cu)
        for (v, h), c in kappa.l_vec(a, d).items():
            add(amb.col(v, 1, h), -c)
        for h, c in kappa.c_vec(a).items():
            add(amb.col(0, 0, h), -c)
        rows.append(_strip(ops, entries))
    return rows


def _prepare_tables(H: HopfAlgebra, B: ModuleAlgebra, ops: _ZOps):
    """Integerized straightening and multiplication tables.

    Per-row denominators are dropped: scaling a generated row does not
    change the span it contributes.
    """
    vd, d = B.vdim, H.dim
    one = Scalar.one(H.order)
    # straight[h][v] = list of (v_out, h_out, coeff_vec) with a common
    # denominator cleared per (h, v) pair
    straight = []
    for h in range(d):
        per_v = []
        for v in range(vd):
            moved = straighten(H, B, {h: one}, {(v,): one})
            den = 1
            for c in moved.values():
                den = den * c.den // gcd(den, c.den)
            ent = []
            for (word, h2), c in moved.items():
                ent.append((word[0], h2, ops.scale(ops.to_int(c), den // c.den)))
            per_v.append(ent)
        straight.append(per_v)
    # hmul[h][g] = list of (h_out, coeff_vec), denominators cleared
    hmul = []
    for h in range(d):
        per_g = []
        for g in range(d):
            prod = H.mult[h][g]
            den = 1
            for c in prod.values():
                den = den * c.den // gcd(den, c.den)
            ent = [(k, ops.scale(ops.to_int(c), den // c.den)) for k, c in prod.items()]
            per_g.append(ent)
        hmul.append(per_g)
    return straight, hmul


def filtered_dims(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa,
                  N: int = 3, k: int = 1) -> FilteredDimReport:
    """Span the relator ideal through degree N + k and report the filtered
    dimension upper bounds for degrees 0..N against the PBW expectation."""
    if N < 2:
        raise OracleError("degree bound must be at least 2")
    D = N + k
    if D > B.cutoff:
        raise CutoffExceeded(f"spanning degree {D} exceeds cutoff {B.cutoff}")
    vd, d = B.vdim, H.dim
    ops = _ZOps(H.order)
    amb = _Ambient(vd, d, D)
    ech = _IntEchelon(ops)
    straight, hmul = _prepare_tables(H, B, ops)
    hgens = algebra_generators(H)

    gen_of: dict = {}        # pivot col -> generation degree
    pending = deque()        # (pivot col, generation degree, seed flag)

    def insert(row: dict, gen: int, seed: bool) -> None:
        piv = ech.insert(row)
        if piv is not None:
            gen_of[piv] = gen
            pending.append((piv, gen, seed))

    def right_h(row: dict, g: int) -> dict:
        out: dict = {}
        mul, addv, iszero = ops.mulvec, ops.addvec, ops.iszero
        for col, v in row.items():
            wr, m, h = amb.decode(col)
            base = amb.base[m] + wr * d
            for h2, cm in hmul[h][g]:
                t = mul(v, cm)
                c2 = base + h2
                cur = out.get(c2)
                nv = addv(cur, t) if cur is not None else t
                if iszero(nv):
                    out.pop(c2, None)
                else:
                    out[c2] = nv
        return out

    def left_h(row: dict, g: int) -> dict:
        # straighten e_g through every term; fan-out over iterated coproducts
        out: dict = {}
        one = Scalar.one(H.order)
        mul, addv, iszero = ops.mulvec, ops.addvec, ops.iszero
        for col, v in row.items():
            wr, m, h = amb.decode(col)
            word = []
            r = wr
            for _ in range(m):
                word.append(r % vd)
                r //= vd
            word.reverse()
            moved = straighten(H, B, {g: one}, {tuple(word): one})
            den = 1
            for c in moved.values():
                den = den * c.den // gcd(den, c.den)
            for (w2, hmid), c in moved.items():
                cv = ops.scale(ops.to_int(c), den // c.den)
                wr2 = 0
                for wi in w2:
                    wr2 = wr2 * vd + wi
                base = amb.base[m] + wr2 * d
                for h2, cm in hmul[hmid][h]:
                    t = mul(mul(v, cv), cm)
                    c2 = base + h2
                    cur = out.get(c2)
                    nv = addv(cur, t) if cur is not None else t
                    if iszero(nv):
                        out.pop(c2, None)
                    else:
                        out[c2] = nv
        return out

    def left_v(row: dict, v: int) -> dict:
        out = {}
        for col, val in row.items():
            wr, m, h = amb.decode(col)
            out[amb.col(v * (vd ** m) + wr, m + 1, h)] = val
        return out

    def right_v(row: dict, v: int) -> dict:
        out: dict = {}
        mul, addv, iszero = ops.mulvec, ops.addvec, ops.iszero
        for col, val in row.items():
            wr, m, h = amb.decode(col)
            for v2, h2, cs in straight[h][v]:
                t = mul(val, cs)
                c2 = amb.col(wr * vd + v2, m + 1, h2)
                cur = out.get(c2)
                nv = addv(cur, t) if cur is not None else t
                if iszero(nv):
                    out.pop(c2, None)
                else:
                    out[c2] = nv
        return out

    def drain() -> None:
        while pending:
            piv, gen, seed = pending.popleft()
            row = ech.pivots[piv]
            for g in hgens:
                insert(right_h(row, g), gen, seed)
                if seed:
                    insert(left_h(row, g), gen, True)

    for row in _relator_rows(H, B, kappa, amb, ops):
        insert(row, 2, True)
    drain()
    for j in range(2, D):
        layer = [piv for piv, g in gen_of.items() if g == j]
        for piv in layer:
            row = ech.pivots[piv]
            for v in range(vd):
                insert(left_v(row, v), j + 1, False)
                insert(right_v(row, v), j + 1, False)
        drain()

    # pivot counts by degree give dim(span  cap  T_{<=m})
    pivot_deg = [amb.degree_of(c) for c in ech.pivots]
    computed = []
    expected = []
    for m in range(N + 1):
        inter = sum(1 for pd in pivot_deg if pd <= m)
        computed.append(amb.dim_upto(m) - inter)
        expected.append(sum(graded_dim(B, j) for j in range(m + 1)) * d)
    falsified_at = next((m for m in range(N + 1) if computed[m] < expected[m]), None)
    verdict = "FALSIFIED" if falsified_at is not None else "CONSISTENT"
    return FilteredDimReport(N, k, computed, expected, verdict, falsified_at)


def pbw_probe(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa,
              N: int = 3, k_max: int = 2) -> ProbeReport:
    """Run filtered_dims for buffers 0..k_max; FALSIFIED on the first strict
    deficiency proves the quotient is not PBW, CONSISTENT is evidence only."""
    reports = []
    for k in range(k_max + 1):
        rep = filtered_dims(H, B, kappa, N, k)
        reports.append(rep)
        if rep.falsified:
            return ProbeReport("FALSIFIED", rep.falsified_at, k, reports)
    return ProbeReport("CONSISTENT", None, None, reports)

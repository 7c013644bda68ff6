"""Deformation maps and the PBW deformation criterion.

A deformation map kappa sends each canonical relation r_a of B to a
constant part in H and a linear part in V (x) H.  The filtered quotient of
T(V) # H by the elements r - kappa(r) is a PBW deformation of B # H
exactly when

  (a) kappa is H-invariant under the adjoint actions,

and, whenever the degree-3 overlap space (I (x) V) cap (V (x) I) is
nonzero, for the maps kC = kappa^C, kL = kappa^L on that space:

  (b) Im(kL (x) id - id (x) kL) lies in I,
  (c) kL o (kL (x) id - id (x) kL) = -(kC (x) id - id (x) kC),
  (d) kC o (id (x) kL - kL (x) id) = 0.

All comparisons happen in the right-normal form of the smash product:
H-legs are straightened to the right, so "lies in I" concretely means
"lies in I (x) H after straightening".

Conditions (a) and (b) are linear in the entries of kappa; the solver
computes their joint kernel exactly, then expands (c) and (d) on that
space.  The quadratic coefficient tensors vanish in every bundled problem
(the linear part of the solution space is zero, or the overlap space is),
so the residual constraints are linear and the solver reports the final
family; otherwise it returns the residual polynomial system symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .scalar import Scalar
from .exactla import Matrix, Subspace, membership, NotMember, sparse_kernel, _rref_rows
from .hopf import HopfAlgebra, add_into, adjoint_on_H, format_hvec
from .modalg import ModuleAlgebra, act_on_tensor, koszul_component
from .smash import straighten, adjoint_on_VH


class DeformError(Exception):
    pass


class NotInD3(DeformError):
    """Argument is outside the degree-3 overlap space."""


@dataclass
class Kappa:
    """Coefficients of a deformation map on the canonical relation basis.

    ``constant`` is dim I x d (image in H); ``linear`` is
    dim I x (vdim * d) with column index v * d + h (image in V (x) H).
    """

    order: int
    constant: Matrix
    linear: Matrix

    @staticmethod
    def zero(H: HopfAlgebra, B: ModuleAlgebra) -> "Kappa":
        p = B.dim_relations()
        return Kappa(H.order,
                     Matrix.zero(p, H.dim, H.order),
                     Matrix.zero(p, B.vdim * H.dim, H.order))

    @staticmethod
    def from_vectors(H: HopfAlgebra, B: ModuleAlgebra,
                     cvecs: list[dict], lvecs: list[dict]) -> "Kappa":
        """Build from per-relation sparse images: cvecs[a] over H indices,
        lvecs[a] over (v, h) pairs."""
        p = B.dim_relations()
        d, vd = H.dim, B.vdim
        zero = Scalar.zero(H.order)
        crow = []
        lrow = []
        for a in range(p):
            c = [zero] * d
            for i, s in (cvecs[a] or {}).items():
                c[i] = c[i] + s
            crow.append(c)
            l = [zero] * (vd * d)
            for (v, h), s in (lvecs[a] or {}).items():
                l[v * d + h] = l[v * d + h] + s
            lrow.append(l)
        return Kappa(H.order, Matrix.from_rows(crow, cols=d),
                     Matrix.from_rows(lrow, cols=vd * d))

    def c_vec(self, a: int) -> dict:
        return {i: c for i, c in enumerate(self.constant.row(a)) if not c.is_zero()}

    def l_vec(self, a: int, d: int) -> dict:
        row = self.linear.row(a)
        return {(i // d, i % d): c for i, c in enumerate(row) if not c.is_zero()}

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.constant.entries) and \
               all(c.is_zero() for c in self.linear.entries)

    def scale(self, c: Scalar) -> "Kappa":
        return Kappa(self.order,
                     Matrix(self.constant.rows, self.constant.cols,
                            tuple(e * c for e in self.constant.entries)),
                     Matrix(self.linear.rows, self.linear.cols,
                            tuple(e * c for e in self.linear.entries)))

    def add(self, other: "Kappa") -> "Kappa":
        return Kappa(self.order,
                     Matrix(self.constant.rows, self.constant.cols,
                            tuple(a + b for a, b in zip(self.constant.entries, other.constant.entries))),
                     Matrix(self.linear.rows, self.linear.cols,
                            tuple(a + b for a, b in zip(self.linear.entries, other.linear.entries))))


@dataclass
class ConditionStatus:
    status: str                      # "pass" | "fail" | "vacuous" | "blocked"
    witnesses: list = dc_field(default_factory=list)


@dataclass
class ConditionReport:
    conditions: dict = dc_field(default_factory=dict)   # name -> ConditionStatus
    notes: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(st.status in ("pass", "vacuous") for st in self.conditions.values())

    def status(self, name: str) -> str:
        return self.conditions[name].status


@dataclass
class ResidualPoly:
    """One scalar constraint sum q_ij t_i t_j + sum l_i t_i = 0 on the
    family coordinates."""

    quad: dict                      # {(i, j): Scalar}, i <= j
    lin: dict                       # {i: Scalar}
    label: str = ""

    def render(self) -> str:
        parts = []
        for (i, j) in sorted(self.quad):
            c = self.quad[(i, j)]
            mon = f"t{i + 1}^2" if i == j else f"t{i + 1}*t{j + 1}"
            parts.append(f"({c})*{mon}")
        for i in sorted(self.lin):
            parts.append(f"({self.lin[i]})*t{i + 1}")
        return (" + ".join(parts) if parts else "0") + " = 0"


@dataclass
class KappaFamily:
    """Solution family of the deformation conditions.

    ``linear_basis`` spans the family cut out by all linear constraints:
    when the residual system vanishes or linearizes this is the final
    family (dimension ``family_dim``); otherwise ``family_dim`` is None
    and ``residual_system`` holds the remaining polynomial constraints on
    the coordinates of ``linear_basis``.  ``ab_basis`` is the intermediate
    solution space of conditions (a) and (b) alone.
    """

    linear_basis: list              # list[Kappa]
    residual_system: list           # list[ResidualPoly]
    family_dim: int | None
    ab_basis: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)


# -- coordinate plumbing -------------------------------------------------------

def _dense_vv(B: ModuleAlgebra, t: dict) -> list[Scalar]:
    zero = Scalar.zero(B.order)
    v = [zero] * (B.vdim * B.vdim)
    for (i, j), c in t.items():
        v[i * B.vdim + j] = v[i * B.vdim + j] + c
    return v


def rel_coords(B: ModuleAlgebra, t: dict) -> list[Scalar]:
    """Coordinates of a degree-2 tensor in the canonical relation basis."""
    return membership(_dense_vv(B, t), B.relations)


def _sparse_tensor3(B: ModuleAlgebra, dense) -> dict:
    vd = B.vdim
    out = {}
    for idx, c in enumerate(dense):
        if not c.is_zero():
            out[(idx // (vd * vd), (idx // vd) % vd, idx % vd)] = c
    return out


def expand_left(B: ModuleAlgebra, s: dict) -> list[dict]:
    """Write s in I (x) V as sum_a r_a (x) y_a; returns the y_a as sparse
    V-vectors.  Unique because the relation basis is independent."""
    return _expand(B, s, left=True)


def expand_right(B: ModuleAlgebra, s: dict) -> list[dict]:
    """Write s in V (x) I as sum_a z_a (x) r_a; returns the z_a."""
    return _expand(B, s, left=False)


def _expand(B: ModuleAlgebra, s: dict, left: bool) -> list[dict]:
    from .exactla import solve as la_solve
    vd = B.vdim
    p = B.dim_relations()
    zero = Scalar.zero(B.order)
    ncols = p * vd
    rows = []
    rhs = []
    rels = [B.relation_sparse(a) for a in range(p)]
    for w1 in range(vd):
        for w2 in range(vd):
            for w3 in range(vd):
                row = [zero] * ncols
                for a, rel in enumerate(rels):
                    if left:
                        c = rel.get((w1, w2))
                        if c is not None:
                            row[a * vd + w3] = c
                    else:
                        c = rel.get((w2, w3))
                        if c is not None:
                            row[a * vd + w1] = c
                rows.append(row)
                rhs.append(s.get((w1, w2, w3), zero))
    m = Matrix.from_rows(rows, cols=ncols)
    try:
        x, _hom = la_solve(m, rhs)
    except Exception as exc:
        raise NotInD3(f"tensor does not lie in the required side: {exc}") from exc
    out = []
    for a in range(p):
        vec = {}
        for v in range(vd):
            c = x[a * vd + v]
            if not c.is_zero():
                vec[v] = c
        out.append(vec)
    return out


# -- the overlap maps ----------------------------------------------------------

def overlap_maps(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa, s: dict) -> tuple[dict, dict]:
    """The straightened mismatch of kappa across a degree-3 overlap element.

    Returns (deltaL, deltaC): deltaL is a sparse vector over (v1, v2, h)
    keys in V (x) V (x) H, deltaC over (v, h) keys in V (x) H.  Raises
    NotInD3 when s is outside (I (x) V) cap (V (x) I).
    """
    D3 = koszul_component(B, 3)
    dense = [Scalar.zero(B.order)] * (B.vdim ** 3)
    for (a, b, c), v in s.items():
        dense[(a * B.vdim + b) * B.vdim + c] = dense[(a * B.vdim + b) * B.vdim + c] + v
    if not D3.contains(dense):
        raise NotInD3("element is outside the degree-3 overlap space")
    ys = expand_left(B, s)
    zs = expand_right(B, s)
    return _overlap_from_expansions(H, B, kappa, ys, zs)


def _overlap_from_expansions(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa,
                             ys: list[dict], zs: list[dict]) -> tuple[dict, dict]:
    d = H.dim
    deltaL: dict = {}
    deltaC: dict = {}
    for a in range(B.dim_relations()):
        y, z = ys[a], zs[a]
        kc = kappa.c_vec(a)
        kl = kappa.l_vec(a, d)
        if y:
            t = {(vi,): c for vi, c in y.items()}
            if kc:
                for (word, h2), c in straighten(H, B, kc, t).items():
                    add_into(deltaC, (word[0], h2), c)
            for (v, h), cl in kl.items():
                for (word, h2), c in straighten(H, B, {h: Scalar.one(H.order)}, t).items():
                    add_into(deltaL, (v, word[0], h2), cl * c)
        if z:
            for zv, cz in z.items():
                for i, c in kc.items():
                    add_into(deltaC, (zv, i), -(cz * c))
                for (v, h), cl in kl.items():
                    add_into(deltaL, (zv, v, h), -(cz * cl))
    return deltaL, deltaC


def _deltaL_rel_coords(B: ModuleAlgebra, d: int, deltaL: dict) -> dict | None:
    """Express deltaL in I (x) H: {(a, h): Scalar}, or None if outside."""
    by_h: dict = {}
    for (v1, v2, h), c in deltaL.items():
        by_h.setdefault(h, {})[(v1, v2)] = c
    out: dict = {}
    for h, t in by_h.items():
        try:
            coords = rel_coords(B, t)
        except NotMember:
            return None
        for a, c in enumerate(coords):
            if not c.is_zero():
                out[(a, h)] = c
    return out


def _apply_kl_ext(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa, coords: dict) -> dict:
    """kappa^L extended to I (x) H: apply on the relation leg, multiply H legs."""
    out: dict = {}
    d = H.dim
    for (a, h), c in coords.items():
        for (v, h1), cl in kappa.l_vec(a, d).items():
            for h2, cm in H.mult[h1][h].items():
                add_into(out, (v, h2), c * cl * cm)
    return out


def _apply_kc_ext(H: HopfAlgebra, kappa: Kappa, coords: dict) -> dict:
    out: dict = {}
    for (a, h), c in coords.items():
        for h1, cc in kappa.c_vec(a).items():
            for h2, cm in H.mult[h1][h].items():
                add_into(out, h2, c * cc * cm)
    return out


# -- condition checks ----------------------------------------------------------

def _fmt_vh(H: HopfAlgebra, B: ModuleAlgebra, w: dict) -> str:
    if not w:
        return "0"
    parts = []
    for (v, h) in sorted(w):
        parts.append(f"({w[(v, h)]})*{B.vlabels[v]}(x){H.labels[h]}")
    return " + ".join(parts)


def check_invariance(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa) -> ConditionReport:
    """Condition (a): h . kappa(r) = kappa(h . r) for all basis h and
    canonical relations r, in H + (V (x) H)."""
    st = ConditionStatus("pass")
    d = H.dim
    p = B.dim_relations()
    for i in range(d):
        ei = H.basis_vec(i)
        for a in range(p):
            lhs_c = adjoint_on_H(H, ei, kappa.c_vec(a))
            lhs_l = adjoint_on_VH(H, B, ei, kappa.l_vec(a, d))
            img = act_on_tensor(H, B, ei, B.relation_sparse(a))
            coords = rel_coords(B, img)
            rhs_c: dict = {}
            rhs_l: dict = {}
            for q, c in enumerate(coords):
                if c.is_zero():
                    continue
                for idx, cc in kappa.c_vec(q).items():
                    add_into(rhs_c, idx, c * cc)
                for key, cc in kappa.l_vec(q, d).items():
                    add_into(rhs_l, key, c * cc)
            diff_c = dict(lhs_c)
            for k, c in rhs_c.items():
                add_into(diff_c, k, -c)
            diff_l = dict(lhs_l)
            for k, c in rhs_l.items():
                add_into(diff_l, k, -c)
            if diff_c or diff_l:
                st.status = "fail"
                st.witnesses.append({
                    "h": H.labels[i], "relation": a,
                    "lhs": f"{format_hvec(H, lhs_c)} ; {_fmt_vh(H, B, lhs_l)}",
                    "rhs": f"{format_hvec(H, rhs_c)} ; {_fmt_vh(H, B, rhs_l)}",
                })
    rep = ConditionReport({"a": st})
    return rep


def check_overlap(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa) -> ConditionReport:
    """Conditions (b), (c), (d) on a basis of the degree-3 overlap space.

    Vacuous when the overlap space is zero.  When (b) fails, deltaL cannot
    be fed to kappa again, so (c) and (d) are reported as blocked.
    """
    D3 = koszul_component(B, 3)
    notes = []
    if D3.dim == 0:
        return ConditionReport({k: ConditionStatus("vacuous") for k in ("b", "c", "d")})
    if B.vdim < 3:
        notes.append("overlap space is nonzero although dim V < 3; "
                     "overlap conditions are applied regardless")
    d = H.dim
    stb = ConditionStatus("pass")
    stc = ConditionStatus("pass")
    std = ConditionStatus("pass")
    for t_idx in range(D3.dim):
        s = _sparse_tensor3(B, list(D3.basis[t_idx]))
        ys = expand_left(B, s)
        zs = expand_right(B, s)
        deltaL, deltaC = _overlap_from_expansions(H, B, kappa, ys, zs)
        coords = _deltaL_rel_coords(B, d, deltaL)
        if coords is None:
            stb.status = "fail"
            stb.witnesses.append({"overlap_index": t_idx,
                                  "value": "image of kL (x) id - id (x) kL not inside I"})
            continue
        lhs_c = _apply_kl_ext(H, B, kappa, coords)
        for k, c in deltaC.items():
            add_into(lhs_c, k, c)
        if lhs_c:
            stc.status = "fail"
            stc.witnesses.append({"overlap_index": t_idx, "value": _fmt_vh(H, B, lhs_c)})
        neg = {k: -c for k, c in coords.items()}
        lhs_d = _apply_kc_ext(H, kappa, neg)
        if lhs_d:
            std.status = "fail"
            std.witnesses.append({"overlap_index": t_idx, "value": format_hvec(H, lhs_d)})
    if stb.status == "fail":
        stc = ConditionStatus("blocked", [{"reason": "condition (b) failed"}])
        std = ConditionStatus("blocked", [{"reason": "condition (b) failed"}])
    return ConditionReport({"b": stb, "c": stc, "d": std}, notes)


def check_pbw(H: HopfAlgebra, B: ModuleAlgebra, kappa: Kappa) -> ConditionReport:
    """All four conditions; overall pass iff every non-vacuous condition passes."""
    rep_a = check_invariance(H, B, kappa)
    rep_bcd = check_overlap(H, B, kappa)
    conds = dict(rep_a.conditions)
    conds.update(rep_bcd.conditions)
    return ConditionReport(conds, rep_a.notes + rep_bcd.notes)


# -- the solver ----------------------------------------------------------------

def _adjoint_columns(H: HopfAlgebra, B: ModuleAlgebra):
    """Per H-basis i: sparse columns of the adjoint actions on H and V (x) H."""
    d, vd = H.dim, B.vdim
    adjh = []
    adjvh = []
    one = Scalar.one(H.order)
    for i in range(d):
        ei = H.basis_vec(i)
        cols_h = [adjoint_on_H(H, ei, {h: one}) for h in range(d)]
        cols_vh = {}
        for v in range(vd):
            for h in range(d):
                cols_vh[(v, h)] = adjoint_on_VH(H, B, ei, {(v, h): one})
        adjh.append(cols_h)
        adjvh.append(cols_vh)
    return adjh, adjvh


def solve_kappa(H: HopfAlgebra, B: ModuleAlgebra, force_linear_zero: bool = False) -> KappaFamily:
    """Solve for the full family of deformation maps passing all conditions.

    Stage 1 computes the exact kernel of the stacked linear conditions (a)
    and (b).  Stage 2 expands (c) and (d) on that space: if every
    quadratic coefficient vanishes (in particular whenever the linear
    block of the stage-1 space is zero) the residual constraints are
    linear and the final family is reported; otherwise the residual
    polynomial system is returned symbolically with family_dim None.

    With force_linear_zero the linear part of kappa is excluded from the
    unknowns entirely.
    """
    d, vd, p = H.dim, B.vdim, B.dim_relations()
    nC = p * d
    nL = 0 if force_linear_zero else p * vd * d
    n = nC + nL
    zero = Scalar.zero(H.order)

    def uC(a, h):
        return a * d + h

    def uL(a, v, h):
        return nC + a * vd * d + v * d + h

    rows: list[dict] = []

    # condition (a): adjoint action of every basis element matches kappa
    # composed with the action on relations
    adjh, adjvh = _adjoint_columns(H, B)
    act_coords = []
    for i in range(d):
        per_rel = []
        for a in range(p):
            img = act_on_tensor(H, B, H.basis_vec(i), B.relation_sparse(a))
            per_rel.append(rel_coords(B, img))
        act_coords.append(per_rel)
    for i in range(d):
        for a in range(p):
            coords = act_coords[i][a]
            # H-component rows
            byout: dict = {}
            for h in range(d):
                col = adjh[i][h]
                for outh, c in col.items():
                    byout.setdefault(outh, {})[uC(a, h)] = c
            for outh in range(d):
                row = dict(byout.get(outh, {}))
                for q, cq in enumerate(coords):
                    if not cq.is_zero():
                        cur = row.get(uC(q, outh), zero)
                        nv = cur - cq
                        if nv.is_zero():
                            row.pop(uC(q, outh), None)
                        else:
                            row[uC(q, outh)] = nv
                if row:
                    rows.append(row)
            # V (x) H component rows
            if nL:
                byout = {}
                for v in range(vd):
                    for h in range(d):
                        col = adjvh[i][(v, h)]
                        for key, c in col.items():
                            byout.setdefault(key, {})[uL(a, v, h)] = c
                keys = set(byout)
                for q, cq in enumerate(coords):
                    if not cq.is_zero():
                        for v in range(vd):
                            for h in range(d):
                                keys.add((v, h))
                for key in sorted(keys):
                    row = dict(byout.get(key, {}))
                    ov, oh = key
                    for q, cq in enumerate(coords):
                        if not cq.is_zero():
                            cur = row.get(uL(q, ov, oh), zero)
                            nv = cur - cq
                            if nv.is_zero():
                                row.pop(uL(q, ov, oh), None)
                            else:
                                row[uL(q, ov, oh)] = nv
                    if row:
                        rows.append(row)

    # condition (b): the straightened linear mismatch lies in I (x) H
    D3 = koszul_component(B, 3)
    notes = []
    if D3.dim and B.vdim < 3:
        notes.append("overlap space is nonzero although dim V < 3; "
                     "overlap conditions are applied regardless")
    expansions = []
    for t_idx in range(D3.dim):
        s = _sparse_tensor3(B, list(D3.basis[t_idx]))
        expansions.append((expand_left(B, s), expand_right(B, s)))
    if nL and D3.dim:
        # remainder-mod-I operator on V (x) V, one sparse column per coordinate
        rem_cols = []
        vv = vd * vd
        for w in range(vv):
            e = [zero] * vv
            e[w] = Scalar.one(H.order)
            _, rem = B.relations.reduce(e)
            rem_cols.append({i: c for i, c in enumerate(rem) if not c.is_zero()})
        one = Scalar.one(H.order)
        for t_idx, (ys, zs) in enumerate(expansions):
            # unit contributions of each kappa^L unknown to deltaL
            contrib: dict = {}   # (outw, h2) -> {unknown: Scalar}
            for a in range(p):
                y, z = ys[a], zs[a]
                if y:
                    t = {(vi,): c for vi, c in y.items()}
                    for h in range(d):
                        moved = straighten(H, B, {h: one}, t)
                        for (word, h2), c in moved.items():
                            for v in range(vd):
                                w = v * vd + word[0]
                                contrib.setdefault((w, h2), {})[uL(a, v, h)] = c
                if z:
                    for zv, cz in z.items():
                        for v in range(vd):
                            w = zv * vd + v
                            for h in range(d):
                                cell = contrib.setdefault((w, h), {})
                                cur = cell.get(uL(a, v, h), zero)
                                nv = cur - cz
                                if nv.is_zero():
                                    cell.pop(uL(a, v, h), None)
                                else:
                                    cell[uL(a, v, h)] = nv
            # rows: remainder of every (h2-slice) must vanish coordinatewise
            byrow: dict = {}
            for (w, h2), cell in contrib.items():
                col = rem_cols[w]
                if not col:
                    continue
                for outw, rc in col.items():
                    dst = byrow.setdefault((outw, h2), {})
                    for u, c in cell.items():
                        cur = dst.get(u, zero)
                        nv = cur + rc * c
                        if nv.is_zero():
                            dst.pop(u, None)
                        else:
                            dst[u] = nv
            rows.extend(r for r in byrow.values() if r)

    kernel_vecs = sparse_kernel(rows, n, H.order)
    kernel_vecs, _ = _rref_rows([list(v) for v in kernel_vecs], n)

    def vec_to_kappa(vec) -> Kappa:
        crows = [[vec[uC(a, h)] for h in range(d)] for a in range(p)]
        if nL:
            lrows = [[vec[uL(a, v, h)] for v in range(vd) for h in range(d)] for a in range(p)]
        else:
            lrows = [[zero] * (vd * d) for _ in range(p)]
        return Kappa(H.order, Matrix.from_rows(crows, cols=d),
                     Matrix.from_rows(lrows, cols=vd * d))

    ab_basis = [vec_to_kappa(v) for v in kernel_vecs]
    k = len(ab_basis)

    if D3.dim == 0 or k == 0:
        return KappaFamily(list(ab_basis), [], k, ab_basis, notes)

    # stage 2: expand (c) and (d) on the stage-1 space
    per_member = []
    for kp in ab_basis:
        data = []
        for ys, zs in expansions:
            dl, dc = _overlap_from_expansions(H, B, kp, ys, zs)
            coords = _deltaL_rel_coords(B, d, dl)
            assert coords is not None, "stage-1 member violates condition (b)"
            data.append((coords, dc))
        per_member.append(data)

    quad_c: dict = {}
    quad_d: dict = {}
    for i in range(k):
        for j in range(k):
            for t_idx in range(D3.dim):
                coords_j = per_member[j][t_idx][0]
                vimg = _apply_kl_ext(H, B, ab_basis[i], coords_j)
                himg = _apply_kc_ext(H, ab_basis[i], {kk: -c for kk, c in coords_j.items()})
                key = (min(i, j), max(i, j))
                for kk, c in vimg.items():
                    cell = quad_c.setdefault((t_idx, kk), {})
                    add_into(cell, key, c)
                for kk, c in himg.items():
                    cell = quad_d.setdefault((t_idx, kk), {})
                    add_into(cell, key, c)
    quad_c = {kk: cell for kk, cell in quad_c.items() if cell}
    quad_d = {kk: cell for kk, cell in quad_d.items() if cell}

    lin_rows: dict = {}
    for i in range(k):
        for t_idx in range(D3.dim):
            for kk, c in per_member[i][t_idx][1].items():
                lin_rows.setdefault((t_idx, kk), {})[i] = c

    if not quad_c and not quad_d:
        t_rows = [dict(r) for r in lin_rows.values() if r]
        t_kernel = sparse_kernel(t_rows, k, H.order)
        final_vecs = []
        for tv in t_kernel:
            dense = [zero] * n
            for i, c in enumerate(tv):
                if c.is_zero():
                    continue
                src = kernel_vecs[i]
                for idx, s in enumerate(src):
                    if not s.is_zero():
                        dense[idx] = dense[idx] + c * s
            final_vecs.append(dense)
        nz, _ = _rref_rows([list(v) for v in final_vecs], n)
        final = [vec_to_kappa(v) for v in nz]
        return KappaFamily(final, [], len(final), ab_basis, notes)

    residual = []
    for key in sorted(set(quad_c) | set(lin_rows)):
        q = quad_c.get(key, {})
        l = lin_rows.get(key, {})
        if q or l:
            residual.append(ResidualPoly(dict(q), dict(l), label=f"(c)@{key}"))
    for key in sorted(quad_d):
        residual.append(ResidualPoly(dict(quad_d[key]), {}, label=f"(d)@{key}"))
    return KappaFamily(list(ab_basis), residual, None, ab_basis, notes)


def kappa_block_dims(B: ModuleAlgebra, H: HopfAlgebra, basis: list[Kappa]) -> list[tuple[int, int]]:
    """Per-relation (constant, linear) block dimensions of a kappa family."""
    p = B.dim_relations()
    out = []
    for a in range(p):
        crows = [kp.constant.row(a) for kp in basis]
        lrows = [kp.linear.row(a) for kp in basis]
        cdim = Subspace.from_vectors(H.dim, crows).dim if crows else 0
        ldim = Subspace.from_vectors(B.vdim * H.dim, lrows).dim if lrows else 0
        out.append((cdim, ldim))
    return out

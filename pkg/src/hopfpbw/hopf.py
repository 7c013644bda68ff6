"""Finite-dimensional Hopf algebras by structure constants.

An algebra element is a sparse dict ``{basis_index: Scalar}``.  The
structure data is:

* ``mult[i][j]``  -- the product e_i e_j as a sparse vector,
* ``comult[i]``   -- the coproduct of e_i as a dict ``{(j, k): Scalar}``,
* ``unit``        -- the identity as a sparse vector,
* ``counit[i]``   -- the counit on e_i,
* ``antipode[i]`` -- the antipode image of e_i as a sparse vector.

``validate_hopf`` checks every axiom exhaustively over basis tuples
(trivial at these dimensions, and exhaustiveness is the point), verifies
that the antipode is bijective, and fills in its inverse.

The preset catalog carries the finite-dimensional Hopf algebras used by
the bundled worked problems: the Sweedler and Taft algebras, the
8-dimensional Kac-Paljutkin algebra ``h8``, the 16-dimensional semisimple
algebra ``ha1``, and cyclic group algebras.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .scalar import Scalar, zeta
from .exactla import Matrix, rref

HVec = dict  # {int: Scalar}
TVec = dict  # {(int, int): Scalar}


class HopfError(Exception):
    pass


class UnknownPreset(HopfError):
    pass


class FieldTooSmall(HopfError):
    pass


class NotAGroup(HopfError):
    pass


class SingularAntipode(HopfError):
    pass


# -- sparse vector helpers ---------------------------------------------------

def add_into(dst: dict, key, c: Scalar) -> None:
    cur = dst.get(key)
    if cur is None:
        if not c.is_zero():
            dst[key] = c
        return
    s = cur + c
    if s.is_zero():
        del dst[key]
    else:
        dst[key] = s


def vec_scale(v: dict, c: Scalar) -> dict:
    if c.is_zero():
        return {}
    return {k: x * c for k, x in v.items()}


def vec_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        add_into(out, k, -c)
    return out


def vec_eq(a: dict, b: dict) -> bool:
    return vec_sub(a, b) == {}


@dataclass
class HopfAlgebra:
    order: int                       # cyclotomic order of the ground field
    dim: int
    labels: list[str]
    mult: list                       # mult[i][j] -> HVec
    comult: list                     # comult[i] -> TVec
    unit: HVec
    counit: list                     # counit[i] -> Scalar
    antipode: list                   # antipode[i] -> HVec
    antipode_inverse: list | None = None
    generators: list[int] | None = None   # optional algebra-generator hint

    def basis_vec(self, i: int) -> HVec:
        return {i: Scalar.one(self.order)}

    def zero_scalar(self) -> Scalar:
        return Scalar.zero(self.order)

    def one_scalar(self) -> Scalar:
        return Scalar.one(self.order)


def h_mul(H: HopfAlgebra, a: HVec, b: HVec) -> HVec:
    out: HVec = {}
    mult = H.mult
    for i, ca in a.items():
        row = mult[i]
        for j, cb in b.items():
            c = ca * cb
            for k, ck in row[j].items():
                add_into(out, k, c * ck)
    return out


def coproduct(H: HopfAlgebra, a: HVec) -> TVec:
    out: TVec = {}
    for i, c in a.items():
        for jk, ck in H.comult[i].items():
            add_into(out, jk, c * ck)
    return out


def coproduct_iter(H: HopfAlgebra, a: HVec, legs: int) -> dict:
    """Left-nested iterated coproduct: keys are index tuples of length `legs`."""
    cur = {(i,): c for i, c in a.items()}
    for _ in range(legs - 1):
        nxt: dict = {}
        for key, c in cur.items():
            for (j, k), ck in H.comult[key[0]].items():
                add_into(nxt, (j, k) + key[1:], c * ck)
        cur = nxt
    return cur


def apply_antipode(H: HopfAlgebra, a: HVec) -> HVec:
    out: HVec = {}
    for i, c in a.items():
        for j, cj in H.antipode[i].items():
            add_into(out, j, c * cj)
    return out


def apply_antipode_inverse(H: HopfAlgebra, a: HVec) -> HVec:
    if H.antipode_inverse is None:
        raise SingularAntipode("antipode inverse not available; validate first")
    out: HVec = {}
    for i, c in a.items():
        for j, cj in H.antipode_inverse[i].items():
            add_into(out, j, c * cj)
    return out


def counit_of(H: HopfAlgebra, a: HVec) -> Scalar:
    s = H.zero_scalar()
    for i, c in a.items():
        s = s + c * H.counit[i]
    return s


def tensor_mult(H: HopfAlgebra, A: TVec, B: TVec) -> TVec:
    """Product in H (x) H of two sparse tensors."""
    out: TVec = {}
    for (a1, a2), ca in A.items():
        for (b1, b2), cb in B.items():
            c = ca * cb
            left = H.mult[a1][b1]
            right = H.mult[a2][b2]
            for i, ci in left.items():
                for j, cj in right.items():
                    add_into(out, (i, j), c * ci * cj)
    return out


def format_hvec(H: HopfAlgebra, a: HVec) -> str:
    """Render a sparse H-element with basis labels, deterministically."""
    if not a:
        return "0"
    parts = []
    for i in sorted(a):
        c = a[i]
        lab = H.labels[i]
        cs = str(c)
        if cs == "1":
            term = lab
        elif cs == "-1":
            term = f"-{lab}"
        elif ("+" in cs) or ("*" in cs and "z" in cs):
            term = f"({cs})*{lab}"
        else:
            term = f"{cs}*{lab}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def adjoint_on_H(H: HopfAlgebra, a: HVec, ell: HVec) -> HVec:
    """Left adjoint action of a on ell: sum a1 * ell * S(a2)."""
    out: HVec = {}
    for (j, k), c in coproduct(H, a).items():
        term = h_mul(H, h_mul(H, H.basis_vec(j), ell), H.antipode[k])
        for idx, ci in term.items():
            add_into(out, idx, c * ci)
    return out


# -- validation ---------------------------------------------------------------

@dataclass
class ValidationReport:
    passed: bool
    failures: list = dc_field(default_factory=list)  # (axiom, witness, lhs, rhs)

    def axioms_failed(self) -> list[str]:
        return sorted({f[0] for f in self.failures})


def _tensor_eq(a: TVec, b: TVec) -> bool:
    diff = dict(a)
    for k, c in b.items():
        add_into(diff, k, -c)
    return diff == {}


def _fmt_tensor(H: HopfAlgebra, t: TVec) -> str:
    if not t:
        return "0"
    parts = []
    for (i, j) in sorted(t):
        parts.append(f"({t[(i, j)]})*{H.labels[i]}(x){H.labels[j]}")
    return " + ".join(parts)


def validate_hopf(H: HopfAlgebra) -> ValidationReport:
    """Exhaustive check of all Hopf axioms; populates the antipode inverse.

    Failures carry (axiom name, witness basis indices, lhs, rhs) with both
    sides rendered in the basis labels.
    """
    fails = []
    d = H.dim
    one = H.one_scalar()

    def emit(axiom, witness, lhs, rhs):
        fails.append((axiom, witness, lhs, rhs))

    # associativity
    for i in range(d):
        for j in range(d):
            eij = H.mult[i][j]
            for k in range(d):
                lhs = h_mul(H, eij, H.basis_vec(k))
                rhs = h_mul(H, H.basis_vec(i), H.mult[j][k])
                if not vec_eq(lhs, rhs):
                    emit("associativity", (i, j, k), format_hvec(H, lhs), format_hvec(H, rhs))

    # unit law
    for i in range(d):
        e = H.basis_vec(i)
        left = h_mul(H, H.unit, e)
        right = h_mul(H, e, H.unit)
        if not vec_eq(left, e):
            emit("unit", (i,), format_hvec(H, left), H.labels[i])
        if not vec_eq(right, e):
            emit("unit", (i,), format_hvec(H, right), H.labels[i])

    # coassociativity
    for i in range(d):
        lhs: dict = {}
        rhs: dict = {}
        for (j, k), c in H.comult[i].items():
            for (a, b), c2 in H.comult[j].items():
                add_into(lhs, (a, b, k), c * c2)
            for (a, b), c2 in H.comult[k].items():
                add_into(rhs, (j, a, b), c * c2)
        diff = dict(lhs)
        for key, c in rhs.items():
            add_into(diff, key, -c)
        if diff:
            emit("coassociativity", (i,), str(len(lhs)), str(len(rhs)))

    # counit law
    for i in range(d):
        lvec: HVec = {}
        rvec: HVec = {}
        for (j, k), c in H.comult[i].items():
            add_into(lvec, k, c * H.counit[j])
            add_into(rvec, j, c * H.counit[k])
        if not vec_eq(lvec, H.basis_vec(i)):
            emit("counit", (i,), format_hvec(H, lvec), H.labels[i])
        if not vec_eq(rvec, H.basis_vec(i)):
            emit("counit", (i,), format_hvec(H, rvec), H.labels[i])

    # bialgebra compatibility
    unit_tensor: TVec = {}
    for i, ci in H.unit.items():
        for j, cj in H.unit.items():
            add_into(unit_tensor, (i, j), ci * cj)
    cop_unit = coproduct(H, H.unit)
    if not _tensor_eq(cop_unit, unit_tensor):
        emit("bialgebra", ("unit",), _fmt_tensor(H, cop_unit), _fmt_tensor(H, unit_tensor))
    eps_unit = counit_of(H, H.unit)
    if eps_unit != one:
        emit("bialgebra", ("unit",), str(eps_unit), "1")
    for i in range(d):
        for j in range(d):
            lhs = coproduct(H, H.mult[i][j])
            rhs = tensor_mult(H, H.comult[i], H.comult[j])
            if not _tensor_eq(lhs, rhs):
                emit("bialgebra", (i, j), _fmt_tensor(H, lhs), _fmt_tensor(H, rhs))
            el = counit_of(H, H.mult[i][j])
            er = H.counit[i] * H.counit[j]
            if el != er:
                emit("bialgebra", (i, j), str(el), str(er))

    # antipode law (both convolution sides)
    for i in range(d):
        lvec: HVec = {}
        rvec: HVec = {}
        for (j, k), c in H.comult[i].items():
            for idx, ci in h_mul(H, H.antipode[j], H.basis_vec(k)).items():
                add_into(lvec, idx, c * ci)
            for idx, ci in h_mul(H, H.basis_vec(j), H.antipode[k]).items():
                add_into(rvec, idx, c * ci)
        target = vec_scale(H.unit, H.counit[i])
        if not vec_eq(lvec, target):
            emit("antipode", (i,), format_hvec(H, lvec), format_hvec(H, target))
        if not vec_eq(rvec, target):
            emit("antipode", (i,), format_hvec(H, rvec), format_hvec(H, target))

    # antipode bijectivity; compute the inverse matrix
    zero = H.zero_scalar()
    aug_rows = []
    for r in range(d):
        row = [H.antipode[c].get(r, zero) for c in range(d)]
        row += [one if r == c else zero for c in range(d)]
        aug_rows.append(row)
    rank, red, _ = rref(Matrix.from_rows(aug_rows, cols=2 * d))
    lead_rank = sum(1 for p in range(d) if any(not red.at(r, p).is_zero() for r in range(d)))
    if rank < d or lead_rank < d:
        emit("antipode_bijective", ("S",), f"rank {rank}", f"rank {d}")
        H.antipode_inverse = None
    else:
        inv_cols = [[red.at(r, d + c) for r in range(d)] for c in range(d)]
        # column c of S^-1 gives S^-1(e_c)
        H.antipode_inverse = [
            {r: inv_cols[c][r] for r in range(d) if not inv_cols[c][r].is_zero()}
            for c in range(d)
        ]

    return ValidationReport(passed=not fails, failures=fails)


# -- group algebras -----------------------------------------------------------

def group_algebra(mult_table: list[list[int]], inverse_table: list[int] | None = None,
                  order: int = 1, labels: list[str] | None = None) -> HopfAlgebra:
    """The Hopf algebra of a finite group given by its multiplication table.

    The table is checked to be a group (associativity, two-sided identity,
    inverses); violations raise NotAGroup with a witness.  Coproduct is
    diagonal, the counit is 1, and the antipode is inversion.
    """
    d = len(mult_table)
    for row in mult_table:
        if len(row) != d or any(not (0 <= x < d) for x in row):
            raise NotAGroup("malformed multiplication table")
    ident = None
    for e in range(d):
        if all(mult_table[e][i] == i and mult_table[i][e] == i for i in range(d)):
            ident = e
            break
    if ident is None:
        raise NotAGroup("no two-sided identity element")
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if mult_table[mult_table[i][j]][k] != mult_table[i][mult_table[j][k]]:
                    raise NotAGroup(f"associativity fails at ({i}, {j}, {k})")
    if inverse_table is None:
        inverse_table = []
        for i in range(d):
            inv = next((j for j in range(d) if mult_table[i][j] == ident), None)
            if inv is None or mult_table[inv][i] != ident:
                raise NotAGroup(f"element {i} has no two-sided inverse")
            inverse_table.append(inv)
    else:
        for i, inv in enumerate(inverse_table):
            if mult_table[i][inv] != ident or mult_table[inv][i] != ident:
                raise NotAGroup(f"inverse table wrong at element {i}")

    one = Scalar.one(order)
    labels = labels or [f"g{i}" for i in range(d)]
    if len(labels) != d:
        raise HopfError(f"expected {d} labels, got {len(labels)}")
    mult = [[{mult_table[i][j]: one} for j in range(d)] for i in range(d)]
    comult = [{(i, i): one} for i in range(d)]
    counit = [one] * d
    antipode = [{inverse_table[i]: one} for i in range(d)]
    return HopfAlgebra(order, d, list(labels), mult, comult, {ident: one}, counit, antipode)


# -- presets -------------------------------------------------------------------

def nth_root_of_unity(order: int, n: int) -> Scalar:
    """zeta_n as an element of Q(zeta_order); FieldTooSmall if absent."""
    if n == 1:
        return Scalar.one(order)
    if n == 2:
        return -Scalar.one(order)
    if order % n == 0:
        return zeta(order, order // n)
    raise FieldTooSmall(f"Q(zeta_{order}) has no primitive {n}-th root of unity")


def _monomial_label(parts: list[tuple[str, int]]) -> str:
    out = ""
    for sym, e in parts:
        if e == 0:
            continue
        out += sym if e == 1 else f"{sym}^{e}"
    return out or "1"


def _taft(n: int, order: int) -> HopfAlgebra:
    """Taft algebra of dimension n^2: g^n = 1, x^n = 0, x g = zeta g x."""
    if n < 2:
        raise UnknownPreset("taft needs n >= 2")
    zz = nth_root_of_unity(order, n)
    d = n * n
    one = Scalar.one(order)

    def idx(i, j):  # g^i x^j
        return i * n + j

    labels = [_monomial_label([("g", i), ("x", j)]) for i in range(n) for j in range(n)]
    zpow = [one]
    for _ in range(n):
        zpow.append(zpow[-1] * zz)
    mult = []
    for i1 in range(n):
        for j1 in range(n):
            row = []
            for i2 in range(n):
                for j2 in range(n):
                    if j1 + j2 >= n:
                        row.append({})
                    else:
                        # x^{j1} g^{i2} = zeta^{j1 i2} g^{i2} x^{j1}
                        row.append({idx((i1 + i2) % n, j1 + j2): zpow[(j1 * i2) % n]})
            mult.append(row)
    H = HopfAlgebra(order, d, labels, mult, [], {idx(0, 0): one},
                    [one if j == 0 else Scalar.zero(order) for i in range(n) for j in range(n)],
                    [], generators=[idx(1, 0), idx(0, 1)])

    cop_g = {(idx(1, 0), idx(1, 0)): one}
    cop_x = {(idx(1, 0), idx(0, 1)): one, (idx(0, 1), idx(0, 0)): one}
    comult = []
    for i in range(n):
        for j in range(n):
            t = {(idx(0, 0), idx(0, 0)): one}
            for _ in range(i):
                t = tensor_mult(H, t, cop_g)
            for _ in range(j):
                t = tensor_mult(H, t, cop_x)
            comult.append(t)
    H.comult = comult

    s_g = {idx(n - 1, 0): one}               # S(g) = g^{n-1}
    s_x = {idx(n - 1, 1): -one}              # S(x) = -g^{n-1} x
    antipode = []
    for i in range(n):
        for j in range(n):
            v = {idx(0, 0): one}
            for _ in range(j):                # S anti-multiplicative: S(x)^j S(g)^i
                v = h_mul(H, v, s_x)
            for _ in range(i):
                v = h_mul(H, v, s_g)
            antipode.append(v)
    H.antipode = antipode
    return H


def _h8(order: int = 1) -> HopfAlgebra:
    """The 8-dimensional noncommutative noncocommutative semisimple algebra.

    Generators x, y, z with x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz and
    z^2 = (1 + x + y - xy)/2.
    """
    one = Scalar.one(order)
    half = Scalar.from_rational(order, 1, 2)

    def idx(i, j, k):  # x^i y^j z^k
        return i + 2 * j + 4 * k

    labels = []
    for k in range(2):
        for j in range(2):
            for i in range(2):
                labels.append(_monomial_label([("x", i), ("y", j), ("z", k)]))

    mult = [[None] * 8 for _ in range(8)]
    for i1 in range(2):
        for j1 in range(2):
            for k1 in range(2):
                for i2 in range(2):
                    for j2 in range(2):
                        for k2 in range(2):
                            if k1 == 0:
                                out = {idx((i1 + i2) % 2, (j1 + j2) % 2, k2): one}
                            else:
                                a, b = (i1 + j2) % 2, (j1 + i2) % 2
                                if k2 == 0:
                                    out = {idx(a, b, 1): one}
                                else:
                                    # z^2 = (1 + x + y - xy)/2
                                    out = {}
                                    add_into(out, idx(a, b, 0), half)
                                    add_into(out, idx((a + 1) % 2, b, 0), half)
                                    add_into(out, idx(a, (b + 1) % 2, 0), half)
                                    add_into(out, idx((a + 1) % 2, (b + 1) % 2, 0), -half)
                            mult[idx(i1, j1, k1)][idx(i2, j2, k2)] = out
    counit = [one] * 8
    H = HopfAlgebra(order, 8, labels, mult, [], {idx(0, 0, 0): one}, counit, [],
                    generators=[idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)])

    X, Y, Z = idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)
    YZ, XZ = idx(0, 1, 1), idx(1, 0, 1)
    cop = {X: {(X, X): one}, Y: {(Y, Y): one},
           Z: {(Z, Z): half, (Z, XZ): half, (YZ, Z): half, (YZ, XZ): -half}}
    comult = [None] * 8
    for i in range(2):
        for j in range(2):
            for k in range(2):
                t = {(0, 0): one}
                for _ in range(i):
                    t = tensor_mult(H, t, cop[X])
                for _ in range(j):
                    t = tensor_mult(H, t, cop[Y])
                for _ in range(k):
                    t = tensor_mult(H, t, cop[Z])
                comult[idx(i, j, k)] = t
    H.comult = comult

    # S fixes the generators; anti-multiplicativity gives S(x^i y^j z^k) = z^k y^j x^i
    antipode = [None] * 8
    for i in range(2):
        for j in range(2):
            for k in range(2):
                v = {idx(0, 0, 0): one}
                for _ in range(k):
                    v = h_mul(H, v, {Z: one})
                for _ in range(j):
                    v = h_mul(H, v, {Y: one})
                for _ in range(i):
                    v = h_mul(H, v, {X: one})
                antipode[idx(i, j, k)] = v
    H.antipode = antipode
    return H


def _ha1(order: int = 4) -> HopfAlgebra:
    """A 16-dimensional semisimple Hopf algebra over Q(i).

    Generators x, y, z with x^4 = y^2 = z^2 = 1, yx = xy, zx = xyz,
    zy = yz; the coproduct twists z by (1 (x) 1 + 1 (x) x^2 + y (x) 1
    - y (x) x^2)/2.
    """
    one = Scalar.one(order)
    half = Scalar.from_rational(order, 1, 2)

    def idx(i, j, k):  # x^i y^j z^k, i < 4
        return i + 4 * j + 8 * k

    labels = []
    for k in range(2):
        for j in range(2):
            for i in range(4):
                labels.append(_monomial_label([("x", i), ("y", j), ("z", k)]))

    mult = [[None] * 16 for _ in range(16)]
    for i1 in range(4):
        for j1 in range(2):
            for k1 in range(2):
                for i2 in range(4):
                    for j2 in range(2):
                        for k2 in range(2):
                            if k1 == 0:
                                out = {idx((i1 + i2) % 4, (j1 + j2) % 2, k2): one}
                            else:
                                # z x^i = x^i y^i z, z y = y z, z^2 = 1
                                out = {idx((i1 + i2) % 4, (j1 + i2 + j2) % 2, (1 + k2) % 2): one}
                            mult[idx(i1, j1, k1)][idx(i2, j2, k2)] = out
    counit = [one] * 16
    H = HopfAlgebra(order, 16, labels, mult, [], {idx(0, 0, 0): one}, counit, [],
                    generators=[idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)])

    X, Y, Z = idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)
    X2Z, YZ = idx(2, 0, 1), idx(0, 1, 1)
    cop = {X: {(X, X): one}, Y: {(Y, Y): one},
           Z: {(Z, Z): half, (Z, X2Z): half, (YZ, Z): half, (YZ, X2Z): -half}}
    comult = [None] * 16
    for i in range(4):
        for j in range(2):
            for k in range(2):
                t = {(0, 0): one}
                for _ in range(i):
                    t = tensor_mult(H, t, cop[X])
                for _ in range(j):
                    t = tensor_mult(H, t, cop[Y])
                for _ in range(k):
                    t = tensor_mult(H, t, cop[Z])
                comult[idx(i, j, k)] = t
    H.comult = comult

    # S(x) = x^3, S(y) = y, S(z) = (1 + x^2 + y - x^2 y) z / 2
    s_x = {idx(3, 0, 0): one}
    s_y = {idx(0, 1, 0): one}
    s_z: HVec = {}
    add_into(s_z, idx(0, 0, 1), half)
    add_into(s_z, idx(2, 0, 1), half)
    add_into(s_z, idx(0, 1, 1), half)
    add_into(s_z, idx(2, 1, 1), -half)
    antipode = [None] * 16
    for i in range(4):
        for j in range(2):
            for k in range(2):
                v = {idx(0, 0, 0): one}
                for _ in range(k):
                    v = h_mul(H, v, s_z)
                for _ in range(j):
                    v = h_mul(H, v, s_y)
                for _ in range(i):
                    v = h_mul(H, v, s_x)
                antipode[idx(i, j, k)] = v
    H.antipode = antipode
    return H


def _cyclic(n: int, order: int | None = None) -> HopfAlgebra:
    order = n if order is None else order
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    inv = [(-i) % n for i in range(n)]
    labels = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    H = group_algebra(table, inv, order=order, labels=labels)
    H.generators = [1 % n]
    return H


def parse_preset_name(name: str) -> tuple[str, int | None]:
    base = name.lower().replace("(", "-").replace(")", "")
    if base.endswith("-"):
        base = base[:-1]
    if "-" in base:
        head, _, tail = base.rpartition("-")
        if tail.isdigit():
            return head, int(tail)
    return base, None


def preset_hopf(name: str, order: int | None = None) -> HopfAlgebra:
    """Preset Hopf algebras: sweedler, taft-n, h8, ha1, cyclic-n.

    An explicit field order must contain the roots of unity the preset
    needs (FieldTooSmall otherwise).
    """
    base, n = parse_preset_name(name)
    if base == "sweedler":
        return _taft(2, order if order is not None else 1)
    if base == "taft":
        if n is None:
            raise UnknownPreset("taft preset needs an index, e.g. taft-3")
        return _taft(n, order if order is not None else n)
    if base == "h8":
        return _h8(order if order is not None else 1)
    if base == "ha1":
        if order is not None and order % 4 != 0:
            raise FieldTooSmall("ha1 needs a primitive fourth root of unity")
        return _ha1(order if order is not None else 4)
    if base in ("cyclic", "cbh-cyclic", "cbh"):
        if n is None:
            raise UnknownPreset("cyclic preset needs an index, e.g. cyclic-3")
        if order is not None and order % n != 0 and not (n <= 2 and order >= 1):
            raise FieldTooSmall(f"cyclic-{n} action needs zeta_{n}")
        return _cyclic(n, order)
    raise UnknownPreset(f"unknown preset {name!r}")


# -- algebra generators (used by the spanning oracle) -------------------------

def algebra_generators(H: HopfAlgebra) -> list[int]:
    """A small set of basis indices generating H as a unital algebra.

    Greedy: repeatedly adjoin the first basis element outside the current
    unital subalgebra and close under products.  Deterministic.
    """
    if H.generators is not None:
        return list(H.generators)
    from .exactla import Subspace

    d = H.dim
    zero = H.zero_scalar()

    def dense(v: HVec) -> list[Scalar]:
        return [v.get(i, zero) for i in range(d)]

    gens: list[int] = []
    span_vecs = [dense(H.unit)]
    span = Subspace.from_vectors(d, span_vecs)
    while span.dim < d:
        nxt = next(i for i in range(d) if not span.contains(dense(H.basis_vec(i))))
        gens.append(nxt)
        grew = True
        while grew:
            grew = False
            cur = [list(b) for b in span.basis]
            new_vecs = list(cur)
            for b in cur:
                bv = {i: c for i, c in enumerate(b) if not c.is_zero()}
                for g in gens:
                    new_vecs.append(dense(h_mul(H, bv, H.basis_vec(g))))
                    new_vecs.append(dense(h_mul(H, H.basis_vec(g), bv)))
            newspan = Subspace.from_vectors(d, new_vecs)
            if newspan.dim > span.dim:
                span = newspan
                grew = True
    return gens

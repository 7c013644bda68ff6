"""Quadratic module algebras B = T(V)/(I) with a Hopf action.

The action is given on generators by one vdim x vdim matrix per H-basis
element; degree-m tensors are acted on through the iterated coproduct.
Relation input may be any spanning set of I inside V (x) V; it is
canonicalized to a reduced-echelon basis once, so downstream reports and
deformation-map coordinates always refer to the same basis.

Tensors in V^(x)m are sparse dicts keyed by index words (tuples).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .scalar import Scalar
from .exactla import Subspace, SparseEchelon, intersect
from .hopf import HopfAlgebra, ValidationReport, add_into, coproduct_iter


class ModAlgError(Exception):
    pass


class CutoffExceeded(ModAlgError):
    pass


DEFAULT_CUTOFF = 6


@dataclass
class ModuleAlgebra:
    order: int
    vdim: int
    vlabels: list[str]
    relations: Subspace            # canonical basis of I inside V (x) V
    action: list                   # action[h] = vdim x vdim rows (list of list of Scalar)
    cutoff: int = DEFAULT_CUTOFF

    @staticmethod
    def make(order: int, vlabels: list[str], relation_vectors: list[dict],
             action: list, cutoff: int = DEFAULT_CUTOFF) -> "ModuleAlgebra":
        """Build from sparse relation vectors {(i, j): Scalar} and action matrices."""
        vdim = len(vlabels)
        zero = Scalar.zero(order)
        dense = []
        for r in relation_vectors:
            v = [zero] * (vdim * vdim)
            for (i, j), c in r.items():
                v[i * vdim + j] = v[i * vdim + j] + c
            dense.append(v)
        rel = Subspace.from_vectors(vdim * vdim, dense)
        return ModuleAlgebra(order, vdim, list(vlabels), rel, action, cutoff)

    def relation_sparse(self, a: int) -> dict:
        """Canonical relation r_a as a sparse degree-2 tensor {(i, j): Scalar}."""
        v = self.relations.basis[a]
        out = {}
        for idx, c in enumerate(v):
            if not c.is_zero():
                out[(idx // self.vdim, idx % self.vdim)] = c
        return out

    def dim_relations(self) -> int:
        return self.relations.dim

    def act_matrix_entry(self, h: int, r: int, c: int) -> Scalar:
        return self.action[h][r][c]

    def format_word(self, word: tuple) -> str:
        return "".join(self.vlabels[i] for i in word) if word else "1"

    def format_tensor(self, t: dict) -> str:
        if not t:
            return "0"
        parts = []
        for word in sorted(t):
            c = t[word]
            cs = str(c)
            lab = self.format_word(word)
            if cs == "1":
                parts.append(lab)
            elif cs == "-1":
                parts.append(f"-{lab}")
            elif "+" in cs or ("*" in cs and "z" in cs):
                parts.append(f"({cs})*{lab}")
            else:
                parts.append(f"{cs}*{lab}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def act_on_generator(B: ModuleAlgebra, h: int, v: int) -> dict:
    """e_h . v_c as a sparse vector over V."""
    col = {}
    for r in range(B.vdim):
        c = B.action[h][r][v]
        if not c.is_zero():
            col[r] = c
    return col


def act_on_tensor(H: HopfAlgebra, B: ModuleAlgebra, a: dict, t: dict) -> dict:
    """Action of an H-element on a degree-m tensor via the iterated coproduct.

    For m = 0 the action is by the counit.
    """
    if not t:
        return {}
    m = len(next(iter(t)))
    if m == 0:
        from .hopf import counit_of
        eps = counit_of(H, a)
        return {(): eps} if not eps.is_zero() else {}
    legs = coproduct_iter(H, a, m)
    out: dict = {}
    for key, c in legs.items():
        for word, cw in t.items():
            parts = [act_on_generator(B, key[pos], word[pos]) for pos in range(m)]
            _expand_product(out, parts, c * cw)
    return out


def _expand_product(out: dict, parts: list[dict], coeff: Scalar) -> None:
    words = [()]
    coeffs = [coeff]
    for p in parts:
        nwords = []
        ncoeffs = []
        for w, c in zip(words, coeffs):
            for idx, ci in p.items():
                nwords.append(w + (idx,))
                ncoeffs.append(c * ci)
        words, coeffs = nwords, ncoeffs
    for w, c in zip(words, coeffs):
        add_into(out, w, c)


def validate_action(H: HopfAlgebra, B: ModuleAlgebra) -> ValidationReport:
    """Check that the action makes B an H-module algebra in degree <= 2.

    Verifies that h -> action matrix is a unital algebra map on V and that
    the relation space is stable under the degree-2 action; the module
    algebra law in higher degrees then holds automatically because the
    action on tensors is defined through the iterated coproduct.
    """
    fails = []
    d = H.dim
    vd = B.vdim
    zero = Scalar.zero(B.order)
    one = Scalar.one(B.order)

    # rho(1_H) = id
    ident = [[zero] * vd for _ in range(vd)]
    for i, c in H.unit.items():
        for r in range(vd):
            for s in range(vd):
                ident[r][s] = ident[r][s] + c * B.action[i][r][s]
    for r in range(vd):
        for s in range(vd):
            want = one if r == s else zero
            if ident[r][s] != want:
                fails.append(("action_unital", (r, s), str(ident[r][s]), str(want)))

    # rho(e_i) rho(e_j) = rho(e_i e_j)
    for i in range(d):
        for j in range(d):
            prod = [[zero] * vd for _ in range(vd)]
            for r in range(vd):
                for s in range(vd):
                    acc = zero
                    for t in range(vd):
                        acc = acc + B.action[i][r][t] * B.action[j][t][s]
                    prod[r][s] = acc
            target = [[zero] * vd for _ in range(vd)]
            for k, ck in H.mult[i][j].items():
                for r in range(vd):
                    for s in range(vd):
                        target[r][s] = target[r][s] + ck * B.action[k][r][s]
            for r in range(vd):
                for s in range(vd):
                    if prod[r][s] != target[r][s]:
                        fails.append(("action_multiplicative", (i, j, r, s),
                                      str(prod[r][s]), str(target[r][s])))

    # H-stability of the relation space
    for i in range(d):
        for a in range(B.dim_relations()):
            img = act_on_tensor(H, B, H.basis_vec(i), B.relation_sparse(a))
            dense = [zero] * (vd * vd)
            for (p, q), c in img.items():
                dense[p * vd + q] = dense[p * vd + q] + c
            if not B.relations.contains(dense):
                fails.append(("relations_stable", (i, a),
                              B.format_tensor(img), "element of the relation space"))

    return ValidationReport(passed=not fails, failures=fails)


def _layer_rows(B: ModuleAlgebra, n: int) -> list[dict]:
    """Sparse spanning rows of sum_j V^j (x) I (x) V^(n-2-j) inside V^(x)n."""
    vd = B.vdim
    rows = []
    rels = [B.relation_sparse(a) for a in range(B.dim_relations())]
    for j in range(n - 1):
        tail = n - 2 - j
        for pre in product(range(vd), repeat=j):
            for rel in rels:
                for post in product(range(vd), repeat=tail):
                    row = {}
                    for (p, q), c in rel.items():
                        word = pre + (p, q) + post
                        row[_word_rank(word, vd)] = c
                    rows.append(row)
    return rows


def _word_rank(word: tuple, vdim: int) -> int:
    r = 0
    for w in word:
        r = r * vdim + w
    return r


def graded_dim(B: ModuleAlgebra, n: int) -> int:
    """Dimension of the degree-n component of B."""
    if n < 0:
        raise ModAlgError("negative degree")
    if n > B.cutoff:
        raise CutoffExceeded(f"degree {n} exceeds cutoff {B.cutoff}")
    if n == 0:
        return 1
    if n == 1:
        return B.vdim
    ech = SparseEchelon(B.vdim ** n)
    for row in _layer_rows(B, n):
        ech.insert(row)
    return B.vdim ** n - ech.rank


def koszul_component(B: ModuleAlgebra, i: int) -> Subspace:
    """The degree-i overlap space: the intersection of all V^j (x) I (x) V^(i-2-j).

    For i = 2 this is the relation space itself; for i = 3 it is
    (I (x) V) cap (V (x) I), the domain of the overlap conditions.
    """
    if i < 2:
        raise ModAlgError("overlap components start at degree 2")
    if i > B.cutoff:
        raise CutoffExceeded(f"degree {i} exceeds cutoff {B.cutoff}")
    vd = B.vdim
    if i == 2:
        return B.relations
    ambient = vd ** i
    zero = Scalar.zero(B.order)
    result: Subspace | None = None
    rels = [B.relation_sparse(a) for a in range(B.dim_relations())]
    for j in range(i - 1):
        tail = i - 2 - j
        vecs = []
        for pre in product(range(vd), repeat=j):
            for rel in rels:
                for post in product(range(vd), repeat=tail):
                    v = [zero] * ambient
                    for (p, q), c in rel.items():
                        v[_word_rank(pre + (p, q) + post, vd)] = c
                    vecs.append(v)
        layer = Subspace.from_vectors(ambient, vecs)
        result = layer if result is None else intersect(result, layer)
        if result.dim == 0:
            return result
    return result

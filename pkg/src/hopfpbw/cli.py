"""Command-line front end.

Problems live in single JSON documents: a cyclotomic field declaration,
Hopf structure constants (sparse, scalar values as literal strings), the
quadratic algebra with its action, and optionally a deformation map whose
rows refer to the canonical (reduced-echelon) relation basis.  Emission is
canonical, so preset -> load -> re-emit is byte-identical.

Commands and exit codes:

  validate <file>            0 all axioms pass / 2 axiom failure
  check <file>               0 PBW / 3 some condition fails
  solve <file>               0; prints family dimension and basis
  oracle <file>              0 consistent / 4 falsified
  koszul <file>              0; graded and overlap dimension tables
  preset <name>              0; writes a problem file

The global --json flag switches every report to a stable machine-readable
schema; --cutoff overrides the truncation degree (default 6).
"""

from __future__ import annotations

import argparse
import json
import sys

from .scalar import Scalar, parse_scalar, format_scalar, ScalarError
from .hopf import (HopfAlgebra, validate_hopf, format_hvec, UnknownPreset, HopfError)
from .modalg import ModuleAlgebra, validate_action, graded_dim, koszul_component, DEFAULT_CUTOFF, CutoffExceeded
from .deform import Kappa, check_pbw, solve_kappa, kappa_block_dims
from .oracle import filtered_dims, pbw_probe, CONSISTENT_CAVEAT
from .presets import Problem, build_problem, PRESET_NAMES


class ParseError(Exception):
    pass


class ValidationError(Exception):
    def __init__(self, message: str, failures: list):
        super().__init__(message)
        self.failures = failures


# -- serialization --------------------------------------------------------------

def problem_to_json(prob: Problem) -> dict:
    H, B = prob.hopf, prob.algebra
    d = H.dim
    mult = []
    for i in range(d):
        for j in range(d):
            for k in sorted(H.mult[i][j]):
                mult.append([i, j, k, format_scalar(H.mult[i][j][k])])
    comult = []
    for i in range(d):
        for (j, k) in sorted(H.comult[i]):
            comult.append([i, j, k, format_scalar(H.comult[i][(j, k)])])
    antipode = []
    for i in range(d):
        for j in sorted(H.antipode[i]):
            antipode.append([i, j, format_scalar(H.antipode[i][j])])
    unit = [[i, format_scalar(c)] for i, c in sorted(H.unit.items())]
    relations = []
    for a in range(B.dim_relations()):
        rel = B.relation_sparse(a)
        relations.append([[i, j, format_scalar(c)] for (i, j), c in sorted(rel.items())])
    # action matrices only for the declared algebra generators (the loader
    # derives the rest multiplicatively); without a generator hint, all of them
    hs = H.generators if H.generators is not None else list(range(d))
    action = []
    for h in hs:
        for r in range(B.vdim):
            for c in range(B.vdim):
                s = B.action[h][r][c]
                if not s.is_zero():
                    action.append([h, r, c, format_scalar(s)])
    doc = {
        "field": {"cyclotomic_order": H.order},
        "cutoff": B.cutoff,
        "hopf": {
            "dim": d,
            "labels": list(H.labels),
            "unit": unit,
            "counit": [format_scalar(c) for c in H.counit],
            "mult": mult,
            "comult": comult,
            "antipode": antipode,
        },
        "algebra": {
            "generators": list(B.vlabels),
            "relations": relations,
            "action": action,
        },
    }
    if H.generators is not None:
        doc["hopf"]["generators"] = list(H.generators)
    if prob.kappa is not None:
        doc["kappa"] = {
            "constant": [[format_scalar(prob.kappa.constant.at(a, h)) for h in range(d)]
                         for a in range(B.dim_relations())],
            "linear": [[format_scalar(prob.kappa.linear.at(a, c)) for c in range(B.vdim * d)]
                       for a in range(B.dim_relations())],
        }
    return doc


def render_problem(prob: Problem) -> str:
    return json.dumps(problem_to_json(prob), indent=2) + "\n"


def _parse_sc(text, order: int, where: str) -> Scalar:
    if not isinstance(text, str):
        raise ParseError(f"{where}: scalar values must be strings, got {text!r}")
    try:
        return parse_scalar(text, order)
    except ScalarError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def problem_from_json(doc: dict, cutoff: int | None = None) -> Problem:
    """Parse and fully validate a problem document.

    Raises ParseError for structural problems and ValidationError when the
    Hopf or action axioms fail.
    """
    try:
        order = int(doc["field"]["cyclotomic_order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("field.cyclotomic_order missing or malformed") from exc
    if order < 1:
        raise ParseError("field.cyclotomic_order must be a positive integer")
    hdoc = doc.get("hopf")
    if not isinstance(hdoc, dict):
        raise ParseError("hopf block missing")
    try:
        d = int(hdoc["dim"])
        labels = list(hdoc["labels"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("hopf.dim or hopf.labels malformed") from exc
    if len(labels) != d:
        raise ParseError(f"hopf.labels: expected {d} labels, got {len(labels)}")
    zero = Scalar.zero(order)

    mult = [[{} for _ in range(d)] for _ in range(d)]
    for ent in hdoc.get("mult", []):
        if len(ent) != 4:
            raise ParseError(f"hopf.mult entry {ent!r} is not [i, j, k, scalar]")
        i, j, k = (int(x) for x in ent[:3])
        if not (0 <= i < d and 0 <= j < d and 0 <= k < d):
            raise ParseError(f"hopf.mult entry {ent!r} out of range")
        s = _parse_sc(ent[3], order, "hopf.mult")
        if not s.is_zero():
            mult[i][j][k] = s

    comult = [{} for _ in range(d)]
    for ent in hdoc.get("comult", []):
        if len(ent) != 4:
            raise ParseError(f"hopf.comult entry {ent!r} is not [i, j, k, scalar]")
        i, j, k = (int(x) for x in ent[:3])
        if not (0 <= i < d and 0 <= j < d and 0 <= k < d):
            raise ParseError(f"hopf.comult entry {ent!r} out of range")
        s = _parse_sc(ent[3], order, "hopf.comult")
        if not s.is_zero():
            comult[i][(j, k)] = s

    antipode = [{} for _ in range(d)]
    for ent in hdoc.get("antipode", []):
        if len(ent) != 3:
            raise ParseError(f"hopf.antipode entry {ent!r} is not [i, j, scalar]")
        i, j = int(ent[0]), int(ent[1])
        if not (0 <= i < d and 0 <= j < d):
            raise ParseError(f"hopf.antipode entry {ent!r} out of range")
        s = _parse_sc(ent[2], order, "hopf.antipode")
        if not s.is_zero():
            antipode[i][j] = s

    unit_doc = hdoc.get("unit")
    unit: dict = {}
    if isinstance(unit_doc, int):
        unit[unit_doc] = Scalar.one(order)
    elif isinstance(unit_doc, list):
        for ent in unit_doc:
            if len(ent) != 2:
                raise ParseError(f"hopf.unit entry {ent!r} is not [index, scalar]")
            unit[int(ent[0])] = _parse_sc(ent[1], order, "hopf.unit")
    else:
        raise ParseError("hopf.unit must be an index or a sparse vector")

    counit_doc = hdoc.get("counit")
    if not isinstance(counit_doc, list) or len(counit_doc) != d:
        raise ParseError(f"hopf.counit must list {d} scalars")
    counit = [_parse_sc(t, order, "hopf.counit") for t in counit_doc]

    gens = hdoc.get("generators")
    H = HopfAlgebra(order, d, labels, mult, comult, unit, counit, antipode,
                    generators=list(gens) if gens is not None else None)

    adoc = doc.get("algebra")
    if not isinstance(adoc, dict):
        raise ParseError("algebra block missing")
    vlabels = list(adoc.get("generators", []))
    vd = len(vlabels)
    if vd == 0:
        raise ParseError("algebra.generators must be nonempty")
    rel_vecs = []
    for rdoc in adoc.get("relations", []):
        rel = {}
        for ent in rdoc:
            if len(ent) != 3:
                raise ParseError(f"algebra.relations entry {ent!r} is not [i, j, scalar]")
            i, j = int(ent[0]), int(ent[1])
            if not (0 <= i < vd and 0 <= j < vd):
                raise ParseError(f"algebra.relations entry {ent!r} out of range")
            s = _parse_sc(ent[2], order, "algebra.relations")
            if not s.is_zero():
                rel[(i, j)] = s
        rel_vecs.append(rel)
    action = [None] * d
    for ent in adoc.get("action", []):
        if len(ent) != 4:
            raise ParseError(f"algebra.action entry {ent!r} is not [h, row, col, scalar]")
        h, r, c = (int(x) for x in ent[:3])
        if not (0 <= h < d and 0 <= r < vd and 0 <= c < vd):
            raise ParseError(f"algebra.action entry {ent!r} out of range")
        if action[h] is None:
            action[h] = [[zero] * vd for _ in range(vd)]
        action[h][r][c] = _parse_sc(ent[3], order, "algebra.action")
    action = _derive_action(H, vd, action)

    B = ModuleAlgebra.make(order, vlabels, rel_vecs, action,
                           cutoff=cutoff if cutoff is not None else int(doc.get("cutoff", DEFAULT_CUTOFF)))

    kappa = None
    kdoc = doc.get("kappa")
    if kdoc is not None:
        p = B.dim_relations()
        cdoc = kdoc.get("constant")
        ldoc = kdoc.get("linear")
        if not isinstance(cdoc, list) or len(cdoc) != p:
            raise ParseError(f"kappa.constant must have one row per canonical relation ({p})")
        if not isinstance(ldoc, list) or len(ldoc) != p:
            raise ParseError(f"kappa.linear must have one row per canonical relation ({p})")
        cvecs = []
        lvecs = []
        for a in range(p):
            if len(cdoc[a]) != d:
                raise ParseError(f"kappa.constant row {a} must have {d} entries")
            if len(ldoc[a]) != vd * d:
                raise ParseError(f"kappa.linear row {a} must have {vd * d} entries")
            cvecs.append({i: s for i, t in enumerate(cdoc[a])
                          if not (s := _parse_sc(t, order, "kappa.constant")).is_zero()})
            lvecs.append({(i // d, i % d): s for i, t in enumerate(ldoc[a])
                          if not (s := _parse_sc(t, order, "kappa.linear")).is_zero()})
        kappa = Kappa.from_vectors(H, B, cvecs, lvecs)

    hrep = validate_hopf(H)
    if not hrep.passed:
        raise ValidationError("Hopf axioms fail", hrep.failures)
    arep = validate_action(H, B)
    if not arep.passed:
        raise ValidationError("action axioms fail", arep.failures)
    return Problem(doc.get("name", "problem"), H, B, kappa)


def _derive_action(H: HopfAlgebra, vd: int, action: list) -> list:
    """Fill missing action matrices multiplicatively from the given ones.

    A file may carry matrices for algebra generators only; any basis
    element expressible as a product of covered elements (with the unit
    acting as the identity) gets its matrix derived.  Whatever remains
    uncovered is a parse error.  validate_action then re-checks the whole
    assignment exhaustively.
    """
    zero = Scalar.zero(H.order)
    one = Scalar.one(H.order)
    known = {h: m for h, m in enumerate(action) if m is not None}
    if len(known) < H.dim and len(H.unit) == 1:
        ((ui, uc),) = H.unit.items()
        if uc == one and ui not in known:
            known[ui] = [[one if r == c else zero for c in range(vd)] for r in range(vd)]

    def matmul(A, B):
        return [[sum((A[r][t] * B[t][c] for t in range(vd)), zero)
                 for c in range(vd)] for r in range(vd)]

    changed = True
    while changed and len(known) < H.dim:
        changed = False
        for i in sorted(known):
            for j in sorted(known):
                prod = H.mult[i][j]
                if len(prod) == 1:
                    ((k, ck),) = prod.items()
                    if ck == one and k not in known:
                        known[k] = matmul(known[i], known[j])
                        changed = True
    missing = [h for h in range(H.dim) if h not in known]
    if missing:
        raise ParseError(
            "algebra.action: no matrix given or derivable for basis elements "
            + ", ".join(str(h) for h in missing))
    return [known[h] for h in range(H.dim)]


def load_spec(path: str, cutoff: int | None = None) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return problem_from_json(doc, cutoff=cutoff)


def emit_preset(name: str, path: str | None, with_kappa: bool = False) -> str:
    prob = build_problem(name, with_kappa=with_kappa)
    text = render_problem(prob)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


# -- report rendering ------------------------------------------------------------

def _fail_lines(failures: list) -> list[str]:
    out = []
    for axiom, witness, lhs, rhs in failures:
        out.append(f"  {axiom} at {witness}: lhs = {lhs}, rhs = {rhs}")
    return out


def _kappa_lines(H: HopfAlgebra, B: ModuleAlgebra, kp: Kappa) -> list[str]:
    d = H.dim
    lines = []
    for a in range(B.dim_relations()):
        cv = kp.c_vec(a)
        lv = kp.l_vec(a, d)
        if not cv and not lv:
            continue
        parts = []
        if cv:
            parts.append(f"C: {format_hvec(H, cv)}")
        if lv:
            terms = []
            for (v, h) in sorted(lv):
                c = lv[(v, h)]
                cs = format_scalar(c)
                pre = "" if cs == "1" else (f"({cs})*" if ("+" in cs or "z" in cs) else f"{cs}*")
                terms.append(f"{pre}{B.vlabels[v]}(x){H.labels[h]}")
            parts.append("L: " + " + ".join(terms))
        lines.append(f"    r{a}: " + "; ".join(parts))
    if not lines:
        lines.append("    0")
    return lines


def cmd_validate(prob_path: str, as_json: bool, cutoff: int | None) -> int:
    try:
        prob = load_spec(prob_path, cutoff)
    except ValidationError as exc:
        if as_json:
            print(json.dumps({"command": "validate", "ok": False,
                              "failures": [[f[0], list(f[1])] for f in exc.failures]}, indent=2))
        else:
            print(f"INVALID: {exc}")
            print("\n".join(_fail_lines(exc.failures)))
        return 2
    if as_json:
        print(json.dumps({"command": "validate", "ok": True,
                          "hopf_dim": prob.hopf.dim, "vdim": prob.algebra.vdim,
                          "relations": prob.algebra.dim_relations()}, indent=2))
    else:
        print(f"OK: Hopf algebra (dim {prob.hopf.dim}) and action on "
              f"{prob.algebra.vdim} generators with {prob.algebra.dim_relations()} relations "
              "pass all axioms")
    return 0


def cmd_check(prob_path: str, as_json: bool, cutoff: int | None) -> int:
    prob = load_spec(prob_path, cutoff)
    if prob.kappa is None:
        raise ParseError("check needs a kappa block in the problem file")
    rep = check_pbw(prob.hopf, prob.algebra, prob.kappa)
    if as_json:
        print(json.dumps({
            "command": "check",
            "ok": rep.passed,
            "conditions": {k: v.status for k, v in rep.conditions.items()},
            "witnesses": {k: v.witnesses for k, v in rep.conditions.items() if v.witnesses},
            "notes": rep.notes,
        }, indent=2))
    else:
        print("PBW check:")
        for name in ("a", "b", "c", "d"):
            st = rep.conditions[name]
            print(f"  ({name}) {st.status}")
            for w in st.witnesses[:4]:
                print(f"      witness: {w}")
        for note in rep.notes:
            print(f"  note: {note}")
        print("verdict:", "PBW deformation" if rep.passed else "NOT a PBW deformation")
    return 0 if rep.passed else 3


def cmd_solve(prob_path: str, as_json: bool, cutoff: int | None, fix_linear_zero: bool) -> int:
    prob = load_spec(prob_path, cutoff)
    fam = solve_kappa(prob.hopf, prob.algebra, force_linear_zero=fix_linear_zero)
    H, B = prob.hopf, prob.algebra
    blocks = kappa_block_dims(B, H, fam.linear_basis)
    if as_json:
        doc = {
            "command": "solve",
            "family_dim": fam.family_dim,
            "stage1_dim": len(fam.ab_basis),
            "block_dims": [{"relation": a, "constant": c, "linear": l}
                           for a, (c, l) in enumerate(blocks)],
            "basis": [{"constant": [[format_scalar(kp.constant.at(a, h)) for h in range(H.dim)]
                                    for a in range(B.dim_relations())],
                       "linear": [[format_scalar(kp.linear.at(a, c)) for c in range(B.vdim * H.dim)]
                                  for a in range(B.dim_relations())]}
                      for kp in fam.linear_basis],
            "residual_system": [rp.render() for rp in fam.residual_system],
            "notes": fam.notes,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"stage 1 (linear conditions): solution space of dimension {len(fam.ab_basis)}")
        if fam.residual_system:
            print(f"residual polynomial system ({len(fam.residual_system)} constraints):")
            for rp in fam.residual_system:
                print(f"    {rp.render()}")
            print("family dimension: undetermined (nonlinear residual)")
        else:
            print(f"family dimension: {fam.family_dim}")
        print("per-relation block dimensions (constant, linear):",
              " ".join(f"r{a}:({c},{l})" for a, (c, l) in enumerate(blocks)))
        print("family basis:")
        for i, kp in enumerate(fam.linear_basis):
            print(f"  basis vector {i}:")
            print("\n".join(_kappa_lines(H, B, kp)))
        for note in fam.notes:
            print(f"note: {note}")
    return 0


def cmd_oracle(prob_path: str, as_json: bool, cutoff: int | None,
               degree: int, buffer: int, probe: bool, max_buffer: int) -> int:
    prob = load_spec(prob_path, cutoff)
    kappa = prob.kappa if prob.kappa is not None else Kappa.zero(prob.hopf, prob.algebra)
    if probe:
        pr = pbw_probe(prob.hopf, prob.algebra, kappa, degree, max_buffer)
        rep = pr.reports[-1]
        verdict = pr.verdict
    else:
        rep = filtered_dims(prob.hopf, prob.algebra, kappa, degree, buffer)
        verdict = rep.verdict
    if as_json:
        print(json.dumps({
            "command": "oracle",
            "degree": degree,
            "buffer": rep.buffer,
            "computed_dims": rep.computed_dims,
            "expected_dims": rep.expected_dims,
            "verdict": verdict,
            "falsified_at": rep.falsified_at,
            "caveat": CONSISTENT_CAVEAT,
        }, indent=2))
    else:
        print(f"filtered dimensions through degree {degree} (spanning buffer {rep.buffer}):")
        print("  m | computed | expected")
        for m, (c, e) in enumerate(zip(rep.computed_dims, rep.expected_dims)):
            mark = "" if c == e else "   <-- deficient" if c < e else "   <-- excess"
            print(f"  {m} | {c:8d} | {e:8d}{mark}")
        print("verdict:", verdict)
        if verdict == "CONSISTENT":
            print(f"note: {CONSISTENT_CAVEAT}")
    return 0 if verdict == "CONSISTENT" else 4


def cmd_koszul(prob_path: str, as_json: bool, cutoff: int | None, max_deg: int) -> int:
    prob = load_spec(prob_path, cutoff)
    B = prob.algebra
    gd = {n: graded_dim(B, n) for n in range(0, max_deg + 1)}
    od = {i: koszul_component(B, i).dim for i in range(2, max_deg + 1)}
    if as_json:
        print(json.dumps({"command": "koszul",
                          "graded_dims": [gd[n] for n in range(0, max_deg + 1)],
                          "overlap_dims": {str(i): od[i] for i in sorted(od)}}, indent=2))
    else:
        print("graded dimensions of B:")
        for n in range(0, max_deg + 1):
            print(f"  dim B_{n} = {gd[n]}")
        print("overlap component dimensions:")
        for i in sorted(od):
            print(f"  dim D'_{i} = {od[i]}")
    return 0


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(
        prog="hopfpbw",
        description="Exact PBW-deformation analysis for smash products B # H")
    ap.add_argument("--json", action="store_true", help="machine-readable reports")
    ap.add_argument("--cutoff", type=int, default=None,
                    help="override the truncation degree (default 6)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check all Hopf and action axioms")
    p.add_argument("file")
    p = sub.add_parser("check", help="decide the PBW property for the file's kappa")
    p.add_argument("file")
    p = sub.add_parser("solve", help="solve for the full family of deformation maps")
    p.add_argument("file")
    p.add_argument("--fix-linear-zero", action="store_true",
                   help="restrict to deformation maps with zero linear part")
    p = sub.add_parser("oracle", help="brute-force filtered dimension cross-check")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--buffer", type=int, default=1)
    p.add_argument("--probe", action="store_true",
                   help="iterate buffers 0..max-buffer, stopping at the first deficiency")
    p.add_argument("--max-buffer", type=int, default=2)
    p = sub.add_parser("koszul", help="graded and overlap dimension tables")
    p.add_argument("file")
    p.add_argument("--max", type=int, default=4)
    p = sub.add_parser("preset", help="emit a bundled problem file")
    p.add_argument("name", help="one of: " + ", ".join(PRESET_NAMES))
    p.add_argument("--with-kappa", action="store_true",
                   help="include a sample deformation map from the known family")
    p.add_argument("-o", "--output", default=None)

    args = ap.parse_args(argv)
    try:
        if args.command == "validate":
            return cmd_validate(args.file, args.json, args.cutoff)
        if args.command == "check":
            return cmd_check(args.file, args.json, args.cutoff)
        if args.command == "solve":
            return cmd_solve(args.file, args.json, args.cutoff, args.fix_linear_zero)
        if args.command == "oracle":
            return cmd_oracle(args.file, args.json, args.cutoff,
                              args.degree, args.buffer, args.probe, args.max_buffer)
        if args.command == "koszul":
            return cmd_koszul(args.file, args.json, args.cutoff, args.max)
        if args.command == "preset":
            text = emit_preset(args.name, args.output, args.with_kappa)
            if args.output is None:
                sys.stdout.write(text)
            else:
                print(f"wrote {args.output}")
            return 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        for line in _fail_lines(exc.failures):
            print(line, file=sys.stderr)
        return 2
    except (UnknownPreset, HopfError, CutoffExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())

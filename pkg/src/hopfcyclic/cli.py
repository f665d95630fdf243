"""Batch command line for the engine.

Every verb prints one JSON document (or a short text summary with
``--format text``) and exits 0 when all checks pass, 1 when a mathematical
check fails, 2 on bad input.  Output is deterministic: keys are sorted and
scalars are canonical strings, so identical invocations give identical bytes.

    python -m hopfcyclic examples
    python -m hopfcyclic examples --export h4 --out h4.json
    python -m hopfcyclic verify-hopf h4.json
    python -m hopfcyclic build --construction kr --hopf h4 --pair auto --N 3
    python -m hopfcyclic homology --kind cyclic --construction alg --hopf k --N 4
    python -m hopfcyclic check-theorem31 --hopf h4 --pair auto --N 3
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as C
from .cyclic import ParaCocyclicModule, ParaCyclicModule, check_dual, check_relations, hat_dual
from .errors import (
    FieldMismatch,
    HopfCyclicError,
    InputError,
    NormalizationError,
    ShapeMismatch,
)
from .exactfield import Matrix, field_from_tag
from .homology import connes_dims, cyclic_dims, hochschild_dims
from .hopfcore import (
    BUILTIN_NAMES,
    auto_pair,
    builtin_hopf,
    dual_hopf,
    involution_pairs,
    is_cocommutative,
    one_dim_module,
    sayd_from_modular_pair,
    trivial_pair,
    verify_hopf_axioms,
    verify_modular_pair,
    verify_sayd,
)
from .report import Report
from .serialize import (
    cyclic_module_from_json,
    cyclic_module_to_json,
    dumps,
    hopf_from_json,
    hopf_to_json,
    module_from_json,
    named_characters,
    named_grouplikes,
)
from .theorems import (
    contracting_homotopy_algebra,
    contracting_homotopy_coalgebra,
    dual_pair,
    evaluation_pairing,
    verify_identifications,
    verify_pairing,
    verify_theta_morphism,
    verify_invariant_duality,
    verify_theta_descent,
)

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2

_INPUT_ERRORS = (InputError, ShapeMismatch, FieldMismatch, NormalizationError, json.JSONDecodeError, OSError, KeyError)


class _MathFailure(Exception):
    """Raised with a report when a prerequisite check fails before the main one."""

    def __init__(self, report: Report):
        super().__init__(report.title)
        self.report = report


# loading


def _read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _field_arg(args):
    return field_from_tag(args.field) if getattr(args, "field", None) else None


class Source:
    """The Hopf algebra of an invocation plus the named vectors that come with it."""

    def __init__(self, H, characters, grouplikes, builtin):
        self.H = H
        self.characters = characters
        self.grouplikes = grouplikes
        self.builtin = builtin


def _load_source(args, verify=True) -> Source:
    field = _field_arg(args)
    path = getattr(args, "file", None)
    name = getattr(args, "hopf", None)
    if bool(path) == bool(name):
        raise InputError("give exactly one of a Hopf data FILE or --hopf NAME")
    if name:
        H = builtin_hopf(name, field) if field else builtin_hopf(name)
        chars = {k: Matrix.from_rows(H.field, [v]) for k, v in named_characters(H).items()}
        groups = {k: Matrix.from_rows(H.field, [v]).T for k, v in named_grouplikes(H).items()}
        src = Source(H, chars, groups, True)
    else:
        H, chars, groups = hopf_from_json(_read_json(path))
        if field is not None and field != H.field:
            raise InputError("--field %s disagrees with the file's field %s" % (field.tag, H.field.tag))
        src = Source(H, chars, groups, False)
    if verify:
        rep = verify_hopf_axioms(src.H)
        if not rep.ok:
            raise _MathFailure(rep)
    return src


def _pair(src: Source, spec: str | None):
    spec = spec or "auto"
    H = src.H
    if spec == "trivial":
        return trivial_pair(H)
    if spec == "auto":
        if not src.builtin:
            raise InputError("--pair auto searches built-ins only; name a pair as CHARACTER:GROUPLIKE")
        return auto_pair(H)
    if ":" not in spec:
        raise InputError("--pair must be auto, trivial or CHARACTER:GROUPLIKE")
    cname, gname = spec.split(":", 1)
    if cname not in src.characters:
        raise InputError("unknown character %r (known: %s)" % (cname, ", ".join(sorted(src.characters)) or "none"))
    if gname not in src.grouplikes:
        raise InputError("unknown grouplike %r (known: %s)" % (gname, ", ".join(sorted(src.grouplikes)) or "none"))
    return verify_modular_pair(H, src.characters[cname], src.grouplikes[gname])


def _module(src: Source, args):
    """The SAYD coefficients: --module FILE, or k with the chosen pair."""
    if getattr(args, "module", None):
        M = module_from_json(src.H, _read_json(args.module))
        rep = verify_sayd(src.H, M)
        if not rep.ok:
            raise _MathFailure(rep)
        return M
    return sayd_from_modular_pair(src.H, _pair(src, getattr(args, "pair", None)))


def _build(src: Source, args):
    H, N, kind = src.H, args.N, args.construction
    if kind == "alg":
        return C.algebra_cyclic(H, N)
    if kind == "coalg":
        return C.coalgebra_cocyclic(H, N)
    if kind == "cm":
        return C.connes_moscovici_cocyclic(H, _pair(src, args.pair), N)
    if kind == "kr":
        return C.kr_cyclic(H, _pair(src, args.pair), N)
    M = _module(src, args)
    return {
        "calg": C.alg_with_coefficients,
        "ccoalg": C.coalg_with_coefficients,
        "k": C.k_dual_module,
        "invariant": C.invariant_cyclic,
        "coinvariant": C.coinvariant_cocyclic,
    }[kind](H, M, N)


# verbs


def _cmd_examples(args):
    field = _field_arg(args)
    if args.export:
        H = builtin_hopf(args.export, field) if field else builtin_hopf(args.export)
        return hopf_to_json(H, named_characters(H), named_grouplikes(H)), EXIT_OK
    rows = []
    for base in BUILTIN_NAMES:
        for name in (base, base + "-dual"):
            H = builtin_hopf(name, field) if field else builtin_hopf(name)
            chars, groups = named_characters(H), named_grouplikes(H)
            pairs = []
            for p in involution_pairs(H):
                cn = next(k for k, v in chars.items() if v == [p.delta[0, i] for i in range(H.dim)])
                gn = next(k for k, v in groups.items() if v == [p.sigma[i, 0] for i in range(H.dim)])
                pairs.append("%s:%s" % (cn, gn))
            rows.append({
                "name": name,
                "dim": H.dim,
                "field": H.field.tag,
                "basis": list(H.labels),
                "cocommutative": is_cocommutative(H),
                "characters": sorted(chars),
                "grouplikes": sorted(groups),
                "involution_pairs": pairs,
            })
    return {"builtins": rows}, EXIT_OK


def _report_result(rep: Report):
    return rep.to_dict(), EXIT_OK if rep.ok else EXIT_MATH


def _cmd_verify_hopf(args):
    return _report_result(verify_hopf_axioms(_load_source(args, verify=False).H))


def _cmd_verify_sayd(args):
    src = _load_source(args)
    if args.module:
        M = module_from_json(src.H, _read_json(args.module))
    else:
        p = _pair(src, args.pair)
        M = one_dim_module(src.H, p.delta, p.sigma)
    return _report_result(verify_sayd(src.H, M))


def _cmd_build(args):
    X = _build(_load_source(args), args)
    rep = check_relations(X)
    return {"module": cyclic_module_to_json(X), "relations": rep.to_dict()}, EXIT_OK if rep.ok else EXIT_MATH


def _cmd_dualize(args):
    X = cyclic_module_from_json(_read_json(args.file))
    if args.direction == "hat":
        if not isinstance(X, ParaCocyclicModule):
            raise InputError("hat dualizes a paracocyclic module")
        Y = hat_dual(X)
    else:
        if not isinstance(X, ParaCyclicModule):
            raise InputError("check dualizes a paracyclic module")
        Y = check_dual(X)
    rep = check_relations(Y)
    return {"module": cyclic_module_to_json(Y), "relations": rep.to_dict()}, EXIT_OK if rep.ok else EXIT_MATH


def _cmd_homology(args):
    if args.module_file:
        X = cyclic_module_from_json(_read_json(args.module_file))
    else:
        if not args.construction:
            raise InputError("homology needs --construction or --module-file")
        X = _build(_load_source(args), args)
    if args.kind == "hochschild":
        return {"reports": [hochschild_dims(X, args.up_to).to_dict()]}, EXIT_OK
    reports = []
    if args.method in ("bicomplex", "both"):
        reports.append(cyclic_dims(X, args.up_to))
    if args.method in ("connes", "both"):
        reports.append(connes_dims(X, args.up_to))
    out = {"reports": [r.to_dict() for r in reports]}
    code = EXIT_OK
    if len(reports) == 2:
        out["pipelines_agree"] = reports[0].dims == reports[1].dims
        code = EXIT_OK if out["pipelines_agree"] else EXIT_MATH
    return out, code


def _cmd_theta(args):
    src = _load_source(args)
    M = _module(src, args)
    rep = Report("theta-morphism-and-descent", meta={"N": args.N, "field": src.H.field.tag, "hopf": src.H.name})
    rep.extend(verify_theta_morphism(src.H, M, args.N), prefix="morphism-")
    rep.extend(verify_theta_descent(src.H, M, args.N), prefix="descent-")
    return _report_result(rep)


def _cmd_duality(args):
    src = _load_source(args)
    return _report_result(verify_invariant_duality(src.H, _module(src, args), args.N, homology=not args.no_homology))


def _cmd_identifications(args):
    src = _load_source(args)
    return _report_result(verify_identifications(src.H, _pair(src, args.pair), args.N))


def _first_normalised(values, what):
    for i, v in enumerate(values):
        if v:
            return i, v
    raise NormalizationError("no basis vector with nonzero %s" % what)


def _cmd_homotopy(args):
    src = _load_source(args)
    H, F = src.H, src.H.field
    rep = Report("contracting-homotopies", meta={"N": args.N, "field": F.tag, "hopf": H.name})
    if args.side in ("algebra", "both"):
        if args.phi:
            phi = Matrix.from_rows(F, [[F.parse(x) for x in args.phi.split(",")]])
        else:
            i, u = _first_normalised([H.unit[k, 0] for k in range(H.dim)], "unit coefficient")
            phi = Matrix.from_dict(F, 1, H.dim, {(0, i): F.inv(u)})
        sub = contracting_homotopy_algebra(H, phi, args.N)
        rep.extend(sub, prefix="algebra-")
        rep.meta["algebra_HH"] = sub.meta["HH"]
    if args.side in ("coalgebra", "both"):
        if args.c:
            c = Matrix.from_rows(F, [[F.parse(x)] for x in args.c.split(",")])
        else:
            j, v = _first_normalised([H.counit[0, k] for k in range(H.dim)], "counit value")
            c = Matrix.from_dict(F, H.dim, 1, {(j, 0): F.inv(v)})
        sub = contracting_homotopy_coalgebra(H, c, args.N)
        rep.extend(sub, prefix="coalgebra-")
        rep.meta["coalgebra_HH"] = sub.meta["HH"]
    return _report_result(rep)


def _cmd_pairing(args):
    src = _load_source(args)
    H = src.H
    G = dual_hopf(H)
    P = evaluation_pairing(H)
    p = _pair(src, args.pair)
    q = dual_pair(H, G, P, p)
    M = one_dim_module(H, p.delta, p.sigma, "LR")
    Nm = one_dim_module(G, q.delta, q.sigma, "RL")
    rep = verify_pairing(H, G, M, Nm, P, Matrix.identity(H.field, 1), args.N)
    return _report_result(rep)


# argument parsing


def _hopf_args(p):
    p.add_argument("file", nargs="?", help="Hopf structure-constant JSON file")
    p.add_argument("--hopf", help="built-in Hopf algebra (see 'examples')")
    p.add_argument("--field", help="Q or Fp:p (built-ins only; files carry their own field)")


def _common(p):
    p.add_argument("--out", help="write the JSON document here instead of standard output")
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfcyclic", description="Exact Hopf-cyclic computations.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("examples", help="list built-in Hopf algebras, or export one as JSON")
    p.add_argument("--export", metavar="NAME")
    p.add_argument("--field")
    _common(p)
    p.set_defaults(run=_cmd_examples)

    p = sub.add_parser("verify-hopf", help="check every Hopf axiom")
    _hopf_args(p)
    _common(p)
    p.set_defaults(run=_cmd_verify_hopf)

    p = sub.add_parser("verify-sayd", help="check a stable anti-Yetter-Drinfeld module")
    _hopf_args(p)
    p.add_argument("--module", help="SAYD module JSON; default is k with --pair")
    p.add_argument("--pair")
    _common(p)
    p.set_defaults(run=_cmd_verify_sayd)

    p = sub.add_parser("build", help="build a (para)(co)cyclic module and check its relations")
    _hopf_args(p)
    p.add_argument("--construction", required=True, choices=C.CONSTRUCTIONS)
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--pair")
    p.add_argument("--module")
    _common(p)
    p.set_defaults(run=_cmd_build)

    p = sub.add_parser("dualize", help="apply the hat or check duality functor to a module JSON")
    p.add_argument("direction", choices=("hat", "check"))
    p.add_argument("file")
    _common(p)
    p.set_defaults(run=_cmd_dualize)

    p = sub.add_parser("homology", help="Hochschild or cyclic (co)homology dimensions")
    _hopf_args(p)
    p.add_argument("--kind", required=True, choices=("hochschild", "cyclic"))
    p.add_argument("--method", choices=("bicomplex", "connes", "both"), default="both")
    p.add_argument("--construction", choices=C.CONSTRUCTIONS)
    p.add_argument("--module-file", help="module JSON as written by 'build' (its 'module' block)")
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--up-to", type=int)
    p.add_argument("--pair")
    p.add_argument("--module")
    _common(p)
    p.set_defaults(run=_cmd_homology)

    for verb, fn, helptext in (
        ("check-prop31", _cmd_theta, "theta is a paracyclic morphism and descends"),
        ("check-theorem31", _cmd_duality, "invariant and coinvariant sides are dual to each other"),
        ("check-identifications", _cmd_identifications, "invariant = KR and coinvariant = CM for M = k"),
    ):
        p = sub.add_parser(verb, help=helptext)
        _hopf_args(p)
        p.add_argument("--N", type=int, default=3)
        p.add_argument("--pair")
        if verb != "check-identifications":
            p.add_argument("--module")
        if verb == "check-theorem31":
            p.add_argument("--no-homology", action="store_true")
        _common(p)
        p.set_defaults(run=fn)

    p = sub.add_parser("check-lemma23", help="contracting homotopies of the dual modules")
    _hopf_args(p)
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--side", choices=("algebra", "coalgebra", "both"), default="both")
    p.add_argument("--phi", help="comma-separated functional with phi(1) = 1")
    p.add_argument("--c", help="comma-separated element with eps(c) = 1")
    _common(p)
    p.set_defaults(run=_cmd_homotopy)

    p = sub.add_parser("check-pairing", help="pairing of CM(H) with KR of the dual Hopf algebra")
    _hopf_args(p)
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--pair")
    _common(p)
    p.set_defaults(run=_cmd_pairing)
    return parser


def _text(doc) -> str:
    """Short human summary of a JSON document."""
    if "builtins" in doc:
        return "\n".join("%-10s dim %d  pairs: %s" % (r["name"], r["dim"], " ".join(r["involution_pairs"]) or "-") for r in doc["builtins"]) + "\n"
    if "reports" in doc:
        lines = []
        for r in doc["reports"]:
            lines.append("%s %s via %s (N=%d, %s): %s" % (r["kind"], r["direction"], r["method"], r["N"], r["field"],
                                                         " ".join(str(d["dim"]) for d in r["dims"])))
        if "pipelines_agree" in doc:
            lines.append("pipelines agree: %s" % doc["pipelines_agree"])
        return "\n".join(lines) + "\n"
    rep = doc.get("relations", doc)
    if "checks" not in rep:
        return dumps(doc)
    bad = [c for c in rep["checks"] if not c["passed"]]
    lines = ["%s: %s (%d checks, %d failed)" % (rep["title"], "PASS" if rep["ok"] else "FAIL", len(rep["checks"]), len(bad))]
    for c in bad[:20]:
        where = "".join(" %s=%s" % (k, c[k]) for k in ("degree", "index") if k in c)
        lines.append("  failed %s%s" % (c["name"], where))
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        doc, code = args.run(args)
    except _MathFailure as exc:
        doc, code = exc.report.to_dict(), EXIT_MATH
    except _INPUT_ERRORS as exc:
        print("input error: %s" % (exc.args[0] if exc.args else exc), file=stderr)
        return EXIT_INPUT
    except HopfCyclicError as exc:
        doc, code = {"error": type(exc).__name__, "detail": str(exc)}, EXIT_MATH
    except ValueError as exc:
        print("input error: %s" % exc, file=stderr)
        return EXIT_INPUT
    text = _text(doc) if args.format == "text" else dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())

"""JSON round-trips for Hopf data, SAYD modules, (co)cyclic modules and graded maps.

A matrix is written as a list of rows, one row per *source* basis vector
holding the coordinates of its image, so ``mult`` is d^2 x d and ``comult``
is d x d^2.  Internally matrices act on columns, hence the transposes below.
Scalars are canonical strings.  :func:`dumps` sorts keys so equal inputs give
byte-identical text.
"""

from __future__ import annotations

import json

from .cyclic import GradedMap, ParaCocyclicModule, ParaCyclicModule
from .errors import InputError, ShapeMismatch
from .exactfield import Field, Matrix, field_from_tag
from .hopfcore import BasedSpace, HopfAlgebra, SAYDModule, find_characters, find_grouplikes


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def matrix_to_json(m: Matrix) -> list:
    return m.T.to_strings()


def matrix_from_json(field: Field, data, name: str, rows: int, cols: int) -> Matrix:
    """Parse the row-per-source-vector layout into an internal rows x cols matrix."""
    if not isinstance(data, list):
        raise InputError("%s: expected a list of %d rows" % (name, cols))
    if len(data) != cols:
        raise InputError("%s: %d rows, expected %d" % (name, len(data), cols))
    parsed = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != rows:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise InputError("%s: row %d has %s entries, expected %d" % (name, i, got, rows))
        out = []
        for j, v in enumerate(row):
            if isinstance(v, (bool, float)) or not isinstance(v, (str, int)):
                raise InputError("%s[%d][%d]: scalar must be a string or integer, got %r" % (name, i, j, v))
            try:
                out.append(field.parse(v))
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError("%s[%d][%d]: bad scalar %r (%s)" % (name, i, j, v, exc)) from None
        parsed.append(out)
    return Matrix.from_rows(field, parsed).T if parsed else Matrix.zeros(field, rows, cols)


def _field(data) -> Field:
    try:
        return field_from_tag(data.get("field", "Q"))
    except (ValueError, TypeError) as exc:
        raise InputError("field: %s" % exc) from None


def _vector_block(field, data, key, d):
    out = {}
    for name in sorted(data.get(key, {}) or {}):
        vec = data[key][name]
        if not isinstance(vec, list) or len(vec) != d:
            raise InputError("%s.%s: expected %d entries" % (key, name, d))
        out[name] = [field.parse(v) for v in vec]
    return out


def hopf_to_json(H: HopfAlgebra, characters: dict | None = None, grouplikes: dict | None = None) -> dict:
    out = {
        "field": H.field.to_json(),
        "basis": list(H.labels),
        "mult": matrix_to_json(H.mult),
        "unit": matrix_to_json(H.unit),
        "comult": matrix_to_json(H.comult),
        "counit": matrix_to_json(H.counit),
        "antipode": matrix_to_json(H.antipode),
    }
    if H.name:
        out["name"] = H.name
    if characters:
        out["characters"] = {k: [H.field.format(x) for x in v] for k, v in characters.items()}
    if grouplikes:
        out["grouplikes"] = {k: [H.field.format(x) for x in v] for k, v in grouplikes.items()}
    return out


def hopf_from_json(data: dict) -> tuple:
    """Returns (H, characters, grouplikes); the two blocks map names to 1 x d / d x 1 matrices.

    No axiom is checked here: callers decide whether to verify.
    """
    if not isinstance(data, dict):
        raise InputError("Hopf data must be a JSON object")
    for key in ("basis", "mult", "unit", "comult", "counit", "antipode"):
        if key not in data:
            raise InputError("missing block %r" % key)
    field = _field(data)
    basis = data["basis"]
    if not isinstance(basis, list) or not basis:
        raise InputError("basis: expected a non-empty list of names")
    d = len(basis)
    try:
        space = BasedSpace(d, tuple(str(b) for b in basis), field)
    except (ShapeMismatch, ValueError) as exc:
        raise InputError("basis: %s" % exc) from None
    mats = {
        "mult": matrix_from_json(field, data["mult"], "mult", d, d * d),
        "unit": matrix_from_json(field, data["unit"], "unit", d, 1),
        "comult": matrix_from_json(field, data["comult"], "comult", d * d, d),
        "counit": matrix_from_json(field, data["counit"], "counit", 1, d),
        "antipode": matrix_from_json(field, data["antipode"], "antipode", d, d),
    }
    H = HopfAlgebra(space, mats["mult"], mats["unit"], mats["comult"], mats["counit"], mats["antipode"], name=data.get("name"))
    chars = {k: Matrix.from_rows(field, [v]) for k, v in _vector_block(field, data, "characters", d).items()}
    groups = {k: Matrix.from_rows(field, [v]).T for k, v in _vector_block(field, data, "grouplikes", d).items()}
    return H, chars, groups


def named_characters(H: HopfAlgebra) -> dict:
    """Characters found by the small search, named eps, chi1, chi2, ..."""
    out, k = {}, 1
    for c in find_characters(H):
        if c == H.counit:
            out["eps"] = [c[0, i] for i in range(H.dim)]
        else:
            out["chi%d" % k] = [c[0, i] for i in range(H.dim)]
            k += 1
    return out


def named_grouplikes(H: HopfAlgebra) -> dict:
    """Grouplikes found by the search, named after the basis vector when they are one."""
    out, k = {}, 1
    for g in find_grouplikes(H):
        vals = [g[i, 0] for i in range(H.dim)]
        nz = [i for i, v in enumerate(vals) if v]
        if len(nz) == 1 and vals[nz[0]] == 1:
            out[H.labels[nz[0]]] = vals
        else:
            out["g%d" % k] = vals
            k += 1
    return out


def module_to_json(M: SAYDModule) -> dict:
    return {
        "field": M.space.field.to_json(),
        "variant": M.variant,
        "basis": list(M.space.labels),
        "hopf_dim": M.H_dim,
        "action": matrix_to_json(M.action),
        "coaction": matrix_to_json(M.coaction),
    }


def module_from_json(H: HopfAlgebra, data: dict) -> SAYDModule:
    if not isinstance(data, dict):
        raise InputError("module data must be a JSON object")
    for key in ("basis", "action", "coaction"):
        if key not in data:
            raise InputError("module: missing block %r" % key)
    field = _field(data)
    if field != H.field:
        raise InputError("module is over %s but the Hopf algebra is over %s" % (field.tag, H.field.tag))
    variant = data.get("variant", "LR")
    if variant not in ("LL", "LR", "RL", "RR"):
        raise InputError("module: unknown variant %r" % variant)
    m, d = len(data["basis"]), H.dim
    space = BasedSpace(m, tuple(str(b) for b in data["basis"]), field)
    action = matrix_from_json(field, data["action"], "action", m, d * m)
    coaction = matrix_from_json(field, data["coaction"], "coaction", d * m, m)
    return SAYDModule(space, variant, action, coaction, d)


def cyclic_module_to_json(X) -> dict:
    degrees = []
    for n in range(X.N + 1):
        if isinstance(X, ParaCyclicModule):
            ops = {"faces": X.faces[n], "degeneracies": X.degeneracies[n]}
        else:
            ops = {"cofaces": X.cofaces[n], "codegeneracies": X.codegeneracies[n]}
        entry = {k: [matrix_to_json(m) for m in v] for k, v in ops.items()}
        entry["degree"] = n
        entry["dim"] = X.dims[n]
        entry["cyclic"] = matrix_to_json(X.cyclic[n])
        degrees.append(entry)
    return {"type": X.kind, "field": X.field.to_json(), "N": X.N, "name": X.name, "dims": list(X.dims), "degrees": degrees}


def cyclic_module_from_json(data: dict):
    if not isinstance(data, dict) or data.get("type") not in ("paracyclic", "paracocyclic"):
        raise InputError("module type must be 'paracyclic' or 'paracocyclic'")
    field = _field(data)
    dims = data.get("dims")
    degrees = data.get("degrees")
    if not isinstance(dims, list) or not isinstance(degrees, list) or len(dims) != len(degrees):
        raise InputError("dims and degrees must be lists of equal length")
    homological = data["type"] == "paracyclic"
    keys = ("faces", "degeneracies") if homological else ("cofaces", "codegeneracies")
    lowers, raises, cyc = [], [], []
    for n, entry in enumerate(degrees):
        down = n - 1 if homological else n + 1
        up = n + 1 if homological else n - 1
        ops = []
        for key, tgt in zip(keys, (down, up)):
            mats = entry.get(key, [])
            if mats and not 0 <= tgt < len(dims):
                raise InputError("degree %d: %s lead outside the truncation" % (n, key))
            ops.append([matrix_from_json(field, m, "%s[%d][%d]" % (key, n, i), dims[tgt], dims[n]) for i, m in enumerate(mats)])
        lowers.append(ops[0])
        raises.append(ops[1])
        cyc.append(matrix_from_json(field, entry.get("cyclic"), "cyclic[%d]" % n, dims[n], dims[n]))
    cls = ParaCyclicModule if homological else ParaCocyclicModule
    try:
        return cls(field, dims, lowers, raises, cyc, name=data.get("name"))
    except ShapeMismatch as exc:
        raise InputError(str(exc)) from None


def graded_map_to_json(f: GradedMap) -> dict:
    return {"name": f.name, "degrees": [matrix_to_json(m) for m in f.matrices]}


def graded_map_from_json(field: Field, data: dict, dims_in, dims_out) -> GradedMap:
    mats = data.get("degrees", [])
    return GradedMap(
        [matrix_from_json(field, m, "map[%d]" % n, dims_out[n], dims_in[n]) for n, m in enumerate(mats)],
        name=data.get("name", ""),
    )


__all__ = [
    "dumps", "matrix_to_json", "matrix_from_json", "hopf_to_json", "hopf_from_json",
    "named_characters", "named_grouplikes", "module_to_json", "module_from_json",
    "cyclic_module_to_json", "cyclic_module_from_json", "graded_map_to_json", "graded_map_from_json",
]

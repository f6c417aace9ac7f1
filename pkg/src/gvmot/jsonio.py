"""Strict JSON schemas for every document kind the CLI accepts or emits.

All documents carry {"v": 1, "kind": ...}; unknown fields are rejected so a
typo cannot silently change mathematical input.  Every number in transit is
an integer or a rational string "p/q"; nothing is ever parsed as a float.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import motives
from .counting import CentralCharge, ClassLattice, EvalModel, NumClass
from .errors import SchemaError
from .gwseries import GVTable, GWSeries
from .laurent import LaurentPoly, RationalFn
from .lefschetz import BispinContent, GradedNilpotent, JordanCensus
from .stacks import StackClass

SCHEMA_VERSION = 1

KINDS = (
    "bispin",
    "graded_nilpotent",
    "betti_variety",
    "motive",
    "stack_class",
    "count_model",
    "gv_table",
    "gw_series",
)


def _require(obj: Any, cls, where: str):
    if not isinstance(obj, cls):
        raise SchemaError(f"{where}: expected {cls.__name__}, got {type(obj).__name__}")
    return obj


def _int(obj: Any, where: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(f"{where}: expected an integer")
    return obj


def _fraction(obj: Any, where: str) -> Fraction:
    if isinstance(obj, bool):
        raise SchemaError(f"{where}: expected an integer or rational string")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{where}: bad rational {obj!r}") from exc
    raise SchemaError(f"{where}: expected an integer or rational string")


def _fields(obj: dict, where: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    _require(obj, dict, where)
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise SchemaError(f"{where}: unknown fields {sorted(unknown)}")
    missing = [f for f in required if f not in obj]
    if missing:
        raise SchemaError(f"{where}: missing fields {missing}")
    return obj


def fraction_str(f: Fraction) -> str:
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


# -- polynomials ----------------------------------------------------------------


def poly_to_json(p: LaurentPoly) -> list[list]:
    terms = sorted(p.items(), key=lambda kv: (-(kv[0][0] + 2 * kv[0][1]), kv[0]))
    return [[a, b, str(c)] for (a, b), c in terms]


def poly_from_json(doc: Any, where: str = "poly") -> LaurentPoly:
    _require(doc, list, where)
    terms: dict[tuple[int, int], int] = {}
    for i, triple in enumerate(doc):
        _require(triple, list, f"{where}[{i}]")
        if len(triple) != 3:
            raise SchemaError(f"{where}[{i}]: expected [a, b, coeff]")
        a = _int(triple[0], f"{where}[{i}].a")
        b = _int(triple[1], f"{where}[{i}].b")
        c = _fraction(triple[2], f"{where}[{i}].coeff")
        if c.denominator != 1:
            raise SchemaError(f"{where}[{i}]: polynomial coefficients are integers")
        terms[(a, b)] = terms.get((a, b), 0) + int(c)
    try:
        return LaurentPoly(terms)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def rational_fn_to_json(r: RationalFn) -> dict:
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def rational_fn_from_json(doc: Any, where: str = "coeff") -> RationalFn:
    doc = _fields(doc, where, ("num", "den"))
    num = poly_from_json(doc["num"], f"{where}.num")
    den = poly_from_json(doc["den"], f"{where}.den")
    if den.is_zero():
        raise SchemaError(f"{where}: zero denominator")
    return RationalFn(num, den)


# -- censuses and bispin content --------------------------------------------------


def census_to_json(c: JordanCensus) -> list[list[int]]:
    return [[alpha, l, n] for (alpha, l), n in c.items()]


def census_from_json(doc: Any, where: str = "census") -> JordanCensus:
    _require(doc, list, where)
    cells: dict[tuple[int, int], int] = {}
    for i, triple in enumerate(doc):
        _require(triple, list, f"{where}[{i}]")
        if len(triple) != 3:
            raise SchemaError(f"{where}[{i}]: expected [alpha, l, count]")
        alpha = _int(triple[0], f"{where}[{i}].alpha")
        l = _int(triple[1], f"{where}[{i}].l")
        n = _int(triple[2], f"{where}[{i}].count")
        if l < 1:
            raise SchemaError(f"{where}[{i}]: cell size must be positive")
        cells[(alpha, l)] = cells.get((alpha, l), 0) + n
    return JordanCensus(cells)


def bispin_from_json(doc: Any, where: str = "content") -> BispinContent:
    _require(doc, list, where)
    mult: dict[tuple[int, int], int] = {}
    for i, triple in enumerate(doc):
        _require(triple, list, f"{where}[{i}]")
        if len(triple) != 3:
            raise SchemaError(f"{where}[{i}]: expected [twoJL, twoJR, mult]")
        jl = _int(triple[0], f"{where}[{i}].twoJL")
        jr = _int(triple[1], f"{where}[{i}].twoJR")
        m = _int(triple[2], f"{where}[{i}].mult")
        if jl < 0 or jr < 0:
            raise SchemaError(f"{where}[{i}]: doubled spins are nonnegative")
        mult[(jl, jr)] = mult.get((jl, jr), 0) + m
    return BispinContent(mult)


def graded_nilpotent_from_json(doc: dict, where: str = "graded_nilpotent") -> GradedNilpotent:
    dims_doc = _require(doc.get("dims"), dict, f"{where}.dims")
    maps_doc = _require(doc.get("maps", {}), dict, f"{where}.maps")
    dims = {}
    for key, value in dims_doc.items():
        try:
            degree = int(key)
        except ValueError as exc:
            raise SchemaError(f"{where}.dims: bad degree key {key!r}") from exc
        dims[degree] = _int(value, f"{where}.dims[{key}]")
    maps = {}
    for key, rows in maps_doc.items():
        try:
            degree = int(key)
        except ValueError as exc:
            raise SchemaError(f"{where}.maps: bad degree key {key!r}") from exc
        _require(rows, list, f"{where}.maps[{key}]")
        maps[degree] = [
            [_fraction(c, f"{where}.maps[{key}]") for c in _require(row, list, f"{where}.maps[{key}]")]
            for row in rows
        ]
    return GradedNilpotent(dims, maps)


# -- motive expressions ------------------------------------------------------------


def abs_motive_from_json(doc: Any, where: str = "abs") -> motives.AbsMotive:
    _require(doc, dict, where)
    if "group" in doc:
        doc = _fields(doc, where, ("group",), ("n",))
        group = doc["group"]
        if group == "point":
            return motives.AbsMotive.point()
        if group == "affine_line":
            return motives.AbsMotive.affine_line()
        if group == "gm":
            return motives.AbsMotive.multiplicative_group()
        if group == "gl":
            return motives.AbsMotive.general_linear(_int(doc.get("n"), f"{where}.n"))
        raise SchemaError(f"{where}: unknown group {group!r}")
    doc = _fields(doc, where, ("poly",), ("name",))
    poly = poly_from_json(doc["poly"], f"{where}.poly")
    name = doc.get("name")
    if name is not None:
        _require(name, str, f"{where}.name")
    try:
        return motives.AbsMotive(poly, name)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def motive_from_json(doc: Any, where: str = "expr") -> motives.MotiveExpr:
    _require(doc, dict, where)
    kind = doc.get("kind")
    if kind == "atom":
        doc = _fields(doc, where, ("kind", "name", "dim", "census"))
        return motives.Atom(
            name=_require(doc["name"], str, f"{where}.name"),
            dim=_int(doc["dim"], f"{where}.dim"),
            census=census_from_json(doc["census"], f"{where}.census"),
        )
    if kind == "betti":
        doc = _fields(doc, where, ("kind", "bettis", "dim"))
        bettis = [_int(b, f"{where}.bettis") for b in _require(doc["bettis"], list, f"{where}.bettis")]
        return motives.smooth_from_betti(bettis, _int(doc["dim"], f"{where}.dim"))
    if kind == "betti_over_point":
        doc = _fields(doc, where, ("kind", "bettis"))
        bettis = [_int(b, f"{where}.bettis") for b in _require(doc["bettis"], list, f"{where}.bettis")]
        return motives.over_point_from_betti(bettis)
    if kind == "sum":
        doc = _fields(doc, where, ("kind", "terms"))
        terms = _require(doc["terms"], list, f"{where}.terms")
        return motives.Sum(tuple(motive_from_json(t, f"{where}.terms[{i}]") for i, t in enumerate(terms)))
    if kind == "diff":
        doc = _fields(doc, where, ("kind", "left", "right"))
        return motives.Diff(
            motive_from_json(doc["left"], f"{where}.left"),
            motive_from_json(doc["right"], f"{where}.right"),
        )
    if kind == "int_scale":
        doc = _fields(doc, where, ("kind", "factor", "expr"))
        return motives.IntScale(_int(doc["factor"], f"{where}.factor"), motive_from_json(doc["expr"], f"{where}.expr"))
    if kind == "abs_product":
        doc = _fields(doc, where, ("kind", "abs", "expr"))
        return motives.AbsProduct(abs_motive_from_json(doc["abs"], f"{where}.abs"), motive_from_json(doc["expr"], f"{where}.expr"))
    if kind == "proj_bundle":
        doc = _fields(doc, where, ("kind", "expr", "fiber_rank"))
        return motives.ProjBundle(motive_from_json(doc["expr"], f"{where}.expr"), _int(doc["fiber_rank"], f"{where}.fiber_rank"))
    if kind == "blow_up":
        doc = _fields(doc, where, ("kind", "ambient", "center", "codim"))
        return motives.BlowUpRel(
            ambient=motive_from_json(doc["ambient"], f"{where}.ambient"),
            center=motive_from_json(doc["center"], f"{where}.center"),
            codim=_int(doc["codim"], f"{where}.codim"),
        )
    if kind == "fibration":
        doc = _fields(doc, where, ("kind", "expr", "fiber"))
        return motives.Fibration(motive_from_json(doc["expr"], f"{where}.expr"), abs_motive_from_json(doc["fiber"], f"{where}.fiber"))
    if kind == "finite_push":
        doc = _fields(doc, where, ("kind", "expr"))
        return motives.FinitePush(motive_from_json(doc["expr"], f"{where}.expr"))
    raise SchemaError(f"{where}: unknown expression kind {kind!r}")


# -- stack classes -----------------------------------------------------------------


def stack_class_from_json(doc: Any, where: str = "parts") -> StackClass:
    _require(doc, list, where)
    parts = []
    for i, part in enumerate(doc):
        part = _fields(part, f"{where}[{i}]", ("coeff", "expr"))
        coeff = rational_fn_from_json(part["coeff"], f"{where}[{i}].coeff")
        expr = motive_from_json(part["expr"], f"{where}[{i}].expr")
        parts.append((coeff, expr))
    return StackClass(parts)


# -- counting model -----------------------------------------------------------------


def class_key(v: NumClass) -> str:
    return ",".join(str(b) for b in (*v.beta, v.k))


def class_from_key(key: str, rank: int, where: str) -> NumClass:
    pieces = key.split(",")
    if len(pieces) != rank + 1:
        raise SchemaError(f"{where}: class key {key!r} needs {rank} beta parts plus k")
    try:
        numbers = [int(p) for p in pieces]
    except ValueError as exc:
        raise SchemaError(f"{where}: bad class key {key!r}") from exc
    return NumClass(tuple(numbers[:-1]), numbers[-1])


def class_from_list(doc: Any, rank: int, where: str) -> NumClass:
    _require(doc, list, where)
    if len(doc) != rank + 1:
        raise SchemaError(f"{where}: class needs {rank} beta parts plus k")
    numbers = [_int(x, where) for x in doc]
    return NumClass(tuple(numbers[:-1]), numbers[-1])


def count_model_from_json(doc: dict, where: str = "count_model") -> tuple[ClassLattice, CentralCharge, EvalModel]:
    lattice_doc = _fields(doc["lattice"], f"{where}.lattice", ("rank", "generators"))
    rank = _int(lattice_doc["rank"], f"{where}.lattice.rank")
    generators = []
    for i, g in enumerate(_require(lattice_doc["generators"], list, f"{where}.lattice.generators")):
        _require(g, list, f"{where}.lattice.generators[{i}]")
        generators.append(tuple(_int(c, f"{where}.lattice.generators[{i}]") for c in g))
    try:
        lattice = ClassLattice(rank, generators)
    except ValueError as exc:
        raise SchemaError(f"{where}.lattice: {exc}") from exc

    charge_doc = _fields(doc["charge"], f"{where}.charge", ("B", "omega"))
    b_field = [_fraction(x, f"{where}.charge.B") for x in _require(charge_doc["B"], list, f"{where}.charge.B")]
    omega = [_fraction(x, f"{where}.charge.omega") for x in _require(charge_doc["omega"], list, f"{where}.charge.omega")]
    if len(b_field) != rank or len(omega) != rank:
        raise SchemaError(f"{where}.charge: B and omega must have length {rank}")
    charge = CentralCharge(b_field, omega)
    lattice.check_positive(charge.omega)

    atoms_doc = _require(doc["atoms"], dict, f"{where}.atoms")
    atoms = {}
    for key, parts in atoms_doc.items():
        v = class_from_key(key, rank, f"{where}.atoms")
        atoms[v] = stack_class_from_json(parts, f"{where}.atoms[{key}]")

    defects = []
    for i, triple in enumerate(_require(doc.get("ext_defect", []), list, f"{where}.ext_defect")):
        _require(triple, list, f"{where}.ext_defect[{i}]")
        if len(triple) != 3:
            raise SchemaError(f"{where}.ext_defect[{i}]: expected [v1, v2, e]")
        v1 = class_from_list(triple[0], rank, f"{where}.ext_defect[{i}][0]")
        v2 = class_from_list(triple[1], rank, f"{where}.ext_defect[{i}][1]")
        defects.append((v1, v2, _int(triple[2], f"{where}.ext_defect[{i}][2]")))
    model = EvalModel(atoms, defects)
    return lattice, charge, model


# -- GV tables and GW series ----------------------------------------------------------


def gv_table_from_json(doc: dict, where: str = "gv_table") -> GVTable:
    cuts = _fields(doc["cuts"], f"{where}.cuts", ("genus", "degree", "omega"))
    omega = [_fraction(x, f"{where}.cuts.omega") for x in _require(cuts["omega"], list, f"{where}.cuts.omega")]
    entries = {}
    for i, triple in enumerate(_require(doc["entries"], list, f"{where}.entries")):
        _require(triple, list, f"{where}.entries[{i}]")
        if len(triple) != 3:
            raise SchemaError(f"{where}.entries[{i}]: expected [g, beta, n]")
        g = _int(triple[0], f"{where}.entries[{i}].g")
        beta = tuple(_int(b, f"{where}.entries[{i}].beta") for b in _require(triple[1], list, f"{where}.entries[{i}].beta"))
        n = _int(triple[2], f"{where}.entries[{i}].n")
        entries[(g, beta)] = entries.get((g, beta), 0) + n
    try:
        return GVTable(
            entries,
            genus_max=_int(cuts["genus"], f"{where}.cuts.genus"),
            degree_max=_fraction(cuts["degree"], f"{where}.cuts.degree"),
            omega=omega,
        )
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def gv_table_to_json(table: GVTable) -> dict:
    entries = [[g, list(beta), n] for (g, beta), n in sorted(table.entries.items())]
    return {
        "v": SCHEMA_VERSION,
        "kind": "gv_table",
        "entries": entries,
        "cuts": {
            "genus": table.genus_max,
            "degree": fraction_str(table.degree_max),
            "omega": [fraction_str(w) for w in table.omega],
        },
    }


def gw_series_from_json(doc: dict, where: str = "gw_series") -> GWSeries:
    cuts = _fields(doc["cuts"], f"{where}.cuts", ("degree", "lambda", "omega"))
    omega = [_fraction(x, f"{where}.cuts.omega") for x in _require(cuts["omega"], list, f"{where}.cuts.omega")]
    coeffs = {}
    for i, triple in enumerate(_require(doc["coeffs"], list, f"{where}.coeffs")):
        _require(triple, list, f"{where}.coeffs[{i}]")
        if len(triple) != 3:
            raise SchemaError(f"{where}.coeffs[{i}]: expected [beta, lambda, coeff]")
        beta = tuple(_int(b, f"{where}.coeffs[{i}].beta") for b in _require(triple[0], list, f"{where}.coeffs[{i}].beta"))
        lam = _int(triple[1], f"{where}.coeffs[{i}].lambda")
        c = _fraction(triple[2], f"{where}.coeffs[{i}].coeff")
        key = (beta, lam)
        coeffs[key] = coeffs.get(key, Fraction(0)) + c
    try:
        return GWSeries(
            coeffs,
            degree_max=_fraction(cuts["degree"], f"{where}.cuts.degree"),
            lambda_max=_int(cuts["lambda"], f"{where}.cuts.lambda"),
            omega=omega,
        )
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def gw_series_to_json(series: GWSeries) -> dict:
    coeffs = [
        [list(beta), lam, fraction_str(c)]
        for (beta, lam), c in sorted(series.coeffs.items())
    ]
    return {
        "v": SCHEMA_VERSION,
        "kind": "gw_series",
        "coeffs": coeffs,
        "cuts": {
            "degree": fraction_str(series.degree_max),
            "lambda": series.lambda_max,
            "omega": [fraction_str(w) for w in series.omega],
        },
    }


# -- top-level documents ----------------------------------------------------------------

_PAYLOAD_FIELDS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "bispin": (("content",), ()),
    "graded_nilpotent": (("dims",), ("maps",)),
    "betti_variety": (("bettis", "dim"), ()),
    "motive": (("expr",), ()),
    "stack_class": (("parts",), ()),
    "count_model": (("lattice", "charge", "atoms"), ("ext_defect",)),
    "gv_table": (("entries", "cuts"), ()),
    "gw_series": (("coeffs", "cuts"), ()),
}


def parse_document(doc: Any) -> tuple[str, Any]:
    """Validate the envelope and parse the payload; returns (kind, object)."""
    _require(doc, dict, "document")
    if doc.get("v") != SCHEMA_VERSION:
        raise SchemaError(f"document: schema version must be {SCHEMA_VERSION}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"document: unknown kind {kind!r}")
    required, optional = _PAYLOAD_FIELDS[kind]
    _fields(doc, "document", ("v", "kind") + required, optional + ("name", "note"))

    if kind == "bispin":
        return kind, bispin_from_json(doc["content"])
    if kind == "graded_nilpotent":
        return kind, graded_nilpotent_from_json(doc)
    if kind == "betti_variety":
        bettis = [_int(b, "betti_variety.bettis") for b in _require(doc["bettis"], list, "betti_variety.bettis")]
        return kind, motives.smooth_from_betti(bettis, _int(doc["dim"], "betti_variety.dim"))
    if kind == "motive":
        return kind, motive_from_json(doc["expr"])
    if kind == "stack_class":
        return kind, stack_class_from_json(doc["parts"])
    if kind == "count_model":
        return kind, count_model_from_json(doc)
    if kind == "gv_table":
        return kind, gv_table_from_json(doc)
    if kind == "gw_series":
        return kind, gw_series_from_json(doc)
    raise AssertionError("unreachable")


def load_path(path: str) -> tuple[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except FileNotFoundError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    return parse_document(doc)


def dump_json(doc: Any) -> str:
    """Deterministic rendering: sorted keys, no whitespace drift."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)

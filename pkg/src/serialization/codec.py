"""JSON shapes of every value the toolkit reads or prints"""

import json
from fractions import Fraction

from src.bost_connes.crossed_product import BCElem, RationalBCElem
from src.cyclotomic.polynomials import IntPoly
from src.cyclotomic.qz import QZ
from src.dynamical.graded_endo import GradedEndo
from src.equivariant.bold_k0 import BoldK0Elem
from src.equivariant.orbit_sum import OrbitSum
from src.expectation.hodge import HodgeTable
from src.group_ring.group_ring import GroupRingElem
from src.scissors.assembler import AssemblerPresentation
from src.utils.errors import BostConnesError, SchemaError
from src.witt.truncation import TruncationSet
from src.witt.witt_vector import WittVector


def dumps(payload, pretty=False):
    """Compact JSON in insertion order (indented when pretty)"""
    if pretty:
        return json.dumps(payload, indent=2)
    return json.dumps(payload, separators=(",", ":"))


def loads(text, field="payload"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(field, f"invalid JSON ({exc.msg} at position {exc.pos})") from None


# Field helpers

def _expect(value, kind, field):
    if kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        name = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise SchemaError(field, f"expected {name}, got {type(value).__name__}")
    return value


def _key(obj, name, field):
    _expect(obj, dict, field)
    if name not in obj:
        raise SchemaError(f"{field}.{name}", "missing")
    return obj[name]


def _positive(value, field):
    _expect(value, int, field)
    if value < 1:
        raise SchemaError(field, "must be a positive integer")
    return value


def _int_key(text, field):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise SchemaError(field, f"key {text!r} is not an integer") from None


def _wrap(field, build):
    # Domain validation inside constructors reports the field it came from
    try:
        return build()
    except SchemaError:
        raise
    except BostConnesError as exc:
        raise SchemaError(field, str(exc)) from None


# QZ and polynomials

def encode_qz(r):
    return str(r)


def decode_qz(text, field="r"):
    _expect(text, str, field)
    return _wrap(field, lambda: QZ.parse(text))


def encode_poly(p):
    return p.to_list()


def decode_poly(payload, field="poly"):
    _expect(payload, list, field)
    for i, c in enumerate(payload):
        _expect(c, int, f"{field}[{i}]")
    return IntPoly(tuple(payload))


def encode_factorization(f):
    return {
        "zero_mult": f.zero_mult,
        "cyclo": {str(d): m for d, m in sorted(f.cyclo.items())},
        "remainder": encode_poly(f.remainder),
    }


# Group ring

def _encode_coefficient(c, rational):
    if rational:
        c = Fraction(c)
        return f"{c.numerator}/{c.denominator}"
    return c


def encode_group_ring(x):
    return [{"r": encode_qz(r), "c": _encode_coefficient(c, x.rational)} for r, c in x.terms]


def decode_group_ring(payload, field="elem"):
    """
    Parse [{"r": "num/den", "c": int or "p/q"}, ...]

    Any string coefficient selects rational mode for the whole element.
    """
    _expect(payload, list, field)
    mapping, rational = {}, False
    for i, item in enumerate(payload):
        where = f"{field}[{i}]"
        r = decode_qz(_key(item, "r", where), f"{where}.r")
        c = _key(item, "c", where)
        if isinstance(c, str):
            try:
                c = Fraction(c)
            except (ValueError, ZeroDivisionError):
                raise SchemaError(f"{where}.c", f"cannot parse {c!r} as p/q") from None
            rational = True
        else:
            _expect(c, int, f"{where}.c")
        mapping[r] = mapping.get(r, 0) + c
    return _wrap(field, lambda: GroupRingElem.from_dict(mapping, rational))


def encode_membership(result):
    return {
        "member": result.member,
        "coefficients": {str(d): a for d, a in sorted(result.coefficients.items())},
        "reason": result.reason,
    }


# Normal forms

def encode_normal_form(u, encode_coefficient=encode_group_ring):
    return [{"a": a, "b": b, "x": encode_coefficient(x)} for a, x, b in u.terms]


def _decode_terms(payload, field, decode_coefficient):
    _expect(payload, list, field)
    triples = []
    for i, item in enumerate(payload):
        where = f"{field}[{i}]"
        a = _positive(_key(item, "a", where), f"{where}.a")
        b = _positive(_key(item, "b", where), f"{where}.b")
        x = decode_coefficient(_key(item, "x", where), f"{where}.x")
        triples.append((a, x, b))
    return triples


def decode_bc(payload, field="elem"):
    triples = _decode_terms(payload, field, decode_group_ring)
    if any(x.rational for _, x, _ in triples):
        return _wrap(field, lambda: RationalBCElem.from_terms(triples))
    return _wrap(field, lambda: BCElem.from_terms(triples))


# Orbit sums

def encode_orbit_sum(x):
    return {"orbits": {str(d): m for d, m in x.orbits}}


def decode_orbit_sum(payload, field="elem"):
    orbits = _key(payload, "orbits", field)
    _expect(orbits, dict, f"{field}.orbits")
    mapping = {}
    for d, m in orbits.items():
        where = f"{field}.orbits.{d}"
        _expect(m, int, where)
        mapping[_int_key(d, where)] = m
    return _wrap(field, lambda: OrbitSum.from_dict(mapping))


def decode_bold(payload, field="elem"):
    return _wrap(field, lambda: BoldK0Elem.from_terms(_decode_terms(payload, field, decode_orbit_sum)))


# Witt vectors

def encode_truncation(trunc):
    return list(trunc)


def decode_truncation(payload, field="trunc"):
    """A list of divisors, or a single integer N meaning the divisors of N"""
    if isinstance(payload, int) and not isinstance(payload, bool):
        return _wrap(field, lambda: TruncationSet.of_level(_positive(payload, field)))
    _expect(payload, list, field)
    for i, d in enumerate(payload):
        _positive(d, f"{field}[{i}]")
    return _wrap(field, lambda: TruncationSet(tuple(payload)))


def _encode_int_mapping(mapping):
    return {str(k): v for k, v in sorted(mapping.items())}


def encode_witt(w):
    return {"trunc": encode_truncation(w.trunc), "coords": _encode_int_mapping(w.as_dict())}


def decode_witt(payload, field="elem"):
    trunc = decode_truncation(_key(payload, "trunc", field), f"{field}.trunc")
    coords = _key(payload, "coords", field)
    _expect(coords, dict, f"{field}.coords")
    mapping = {}
    for d, x in coords.items():
        where = f"{field}.coords.{d}"
        _expect(x, int, where)
        key = _int_key(d, where)
        if key not in trunc:
            raise SchemaError(where, f"{key} is outside the truncation set")
        mapping[key] = x
    return WittVector.from_dict(trunc, mapping)


def encode_ghosts(ghosts):
    return _encode_int_mapping(ghosts)


def decode_ghosts(payload, field="ghosts"):
    _expect(payload, dict, field)
    out = {}
    for m, g in payload.items():
        where = f"{field}.{m}"
        _expect(g, int, where)
        out[_int_key(m, where)] = g
    return out


# Graded endomorphisms

def encode_graded(g):
    return {"blocks": [{"degree": k, "matrix": m} for k, m in g.to_lists()]}


def decode_graded(payload, field="elem"):
    blocks = _key(payload, "blocks", field)
    _expect(blocks, list, f"{field}.blocks")
    parsed = []
    for i, block in enumerate(blocks):
        where = f"{field}.blocks[{i}]"
        degree = _key(block, "degree", where)
        _expect(degree, int, f"{where}.degree")
        matrix = _key(block, "matrix", where)
        _expect(matrix, list, f"{where}.matrix")
        for j, row in enumerate(matrix):
            _expect(row, list, f"{where}.matrix[{j}]")
            if len(row) != len(matrix):
                raise SchemaError(f"{where}.matrix[{j}]", "matrix must be square")
            for k, v in enumerate(row):
                _expect(v, int, f"{where}.matrix[{j}][{k}]")
        parsed.append((degree, matrix))
    return _wrap(field, lambda: GradedEndo(tuple(parsed)))


def encode_certificate(certificate):
    return {
        "quasi_unipotent": certificate.passed,
        "degrees": [
            {"degree": k, **encode_factorization(f)}
            for k, f in certificate.factorizations.items()
        ],
    }


# Hodge tables

def encode_hodge_table(table):
    return [{"p": p, "q": q, "x": encode_group_ring(x)} for (p, q), x in table.entries]


def decode_hodge_table(payload, field="elem"):
    _expect(payload, list, field)
    entries = []
    for i, item in enumerate(payload):
        where = f"{field}[{i}]"
        p = _key(item, "p", where)
        q = _key(item, "q", where)
        _expect(p, int, f"{where}.p")
        _expect(q, int, f"{where}.q")
        entries.append(((p, q), decode_group_ring(_key(item, "x", where), f"{where}.x")))
    return _wrap(field, lambda: HodgeTable(tuple(entries)))


# Assemblers

def encode_presentation(p):
    return {
        "objects": list(p.objects),
        "families": [{"target": t, "parts": list(parts)} for t, parts in p.families],
    }


def decode_presentation(payload, field="elem"):
    objects = _key(payload, "objects", field)
    _expect(objects, list, f"{field}.objects")
    for i, label in enumerate(objects):
        _expect(label, str, f"{field}.objects[{i}]")
    families = payload.get("families", [])
    _expect(families, list, f"{field}.families")
    parsed = []
    for i, family in enumerate(families):
        where = f"{field}.families[{i}]"
        target = _key(family, "target", where)
        _expect(target, str, f"{where}.target")
        parts = _key(family, "parts", where)
        _expect(parts, list, f"{where}.parts")
        for j, label in enumerate(parts):
            _expect(label, str, f"{where}.parts[{j}]")
        parsed.append((target, tuple(parts)))
    return _wrap(field, lambda: AssemblerPresentation(tuple(objects), tuple(parsed)))


def encode_k0(k0):
    return {
        "rank": k0.rank,
        "torsion": list(k0.torsion),
        "basis_map": {label: list(v) for label, v in k0.basis_map.items()},
    }

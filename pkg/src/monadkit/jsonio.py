"""JSON document schemas for varieties and monads.

Polynomials travel as expression strings in the shared grammar (integer
literals, declared variables, ``+ - * ^``, parentheses).  Documents carry
a ``schema`` tag and a field descriptor ``{"char": p}`` with 0 meaning the
rationals; a loader may override the field, which is how the same fixture
runs over GF(32003) and over the rationals.  Serialization is canonical
(sorted keys, fixed indentation), so identical inputs give byte-identical
output files.
"""

from __future__ import annotations

import json
from typing import Callable, Optional

from .errors import ParseError, StructureError
from .fields import field_from_char
from .monads import MonadSpec
from .polynomials import PolyRing, format_polynomial
from .varieties import ProjectiveVariety, make_variety

VARIETY_SCHEMA = "variety/1"
MONAD_SCHEMA = "monad/1"


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _require(doc: dict, key: str):
    if key not in doc:
        raise ParseError(f"document is missing the {key!r} key")
    return doc[key]


def variety_from_doc(doc: dict, field=None) -> ProjectiveVariety:
    if doc.get("schema", VARIETY_SCHEMA) != VARIETY_SCHEMA:
        raise ParseError(f"not a variety document: schema {doc.get('schema')!r}")
    N = _require(doc, "N")
    names = _require(doc, "vars")
    if not isinstance(N, int) or not isinstance(names, list):
        raise ParseError("'N' must be an integer and 'vars' a list")
    if field is None:
        field = field_from_char(_require(doc, "field").get("char", 0))
    ring = PolyRing(names, field)
    gens = [ring.parse(s) for s in _require(doc, "generators")]
    return make_variety(
        N,
        gens,
        name=doc.get("name", ""),
        assertions=doc.get("assertions"),
    )


def variety_to_doc(V: ProjectiveVariety) -> dict:
    return {
        "schema": VARIETY_SCHEMA,
        "name": V.name,
        "N": V.N,
        "field": {"char": V.ring.field.char},
        "vars": list(V.ring.names),
        "generators": [format_polynomial(g) for g in V.ideal.gens],
        "assertions": dict(V.assertions),
    }


def monad_from_doc(
    doc: dict,
    resolve_variety: Optional[Callable[[str], ProjectiveVariety]] = None,
    field=None,
) -> MonadSpec:
    if doc.get("schema", MONAD_SCHEMA) != MONAD_SCHEMA:
        raise ParseError(f"not a monad document: schema {doc.get('schema')!r}")
    vref = _require(doc, "variety")
    if isinstance(vref, dict):
        V = variety_from_doc(vref, field=field)
    elif isinstance(vref, str):
        if resolve_variety is None:
            raise ParseError(f"no resolver for variety reference {vref!r}")
        V = resolve_variety(vref)
    else:
        raise ParseError("'variety' must be a name or an inline document")
    ring = V.ring
    a, b, c = (_require(doc, k) for k in ("a", "b", "c"))
    d = _require(doc, "degree")

    def parse_matrix(rows, what):
        out = []
        for row in rows:
            out.append(tuple(ring.parse(s) for s in row))
        return tuple(out)

    A = parse_matrix(doc.get("A", []), "A")
    B = parse_matrix(doc.get("B", []), "B")
    return MonadSpec(variety=V, d=d, A=A, B=B, a=a, b=b, c=c)


def monad_to_doc(M: MonadSpec, variety_ref: Optional[str] = None) -> dict:
    if variety_ref is None and M.variety.name:
        variety_ref = M.variety.name
    return {
        "schema": MONAD_SCHEMA,
        "variety": variety_ref if variety_ref else variety_to_doc(M.variety),
        "degree": M.d,
        "a": M.a,
        "b": M.b,
        "c": M.c,
        "A": [[format_polynomial(e) for e in row] for row in M.A],
        "B": [[format_polynomial(e) for e in row] for row in M.B],
    }


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    return doc

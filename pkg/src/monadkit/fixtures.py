"""Catalog of the JSON fixtures shipped with the package.

Varieties: the diagonal quadric surface in P^3 and its Segre sibling, the
quadric three- and five-folds, the twisted cubic, an elliptic normal
quintic, a cubic threefold, and the Grassmannian of planes in P^5 with its
35 quadric relations.  Monads: the rank-2 examples on the quadric surface
and quadric threefold (including the mixed-entry variants with extra
degeneracy points), the Grassmannian bundle monads, and two deliberately
broken documents used as negative controls.
"""

from __future__ import annotations

from importlib import resources

from .errors import StructureError
from .jsonio import load_document, monad_from_doc, variety_from_doc

_cache: dict = {}


def _data_dir():
    return resources.files("monadkit").joinpath("data")


def list_fixtures() -> list[str]:
    names = []
    for entry in _data_dir().iterdir():
        if entry.name.endswith(".json"):
            names.append(entry.name[: -len(".json")])
    return sorted(names)


def fixture_text(name: str) -> str:
    path = _data_dir().joinpath(name + ".json")
    try:
        return path.read_text()
    except FileNotFoundError:
        raise StructureError(f"no fixture named {name!r}") from None


def fixture_doc(name: str) -> dict:
    return load_document(fixture_text(name))


def load_fixture(name: str, field=None):
    """Load a fixture as a variety or monad; varieties are cached per
    (name, field) so repeated loads share symbolic work."""
    doc = fixture_doc(name)
    schema = doc.get("schema", "")
    if schema.startswith("variety/"):
        key = (name, None if field is None else field.char)
        if key not in _cache:
            _cache[key] = variety_from_doc(doc, field=field)
        return _cache[key]
    if schema.startswith("monad/"):
        return monad_from_doc(
            doc,
            resolve_variety=lambda ref: load_fixture(ref, field=field),
            field=field,
        )
    raise StructureError(f"fixture {name!r} has unknown schema {schema!r}")


def describe(name: str) -> str:
    doc = fixture_doc(name)
    schema = doc.get("schema", "?")
    if schema.startswith("variety/"):
        return f"{name}: variety, N={doc.get('N')}, {len(doc.get('generators', []))} generators"
    return (
        f"{name}: monad on {doc.get('variety') if isinstance(doc.get('variety'), str) else 'inline variety'}, "
        f"shape ({doc.get('a')}, {doc.get('b')}, {doc.get('c')}), degree {doc.get('degree')}"
    )

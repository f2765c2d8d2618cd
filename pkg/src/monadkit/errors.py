"""Exception hierarchy shared across the package."""


class MonadkitError(Exception):
    """Base class for all package-specific errors."""


class StructureError(MonadkitError):
    """Mismatched rings, fields, shapes, or malformed input documents."""


class ParseError(StructureError):
    """Invalid polynomial expression or JSON document."""


class RefusalError(MonadkitError):
    """An operation declined to run: violated precondition or size cap."""


class SearchError(MonadkitError):
    """A randomized search exhausted its retry budget."""

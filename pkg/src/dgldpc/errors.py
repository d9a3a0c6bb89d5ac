"""Exception taxonomy shared by all modules."""


class InputDomainError(ValueError):
    """An argument is outside its mathematical domain (e.g. p not in [0,1])."""


class CapacityError(ValueError):
    """A request exceeds a hard enumeration budget; the message names the limit."""


class CatalogError(LookupError):
    """Unknown builtin code name; the message lists the catalog."""


class SpecParseError(ValueError):
    """A .gmat, ensemble spec or search spec file is malformed."""


class ConfigError(ValueError):
    """An optimizer configuration admits no feasible candidate."""

"""Exception types shared across the pipeline."""


class EventmonError(Exception):
    """Base class for all pipeline errors."""


# --- ingest ---

class NetworkError(EventmonError):
    """Live article fetch failed (connection, timeout, HTTP error)."""


class FormatError(EventmonError):
    """Upstream or remote response could not be parsed."""


class FixtureNotFound(EventmonError):
    """Fixture path does not exist."""


class EmptyTitle(EventmonError):
    """Title is empty after normalization."""


# --- embed ---

class EmptyText(EventmonError):
    """Cannot embed empty text."""


class DimensionMismatch(EventmonError):
    """Vector length differs from the configured dimension."""


class RemoteUnavailable(EventmonError):
    """A remote backend (embedder or linker) could not be reached."""


# --- classify ---

class NoExamples(EventmonError):
    """Prototype fitting needs at least one labeled example."""


class OosInTraining(EventmonError):
    """Out-of-scope examples cannot seed a prototype."""


# --- linking ---

class NotFound(EventmonError):
    """Wikipedia title has no Wikidata mapping."""


# --- graph ---

class OosHasNoType(EventmonError):
    """Out-of-scope mentions carry no Wikidata event-type QID."""


# --- viz ---

class DegenerateInput(EventmonError):
    """PCA needs at least two distinct vectors."""


class NoConvergence(EventmonError):
    """Power iteration did not converge within the iteration cap."""

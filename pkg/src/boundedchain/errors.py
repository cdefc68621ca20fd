"""Exception hierarchy shared across the package.

Keeping these distinct lets the CLI map failures to exit codes without
string matching: usage and input problems exit 1, resource limits are
reported as a solver status, and consistency errors are never caught.
"""


class BoundedChainError(Exception):
    """Base class for everything raised deliberately by this package."""


class UsageError(BoundedChainError):
    """An API or CLI call violated a precondition (bad algorithm, bad dim, ...)."""


class InputError(BoundedChainError):
    """A file or in-memory instance is malformed."""


class ResourceLimitError(BoundedChainError):
    """An enumeration or search exceeded its configured budget."""


class ConsistencyError(BoundedChainError):
    """Post-solve verification failed; indicates a bug, not bad input."""

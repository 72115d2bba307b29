"""Exception types shared across the package."""


class NavlabError(Exception):
    """Base class for all package-specific errors."""


class InvalidPoseError(NavlabError):
    """Pose lies on an obstacle cell or outside the map."""


class DegenerateCloudError(NavlabError):
    """Point cloud too small for alignment."""


class NoCorrespondenceError(NavlabError):
    """No point pairs survived the correspondence distance gate."""


class InvalidMoveError(NavlabError):
    """Traversal update between cells that are not 4-adjacent."""


class NoPathError(NavlabError):
    """Goal unreachable on the search graph (only via explicit masking)."""


class UnreachableError(NavlabError):
    """No route between two locations on the ground-truth map."""


class NoFrontierError(NavlabError):
    """Frontier sampling requested from an empty frontier set."""


class BudgetExceededError(NavlabError):
    """Monte-Carlo exploration exceeded its hard action budget."""


class GenerationFailedError(NavlabError):
    """Procedural map generation could not satisfy the spec constraints."""


class UndefinedMetricError(NavlabError):
    """Metric has no defined value for the given inputs."""

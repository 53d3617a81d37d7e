"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """A parameter or configuration value is outside its documented range."""


class BudgetExhausted(RuntimeError):
    """An evaluation was requested after the fitness-evaluation budget ran out."""


class TopologyDegenerate(RuntimeError):
    """Fewer than two alive agents remain; no communication graph exists."""

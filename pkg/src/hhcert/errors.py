class ConfigurationError(ValueError):
    """Bad catalog name, parameter, or option combination."""


class DomainError(ValueError):
    """An argument lies outside the region where a quantity is defined."""


class IntegrationError(RuntimeError):
    """The reference integrator failed to reach its tolerance."""

class CapExceededError(RuntimeError):
    """Raised when a resource cap (matrix dimension, search size) is exceeded."""

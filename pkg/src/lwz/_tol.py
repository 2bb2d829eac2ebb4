import os


def tol(value):
    """Scale a default tolerance by the ``LWZ_TOL`` environment variable."""
    factor = os.environ.get("LWZ_TOL")
    if not factor:
        return value
    return value * float(factor)

"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed graph file, fourientation string or argument."""


class SizeGuardError(ValueError):
    """An exhaustive enumeration was requested on a graph that is too large."""


class InvariantViolation(AssertionError):
    """A structural property that must always hold was found to fail."""


def check_size(count, limit, what):
    if count > limit:
        raise SizeGuardError(f"{what}: {count} exceeds guard {limit} (raise --max-edges to override)")

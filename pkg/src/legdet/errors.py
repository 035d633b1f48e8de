class InternalError(RuntimeError):
    """Raised when an exact-arithmetic invariant breaks (CRT modulus set
    exhausted, reconstruction mismatch, corrupt scan state).  Distinct from
    ValueError, which always means bad caller input."""

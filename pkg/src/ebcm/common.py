"""Shared numerical conventions."""

TWO_PI = 6.283185307179586476925287

#: Tie-breaking convention for every threshold decision in the package:
#: the step function is 1 at zero.
def theta_step(s: float) -> int:
    """Unit step with theta_step(0) == 1."""
    return 1 if s >= 0.0 else 0

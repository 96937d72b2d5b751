"""Exception types shared across the simulator."""


class SimulationError(Exception):
    """Base class for all simulator errors."""


class MeshError(SimulationError):
    """Invalid or unsupported mesh data (open surface, quads, bad indices)."""


class SceneError(SimulationError):
    """Scene or robot description cannot be instantiated."""


class InterpenetrationError(SceneError):
    """A configuration violates the intersection-free invariant."""

    def __init__(self, message, pairs=None):
        super().__init__(message)
        self.pairs = pairs or []


class SolverStall(SimulationError):
    """Line search collapsed below the minimum step size."""

    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class CcdError(SimulationError):
    """A CCD query started from an already-violated state."""

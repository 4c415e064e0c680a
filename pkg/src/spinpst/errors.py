"""Exception types raised across the package."""


class SpinNetworkError(Exception):
    """Base class for all errors raised by spinpst."""


class InvalidEdge(SpinNetworkError, ValueError):
    """Out-of-range endpoint, self-loop, duplicate pair or non-positive coupling."""


class DisconnectedGraph(SpinNetworkError, ValueError):
    """Some vertex cannot be reached from the reference vertex."""


class QuotientClosureViolation(SpinNetworkError, ArithmeticError):
    """The Hamiltonian does not close on the layer vectors at layer ``k``."""

    def __init__(self, k, residual):
        self.k = k
        self.residual = residual
        super().__init__(
            f"layer {k} is not layer-regular from this reference vertex "
            f"(closure residual {residual:.3e})"
        )


class DegenerateSequence(SpinNetworkError, ValueError):
    """A Jacobi sequence has a non-positive off-diagonal weight."""


class PoleProximity(SpinNetworkError, ZeroDivisionError):
    """The evaluation point lies on (or numerically at) an atom of the measure."""


class InvalidWindow(SpinNetworkError, ValueError):
    """Search or sampling window is empty or negative."""


class ConvergenceFailure(SpinNetworkError, RuntimeError):
    """The rotation eigensolver ran out of sweeps."""


class InvalidTarget(SpinNetworkError, ValueError):
    """Target vertex or layer does not exist in the network."""


class ModeMismatch(SpinNetworkError, ValueError):
    """Operation requires an adjacency-mode network with unit couplings."""

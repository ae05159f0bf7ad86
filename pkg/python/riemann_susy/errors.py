class RiemannSusyError(Exception):
    """base class of every error raised by riemann_susy"""


class KindMismatchError(RiemannSusyError):
    pass


class ParityError(RiemannSusyError):
    pass


class RegistryError(RiemannSusyError):
    pass


class ParseError(RiemannSusyError):
    pass


class TierError(RiemannSusyError):
    """symbolic zero test requested on an expression outside the rational class"""


class UnsupportedOperationError(RiemannSusyError):
    pass


class NonEvolutionaryError(RiemannSusyError):
    pass


class ClosureError(RiemannSusyError):
    def __init__(self, pair, residual):
        super().__init__("bracket {} does not close in the span: residual {}".format(pair, residual))
        self.pair = pair
        self.residual = residual


class SeriesTruncationError(RiemannSusyError):
    pass


class CatalogError(RiemannSusyError):
    pass


class CatastropheError(RiemannSusyError):
    def __init__(self, point, det):
        super().__init__("singular hodograph Jacobian at R={:.6g}, S={:.6g} (det={:.3e})".format(point[0], point[1], det))
        self.point = point
        self.det = det


class NonConvergenceError(RiemannSusyError):
    def __init__(self, msg, trace):
        super().__init__(msg)
        self.trace = trace

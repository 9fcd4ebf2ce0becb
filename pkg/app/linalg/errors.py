import numpy as np


class InversionError(np.linalg.LinAlgError):
    """Base class for numerical failures raised by the inversion kernels."""


class SingularMatrix(InversionError):
    def __init__(self, step: int):
        self.step = step
        super().__init__(f"Matrix is singular: no usable pivot row at elimination step {step}")


class ZeroPivot(InversionError):
    def __init__(self, step: int, pivot: float = 0.0):
        self.step = step
        self.pivot = pivot
        super().__init__(
            f"Leading principal minor is numerically zero at step {step} (pivot={pivot:.3e}). "
            "Use modgauss.invert (row interchanges) or invert_symmetric_robust instead."
        )


class NotPositiveDefinite(InversionError):
    def __init__(self, step: int, value: float = 0.0):
        self.step = step
        self.value = value
        super().__init__(
            f"Matrix is not positive definite: value under the square root at step {step} is {value:.3e}"
        )


class NotSymmetric(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class InvalidArgument(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class GenerationFailed(RuntimeError):
    pass

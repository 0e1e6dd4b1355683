"""
Error hierarchy shared by every package.

InputError subclasses map to CLI exit code 2, NumericalError subclasses to 4.
"""


class SamplerError(Exception):
    """Base class for all toolkit errors"""


# ============== INPUT / CONFIGURATION ==============

class InputError(SamplerError):
    """Bad input data, arguments or configuration"""


class ParseError(InputError):
    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class NonFiniteEntry(InputError):
    pass


class RaggedRows(InputError):
    pass


class InvalidRate(InputError):
    pass


class InvalidGamma(InputError):
    pass


class InvalidSigma(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class RankTooLarge(InputError):
    pass


class TooLarge(InputError):
    pass


class NotStronglyConvex(InputError):
    pass


class ConfigError(InputError):
    pass


class InvalidRadius(InputError):
    pass


# ============== NUMERICAL ==============

class NumericalError(SamplerError):
    """Internal numerical failure"""


class NotSymmetric(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass


# ============== ESTIMATORS / IO ==============

class SamplingAborted(SamplerError):
    """A sampled index set exceeded its size cap (the estimator's Abort branch)"""

    def __init__(self, sample, cap):
        self.sample = sample
        self.cap = cap
        if sample.size == 0:
            message = f"empty sample from universe {sample.universe}"
        else:
            message = f"sample of size {sample.size} from universe {sample.universe} exceeds cap {cap}"
        super().__init__(message)


class ReportWriteError(SamplerError):
    pass

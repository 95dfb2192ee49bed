class ReaderError(Exception):
    exit_code = 2


# usage errors
class UsageError(ReaderError, ValueError):
    exit_code = 2


class ZeroState(UsageError):
    pass


class CutoffExceeded(UsageError):
    pass


class InvalidDelta(UsageError):
    pass


class InvalidThreshold(UsageError):
    pass


class InvalidOverlap(UsageError):
    pass


class DegeneratePhase(UsageError):
    pass


class InvalidArgs(UsageError):
    pass


# device validation
class DeviceError(ReaderError, ValueError):
    exit_code = 3


class NotUnitary(DeviceError):
    pass


class NotUnitDeterminant(DeviceError):
    pass


# io
class OutputError(ReaderError):
    exit_code = 4


# raised when the floor/ceil candidates are both unusable, which the
# closed form rules out for delta in (0, pi]
class Infeasible(ReaderError, RuntimeError):
    exit_code = 1

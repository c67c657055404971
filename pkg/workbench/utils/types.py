class MeasureKind:
    PVM = "PVM"
    POVM = "POVM"


class VerdictStatus:
    Inside = "inside"
    Outside = "outside"
    Indeterminate = "indeterminate"


class DilationStrategy:
    Sequential = "sequential"  # one refinement factor per family, d * prod(N)
    Shared = "shared"  # one common factor for every family, d * lcm(N)


class ExitCode:
    Ok = 0
    Negative = 1
    Usage = 2
    Indeterminate = 3


class OutputFormat:
    Json = "json"

"""Exception taxonomy shared by the whole package."""


class ArrangementError(ValueError):
    """Base class for invalid arrangement input."""


class WrongLength(ArrangementError):
    pass


class PositionOutOfRange(ArrangementError):
    pass


class PairCrossesTwice(ArrangementError):
    def __init__(self, pair, index):
        self.pair = pair
        self.index = index
        super().__init__(f"wires {pair[0]} and {pair[1]} cross a second time at crossing #{index}")


class NTooSmall(ArrangementError):
    pass


class UnknownLine(ArrangementError):
    pass


class MalformedHeader(ArrangementError):
    pass


class WrongResidue(ValueError):
    pass


class NotATriangle(ValueError):
    pass


class ConstructionError(RuntimeError):
    """A construction could not be carried out or failed its own recount."""


class HypothesisNotMet(ConstructionError):
    pass


class ConstructionSelfCheckFailed(ConstructionError):
    pass


class UnknownSeed(KeyError):
    pass


class SeedFailsBound(ConstructionError):
    pass


class SeedUnavailable(ConstructionError):
    pass


class StageFailedBound(ConstructionError):
    def __init__(self, stage, message):
        self.stage = stage
        super().__init__(f"stage {stage}: {message}")


class FeasibilityCeilingExceeded(RuntimeError):
    pass

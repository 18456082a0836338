"""
Exceptions raised by the instanton lab modules.
Everything derives from InstantonLabError so the command line front-end can catch a single type and exit with status 2.
"""


class InstantonLabError(Exception):
    pass


#variety key not in the catalog, or malformed variety string
class UnknownVarietyError(InstantonLabError):
    pass


#two objects living on different catalog varieties were combined
class VarietyMismatchError(InstantonLabError):
    pass


#bundle descriptor could not be parsed for the chosen variety
class DescriptorError(InstantonLabError):
    pass


#a parity or divisibility requirement failed (odd rank, non-integral multiplicity...)
class ParityError(InstantonLabError):
    pass


#inputs contradict each other (negative multiplicities, broken linear relations...)
class InconsistentInputError(InstantonLabError):
    pass


class WindowTooSmallError(InstantonLabError):
    def __init__(self, missing, what="table"):
        self.missing=sorted(set(missing))
        super().__init__(what+" window is missing twists "+", ".join(str(t) for t in self.missing))

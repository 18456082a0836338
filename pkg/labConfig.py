import os

from labErrors import InstantonLabError

BOX_ENV='INSTANTON_LAB_BOX'
DEFAULT_BOX=6
FORMATS=("json", "md")


def defaultBox(environ=None):
    environ=os.environ if environ is None else environ
    text=environ.get(BOX_ENV)
    if text is None or text=="":
        return DEFAULT_BOX
    try:
        return int(text)
    except ValueError:
        raise InstantonLabError(BOX_ENV+" must be an integer, got '"+text+"'")


#"a:b" -> (a, b)
def parseWindow(text):
    if text is None:
        return None
    try:
        low, high=text.split(":")
        return (int(low), int(high))
    except ValueError:
        raise InstantonLabError("window must look like tmin:tmax, got '"+text+"'")


class CliConfig:
    def __init__(self, variety=None, window=None, box=None, fmt="json", jobs=1, verbosity=3):
        self.variety=variety
        self.window=tuple(window) if window is not None else None
        self.box=box if box is not None else defaultBox()
        self.fmt=fmt
        self.jobs=jobs
        self.verbosity=verbosity
        self.validate()

    def validate(self):
        if self.window is not None and self.window[0]>self.window[1]:
            raise InstantonLabError("empty window "+str(self.window))
        if self.box<1:
            raise InstantonLabError("box must be at least 1, got "+str(self.box))
        if self.jobs<1:
            raise InstantonLabError("jobs must be at least 1, got "+str(self.jobs))
        if self.fmt not in FORMATS:
            raise InstantonLabError("unknown output format "+str(self.fmt))
        return self

    @classmethod
    def fromArgs(cls, args):
        fmt="md" if getattr(args, "md", False) else "json"
        #-v lowers the level from WARNING, once per flag
        verbosity=max(1, 3-getattr(args, "verbose", 0))
        return cls(getattr(args, "variety", None), parseWindow(getattr(args, "window", None)), getattr(args, "box", None),
            fmt, getattr(args, "jobs", 1), verbosity)

    def __repr__(self):
        return "CliConfig(variety="+str(self.variety)+", window="+str(self.window)+", box="+str(self.box)+", fmt="+self.fmt+", jobs="+str(self.jobs)+")"

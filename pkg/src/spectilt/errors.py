"""Exception hierarchy shared by all layers; the CLI maps these to exit codes."""


class SpectiltError(Exception):
    exit_code = 4
    code = "internal"

    def __init__(self, message, code=None, hypothesis=None):
        super().__init__(message)
        if code is not None:
            self.code = code
        self.hypothesis = hypothesis

    def to_dict(self):
        d = {"error": type(self).__name__, "code": self.code, "message": str(self)}
        if self.hypothesis:
            d["hypothesis"] = self.hypothesis
        return d


class InputError(SpectiltError):
    """Malformed or mathematically inadmissible input."""

    exit_code = 2
    code = "input"


class HypothesisError(InputError):
    """A stated precondition of a construction fails on the given data."""

    code = "hypothesis"


class BudgetError(SpectiltError):
    """A computation hit a configured cap (pd cap, saturation cap, ...)."""

    exit_code = 3
    code = "budget"


class InvariantError(SpectiltError):
    """Internal consistency check failed; always a bug."""

    exit_code = 4
    code = "invariant"

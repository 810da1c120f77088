class WordError(ValueError):
    """Invalid word argument (empty word, open word where closed required...)."""


class DirectiveError(ValueError):
    pass


class HorizonError(LookupError):
    """A computation needs directive letters or levels beyond what is known."""


class BudgetExceeded(RuntimeError):
    """The prefix budget ran out before the saturation guard was satisfied."""

class TableauError(ValueError):
    """Base class for every error raised by the tableau library."""


class ShapeError(TableauError):
    pass


class ShapeMismatch(TableauError):
    pass


class InputError(TableauError):
    """Malformed user input; `location` pinpoints the offending part or cell."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class WingConditionViolated(TableauError):
    def __init__(self, condition: str, detail: str):
        self.condition = condition
        super().__init__(f"[{condition}] {detail}")


class NotSemistandard(TableauError):
    def __init__(self, cell, detail: str = ""):
        self.cell = cell
        super().__init__(f"not semistandard at cell {cell}" + (f": {detail}" if detail else ""))


class NoNeighbor(TableauError):
    def __init__(self, cell):
        self.cell = cell
        super().__init__(f"hole at {cell} has no right or lower neighbour (outside corner)")


class NotInsideCorner(TableauError):
    def __init__(self, cell):
        self.cell = cell
        super().__init__(f"{cell} is not an inside corner")


class EmptyFiber(TableauError):
    def __init__(self, nu):
        self.nu = nu
        super().__init__(f"no tableau rectifies to shape {nu}")


class BindingMismatch(TableauError):
    def __init__(self, variable, detail: str):
        self.variable = variable
        super().__init__(f"variable {variable!r}: {detail}")


class UnknownExample(TableauError):
    def __init__(self, example_id: str, known):
        self.example_id = example_id
        super().__init__(f"unknown example {example_id!r}; known: {', '.join(sorted(known))}")


class ArithmeticModeError(TableauError):
    pass

"""Exception hierarchy.  Every error raised by the library derives from MidkError."""

from __future__ import annotations


class MidkError(ValueError):
    pass


class AmbientMismatch(MidkError):
    """Two operands live in polynomial rings with a different number of variables."""


class BoundExceeded(MidkError):
    """A desk-scale bound was hit.  ``name`` is the bound key (see midk.bounds)."""

    def __init__(self, name: str, value: int, limit: int, what: str = ""):
        self.name = name
        self.value = value
        self.limit = limit
        msg = f"bound {name} exceeded: {value} > {limit}"
        if what:
            msg += f" ({what})"
        super().__init__(msg)


class NotEquigenerated(MidkError):
    def __init__(self, deg_a: int, deg_b: int):
        self.degrees = (deg_a, deg_b)
        super().__init__(f"ideal is not generated in one degree (found degrees {deg_a} and {deg_b})")


class NotNDEP(MidkError):
    """Raised by ndep_admissible_order when the split I = x_p I_1 + I_2 has I_2 not inside I_1."""

    def __init__(self, witness: tuple, variable: int):
        from midk.monomial import render

        self.witness = witness
        self.variable = variable
        super().__init__(
            f"generator {render(witness)} of I_2 is not in I_1 for the split on x{variable}; "
            "ideal lacks the non-pure dual exchange property"
        )


class HypothesisViolation(MidkError):
    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        super().__init__(f"{condition}: {detail}" if detail else condition)

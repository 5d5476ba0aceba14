"""Monomial orders and their packed-integer encodings.

Every order used here is induced by a linear form on exponent vectors, so a
monomial can be packed into one Python int whose integer order is the
monomial order and whose sum realises monomial multiplication.  The low bits
of the packed int hold the plain exponent vector (with a guard bit per field)
so divisibility is a single subtraction and mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

# bits per exponent field; one guard bit, so exponents stay below 2**15
FIELD = 16
RADIX = 1 << FIELD


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on named variables.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``.  For grevlex and lex,
    ``vars`` lists the variables from largest to smallest.  A block order ranks
    any monomial with a front variable above any without; ties are broken by
    grevlex on ``vars`` (the front block) and then by ``back``.
    """

    kind: str
    vars: Tuple[str, ...]
    back: Optional["MonomialOrder"] = None

    @classmethod
    def grevlex(cls, vars: Sequence[str]) -> "MonomialOrder":
        return cls("grevlex", tuple(vars))

    @classmethod
    def lex(cls, vars: Sequence[str]) -> "MonomialOrder":
        return cls("lex", tuple(vars))

    @classmethod
    def block(cls, front: Sequence[str], back) -> "MonomialOrder":
        if not isinstance(back, MonomialOrder):
            back = cls.grevlex(back)
        if set(front) & set(back.all_vars()):
            raise ValueError("block order needs disjoint variable sets")
        return cls("block", tuple(front), back)

    def all_vars(self) -> Tuple[str, ...]:
        if self.kind == "block":
            return self.vars + self.back.all_vars()
        return self.vars

    def _linear(self, index) -> Tuple[List[int], int]:
        """Coefficients of the order form per ambient index, and its bound."""
        k = len(self.vars)
        coef = {}
        if self.kind == "grevlex":
            # deg * R^k - sum_{t>=1} e_t R^(t-1): the last variable weighs most
            for t, v in enumerate(self.vars):
                coef[index(v)] = RADIX ** k - (RADIX ** (t - 1) if t else 0)
            return coef, RADIX ** (k + 1)
        if self.kind == "lex":
            for t, v in enumerate(self.vars):
                coef[index(v)] = RADIX ** (k - 1 - t)
            return coef, RADIX ** k
        front = MonomialOrder.grevlex(self.vars)
        fcoef, fbound = front._linear(index)
        bcoef, bbound = self.back._linear(index)
        out = {i: c * bbound for i, c in fcoef.items()}
        out.update(bcoef)
        return out, fbound * bbound

    def weights(self, ambient: Sequence[str]) -> List[int]:
        """Packed weight per ambient variable (see module docstring)."""
        ambient = list(ambient)
        if sorted(self.all_vars()) != sorted(ambient):
            raise ValueError(
                f"order variables {self.all_vars()} do not match ring {tuple(ambient)}"
            )
        pos = {v: i for i, v in enumerate(ambient)}
        coef, _ = self._linear(pos.__getitem__)
        shift = FIELD * len(ambient)
        return [(coef[i] << shift) + (1 << (FIELD * i)) for i in range(len(ambient))]

    def sort_key(self, ambient: Sequence[str]):
        """Key function on exponent tuples of ``ambient`` realising this order."""
        w = self.weights(ambient)

        def key(m):
            return sum(e * wi for e, wi in zip(m, w) if e)

        return key

    def is_degree_compatible(self) -> bool:
        return self.kind == "grevlex"

    def __str__(self):
        if self.kind == "block":
            return f"block([{', '.join(self.vars)}] > {self.back})"
        return f"{self.kind}({', '.join(self.vars)})"

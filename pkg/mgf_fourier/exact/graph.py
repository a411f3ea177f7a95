"""
GraphIndex: the exponent list identifying a modular graph function
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Tuple

from ..utils.errors import DomainError


@dataclass(frozen=True)
class GraphIndex:
    """Exponents (a1, ..., al) of C_{a1,...,al}; weight w = sum a_r"""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) < 2:
            raise DomainError(f"need at least two exponents, got {exps}")
        if any(a < 1 for a in exps):
            raise DomainError(f"exponents must be positive, got {exps}")

    @classmethod
    def of(cls, *exponents: int) -> "GraphIndex":
        return cls(tuple(exponents))

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    @property
    def loops(self) -> int:
        """Number of edges l"""
        return len(self.exponents)

    def require_laurent_domain(self) -> Tuple[int, int, int]:
        """Return (a1, a2, a3) when the index is a two-loop index of weight >= 3"""
        if self.loops != 3:
            raise DomainError(f"Laurent formulas need three exponents, got {self.exponents}")
        if self.weight < 3:
            raise DomainError(f"Laurent formulas need weight >= 3, got {self.weight}")
        a1, a2, a3 = self.exponents
        return a1, a2, a3

    def orderings(self) -> Iterable[Tuple[int, ...]]:
        """All permutations of the exponents, duplicates included"""
        return permutations(self.exponents)

    def canonical(self) -> "GraphIndex":
        return GraphIndex(tuple(sorted(self.exponents, reverse=True)))

    def __str__(self) -> str:
        return "C_{" + ",".join(str(a) for a in self.exponents) + "}"

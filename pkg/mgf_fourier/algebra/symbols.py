"""
Zeta monomials and the symbolic coefficient ring built on them.

A SymbolicConstant is a finite rational-linear combination of ZetaMonomial
terms. Even zeta values never appear as symbols: zeta(2k) is stored as a
rational multiple of pi^(2k) as soon as it is constructed.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from ..exact import zeta_even_pi_power
from ..utils.errors import DomainError, ZetaOneError

Scalar = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class ZetaMonomial:
    """pi^pi_power * prod zeta(odd) * prod zeta(a, b), canonically sorted"""

    pi_power: int = 0
    odd: Tuple[int, ...] = ()
    double: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        odd = tuple(sorted(int(n) for n in self.odd))
        double = tuple(sorted((int(a), int(b)) for a, b in self.double))
        for n in odd:
            if n == 1:
                raise ZetaOneError("zeta(1) cannot appear in a monomial")
            if n < 3 or n % 2 == 0:
                raise DomainError(f"odd factor must be an odd integer >= 3, got {n}")
        for a, b in double:
            if a == 1:
                raise ZetaOneError(f"zeta({a},{b}) diverges")
            if a < 2 or b < 1:
                raise DomainError(f"double zeta needs a >= 2, b >= 1, got ({a},{b})")
        object.__setattr__(self, "odd", odd)
        object.__setattr__(self, "double", double)

    @property
    def weight(self) -> int:
        return self.pi_power + sum(self.odd) + sum(a + b for a, b in self.double)

    @property
    def is_unit(self) -> bool:
        return self.pi_power == 0 and not self.odd and not self.double

    @property
    def is_pure_pi(self) -> bool:
        """True for rational multiples of a power of pi (including 1)"""
        return not self.odd and not self.double

    def __mul__(self, other: "ZetaMonomial") -> "ZetaMonomial":
        if not isinstance(other, ZetaMonomial):
            return NotImplemented
        return ZetaMonomial(
            self.pi_power + other.pi_power,
            self.odd + other.odd,
            self.double + other.double,
        )

    def without_double(self, pair: Tuple[int, int]) -> "ZetaMonomial":
        """Drop one occurrence of the double factor zeta(pair)"""
        factors = list(self.double)
        factors.remove(pair)
        return ZetaMonomial(self.pi_power, self.odd, tuple(factors))

    def without_odd(self, n: int) -> "ZetaMonomial":
        factors = list(self.odd)
        factors.remove(n)
        return ZetaMonomial(self.pi_power, tuple(factors), self.double)


UNIT = ZetaMonomial()


class SymbolicConstant:
    """Immutable map ZetaMonomial -> Fraction with no zero coefficients"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[ZetaMonomial, Scalar], Iterable] = ()):
        acc: Dict[ZetaMonomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        self._terms: Tuple[Tuple[ZetaMonomial, Fraction], ...] = tuple(
            sorted((m, c) for m, c in acc.items() if c != 0)
        )
        self._hash = None

    # constructors

    @classmethod
    def zero(cls) -> "SymbolicConstant":
        return cls()

    @classmethod
    def rational(cls, q: Scalar) -> "SymbolicConstant":
        return cls({UNIT: q})

    @classmethod
    def pi_power(cls, k: int, coeff: Scalar = 1) -> "SymbolicConstant":
        return cls({ZetaMonomial(pi_power=k): coeff})

    @classmethod
    def zeta(cls, n: int) -> "SymbolicConstant":
        """zeta(n) for n >= 2; even arguments become rational multiples of pi^n"""
        if n == 1:
            raise ZetaOneError("zeta(1) requested")
        if n < 2:
            raise DomainError(f"zeta(n) needs n >= 2, got {n}")
        if n % 2 == 0:
            return cls({ZetaMonomial(pi_power=n): zeta_even_pi_power(n // 2)})
        return cls({ZetaMonomial(odd=(n,)): 1})

    @classmethod
    def double_zeta(cls, a: int, b: int) -> "SymbolicConstant":
        """The opaque symbol zeta(a, b) = sum_{m,n>=1} (m+n)^-a n^-b"""
        return cls({ZetaMonomial(double=((a, b),)): 1})

    @classmethod
    def coerce(cls, value) -> "SymbolicConstant":
        if isinstance(value, SymbolicConstant):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to SymbolicConstant")

    # mapping protocol

    def items(self) -> Iterator[Tuple[ZetaMonomial, Fraction]]:
        return iter(self._terms)

    def monomials(self) -> Tuple[ZetaMonomial, ...]:
        return tuple(m for m, _ in self._terms)

    def coefficient(self, mono: ZetaMonomial) -> Fraction:
        for m, c in self._terms:
            if m == mono:
                return c
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def rational_part(self) -> Fraction:
        return self.coefficient(UNIT)

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(sorted({m.weight for m, _ in self._terms}))

    def filter(self, predicate) -> "SymbolicConstant":
        return SymbolicConstant({m: c for m, c in self._terms if predicate(m)})

    def pure_pi_part(self) -> "SymbolicConstant":
        """Terms that are rational multiples of powers of pi"""
        return self.filter(lambda m: m.is_pure_pi)

    def has_double(self) -> bool:
        return any(m.double for m, _ in self._terms)

    def scale_pi(self, k: int) -> "SymbolicConstant":
        """Multiply by pi^k (k may be negative)"""
        return SymbolicConstant(
            {ZetaMonomial(m.pi_power + k, m.odd, m.double): c for m, c in self._terms}
        )

    # arithmetic

    def __add__(self, other) -> "SymbolicConstant":
        try:
            other = SymbolicConstant.coerce(other)
        except TypeError:
            return NotImplemented
        return SymbolicConstant(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "SymbolicConstant":
        return SymbolicConstant({m: -c for m, c in self._terms})

    def __sub__(self, other) -> "SymbolicConstant":
        try:
            other = SymbolicConstant.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SymbolicConstant":
        return (-self) + other

    def __mul__(self, other) -> "SymbolicConstant":
        if isinstance(other, (int, Fraction)):
            return SymbolicConstant({m: c * other for m, c in self._terms})
        if not isinstance(other, SymbolicConstant):
            return NotImplemented
        acc: Dict[ZetaMonomial, Fraction] = {}
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                m = m1 * m2
                acc[m] = acc.get(m, Fraction(0)) + c1 * c2
        return SymbolicConstant(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymbolicConstant.rational(other)
        if not isinstance(other, SymbolicConstant):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        from .render import constant_text

        return f"SymbolicConstant({constant_text(self)})"


def zeta_product(*args: int) -> SymbolicConstant:
    """zeta(n1) * zeta(n2) * ... with even arguments converted to pi powers"""
    result = SymbolicConstant.rational(1)
    for n in args:
        result = result * SymbolicConstant.zeta(n)
    return result

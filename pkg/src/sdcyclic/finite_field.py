"""Finite fields GF(2^m) in polynomial-basis representation.

An element of GF(2^m) is an integer below 2^m whose bit i is the
coordinate of y^i, where y is a root of the field's defining polynomial.
Addition is XOR and multiplication is carry-less multiplication followed
by reduction, so the same code path serves GF(2) and GF(2^300) alike.

Fields are interned: build_field returns the same object for the same
(degree, defining polynomial) pair, which makes ownership checks cheap
identity checks.  Defining polynomials default to the lexicographically
smallest irreducible of the requested degree, read low-bit-first as a
binary number, so every presentation is reproducible without a table of
Conway polynomials.
"""

from . import gf2x
from .cosets import multiplicative_order

_FIELD_CACHE: dict[tuple[int, int], "Field"] = {}

# trial division is cheaper than importing sympy for small orders
_TRIAL_DIVISION_LIMIT = 1 << 40


def _factor_integer(n: int) -> list[int]:
    """Sorted prime divisors of n >= 1."""
    if n < _TRIAL_DIVISION_LIMIT:
        ps = []
        d = 2
        while d * d <= n:
            if n % d == 0:
                ps.append(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            ps.append(n)
        return ps
    from sympy import factorint

    return sorted(factorint(n))


class Field:
    """GF(2^m) presented by a monic irreducible defining polynomial."""

    __slots__ = ("degree", "defpoly", "order", "characteristic",
                 "_generator", "_conj_basis")

    def __init__(self, degree: int, defpoly: int):
        if degree < 1:
            raise ValueError(f"field degree must be positive, got {degree}")
        if defpoly.bit_length() - 1 != degree:
            raise ValueError(
                f"defining polynomial 0x{defpoly:x} does not have degree {degree}"
            )
        if not gf2x.is_irreducible(defpoly):
            raise ValueError(
                f"defining polynomial 0x{defpoly:x} is reducible over GF(2)"
            )
        self.degree = degree
        self.defpoly = defpoly
        self.order = 1 << degree
        self.characteristic = 2
        self._generator = None
        self._conj_basis = None

    # -- arithmetic on raw coordinate integers ------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return gf2x.mod(gf2x.mul(a, b), self.defpoly)

    def square(self, a: int) -> int:
        return gf2x.mod(gf2x.square(a), self.defpoly)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self}")
        return gf2x.invert(a, self.defpoly)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError(f"0 raised to {e} in {self}")
            return 0
        if e < 0:
            return gf2x.powmod(self.inv(a), -e, self.defpoly)
        return gf2x.powmod(a, e, self.defpoly)

    def frobenius(self, a: int, k: int = 1) -> int:
        """a raised to 2^k by repeated squaring."""
        for _ in range(k):
            a = self.square(a)
        return a

    # -- element plumbing ----------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.order:
            raise ValueError(f"0x{value:x} is not an element code of {self}")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        """Iterate all elements; guarded to small fields."""
        if self.degree > 20:
            raise ValueError(f"refusing to iterate all {self.order} elements of {self}")
        for v in range(self.order):
            yield FieldElement(self, v)

    def generator_int(self) -> int:
        """Smallest element code that generates the multiplicative group."""
        if self._generator is None:
            n = self.order - 1
            primes = _factor_integer(n) if n > 1 else []
            c = 1
            while True:
                if all(self.pow(c, n // p) != 1 for p in primes):
                    self._generator = c
                    break
                c += 1
        return self._generator

    def generator(self) -> "FieldElement":
        return FieldElement(self, self.generator_int())

    def conj_basis(self) -> tuple[int, ...]:
        """Images of the basis elements y^u under a -> a^(2^(m/2))."""
        if self.degree % 2:
            raise ValueError(
                f"{self} is not a quadratic extension, so it carries no conjugation"
            )
        if self._conj_basis is None:
            ell = self.degree // 2
            self._conj_basis = tuple(
                self.frobenius(1 << u, ell) for u in range(self.degree)
            )
        return self._conj_basis

    def conj(self, a: int) -> int:
        """Conjugate a -> a^(2^(m/2)) on a quadratic extension."""
        self.conj_basis()
        return self.frobenius(a, self.degree // 2)

    # -- presentation --------------------------------------------------------

    def descriptor(self) -> str:
        return f"GF(2^{self.degree})/defpoly=0x{self.defpoly:x}"

    def __repr__(self):
        return self.descriptor()


def build_field(r: int, defining_poly: int | None = None) -> Field:
    """GF(2^r), canonically presented unless defining_poly is given.

    The defining polynomial is an integer with bit i holding the
    coefficient of y^i; it must be monic of degree r and irreducible.
    """
    if defining_poly is None:
        defining_poly = gf2x.smallest_irreducible(r)
    key = (r, defining_poly)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = Field(r, defining_poly)
        _FIELD_CACHE[key] = field
    return field


def parse_field_descriptor(text: str) -> Field:
    """Inverse of Field.descriptor()."""
    try:
        head, poly = text.split("/defpoly=")
        degree = int(head.removeprefix("GF(2^").removesuffix(")"))
        return build_field(degree, int(poly, 16))
    except ValueError as exc:
        raise ValueError(f"malformed field descriptor {text!r}") from exc


class FieldElement:
    """An element of a Field, wrapping its coordinate integer."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError(f"mixed fields: {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            if other in (0, 1):
                return other
            raise TypeError(f"cannot coerce {other} into {self.field}")
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value ^ v)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(v)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __neg__(self):
        return self

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if other in (0, 1):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"0x{self.value:x}"


def conjugate(a: FieldElement, q: int | None = None) -> FieldElement:
    """The involution a -> a^q on GF(q^2).

    q defaults to the square root of the field order and, when given,
    must match the field's presentation as GF(2^(2l)) with q = 2^l.
    """
    field = a.field
    if field.degree % 2:
        raise ValueError(f"{field} has no square order, conjugation undefined")
    expected = 1 << (field.degree // 2)
    if q is None:
        q = expected
    if q != expected:
        raise ValueError(f"field order {field.order} is not {q}^2")
    return FieldElement(field, field.conj(a.value))


class Embedding:
    """Ring embedding of GF(2^r) into GF(2^(r*t)).

    The image of the subfield's basis root y is chosen as the smallest
    element code among the roots of the subfield's defining polynomial
    inside the big field, searched in the unique multiplicative subgroup
    of order 2^r - 1, so the choice is deterministic at any field size.
    """

    __slots__ = ("sub", "sup", "image_of_generator", "_powers", "_pivots")

    def __init__(self, sub: Field, sup: Field):
        if sup.degree % sub.degree:
            raise ValueError(
                f"{sub} does not embed into {sup}: {sub.degree} does not "
                f"divide {sup.degree}"
            )
        self.sub = sub
        self.sup = sup
        self.image_of_generator = self._find_root()
        self._powers = [1]
        for _ in range(sub.degree - 1):
            self._powers.append(sup.mul(self._powers[-1], self.image_of_generator))
        self._pivots = self._echelonize(self._powers)

    def _find_root(self) -> int:
        sub, sup = self.sub, self.sup
        if sub.degree == 1:
            # defining polynomial y + c has the explicit root c
            return sub.defpoly & 1
        if sup is sub:
            # y is a root of its own defining polynomial and no root can
            # be 0 or 1, so y = 0x2 is the smallest one
            return 2
        subgroup = (sup.order - 1) // (sub.order - 1)
        beta = sup.pow(sup.generator_int(), subgroup)
        roots = []
        c = 1
        for _ in range(sub.order - 1):
            acc = 0
            f = sub.defpoly
            i = 0
            while f:
                if f & 1:
                    acc ^= sup.pow(c, i)
                f >>= 1
                i += 1
            if acc == 0:
                roots.append(c)
            c = sup.mul(c, beta)
        if len(roots) != sub.degree:
            raise AssertionError(
                f"found {len(roots)} roots of 0x{self.sub.defpoly:x} in {sup}, "
                f"expected {sub.degree}"
            )
        return min(roots)

    @staticmethod
    def _echelonize(powers: list[int]) -> list[tuple[int, int, int]]:
        """Gaussian elimination rows (pivot bit, value, combination)."""
        pivots: list[tuple[int, int, int]] = []
        for i, v in enumerate(powers):
            combo = 1 << i
            for pivot, pv, pc in pivots:
                if v >> pivot & 1:
                    v ^= pv
                    combo ^= pc
            if v == 0:
                raise AssertionError("embedding basis is linearly dependent")
            pivots.append((v.bit_length() - 1, v, combo))
        pivots.sort(reverse=True)
        return pivots

    def embed_int(self, a: int) -> int:
        r = 0
        i = 0
        while a:
            if a & 1:
                r ^= self._powers[i]
            a >>= 1
            i += 1
        return r

    def pullback_int(self, b: int) -> int:
        combo = 0
        for pivot, pv, pc in self._pivots:
            if b >> pivot & 1:
                b ^= pv
                combo ^= pc
        if b:
            raise ValueError(
                f"0x{b:x}-residue left over: element does not lie in the "
                f"embedded copy of {self.sub} inside {self.sup}"
            )
        return combo

    def embed(self, a: FieldElement) -> FieldElement:
        if a.field is not self.sub:
            raise ValueError(f"{a!r} is not an element of {self.sub}")
        return FieldElement(self.sup, self.embed_int(a.value))

    def pullback(self, b: FieldElement) -> FieldElement:
        if b.field is not self.sup:
            raise ValueError(f"{b!r} is not an element of {self.sup}")
        return FieldElement(self.sub, self.pullback_int(b.value))

    def contains(self, b: FieldElement) -> bool:
        try:
            self.pullback(b)
            return True
        except ValueError:
            return False

    def __repr__(self):
        return f"Embedding({self.sub} -> {self.sup})"


def splitting_field_for(base: Field, nbar: int) -> tuple[Field, Embedding, int]:
    """Smallest extension GF(q^t) of base in which x^nbar - 1 splits.

    t is the multiplicative order of q = order(base) mod nbar; the
    extension is built directly over GF(2) with degree r*t.
    """
    if nbar < 1 or nbar % 2 == 0:
        raise ValueError(f"nbar must be odd and positive, got {nbar}")
    t = multiplicative_order(base.order, nbar)
    sup = base if t == 1 else build_field(base.degree * t)
    return sup, Embedding(base, sup), t


def primitive_root_of_unity(field: Field, nbar: int) -> FieldElement:
    """Deterministic element of multiplicative order exactly nbar.

    Computed as g^((order-1)/nbar) for the lexicographically first
    multiplicative generator g, so repeated runs agree bit-for-bit.
    """
    if nbar < 1:
        raise ValueError(f"nbar must be positive, got {nbar}")
    if (field.order - 1) % nbar:
        raise ValueError(
            f"{nbar} does not divide |{field}*| = {field.order - 1}; "
            "extend the field (use splitting_field_for) to find this root"
        )
    g = field.generator_int()
    return FieldElement(field, field.pow(g, (field.order - 1) // nbar))

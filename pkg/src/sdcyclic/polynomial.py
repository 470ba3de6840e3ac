"""Univariate polynomials over GF(2^m) and the cyclotomic factorization.

A polynomial is stored as m coefficient planes: plane j is a GF(2)
polynomial (an integer, bit i = coefficient of x^i) holding the y^j
coordinate of every coefficient.  Addition is m XORs regardless of
degree, and multiplication is m^2 carry-less products followed by a
reduction of the high y-planes through the field's defining polynomial.
For GF(2) this degenerates to a single carry-less product, and the
enumeration loops in cyclic_codes lean on exactly that behavior.

The factorization half of this module builds the minimal polynomial of
each cyclotomic coset from a primitive root of unity in the splitting
field and classifies the factors as self-paired or swapped under the
reciprocal map (Euclidean pairing) or the conjugate-reciprocal map
(Hermitian pairing).
"""

import re
from dataclasses import dataclass
from functools import lru_cache

from . import gf2x
from .cosets import CyclotomicCoset, cyclotomic_cosets, multiplier_image
from .finite_field import Embedding, Field, FieldElement, \
    primitive_root_of_unity, splitting_field_for

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"

# positions of the sub-leading bits of each field's defining polynomial
_TAIL_BITS: dict[Field, tuple[int, ...]] = {}


def _tail_bits(field: Field) -> tuple[int, ...]:
    bits = _TAIL_BITS.get(field)
    if bits is None:
        tb = field.defpoly ^ (1 << field.degree)
        out = []
        while tb:
            lsb = tb & -tb
            out.append(lsb.bit_length() - 1)
            tb ^= lsb
        bits = _TAIL_BITS[field] = tuple(out)
    return bits


def check_kind(kind: str) -> str:
    if kind not in (EUCLIDEAN, HERMITIAN):
        raise ValueError(f"kind must be {EUCLIDEAN!r} or {HERMITIAN!r}, got {kind!r}")
    return kind


def _mul_planes(pa, pb, m, tail):
    if m == 1:
        return (gf2x.mul(pa[0], pb[0]),)
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(pa):
        if ai:
            for j, bj in enumerate(pb):
                if bj:
                    prod[i + j] ^= gf2x.mul(ai, bj)
    for idx in range(2 * m - 2, m - 1, -1):
        p = prod[idx]
        if p:
            base = idx - m
            for u in tail:
                prod[base + u] ^= p
    return tuple(prod[:m])


def _scalar_planes(planes, c, m, tail):
    """Planes of the scalar multiple c * f."""
    if m == 1:
        return (planes[0],) if c & 1 else (0,)
    prod = [0] * (2 * m - 1)
    u = 0
    while c:
        if c & 1:
            for j, pj in enumerate(planes):
                if pj:
                    prod[u + j] ^= pj
        c >>= 1
        u += 1
    for idx in range(2 * m - 2, m - 1, -1):
        p = prod[idx]
        if p:
            base = idx - m
            for v in tail:
                prod[base + v] ^= p
    return tuple(prod[:m])


class Poly:
    """Dense univariate polynomial over a characteristic-2 field.

    Immutable; the zero polynomial has degree -1.  Coefficients are
    exposed as element codes (integers) in ascending degree with the
    trailing zeros trimmed.
    """

    __slots__ = ("field", "planes")

    def __init__(self, field: Field, planes: tuple[int, ...]):
        if len(planes) != field.degree:
            raise ValueError(
                f"expected {field.degree} coefficient planes, got {len(planes)}"
            )
        self.field = field
        self.planes = planes

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, (0,) * field.degree)

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,) + (0,) * (field.degree - 1))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (2,) + (0,) * (field.degree - 1))

    @classmethod
    def monomial(cls, field: Field, k: int, coeff: int = 1) -> "Poly":
        if k < 0:
            raise ValueError(f"monomial degree must be nonnegative, got {k}")
        planes = [0] * field.degree
        for j in range(field.degree):
            if coeff >> j & 1:
                planes[j] = 1 << k
        return cls(field, tuple(planes))

    @classmethod
    def from_coeffs(cls, field: Field, coeffs) -> "Poly":
        planes = [0] * field.degree
        for i, c in enumerate(coeffs):
            if isinstance(c, FieldElement):
                if c.field is not field:
                    raise ValueError(f"coefficient {c!r} is not in {field}")
                c = c.value
            if not 0 <= c < field.order:
                raise ValueError(f"coefficient code 0x{c:x} out of range for {field}")
            for j in range(field.degree):
                if c >> j & 1:
                    planes[j] |= 1 << i
        return cls(field, tuple(planes))

    # -- inspection ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return max(p.bit_length() for p in self.planes) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.planes)

    def coeff(self, i: int) -> int:
        """Element code of the coefficient of x^i."""
        c = 0
        for j, p in enumerate(self.planes):
            c |= (p >> i & 1) << j
        return c

    @property
    def coeffs(self) -> tuple[int, ...]:
        d = self.degree
        return tuple(self.coeff(i) for i in range(d + 1))

    @property
    def leading(self) -> int:
        d = self.degree
        return self.coeff(d) if d >= 0 else 0

    @property
    def constant(self) -> int:
        return self.coeff(0)

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    # -- ring operations -----------------------------------------------------

    def _check_same_field(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field is not self.field:
            raise ValueError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_same_field(other)
        return Poly(self.field, tuple(a ^ b for a, b in zip(self.planes, other.planes)))

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_same_field(other)
        m = self.field.degree
        return Poly(self.field, _mul_planes(self.planes, other.planes, m,
                                            _tail_bits(self.field)))

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check_same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.field
        m = field.degree
        tail = _tail_bits(field)
        dg = other.degree
        r = list(self.planes)
        dr = max(p.bit_length() for p in r) - 1
        if dr < dg:
            return Poly.zero(field), self
        lead_inv = field.inv(other.coeff(dg))
        qplanes = [0] * m
        while dr >= dg:
            c = 0
            for j, p in enumerate(r):
                c |= (p >> dr & 1) << j
            c = field.mul(c, lead_inv)
            shift = dr - dg
            cc, u = c, 0
            while cc:
                if cc & 1:
                    qplanes[u] |= 1 << shift
                cc >>= 1
                u += 1
            sub = _scalar_planes(other.planes, c, m, tail)
            for j in range(m):
                if sub[j]:
                    r[j] ^= sub[j] << shift
            dr = max(p.bit_length() for p in r) - 1
        return Poly(field, tuple(qplanes)), Poly(field, tuple(r))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError(f"negative shift {k}")
        return Poly(self.field, tuple(p << k for p in self.planes))

    def scale(self, c) -> "Poly":
        """Multiply by the scalar c."""
        if isinstance(c, FieldElement):
            if c.field is not self.field:
                raise ValueError(f"scalar {c!r} is not in {self.field}")
            c = c.value
        return Poly(self.field, _scalar_planes(self.planes, c, self.field.degree,
                                               _tail_bits(self.field)))

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic normalization")
        lead = self.leading
        return self if lead == 1 else self.scale(self.field.inv(lead))

    def eval(self, point) -> FieldElement:
        """Evaluate at a field element (Horner)."""
        if isinstance(point, FieldElement):
            if point.field is not self.field:
                raise ValueError(f"{point!r} is not in {self.field}")
            point = point.value
        field = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = field.mul(acc, point) ^ c
        return FieldElement(field, acc)

    # -- the two pairing maps --------------------------------------------------

    def reciprocal(self) -> "Poly":
        """f*(x) = f(0)^-1 * x^deg(f) * f(1/x); needs f(0) != 0."""
        c0 = self.constant
        if c0 == 0:
            raise ValueError("reciprocal undefined: constant term is zero")
        width = self.degree + 1
        rev = Poly(self.field, tuple(gf2x.reverse(p, width) for p in self.planes))
        return rev if c0 == 1 else rev.scale(self.field.inv(c0))

    def conjugate(self) -> "Poly":
        """Apply a -> a^(2^(m/2)) to every coefficient."""
        basis = self.field.conj_basis()
        m = self.field.degree
        out = [0] * m
        for u, img in enumerate(basis):
            p = self.planes[u]
            if p:
                for j in range(m):
                    if img >> j & 1:
                        out[j] ^= p
        return Poly(self.field, tuple(out))

    def conjugate_reciprocal(self) -> "Poly":
        """The Hermitian pairing map: coefficient-wise conjugate of f*."""
        return self.reciprocal().conjugate()

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.planes == other.planes

    def __hash__(self):
        return hash((id(self.field), self.planes))

    def __repr__(self):
        return f"Poly({self.field}, {self!s})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            if i == 0:
                terms.append(f"0x{c:x}" if c != 1 else "1")
            else:
                var = "x" if i == 1 else f"x^{i}"
                terms.append(var if c == 1 else f"0x{c:x}*{var}")
        return "+".join(terms)

    def to_list(self) -> list[int]:
        """Canonical serialization: ascending coefficient codes."""
        return list(self.coeffs)


def x_pow_minus_one(field: Field, n: int) -> Poly:
    """x^n - 1, which over characteristic 2 is x^n + 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Poly(field, ((1 << n) | 1,) + (0,) * (field.degree - 1))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._check_same_field(g)
    while not g.is_zero:
        f, g = g, f % g
    if f.is_zero:
        return f
    return f.monic()


_TERM = re.compile(
    r"^(?:(?P<coeff>0[xX][0-9a-fA-F]+|\d+|w)\*?)?(?P<var>x(?:\^(?P<pow>\d+))?)?$"
)


def parse_poly(field: Field, text) -> Poly:
    """Parse the list form ([1, 0, 1]) or a human form like 'x^2+w*x+1'."""
    if isinstance(text, (list, tuple)):
        return Poly.from_coeffs(field, text)
    s = text.strip()
    if s.startswith("["):
        items = s.strip("[]").split(",")
        codes = [int(i.strip(), 0) for i in items if i.strip()]
        return Poly.from_coeffs(field, codes)
    coeffs: dict[int, int] = {}
    for raw in s.replace("-", "+").split("+"):
        term = raw.strip().replace(" ", "")
        if not term:
            raise ValueError(f"empty term in polynomial {text!r}")
        match = _TERM.match(term)
        if not match or (match.group("coeff") is None and match.group("var") is None):
            raise ValueError(f"cannot parse term {raw!r} in polynomial {text!r}")
        coeff_s = match.group("coeff")
        if coeff_s is None:
            c = 1
        elif coeff_s == "w":
            c = 2
        else:
            c = int(coeff_s, 0)
        power = 0
        if match.group("var"):
            power = int(match.group("pow") or 1)
        if not 0 <= c < field.order:
            raise ValueError(f"coefficient {coeff_s!r} out of range for {field}")
        coeffs[power] = coeffs.get(power, 0) ^ c
    out = [0] * (max(coeffs) + 1)
    for power, c in coeffs.items():
        out[power] = c
    return Poly.from_coeffs(field, out)


# -- factorization of x^nbar - 1 via cyclotomic cosets -------------------------


def minimal_polynomial(coset: CyclotomicCoset, alpha: FieldElement,
                       base: Field, emb: Embedding) -> Poly:
    """Minimal polynomial over base of alpha^rep, for a coset of exponents.

    The product of (x - alpha^i) over the coset members is computed in
    the splitting field and every coefficient is pulled back through the
    embedding; a coefficient outside the embedded subfield means the
    coset system and the field presentation disagree.
    """
    sup = emb.sup
    if alpha.field is not sup:
        raise ValueError(f"{alpha!r} does not live in the splitting field {sup}")
    if emb.sub is not base:
        raise ValueError(f"embedding maps {emb.sub}, not {base}")
    if coset.q != base.order:
        raise ValueError(
            f"coset system uses q={coset.q} but base field has order {base.order}"
        )
    nbar = coset.nbar
    if sup.pow(alpha.value, nbar) != 1:
        raise ValueError(f"{alpha!r} is not an nbar-th root of unity, nbar={nbar}")
    for p in gf2x._prime_divisors(nbar):
        if sup.pow(alpha.value, nbar // p) == 1:
            raise ValueError(f"{alpha!r} has order below {nbar}")
    coeffs = [1]
    for i in coset.members:
        root = sup.pow(alpha.value, i)
        coeffs.append(coeffs[-1])
        for k in range(len(coeffs) - 2, 0, -1):
            coeffs[k] = coeffs[k - 1] ^ sup.mul(coeffs[k], root)
        coeffs[0] = sup.mul(coeffs[0], root)
    try:
        pulled = [emb.pullback_int(c) for c in coeffs]
    except ValueError as exc:
        raise ValueError(
            f"minimal polynomial of coset {coset.rep} mod {nbar} has a "
            f"coefficient outside {base}: {exc}"
        ) from exc
    result = Poly.from_coeffs(base, pulled)
    if result.degree != len(coset.members) or not result.is_monic:
        raise AssertionError(
            f"minimal polynomial of coset {coset.rep} mod {nbar} is malformed"
        )
    return result


@lru_cache(maxsize=None)
def irreducible_factors(nbar: int, base: Field) -> tuple[tuple[CyclotomicCoset, Poly], ...]:
    """All irreducible factors of x^nbar - 1 over base, keyed by coset.

    Factors come out sorted by coset representative.  The per-coset
    assignment depends on the canonical primitive root; the factor SET
    does not.
    """
    partition = cyclotomic_cosets(nbar, base.order)
    sup, emb, _ = splitting_field_for(base, nbar)
    alpha = primitive_root_of_unity(sup, nbar)
    return tuple((c, minimal_polynomial(c, alpha, base, emb)) for c in partition.cosets)


@dataclass(frozen=True)
class FactorizationPattern:
    """Factors of x^nbar - 1 classified by a pairing map.

    self_paired holds the (coset, factor) entries fixed by the map;
    swapped_pairs holds (coset, factor, partner coset, partner factor)
    with the smaller representative first.  nu is carried along when the
    pattern describes x^(2^nu * nbar) - 1 = (x^nbar - 1)^(2^nu); plain
    factorizations of x^nbar - 1 use nu = 0.
    """

    nbar: int
    q: int
    nu: int
    pairing: str
    self_paired: tuple[tuple[CyclotomicCoset, Poly], ...]
    swapped_pairs: tuple[tuple[CyclotomicCoset, Poly, CyclotomicCoset, Poly], ...]

    @property
    def s(self) -> int:
        return len(self.self_paired)

    @property
    def t(self) -> int:
        return len(self.swapped_pairs)

    @property
    def field(self) -> Field:
        if self.self_paired:
            return self.self_paired[0][1].field
        return self.swapped_pairs[0][1].field

    def factor_for(self, rep: int) -> Poly:
        """The factor attached to the coset with this representative."""
        for c, f in self.self_paired:
            if c.rep == rep:
                return f
        for c, f, pc, pf in self.swapped_pairs:
            if c.rep == rep:
                return f
            if pc.rep == rep:
                return pf
        raise KeyError(f"no coset with representative {rep} mod {self.nbar}")

    def all_factors(self):
        """Every factor exactly once, self-paired first, then the pairs."""
        for _, f in self.self_paired:
            yield f
        for _, f, _, pf in self.swapped_pairs:
            yield f
            yield pf

    def to_json(self) -> dict:
        return {
            "nbar": self.nbar,
            "q": self.q,
            "nu": self.nu,
            "pairing": self.pairing,
            "s": self.s,
            "t": self.t,
            "self_paired": [
                {"coset": list(c.members), "poly": f.to_list()}
                for c, f in self.self_paired
            ],
            "swapped_pairs": [
                {
                    "coset": list(c.members), "poly": f.to_list(),
                    "partner_coset": list(pc.members), "partner_poly": pf.to_list(),
                }
                for c, f, pc, pf in self.swapped_pairs
            ],
        }


def factor_cyclotomic(nbar: int, base: Field, pairing: str) -> FactorizationPattern:
    """Factor x^nbar - 1 over base and classify factors under a pairing.

    Euclidean pairing matches each factor with its reciprocal, which is
    the factor of the negated coset; Hermitian pairing (defined on
    GF(2^(2l)) only) matches with the conjugate-reciprocal, the factor
    of the coset multiplied by -2^l.
    """
    check_kind(pairing)
    if pairing == HERMITIAN and base.degree % 2:
        raise ValueError(
            f"hermitian pairing needs a field of square order, got {base}"
        )
    facs = irreducible_factors(nbar, base)
    b = -1 if pairing == EUCLIDEAN else -(1 << (base.degree // 2))
    by_rep = {c.rep: (c, f) for c, f in facs}
    self_paired = []
    swapped = []
    for c, f in facs:
        partner_rep = multiplier_image(c, b).rep
        if partner_rep == c.rep:
            self_paired.append((c, f))
        elif c.rep < partner_rep:
            pc, pf = by_rep[partner_rep]
            swapped.append((c, f, pc, pf))
    product = Poly.one(base)
    for _, f in facs:
        product = product * f
    if product != x_pow_minus_one(base, nbar):
        raise AssertionError(
            f"factor product mismatch for x^{nbar} - 1 over {base}"
        )
    return FactorizationPattern(nbar, base.order, 0, pairing,
                                tuple(self_paired), tuple(swapped))

"""Brute-force verification path, independent of the structured theory.

Every monic divisor of x^n - 1 of degree n/2 is a candidate generator;
a code is accepted iff its generator matrix passes the matrix-level
orthogonality test.  Nothing here consults the reciprocal/conjugate
pairing metadata or the dual-generator identity, so agreement with the
structured enumeration is evidence, not circularity.
"""

from dataclasses import dataclass

from .cosets import split_length
from .cyclic_codes import CyclicCode, self_dual_by_inner_products
from .finite_field import Field
from .polynomial import Poly, check_kind, irreducible_factors

DEFAULT_CAP = 10**6


class OracleCapExceeded(Exception):
    """Raised when the divisor stream would outgrow the configured cap."""


@dataclass(frozen=True)
class DivisorLattice:
    """Divisors of x^n - 1 = (x^nbar - 1)^(2^nu) as exponent vectors.

    irreducible_base lists each irreducible factor of x^nbar - 1 once,
    paired with the common multiplicity 2^nu; every monic divisor of
    x^n - 1 is a unique product prod base_i^(e_i) with 0 <= e_i <= 2^nu.
    """

    n: int
    field: Field
    irreducible_base: tuple[tuple[Poly, int], ...]

    @classmethod
    def of(cls, n: int, field: Field) -> "DivisorLattice":
        nu, nbar = split_length(n)
        base = tuple(
            (f, 1 << nu) for _, f in irreducible_factors(nbar, field)
        )
        return cls(n, field, base)

    def half_degree_count(self) -> int:
        """Number of exponent vectors hitting total degree n/2 exactly."""
        return _degree_counts(self.irreducible_base)[self.n // 2]


def _degree_counts(base: tuple[tuple[Poly, int], ...]) -> dict[int, int]:
    """Coefficients of prod_i (1 + z^d_i + ... + z^(m_i * d_i))."""
    counts = {0: 1}
    for f, mult in base:
        d = f.degree
        nxt: dict[int, int] = {}
        for total, ways in counts.items():
            for e in range(mult + 1):
                key = total + e * d
                nxt[key] = nxt.get(key, 0) + ways
        counts = nxt
    return counts


def all_half_degree_divisors(n: int, field: Field, cap: int = DEFAULT_CAP):
    """Yield every monic divisor of x^n - 1 of degree exactly n/2, once.

    The count is computed up front from the degree generating function;
    if it exceeds cap the stream refuses to start.
    """
    lattice = DivisorLattice.of(n, field)
    total = lattice.half_degree_count()
    if total > cap:
        raise OracleCapExceeded(
            f"{total} half-degree divisors of x^{n} - 1 exceed the cap of "
            f"{cap}; reduce n or raise the cap"
        )
    base = lattice.irreducible_base
    target = n // 2
    # suffix_max[i] = largest degree factors i.. can still contribute
    suffix_max = [0] * (len(base) + 1)
    for i in range(len(base) - 1, -1, -1):
        f, mult = base[i]
        suffix_max[i] = suffix_max[i + 1] + mult * f.degree

    def rec(i: int, need: int, product: Poly):
        if need == 0 and i == len(base):
            yield product
            return
        if i == len(base) or need > suffix_max[i]:
            return
        f, mult = base[i]
        d = f.degree
        power = product
        for e in range(mult + 1):
            if e * d > need:
                break
            if e:
                power = power * f
            yield from rec(i + 1, need - e * d, power)

    yield from rec(0, target, Poly.one(field))


def brute_force_self_dual(n: int, field: Field, kind: str,
                          cap: int = DEFAULT_CAP) -> set[Poly]:
    """Generators of all self-dual codes of length n, by exhaustion.

    Filters the full half-degree divisor stream through the
    inner-product criterion alone.
    """
    check_kind(kind)
    out = set()
    for g in all_half_degree_divisors(n, field, cap):
        code = CyclicCode(n, field, g)
        if self_dual_by_inner_products(code, kind):
            out.add(g)
    return out

"""Cyclotomic cosets, multiplier splittings, existence tests, and counts.

Everything in this module is modular integer arithmetic: cosets of the
map i -> q*i on Z_nbar (nbar odd), the multiplier action i -> b*i, the
partition of the coset set into multiplier-fixed and multiplier-swapped
parts, and the resulting existence predicates and code-count formula for
self-dual cyclic codes of length 2^nu * nbar.
"""

import math
from dataclasses import dataclass


def multiplicative_order(q: int, n: int) -> int:
    """Order of q in the unit group mod n; n = 1 gives 1."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1, so {q} has no order mod {n}")
    if n == 1:
        return 1
    o, x = 1, q % n
    while x != 1:
        x = x * q % n
        o += 1
    return o


def split_length(n: int) -> tuple[int, int]:
    """Write even n as 2^nu * nbar with nbar odd; returns (nu, nbar)."""
    if n < 2 or n % 2:
        raise ValueError(
            f"length {n} is not even; self-dual cyclic codes over a "
            "characteristic-2 field exist only for even length"
        )
    nu = 0
    while n % 2 == 0:
        n //= 2
        nu += 1
    return nu, n


def _check_modulus(nbar: int, q: int) -> None:
    if nbar < 1 or nbar % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {nbar}")
    if math.gcd(q, nbar) != 1:
        raise ValueError(f"gcd(q={q}, nbar={nbar}) != 1")


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of rep under multiplication by q mod nbar."""

    nbar: int
    q: int
    rep: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.rep != min(self.members):
            raise ValueError(f"rep {self.rep} is not the smallest member")

    def __len__(self):
        return len(self.members)


def _coset_of(a: int, nbar: int, q: int) -> CyclotomicCoset:
    orbit = []
    x = a % nbar
    while True:
        orbit.append(x)
        x = x * q % nbar
        if x == a % nbar:
            break
    members = tuple(sorted(orbit))
    return CyclotomicCoset(nbar, q, members[0], members)


@dataclass(frozen=True)
class CosetPartition:
    """All q-cyclotomic cosets mod nbar, sorted by representative."""

    nbar: int
    q: int
    cosets: tuple[CyclotomicCoset, ...]

    def coset_containing(self, a: int) -> CyclotomicCoset:
        """The unique coset with a as a member."""
        target = _coset_of(a, self.nbar, self.q).rep
        for c in self.cosets:
            if c.rep == target:
                return c
        raise KeyError(a)

    def to_json(self) -> dict:
        return {
            "nbar": self.nbar,
            "q": self.q,
            "cosets": [list(c.members) for c in self.cosets],
        }


def cyclotomic_cosets(nbar: int, q: int) -> CosetPartition:
    """Partition of Z_nbar into q-cyclotomic cosets."""
    _check_modulus(nbar, q)
    seen = [False] * nbar
    cosets = []
    for a in range(nbar):
        if not seen[a]:
            c = _coset_of(a, nbar, q)
            for i in c.members:
                seen[i] = True
            cosets.append(c)
    return CosetPartition(nbar, q, tuple(cosets))


def multiplier_image(c: CyclotomicCoset, b: int) -> CyclotomicCoset:
    """Image of coset c under the multiplier i -> b*i mod nbar."""
    if math.gcd(b, c.nbar) != 1:
        raise ValueError(f"gcd(b={b}, nbar={c.nbar}) != 1, multiplier is not invertible")
    members = tuple(sorted(b * i % c.nbar for i in c.members))
    image = CyclotomicCoset(c.nbar, c.q, members[0], members)
    # the multiplier commutes with multiplication by q, so this is again a coset
    if _coset_of(image.rep, c.nbar, c.q).members != members:
        raise ValueError(f"multiplier {b} does not permute the {c.q}-cosets mod {c.nbar}")
    return image


@dataclass(frozen=True)
class Splitting:
    """Coset partition split by a multiplier into fixed and swapped parts.

    Z holds the cosets fixed set-wise, X0/X1 the swapped pairs with the
    smaller representative on the X0 side; t = len(X0) drives the count
    of self-dual cyclic codes.
    """

    nbar: int
    q: int
    b: int
    Z: tuple[CyclotomicCoset, ...]
    X0: tuple[CyclotomicCoset, ...]
    X1: tuple[CyclotomicCoset, ...]

    @property
    def t(self) -> int:
        return len(self.X0)


def find_splitting(nbar: int, q: int, b: int) -> Splitting:
    """Split the q-cosets mod nbar by the multiplier b.

    Requires the multiplier to act as an involution on the coset set,
    which holds for the two cases this package uses: b = -1 under
    2^r-cosets and b = -2^l under 2^(2l)-cosets.
    """
    part = cyclotomic_cosets(nbar, q)
    if math.gcd(b, nbar) != 1:
        raise ValueError(f"gcd(b={b}, nbar={nbar}) != 1")
    image = {c.rep: multiplier_image(c, b) for c in part.cosets}
    for c in part.cosets:
        if image[image[c.rep].rep].rep != c.rep:
            raise ValueError(
                f"multiplier {b} is not an involution on the {q}-cosets mod {nbar}"
            )
    fixed, x0, x1 = [], [], []
    for c in part.cosets:
        partner = image[c.rep]
        if partner.rep == c.rep:
            fixed.append(c)
        elif c.rep < partner.rep:
            x0.append(c)
            x1.append(partner)
    return Splitting(nbar, q, b % nbar, tuple(fixed), tuple(x0), tuple(x1))


def euclidean_exists(nbar: int, r: int) -> bool:
    """True iff nontrivial Euclidean self-dual cyclic codes of length
    2^nu * nbar over GF(2^r) exist, i.e. no power of 2^r is -1 mod nbar."""
    if nbar < 1 or nbar % 2 == 0:
        raise ValueError(f"nbar must be odd and positive, got {nbar}")
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if nbar == 1:
        return False
    q = (1 << r) % nbar
    x = q
    for _ in range(multiplicative_order(1 << r, nbar)):
        if x == nbar - 1:
            return False
        x = x * q % nbar
    return True


def hermitian_exists(nbar: int, ell: int) -> bool:
    """True iff nontrivial Hermitian self-dual cyclic codes of length
    2^nu * nbar over GF(2^(2*ell)) exist, i.e. no odd power of 2^ell is
    -1 mod nbar."""
    if nbar < 1 or nbar % 2 == 0:
        raise ValueError(f"nbar must be odd and positive, got {nbar}")
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if nbar == 1:
        return False
    u = (1 << ell) % nbar
    # odd exponents repeat with period ord(u) in the exponent, so
    # scanning j = 1, 3, ..., 2*ord(u) covers every odd-power residue
    o = multiplicative_order(1 << ell, nbar)
    usq = u * u % nbar
    x = u
    for _ in range(o):
        if x == nbar - 1:
            return False
        x = x * usq % nbar
    return True


def count_selfdual(nu: int, t: int) -> int:
    """Number of self-dual cyclic codes of length 2^nu * nbar: (2^nu + 1)^t."""
    if nu < 1:
        raise ValueError(f"nu must be positive, got {nu}")
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return ((1 << nu) + 1) ** t

"""Cyclic codes, duals, self-duality, enumeration, and minimum distance.

A cyclic code of even length n = 2^nu * nbar over GF(2^m) is an ideal
of GF(2^m)[x]/(x^n - 1), named by its monic generator polynomial g
dividing x^n - 1.  The self-dual ones are exactly the codes

    g = prod f_i^(2^(nu-1)) * prod h_j^(e_j) * partner(h_j)^(2^nu - e_j)

where the f_i are the pairing-fixed irreducible factors of x^nbar - 1,
the (h_j, partner) run over the swapped factor pairs, and each exponent
e_j ranges over 0..2^nu.  Enumeration walks the exponent box in
lexicographic order with a prefix-product stack, so successive codes
cost one polynomial multiplication instead of a full rebuild.

Minimum distance is exhaustive: all q^k - 1 nonzero codewords are
visited through the Gray-code engine in the distance module, with an
early exit at the self-dual floor of 2 and an abort threshold used when
scanning for the best code of a length.
"""

from dataclasses import replace

from . import distance
from .cosets import count_selfdual, split_length
from .finite_field import Field
from .polynomial import (EUCLIDEAN, HERMITIAN, FactorizationPattern, Poly,
                         check_kind, factor_cyclotomic, x_pow_minus_one)

DEFAULT_DISTANCE_BUDGET = 1 << 28


class DistanceBudgetExceeded(Exception):
    """Raised instead of ever reporting an unverified distance."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"exhaustive search needs {required} codewords, over the "
            f"budget of {budget}"
        )


class CyclicCode:
    """Length, field, and monic generator; dimension k = n - deg(g).

    Use code_from_generator to validate that g divides x^n - 1; the
    structured enumeration constructs divisors by design and skips the
    check.
    """

    __slots__ = ("n", "field", "generator", "k")

    def __init__(self, n: int, field: Field, generator: Poly):
        if generator.field is not field:
            raise ValueError(f"generator lives in {generator.field}, not {field}")
        if generator.is_zero or not generator.is_monic:
            raise ValueError("generator must be monic and nonzero")
        if n < 1 or generator.degree > n:
            raise ValueError(f"generator degree {generator.degree} exceeds length {n}")
        self.n = n
        self.field = field
        self.generator = generator
        self.k = n - generator.degree

    def generator_matrix(self) -> list[list[int]]:
        """Rows x^i * g for i = 0..k-1, as length-n lists of element codes."""
        row = self.generator.coeffs
        out = []
        for i in range(self.k):
            padded = [0] * i + list(row) + [0] * (self.n - i - len(row))
            out.append(padded)
        return out

    def to_record(self, kind: str | None = None, min_distance: int | None = None) -> dict:
        rec = {
            "n": self.n,
            "field": self.field.descriptor(),
            "kind": kind,
            "generator": self.generator.to_list(),
            "k": self.k,
            "min_distance": min_distance,
        }
        if kind is None:
            del rec["kind"]
        return rec

    def __eq__(self, other):
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return (self.n == other.n and self.field is other.field
                and self.generator == other.generator)

    def __hash__(self):
        return hash((self.n, id(self.field), self.generator))

    def __repr__(self):
        return f"CyclicCode(n={self.n}, k={self.k}, g={self.generator!s})"


def code_from_generator(g: Poly, n: int, field: Field | None = None) -> CyclicCode:
    """Checked constructor: g must be a monic divisor of x^n - 1."""
    if field is None:
        field = g.field
    code = CyclicCode(n, field, g)
    if not (x_pow_minus_one(field, n) % g).is_zero:
        raise ValueError(f"{g!s} does not divide x^{n} - 1 over {field}")
    return code


def parity_check(g: Poly, n: int) -> Poly:
    """p = (x^n - 1) / g, the parity-check polynomial."""
    q, r = divmod(x_pow_minus_one(g.field, n), g)
    if not r.is_zero:
        raise ValueError(f"{g!s} does not divide x^{n} - 1 over {g.field}")
    return q


def dual_generator(g: Poly, n: int, kind: str) -> Poly:
    """Generator of the dual code: p* (Euclidean) or p† (Hermitian)."""
    check_kind(kind)
    p = parity_check(g, n)
    if kind == EUCLIDEAN:
        return p.reciprocal()
    return p.conjugate_reciprocal()


def is_self_dual(code: CyclicCode, kind: str) -> bool:
    """Polynomial-identity test: deg g = n/2 and g generates the dual."""
    if code.n % 2 or 2 * code.k != code.n:
        return False
    return code.generator == dual_generator(code.generator, code.n, kind)


def euclidean_inner(u: list[int], v: list[int], field: Field) -> int:
    """Sum of u_i * v_i as an element code."""
    acc = 0
    for a, b in zip(u, v, strict=True):
        if a and b:
            acc ^= field.mul(a, b)
    return acc


def hermitian_inner(u: list[int], v: list[int], field: Field) -> int:
    """Sum of u_i * conj(v_i) as an element code; field must be GF(q^2)."""
    acc = 0
    for a, b in zip(u, v, strict=True):
        if a and b:
            acc ^= field.mul(a, field.conj(b))
    return acc


def self_dual_by_inner_products(code: CyclicCode, kind: str) -> bool:
    """Matrix-level test, independent of the polynomial identity.

    True iff the dimension is n/2 and every pair of generator-matrix
    rows is orthogonal under the chosen form.  This is the oracle's
    criterion; it never consults dual_generator.
    """
    check_kind(kind)
    if 2 * code.k != code.n:
        return False
    inner = euclidean_inner if kind == EUCLIDEAN else hermitian_inner
    rows = code.generator_matrix()
    field = code.field
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            if inner(rows[i], rows[j], field) != 0:
                return False
    return True


class SelfDualEnumeration:
    """Lazy enumeration of all self-dual cyclic codes of one length.

    Materializes the factorization pattern, the fixed part of the
    generator, and the (2^nu + 1) power products of every swapped pair;
    iteration then streams codes in lexicographic exponent order without
    ever holding more than the prefix-product stack.
    """

    def __init__(self, n: int, field: Field, kind: str):
        check_kind(kind)
        nu, nbar = split_length(n)
        if kind == HERMITIAN and field.degree % 2:
            raise ValueError(
                f"hermitian self-duality is undefined over {field}; "
                "it needs a field of square order GF(2^(2l))"
            )
        self.n = n
        self.field = field
        self.kind = kind
        self.nu = nu
        self.nbar = nbar
        self.pattern: FactorizationPattern = replace(
            factor_cyclotomic(nbar, field, kind), nu=nu
        )
        self.count = count_selfdual(nu, self.pattern.t)

        half = 1 << (nu - 1)
        fixed = Poly.one(field)
        for _, f in self.pattern.self_paired:
            fixed = fixed * f ** half
        self._fixed = fixed
        # blocks[j][e] = h_j^e * partner_j^(2^nu - e)
        self._blocks = []
        for _, h, _, partner in self.pattern.swapped_pairs:
            hp = [Poly.one(field)]
            pp = [Poly.one(field)]
            for _ in range(1 << nu):
                hp.append(hp[-1] * h)
                pp.append(pp[-1] * partner)
            top = 1 << nu
            self._blocks.append([hp[e] * pp[top - e] for e in range(top + 1)])

    def codes(self, limit: int | None = None):
        """Yield CyclicCode objects; stops early after limit codes."""
        n, field = self.n, self.field
        half_n = n // 2
        top = 1 << self.nu
        blocks = self._blocks
        t = len(blocks)
        emitted = 0
        if limit is not None and limit <= 0:
            return
        exps = [0] * t
        prefix = [self._fixed] * (t + 1)
        for j in range(t):
            prefix[j + 1] = prefix[j] * blocks[j][0]
        while True:
            g = prefix[t]
            if g.degree != half_n:
                raise AssertionError(
                    f"enumerated generator of degree {g.degree}, wanted {half_n}"
                )
            yield CyclicCode(n, field, g)
            emitted += 1
            if limit is not None and emitted >= limit:
                return
            j = t - 1
            while j >= 0 and exps[j] == top:
                exps[j] = 0
                j -= 1
            if j < 0:
                return
            exps[j] += 1
            for i in range(j, t):
                prefix[i + 1] = prefix[i] * blocks[i][exps[i]]

    def __iter__(self):
        return self.codes()


def enumerate_self_dual(n: int, field: Field, kind: str, limit: int | None = None):
    """Stream every self-dual cyclic code of length n over field.

    Emits exactly (2^nu + 1)^t codes in lexicographic exponent order;
    the trivial code x^(n/2) + 1 is the all-2^(nu-1) exponent tuple.
    """
    yield from SelfDualEnumeration(n, field, kind).codes(limit)


def _distance_basis(code: CyclicCode) -> list[tuple[int, ...]]:
    """GF(2) basis rows y^j * x^i * g as coefficient planes."""
    rows = []
    g = code.generator
    m = code.field.degree
    for j in range(m):
        scaled = g if j == 0 else g.scale(1 << j)
        for i in range(code.k):
            rows.append(tuple(p << i for p in scaled.planes))
    return rows


def _min_weight_of_code(code: CyclicCode, abort_below: int = 0,
                        engine: str = "auto") -> int:
    early = 2 if code.generator.degree >= 1 else 1
    return distance.min_weight(_distance_basis(code), code.n,
                               early_exit=early, abort_below=abort_below,
                               engine=engine)


def minimum_distance(code: CyclicCode, budget: int = DEFAULT_DISTANCE_BUDGET,
                     engine: str = "auto") -> int:
    """Exact minimum Hamming weight by exhaustive codeword enumeration.

    Raises DistanceBudgetExceeded when q^k exceeds the budget; never
    returns an unverified number.
    """
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    required = code.field.order ** code.k
    if required > budget:
        raise DistanceBudgetExceeded(required, budget)
    return _min_weight_of_code(code, engine=engine)


def best_min_distance(n: int, field: Field, kind: str,
                      budget: int = DEFAULT_DISTANCE_BUDGET,
                      engine: str = "auto") -> tuple[int, CyclicCode]:
    """Highest minimum distance over all self-dual codes of length n.

    Returns (distance, witness); the witness is the first code in
    enumeration order achieving the maximum.  Codes are abandoned as
    soon as a codeword at or below the incumbent best is found, which
    cannot change the maximum.
    """
    enum = SelfDualEnumeration(n, field, kind)
    required = field.order ** (n // 2)
    if required > budget:
        raise DistanceBudgetExceeded(required, budget)
    best = 0
    witness = None
    for code in enum:
        d = _min_weight_of_code(code, abort_below=best + 1, engine=engine)
        if d > best:
            best = d
            witness = code
    return best, witness

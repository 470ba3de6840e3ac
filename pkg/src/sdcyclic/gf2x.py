"""Carry-less polynomial arithmetic over GF(2).

A polynomial over GF(2) is represented as a nonnegative Python integer:
bit i holds the coefficient of x^i.  Addition is XOR, multiplication is
a carry-less (shift and XOR) product.  Python integers are unbounded, so
degrees of several hundred are routine; that is all the splitting-field
work in this package ever needs.

The zero polynomial is 0 and has degree -1 by convention.
"""

# spread table: byte b -> b with a zero bit interleaved after every bit
_SQUARE_BYTE = [0] * 256
for _b in range(256):
    _v = 0
    for _j in range(8):
        if _b >> _j & 1:
            _v |= 1 << (2 * _j)
    _SQUARE_BYTE[_b] = _v
del _b, _v, _j


def degree(a):
    """Degree of a, with degree(0) == -1."""
    return a.bit_length() - 1


def mul(a, b):
    """Product of a and b."""
    if a.bit_count() < b.bit_count():
        a, b = b, a
    r = 0
    while b:
        lsb = b & -b
        r ^= a << (lsb.bit_length() - 1)
        b ^= lsb
    return r


def square(a):
    """Square of a (coefficient spreading, no reduction)."""
    r = 0
    shift = 0
    while a:
        r |= _SQUARE_BYTE[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return r


def quo_rem(a, b):
    """Quotient and remainder of a divided by b."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    da = a.bit_length() - 1
    while da >= db:
        shift = da - db
        q |= 1 << shift
        a ^= b << shift
        da = a.bit_length() - 1
    return q, a


def mod(a, b):
    """Remainder of a modulo b."""
    if b == 0:
        raise ZeroDivisionError("reduction modulo the zero polynomial")
    db = b.bit_length() - 1
    da = a.bit_length() - 1
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length() - 1
    return a


def mulmod(a, b, f):
    """Product of a and b reduced modulo f."""
    return mod(mul(a, b), f)


def sqmod(a, f):
    """Square of a reduced modulo f."""
    return mod(square(a), f)


def powmod(a, e, f):
    """a raised to the nonnegative integer e, modulo f."""
    if e < 0:
        raise ValueError("negative exponent")
    r = 1
    a = mod(a, f)
    while e:
        if e & 1:
            r = mulmod(r, a, f)
        a = sqmod(a, f)
        e >>= 1
    return r


def gcd(a, b):
    """Greatest common divisor of a and b."""
    while b:
        a, b = b, mod(a, b)
    return a


def invert(a, f):
    """Inverse of a modulo f; raises ZeroDivisionError if gcd(a, f) != 1."""
    # extended Euclid, tracking only the cofactor of a
    r0, r1 = mod(a, f), f
    s0, s1 = 1, 0
    while r1:
        q, r = quo_rem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ mul(q, s1)
    if r0 != 1:
        raise ZeroDivisionError(f"0x{a:x} is not invertible modulo 0x{f:x}")
    return mod(s0, f)


def _prime_divisors(m):
    """Prime divisors of a small positive integer."""
    ps = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            ps.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        ps.append(m)
    return ps


def is_irreducible(f):
    """Rabin's test: True iff f is irreducible over GF(2)."""
    m = f.bit_length() - 1
    if m <= 0:
        return False
    # x^(2^m) must equal x modulo f
    r = 2
    for _ in range(m):
        r = sqmod(r, f)
    if r != mod(2, f):
        return False
    # for every prime p | m, gcd(x^(2^(m/p)) - x, f) must be trivial
    for p in _prime_divisors(m):
        r = 2
        for _ in range(m // p):
            r = sqmod(r, f)
        if gcd(r ^ mod(2, f), f) != 1:
            return False
    return True


def smallest_irreducible(m):
    """Lexicographically smallest monic irreducible of degree m.

    Coefficient sequences are compared low-to-high as binary numbers,
    which is plain integer order on this representation.
    """
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    f = 1 << m
    while True:
        if is_irreducible(f):
            return f
        f += 1


def reverse(a, width):
    """Bits of a reversed within the given width."""
    if a >> width:
        raise ValueError(f"0x{a:x} does not fit in {width} bits")
    if width == 0:
        return 0
    return int(format(a, f"0{width}b")[::-1], 2)

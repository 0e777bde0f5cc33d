"""Finite fields GF(p^k) and dense univariate polynomials over them.

Prime-field elements are plain residues (int).  Extension elements are
tuples of k residues, coefficients with respect to the canonical modulus,
constant term first.  Polynomials are tuples of field elements, lowest
degree first, trailing zeros stripped; the zero polynomial is ().

The canonical modulus of GF(p^k) is the monic irreducible of degree k
whose coefficient vector (constant term first) reads as the smallest
base-p integer.  Fields built twice therefore agree element for element.

There is no general factorization here: squarefree decomposition plus
root extraction cover every need in this package.
"""

from __future__ import annotations


class NotPrime(ValueError):
    """Characteristic is not a prime in the supported range."""


class DegreeOutOfRange(ValueError):
    """Extension degree outside 1..16 or field size at least 2**62."""


class NotMonic(ValueError):
    """Operation requires a monic polynomial."""


class DivisorZero(ZeroDivisionError):
    """Division by the zero polynomial."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; adequate below 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldCtx:
    """Arithmetic context for GF(p^k).

    Exposes add/sub/neg/mul/inv/pow/frobenius on the element encoding
    described in the module docstring, plus conversions to and from
    coefficient vectors and a canonical integer encoding used wherever a
    deterministic element order is needed.
    """

    __slots__ = ("p", "k", "q", "modulus", "zero", "one", "_red")

    def __init__(self, p: int, k: int, modulus: tuple):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        if k == 1:
            self.zero = 0
            self.one = 1
            self._red = None
        else:
            self.zero = (0,) * k
            self.one = (1,) + (0,) * (k - 1)
            # x^d mod modulus for d = k .. 2k-2, used by mul
            red = []
            cur = list(modulus[:k])
            for i in range(k):
                cur[i] = (-cur[i]) % p
            red.append(tuple(cur))
            for _ in range(k - 2):
                nxt = [0] * k
                carry = cur[k - 1]
                for i in range(k - 1, 0, -1):
                    nxt[i] = cur[i - 1]
                if carry:
                    top = red[0]
                    for i in range(k):
                        nxt[i] = (nxt[i] + carry * top[i]) % p
                red.append(tuple(nxt))
                cur = nxt
            self._red = red

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    # element arithmetic ------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = [c % p for c in prod[:k]]
        red = self._red
        for d in range(k, 2 * k - 1):
            c = prod[d] % p
            if c:
                row = red[d - k]
                for i in range(k):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(out)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("field inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        acc = self.one
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def frobenius(self, a, i: int = 1):
        """a -> a^(p^i)."""
        return self.pow(a, self.p ** (i % self.k if self.k > 1 else 1))

    def is_zero(self, a) -> bool:
        return a == self.zero

    # conversions --------------------------------------------------------

    def coeffs(self, a) -> tuple:
        """Coefficient vector of length k, constant term first."""
        if self.k == 1:
            return (a,)
        return a

    def from_coeffs(self, vec) -> object:
        vec = tuple(int(c) % self.p for c in vec)
        if len(vec) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(vec)}")
        return vec[0] if self.k == 1 else vec

    def encode(self, a) -> int:
        """Canonical integer in [0, q): base-p reading of the coefficients."""
        if self.k == 1:
            return a
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def element(self, n: int):
        """Inverse of encode."""
        if not 0 <= n < self.q:
            raise ValueError(f"encoding out of range: {n}")
        if self.k == 1:
            return n
        out = []
        for _ in range(self.k):
            out.append(n % self.p)
            n //= self.p
        return tuple(out)


def make_field(p: int, k: int = 1) -> FieldCtx:
    """Build GF(p^k) with the canonical modulus.

    The degree-1 modulus is x itself, so prime fields carry a uniform
    (p, k, modulus) shape.
    """
    if not isinstance(p, int) or not is_prime(p) or p >= 2**31:
        raise NotPrime(f"characteristic must be a prime below 2**31, got {p!r}")
    if not isinstance(k, int) or not 1 <= k <= 16:
        raise DegreeOutOfRange(f"extension degree must be in 1..16, got {k!r}")
    if p**k >= 2**62:
        raise DegreeOutOfRange(f"field size {p}^{k} is at least 2**62")
    if k == 1:
        return FieldCtx(p, 1, (0, 1))
    return FieldCtx(p, k, canonical_modulus(p, k))


def canonical_modulus(p: int, k: int) -> tuple:
    """Smallest monic irreducible of degree k, by base-p coefficient reading."""
    base = make_field(p)
    for n in range(p**k):
        low = []
        m = n
        for _ in range(k):
            low.append(m % p)
            m //= p
        f = tuple(low) + (1,)
        if poly_is_irreducible(base, f):
            return f
    raise AssertionError("no irreducible polynomial found; unreachable")


# polynomial layer -------------------------------------------------------
# Coefficients live in a FieldCtx F; tuples, lowest degree first.


def poly_norm(F: FieldCtx, coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and F.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def poly_deg(f) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def poly_const(F: FieldCtx, c) -> tuple:
    return () if F.is_zero(c) else (c,)


def poly_x(F: FieldCtx) -> tuple:
    return (F.zero, F.one)


def poly_add(F: FieldCtx, a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return poly_norm(F, out)


def poly_sub(F: FieldCtx, a, b) -> tuple:
    out = list(a) + [F.zero] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = F.sub(out[i], c)
    return poly_norm(F, out)


def poly_scale(F: FieldCtx, f, s) -> tuple:
    if F.is_zero(s):
        return ()
    return poly_norm(F, [F.mul(c, s) for c in f])


def poly_mul(F: FieldCtx, a, b) -> tuple:
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_norm(F, out)


def poly_divmod(F: FieldCtx, a, b) -> tuple:
    if not b:
        raise DivisorZero("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    rem = list(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    quo = [F.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if F.is_zero(c):
            continue
        q = F.mul(c, lead_inv)
        quo[i - db] = q
        for j in range(db + 1):
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(q, b[j]))
    return poly_norm(F, quo), poly_norm(F, rem)


def poly_mod(F: FieldCtx, a, b) -> tuple:
    return poly_divmod(F, a, b)[1]


def poly_monic(F: FieldCtx, f) -> tuple:
    if not f:
        return ()
    lead = f[-1]
    if lead == F.one:
        return f
    return poly_scale(F, f, F.inv(lead))


def poly_gcd(F: FieldCtx, a, b) -> tuple:
    """Monic greatest common divisor."""
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_pow_mod(F: FieldCtx, a, e: int, m) -> tuple:
    acc = (F.one,)
    base = poly_mod(F, a, m)
    while e:
        if e & 1:
            acc = poly_mod(F, poly_mul(F, acc, base), m)
        base = poly_mod(F, poly_mul(F, base, base), m)
        e >>= 1
    return acc


def poly_eval(F: FieldCtx, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_deriv(F: FieldCtx, f) -> tuple:
    p = F.p
    out = []
    for i in range(1, len(f)):
        m = i % p
        if m == 0:
            out.append(F.zero)
        elif m == 1:
            out.append(f[i])
        else:
            out.append(F.mul(F.from_coeffs((m,) + (0,) * (F.k - 1)), f[i]))
    return poly_norm(F, out)


def poly_divides(F: FieldCtx, d, f) -> bool:
    """True when d divides f; DivisorZero for d = 0."""
    if not d:
        raise DivisorZero("zero polynomial divides nothing")
    return not poly_mod(F, f, d)


def poly_is_irreducible(F: FieldCtx, f) -> bool:
    """Irreducibility of monic f: x^(q^deg) fixes x and no proper-divisor
    Frobenius power shares a factor with f."""
    n = poly_deg(f)
    if n < 1:
        return False
    if f[-1] != F.one:
        raise NotMonic("irreducibility test expects a monic polynomial")
    if n == 1:
        return True
    x = poly_x(F)
    t = x
    powers = {}
    for d in range(1, n + 1):
        t = poly_pow_mod(F, t, F.q, f)
        powers[d] = t
    if powers[n] != poly_mod(F, x, f):
        return False
    for d in range(1, n):
        if n % d == 0:
            g = poly_gcd(F, poly_sub(F, powers[d], x), f)
            if poly_deg(g) != 0:
                return False
    return True


def squarefree_decomposition(F: FieldCtx, f) -> list:
    """Monic f as a product of pairwise coprime squarefree parts.

    Returns [(g, m), ...] with multiplicities strictly increasing and
    prod g^m = f.  Handles the characteristic-p collapse f = h(x^p).
    """
    if not f:
        raise ValueError("zero polynomial has no squarefree decomposition")
    if f[-1] != F.one:
        raise NotMonic("squarefree decomposition expects a monic polynomial")
    if poly_deg(f) == 0:
        return []
    out = {}
    _sqfree_into(F, f, 1, out)
    return [(out[m], m) for m in sorted(out)]


def _sqfree_into(F: FieldCtx, f, mult: int, out: dict) -> None:
    df = poly_deriv(F, f)
    if not df:
        _sqfree_into(F, _pth_root_poly(F, f), mult * F.p, out)
        return
    c = poly_gcd(F, f, df)
    w = poly_divmod(F, f, c)[0]
    i = 1
    while poly_deg(w) > 0:
        y = poly_gcd(F, w, c)
        z = poly_divmod(F, w, y)[0]
        if poly_deg(z) > 0:
            key = mult * i
            out[key] = poly_mul(F, out[key], z) if key in out else z
        w = y
        c = poly_divmod(F, c, y)[0]
        i += 1
    if poly_deg(c) > 0:
        _sqfree_into(F, _pth_root_poly(F, c), mult * F.p, out)


def _pth_root_poly(F: FieldCtx, f) -> tuple:
    """For f with zero derivative, the g with g(x)^p = f(x)."""
    p = F.p
    out = []
    for i in range(0, len(f), p):
        c = f[i]
        # coefficient p-th root: inverse Frobenius
        out.append(c if F.k == 1 else F.pow(c, F.q // p))
    return poly_norm(F, out)


def root_multiplicity(F: FieldCtx, f, a) -> int:
    """Multiplicity of the root a in f (0 when a is not a root)."""
    if not f:
        raise ValueError("zero polynomial")
    lin = (F.neg(a), F.one)
    m = 0
    while True:
        q, r = poly_divmod(F, f, lin)
        if r:
            return m
        m += 1
        f = q
        if not f:
            return m


def poly_roots(F: FieldCtx, f) -> list:
    """Distinct roots of f in the field, sorted by canonical encoding."""
    if not f:
        raise ValueError("zero polynomial")
    roots = []
    # split off x-power
    i = 0
    while i < len(f) and F.is_zero(f[i]):
        i += 1
    if i > 0:
        roots.append(F.zero)
        f = poly_norm(F, f[i:])
    if poly_deg(f) >= 1:
        f = poly_monic(F, f)
        xq = poly_pow_mod(F, poly_x(F), F.q, f)
        g = poly_gcd(F, poly_sub(F, xq, poly_x(F)), f)
        _collect_linear_roots(F, g, roots)
    return sorted(roots, key=F.encode)


def _collect_linear_roots(F: FieldCtx, g, roots: list) -> None:
    """Roots of a monic product of distinct linear factors, recursively."""
    d = poly_deg(g)
    if d <= 0:
        return
    if d == 1:
        roots.append(F.neg(g[0]))
        return
    if F.p == 2:
        splitter = _even_splitter
    else:
        splitter = _odd_splitter
    for n in range(F.q):
        s = F.element(n)
        h = splitter(F, g, s)
        dh = poly_deg(h)
        if 0 < dh < d:
            _collect_linear_roots(F, h, roots)
            _collect_linear_roots(F, poly_divmod(F, g, h)[0], roots)
            return
    raise AssertionError("linear factor splitting failed; unreachable")


def _odd_splitter(F: FieldCtx, g, s) -> tuple:
    shifted = (s, F.one)
    t = poly_pow_mod(F, shifted, (F.q - 1) // 2, g)
    return poly_gcd(F, poly_sub(F, t, (F.one,)), g)


def _even_splitter(F: FieldCtx, g, s) -> tuple:
    # trace map of s*x splits roots over GF(2^k)
    term = poly_mod(F, poly_scale(F, poly_x(F), s), g)
    acc = term
    e = F.q.bit_length() - 1
    for _ in range(e - 1):
        term = poly_mod(F, poly_mul(F, term, term), g)
        acc = poly_add(F, acc, term)
    return poly_gcd(F, acc, g)

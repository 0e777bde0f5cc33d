"""Ordinary character tables by the Burnside-Dixon method.

All arithmetic is exact. Tables are computed modulo a prime l with
l = 1 (mod exponent) and l^2 > 4|G|^3, then lifted to dense integer
vectors over the basis 1, z, ..., z^{e-1} of e-th roots of unity.
Vectors are reduced only by z^e = 1; canonical comparisons go through
reduction mod the e-th cyclotomic polynomial.

Frobenius-style triple counting over conjugacy classes lives here too,
driven entirely by the lifted table.
"""

import math
from dataclasses import dataclass

from . import ff, linalg
from .perm import GroupTooLarge, PermGroup, format_cycles, pinv, ppow


class LiftFailure(RuntimeError):
    """Internal consistency check failed during table construction."""


class NonIntegerResult(RuntimeError):
    """A count that must be a rational integer failed to reduce to one."""


# integer cyclotomic arithmetic ----------------------------------------------


def cyc_mul(a: tuple, b: tuple, e: int) -> tuple:
    out = [0] * e
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % e] += x * y
    return tuple(out)


def cyc_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def cyc_scale(a: tuple, s: int) -> tuple:
    return tuple(s * x for x in a)


def _zpoly_mul(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _zpoly_divmod_exact_leading(a, b):
    # b monic; integer polynomial division
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    q = [0] * max(da - db + 1, 0)
    for i in range(da - db, -1, -1):
        c = a[i + db]
        if c:
            q[i] = c
            for j, y in enumerate(b):
                a[i + j] -= c * y
    while a and a[-1] == 0:
        a.pop()
    return tuple(q), tuple(a)


_cyclotomic_cache = {1: (-1, 1)}


def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, low first."""
    if n not in _cyclotomic_cache:
        f = tuple([-1] + [0] * (n - 1) + [1])
        for d in range(1, n):
            if n % d == 0:
                q, r = _zpoly_divmod_exact_leading(f, cyclotomic_poly(d))
                if r:
                    raise AssertionError("cyclotomic division left a remainder")
                f = q
        _cyclotomic_cache[n] = f
    return _cyclotomic_cache[n]


def cyc_reduce(a: tuple, e: int) -> tuple:
    """Remainder of the vector mod the e-th cyclotomic polynomial."""
    _, r = _zpoly_divmod_exact_leading(tuple(a), cyclotomic_poly(e))
    return r


def cyc_equal(a: tuple, b: tuple, e: int) -> bool:
    return cyc_reduce(a, e) == cyc_reduce(b, e)


def cyc_as_integer(a: tuple, e: int):
    """The integer a equals, or None when a is not a rational integer."""
    r = cyc_reduce(a, e)
    if any(r[1:]):
        return None
    return r[0] if r else 0


# class algebra ----------------------------------------------------------------


@dataclass(frozen=True)
class ClassAlgebra:
    group: PermGroup
    classes: tuple
    constants: tuple   # constants[i][j][k] = #{x in C_i : x^{-1} z_k in C_j}


def class_algebra(group: PermGroup) -> ClassAlgebra:
    classes = group.conjugacy_classes()
    index = group.class_index()
    r = len(classes)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k in range(r):
        z = classes[k].rep
        for i in range(r):
            row = a[i]
            for x in classes[i].members:
                j = index[pmul_inv_left(x, z)]
                row[j][k] += 1
    return ClassAlgebra(group, classes, tuple(tuple(tuple(v) for v in m) for m in a))


def pmul_inv_left(x: tuple, z: tuple) -> tuple:
    # x^{-1} z without materializing the inverse
    out = [0] * len(x)
    for i in range(len(x)):
        out[x[i]] = z[i]
    return tuple(out)


# table construction ------------------------------------------------------------


@dataclass(frozen=True)
class CharTable:
    group: PermGroup
    classes: tuple
    exponent: int
    modulus: int              # the Dixon prime l
    zeta_residue: int         # fixed e-th root of unity in GF(l)
    degrees: tuple
    values_mod: tuple         # rows of residues mod l
    values: tuple             # rows of length-e integer vectors over powers of zeta
    inverse_class: tuple      # position of the inverse class

    def value(self, chi: int, cls: int) -> tuple:
        return self.values[chi][cls]


def _dixon_prime(order: int, exponent: int) -> int:
    n = exponent + 1
    while n * n <= 4 * order**3 or not ff.is_prime(n):
        n += exponent
    return n


def _primitive_root(l: int) -> int:
    rest = l - 1
    primes = []
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            primes.append(d)
            while rest % d == 0:
                rest //= d
        d += 1
    if rest > 1:
        primes.append(rest)
    for w in range(2, l):
        if all(pow(w, (l - 1) // r, l) != 1 for r in primes):
            return w
    raise AssertionError("no primitive root found; unreachable")


def character_table(group: PermGroup, cap_classes: int = 60, cap_order: int = 10**6) -> CharTable:
    if group.order > cap_order:
        raise GroupTooLarge(f"order {group.order} exceeds {cap_order}")
    algebra = class_algebra(group)
    classes = algebra.classes
    r = len(classes)
    if r > cap_classes:
        raise GroupTooLarge(f"{r} classes exceed {cap_classes}")
    index = group.class_index()
    e = math.lcm(*(c.element_order for c in classes))
    l = _dixon_prime(group.order, e)
    F = ff.make_field(l)

    omegas = _central_characters(F, algebra)
    inverse_class = tuple(index[pinv(c.rep)] for c in classes)

    inv_size = [pow(classes[j].size, -1, l) for j in range(r)]
    rows_mod = []
    degrees = []
    for v in omegas:
        s = 0
        for j in range(r):
            s = (s + v[j] * v[inverse_class[j]] * inv_size[j]) % l
        if s == 0:
            raise LiftFailure("degenerate character norm")
        d2 = group.order * pow(s, -1, l) % l
        d = math.isqrt(d2)
        if d * d != d2 or d == 0:
            raise LiftFailure(f"degree recovery failed: d^2 = {d2} mod {l}")
        degrees.append(d)
        rows_mod.append(tuple(d * v[j] * inv_size[j] % l for j in range(r)))

    w = _primitive_root(l)
    z = pow(w, (l - 1) // e, l)
    power_class = [
        [index[ppow(classes[j].rep, t)] for t in range(classes[j].element_order)]
        for j in range(r)
    ]
    rows_cyc = []
    for chi, d in enumerate(degrees):
        row = []
        for j in range(r):
            o = classes[j].element_order
            zo = pow(z, e // o, l)
            inv_o = pow(o, -1, l)
            vec = [0] * e
            for m in range(o):
                acc = 0
                for t in range(o):
                    acc += rows_mod[chi][power_class[j][t]] * pow(zo, (-m * t) % o, l)
                n_m = acc * inv_o % l
                if n_m > d:
                    raise LiftFailure(f"eigenvalue multiplicity {n_m} exceeds degree {d}")
                vec[m * (e // o)] = n_m
            check = sum(c * pow(z, i, l) for i, c in enumerate(vec)) % l
            if check != rows_mod[chi][j]:
                raise LiftFailure("lifted value does not reduce to the modular value")
            row.append(tuple(vec))
        rows_cyc.append(tuple(row))

    if sum(d * d for d in degrees) != group.order:
        raise LiftFailure("degree squares do not sum to the group order")

    order = sorted(range(len(degrees)), key=lambda i: (degrees[i], rows_cyc[i]))
    return CharTable(
        group=group,
        classes=classes,
        exponent=e,
        modulus=l,
        zeta_residue=z,
        degrees=tuple(degrees[i] for i in order),
        values_mod=tuple(rows_mod[i] for i in order),
        values=tuple(rows_cyc[i] for i in order),
        inverse_class=inverse_class,
    )


def _central_characters(F, algebra: ClassAlgebra) -> list:
    """Joint eigenvectors of the class matrices, normalized at the identity."""
    classes = algebra.classes
    r = len(classes)
    l = F.p
    mats = [
        [[algebra.constants[i][j][k] % l for k in range(r)] for j in range(r)]
        for i in range(r)
    ]
    spaces = [linalg.rref(F, linalg.eye(F, r))]
    for i in range(r):
        if all(len(rows) == 1 for rows, _ in spaces):
            break
        nxt = []
        for rows, pivots in spaces:
            if len(rows) == 1:
                nxt.append((rows, pivots))
                continue
            nxt.extend(_split_space(F, mats[i], rows, pivots))
        spaces = nxt
    if any(len(rows) != 1 for rows, _ in spaces):
        raise LiftFailure("class matrices failed to separate the characters")
    out = []
    for rows, _ in spaces:
        v = rows[0]
        if v[0] == 0:
            raise LiftFailure("central character vanishes at the identity")
        inv = pow(v[0], -1, l)
        out.append(tuple(x * inv % l for x in v))
    return sorted(out)


def _split_space(F, mat, rows, pivots):
    """Split an invariant subspace into eigenspaces of one class matrix."""
    m = len(rows)
    l = F.p
    cols = []
    for b in rows:
        w = linalg.mat_vec(F, mat, b)
        coords = [w[p] for p in pivots]
        cols.append(coords)
        back = [0] * len(w)
        for c, row in zip(coords, rows):
            if c:
                for t in range(len(w)):
                    back[t] = (back[t] + c * row[t]) % l
        if tuple(back) != tuple(w):
            raise LiftFailure("class matrix does not preserve a split space")
    R = [[cols[j][i] for j in range(m)] for i in range(m)]
    chp = linalg.char_poly(F, R)
    pieces = []
    total = 0
    for lam in ff.poly_roots(F, chp):
        shifted = [row[:] for row in R]
        for t in range(m):
            shifted[t][t] = (shifted[t][t] - lam) % l
        kernel = linalg.nullspace(F, shifted)
        vecs = []
        for cv in kernel:
            v = [0] * len(rows[0])
            for c, row in zip(cv, rows):
                if c:
                    for t in range(len(v)):
                        v[t] = (v[t] + c * row[t]) % l
            vecs.append(v)
        piece = linalg.rref(F, vecs)
        total += len(piece[0])
        pieces.append(piece)
    if total != m:
        raise LiftFailure("eigenspaces do not fill an invariant subspace")
    return pieces


# triple counting ---------------------------------------------------------------


def triple_count(table: CharTable, c1: int, c2: int, c3: int,
                 _pair_cache: dict = None) -> int:
    """Number of (x, y, z) in C1 x C2 x C3 with xyz = 1, by the column formula."""
    e = table.exponent
    L = math.lcm(*table.degrees)
    if _pair_cache is not None and (c1, c2) in _pair_cache:
        pair = _pair_cache[(c1, c2)]
    else:
        pair = [cyc_mul(row[c1], row[c2], e) for row in table.values]
        if _pair_cache is not None:
            _pair_cache[(c1, c2)] = pair
    total = (0,) * e
    for chi, d in enumerate(table.degrees):
        term = cyc_mul(pair[chi], table.values[chi][c3], e)
        total = cyc_add(total, cyc_scale(term, L // d))
    c = cyc_as_integer(total, e)
    if c is None:
        raise NonIntegerResult("character sum is not a rational integer")
    sizes = table.classes[c1].size * table.classes[c2].size * table.classes[c3].size
    num = sizes * c
    den = table.group.order * L
    if num % den:
        raise NonIntegerResult(f"count {num}/{den} is not an integer")
    n = num // den
    if n < 0:
        raise NonIntegerResult(f"negative count {n}")
    return n


# cache files --------------------------------------------------------------------


def write_table_cache(table: CharTable, path: str) -> None:
    lines = [
        f"chartable {table.group.name or '-'}",
        f"degree {table.group.degree}",
        f"order {table.group.order}",
        f"exponent {table.exponent}",
        f"modulus {table.modulus}",
        f"zeta {table.zeta_residue}",
        f"classes {len(table.classes)}",
    ]
    for c in table.classes:
        lines.append(f"class {c.size} {c.element_order} {format_cycles(c.rep)}")
    for d, row in zip(table.degrees, table.values):
        packed = "|".join(",".join(str(x) for x in vec) for vec in row)
        lines.append(f"character {d} {packed}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_table_cache(path: str, group: PermGroup) -> CharTable:
    """Rebuild a table from its cache file; the group supplies class data."""
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    header = {}
    class_lines = []
    char_lines = []
    for ln in lines:
        key, rest = ln.split(" ", 1)
        if key == "class":
            class_lines.append(rest)
        elif key == "character":
            char_lines.append(rest)
        else:
            header[key] = rest
    if int(header["order"]) != group.order or int(header["degree"]) != group.degree:
        raise LiftFailure("cache file does not match the supplied group")
    classes = group.conjugacy_classes()
    index = group.class_index()
    for c, ln in zip(classes, class_lines):
        size, order, _ = ln.split(" ", 2)
        if c.size != int(size) or c.element_order != int(order):
            raise LiftFailure("cache class block does not match the group")
    e = int(header["exponent"])
    l = int(header["modulus"])
    z = int(header["zeta"])
    degrees = []
    values = []
    for ln in char_lines:
        d, packed = ln.split(" ", 1)
        degrees.append(int(d))
        values.append(tuple(tuple(int(x) for x in vec.split(",")) for vec in packed.split("|")))
    values_mod = tuple(
        tuple(sum(c * pow(z, i, l) for i, c in enumerate(vec)) % l for vec in row)
        for row in values
    )
    return CharTable(
        group=group,
        classes=classes,
        exponent=e,
        modulus=l,
        zeta_residue=z,
        degrees=tuple(degrees),
        values_mod=values_mod,
        values=tuple(values),
        inverse_class=tuple(index[pinv(c.rep)] for c in classes),
    )

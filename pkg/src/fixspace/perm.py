"""Permutations and permutation groups with a deterministic stabilizer chain.

A permutation on 0..n-1 is an image tuple: g[i] is where i goes, and
mul(a, b) applies a first, then b.  The base of the stabilizer chain is
always the smallest moved point at each level and orbits are explored in
sorted order, so bases, strong generators, orders, transversals, random
streams, and conjugacy class data are reproducible functions of the
generator list alone.
"""

from __future__ import annotations

from math import gcd

from . import ff
from .rng import SeedStream

CLASS_CAP = 10**6


class NotBijection(ValueError):
    """Image vector is not a permutation of 0..n-1."""


class NotInGroup(ValueError):
    """Element fails membership in the group."""


class GroupTooLarge(ValueError):
    """Operation exceeds its size cap."""


class DegreeMismatch(ValueError):
    """Permutation degree differs from the group degree."""


# raw permutation helpers -------------------------------------------------


def identity(n: int) -> tuple:
    return tuple(range(n))


def pmul(a: tuple, b: tuple) -> tuple:
    """Composite permutation: apply a, then b."""
    return tuple(b[x] for x in a)


def pinv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def pconj(g: tuple, h: tuple) -> tuple:
    """Conjugate h^-1 g h."""
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[h[i]] = h[x]
    return tuple(out)


def ppow(g: tuple, e: int) -> tuple:
    n = len(g)
    if e < 0:
        return ppow(pinv(g), -e)
    acc = identity(n)
    base = g
    while e:
        if e & 1:
            acc = pmul(acc, base)
        base = pmul(base, base)
        e >>= 1
    return acc


def perm_from_images(images) -> tuple:
    g = tuple(images)
    if sorted(g) != list(range(len(g))):
        raise NotBijection(f"not a permutation of 0..{len(g) - 1}: {g}")
    return g


def cycle_lengths(g: tuple) -> list:
    seen = [False] * len(g)
    out = []
    for i in range(len(g)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = g[j]
            length += 1
        out.append(length)
    return out


def element_order(g: tuple) -> int:
    o = 1
    for c in cycle_lengths(g):
        o = o * c // gcd(o, c)
    return o


def is_p_prime_element(g: tuple, p: int) -> bool:
    """True when p does not divide the order of g."""
    return element_order(g) % p != 0


def cycles_of(g: tuple) -> list:
    """Nontrivial cycles, each rotated to start at its minimum, sorted."""
    seen = [False] * len(g)
    out = []
    for i in range(len(g)):
        if seen[i] or g[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = g[j]
        out.append(tuple(cyc))
    return out


def perm_from_cycles(degree: int, cycles, one_based: bool = True) -> tuple:
    images = list(range(degree))
    off = 1 if one_based else 0
    used = set()
    for cyc in cycles:
        pts = [c - off for c in cyc]
        for pt in pts:
            if not 0 <= pt < degree:
                raise NotBijection(f"cycle point {pt + off} outside degree {degree}")
            if pt in used:
                raise NotBijection(f"point {pt + off} repeated across cycles")
            used.add(pt)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return perm_from_images(images)


def format_cycles(g: tuple) -> str:
    """1-based cycle notation; identity prints as ()."""
    cycs = cycles_of(g)
    if not cycs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in cyc) + ")" for cyc in cycs)


# conjugacy classes --------------------------------------------------------


class ConjClass:
    """One conjugacy class: minimal-member representative, size, order,
    and (for groups within the storage cap) the sorted member tuple."""

    __slots__ = ("rep", "size", "element_order", "members")

    def __init__(self, rep, size, order, members):
        self.rep = rep
        self.size = size
        self.element_order = order
        self.members = members

    def __repr__(self):
        return f"ConjClass(order={self.element_order}, size={self.size}, rep={format_cycles(self.rep)})"


# stabilizer chain ---------------------------------------------------------


class _Level:
    __slots__ = ("point", "installed", "transversal", "inverse", "orbit_list")

    def __init__(self, point):
        self.point = point
        self.installed = []
        self.transversal = {}
        self.inverse = {}
        self.orbit_list = []

    def recompute(self, degree, gens):
        b = self.point
        self.transversal = {b: identity(degree)}
        self.inverse = {b: identity(degree)}
        queue = [b]
        for x in queue:
            t_x = self.transversal[x]
            for s in gens:
                y = s[x]
                if y not in self.transversal:
                    t_y = pmul(t_x, s)
                    self.transversal[y] = t_y
                    self.inverse[y] = pinv(t_y)
                    queue.append(y)
        self.orbit_list = sorted(self.transversal)


class PermGroup:
    """Permutation group with a deterministic base and strong generating set."""

    def __init__(self, degree: int, gens, name: str | None = None):
        self.degree = degree
        self.name = name
        checked = []
        for g in gens:
            g = perm_from_images(g)
            if len(g) != degree:
                raise NotBijection(f"generator degree {len(g)} != {degree}")
            checked.append(g)
        self.gens = tuple(checked)
        self._levels = []
        self._build_chain()
        self.order = 1
        for lvl in self._levels:
            self.order *= len(lvl.transversal)
        self._classes = None
        self._class_index = None

    # chain construction ---------------------------------------------

    def _sift(self, g: tuple, start: int = 0):
        """Reduce g through levels from start; return (residue, stuck_level)."""
        lv = self._levels
        for i in range(start, len(lv)):
            x = g[lv[i].point]
            if x == lv[i].point:
                continue
            if x not in lv[i].inverse:
                return g, i
            g = pmul(g, lv[i].inverse[x])
        return g, len(lv)

    def _level_gens(self, i: int) -> list:
        """Strong generators of the i-th stabilizer: everything installed at
        level i or deeper fixes the first i base points."""
        out = []
        for lvl in self._levels[i:]:
            out.extend(lvl.installed)
        return out

    def _add_generator(self, g: tuple, level: int) -> None:
        lv = self._levels
        if level == len(lv):
            moved = min(i for i, x in enumerate(g) if x != i)
            lv.append(_Level(moved))
        lv[level].installed.append(g)
        # the new generator lies in every stabilizer down to this level,
        # so shallower orbits can grow too
        for m in range(level + 1):
            lv[m].recompute(self.degree, self._level_gens(m))

    def _build_chain(self) -> None:
        ident = identity(self.degree)
        for g in self.gens:
            if g == ident:
                continue
            res, at = self._sift(g)
            if res != ident:
                self._add_generator(res, at)
        i = len(self._levels) - 1
        while i >= 0:
            stuck = self._check_level(i)
            if stuck is None:
                i -= 1
            else:
                i = stuck

    def _check_level(self, i: int):
        """Sift all Schreier generators of level i through the deeper chain.
        Returns the level where a residue was installed, or None if clean."""
        lvl = self._levels[i]
        ident = identity(self.degree)
        gens = self._level_gens(i)
        for x in lvl.orbit_list:
            t_x = lvl.transversal[x]
            for s in gens:
                y = s[x]
                sg = pmul(pmul(t_x, s), lvl.inverse[y])
                if sg == ident:
                    continue
                res, at = self._sift(sg, i + 1)
                if res != ident:
                    self._add_generator(res, at)
                    return at
        return None

    # queries -----------------------------------------------------------

    def contains(self, g: tuple) -> bool:
        if len(g) != self.degree:
            raise DegreeMismatch(f"degree {len(g)} vs group degree {self.degree}")
        res, _ = self._sift(g)
        return res == identity(self.degree)

    def random_element(self, stream: SeedStream) -> tuple:
        """Exactly uniform: product of uniformly chosen transversal elements."""
        g = identity(self.degree)
        for lvl in reversed(self._levels):
            x = lvl.orbit_list[stream.randrange(len(lvl.orbit_list))]
            g = pmul(g, lvl.transversal[x])
        return g

    def subgroup_order(self, elems) -> int:
        """Order of the subgroup generated by elems, via a fresh chain."""
        for e in elems:
            if not self.contains(e):
                raise NotInGroup(f"{format_cycles(e)} is not in the group")
        return PermGroup(self.degree, elems).order

    def is_transitive(self) -> bool:
        seen = {0}
        queue = [0]
        for x in queue:
            for s in self.gens:
                if s[x] not in seen:
                    seen.add(s[x])
                    queue.append(s[x])
        return len(seen) == self.degree

    def elements(self) -> list:
        """All elements, lexicographically sorted; see CLASS_CAP."""
        if self.order > CLASS_CAP:
            raise GroupTooLarge(f"group order {self.order} exceeds cap {CLASS_CAP}")
        seen = {identity(self.degree)}
        queue = [identity(self.degree)]
        for g in queue:
            for s in self.gens:
                h = pmul(g, s)
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
        return sorted(seen)

    def conjugacy_classes(self, cap: int = CLASS_CAP) -> tuple:
        """Classes sorted by (element order, size, minimal member)."""
        if self._classes is not None:
            return self._classes
        if self.order > cap:
            raise GroupTooLarge(f"group order {self.order} exceeds cap {cap}")
        assigned = {}
        classes = []
        for g in self.elements():
            if g in assigned:
                continue
            members = {g}
            queue = [g]
            for x in queue:
                for s in self.gens:
                    y = pconj(x, s)
                    if y not in members:
                        members.add(y)
                        queue.append(y)
            classes.append(ConjClass(g, len(members), element_order(g), tuple(sorted(members))))
            for m in members:
                assigned[m] = None
        classes.sort(key=lambda c: (c.element_order, c.size, c.rep))
        index = {}
        for i, cls in enumerate(classes):
            for m in cls.members:
                index[m] = i
        self._classes = tuple(classes)
        self._class_index = index
        return self._classes

    def class_index(self) -> dict:
        """Member-to-class-position map; builds classes on first use."""
        if self._class_index is None:
            self.conjugacy_classes()
        return self._class_index

    def __repr__(self):
        label = self.name or f"degree-{self.degree} group"
        return f"PermGroup({label}, order={self.order})"


def group_from_generators(degree: int, gens, name: str = None) -> PermGroup:
    return PermGroup(degree, gens, name=name)


# standard constructions ----------------------------------------------------


def alternating(n: int) -> PermGroup:
    if n < 3:
        raise ValueError("alternating groups here start at degree 3")
    three = perm_from_cycles(n, [(1, 2, 3)])
    if n % 2 == 1:
        big = perm_from_cycles(n, [tuple(range(1, n + 1))])
    else:
        big = perm_from_cycles(n, [tuple(range(2, n + 1))])
    return PermGroup(n, (three, big), name=f"A{n}")


def symmetric(n: int) -> PermGroup:
    if n < 2:
        raise ValueError("symmetric groups here start at degree 2")
    swap = perm_from_cycles(n, [(1, 2)])
    big = perm_from_cycles(n, [tuple(range(1, n + 1))])
    return PermGroup(n, (swap, big), name=f"S{n}")


def cyclic(n: int) -> PermGroup:
    return PermGroup(n, (perm_from_cycles(n, [tuple(range(1, n + 1))]),), name=f"C{n}")


def psl2(q: int) -> PermGroup:
    """PSL(2, q) acting on the projective line: q field points then infinity.

    Generators: translation by one, multiplication by the square of a
    primitive element, and x -> -1/x.
    """
    base, k = _prime_power(q)
    F = ff.make_field(base, k)
    infinity = q
    gamma = _multiplicative_generator(F)
    gamma2 = F.mul(gamma, gamma)
    trans = [0] * (q + 1)
    mult = [0] * (q + 1)
    invneg = [0] * (q + 1)
    for n in range(q):
        x = F.element(n)
        trans[n] = F.encode(F.add(x, F.one))
        mult[n] = F.encode(F.mul(gamma2, x))
        if n == 0:
            invneg[n] = infinity
        else:
            invneg[n] = F.encode(F.neg(F.inv(x)))
    trans[infinity] = infinity
    mult[infinity] = infinity
    invneg[infinity] = 0
    G = PermGroup(q + 1, (tuple(trans), tuple(mult), tuple(invneg)), name=f"L2({q})")
    expected = q * (q * q - 1) // gcd(2, q - 1)
    if G.order != expected:
        raise AssertionError(f"PSL(2,{q}) construction has order {G.order}, expected {expected}")
    return G


def affine_frobenius_2a(a: int) -> PermGroup:
    """The group (2^a translations) : (cyclic 2^a - 1) on the field GF(2^a)."""
    F = ff.make_field(2, a)
    q = 1 << a
    gamma = _multiplicative_generator(F)
    trans = [F.encode(F.add(F.element(n), F.one)) for n in range(q)]
    mult = [F.encode(F.mul(gamma, F.element(n))) for n in range(q)]
    G = PermGroup(q, (tuple(trans), tuple(mult)), name=f"F{q * (q - 1)}")
    if G.order != q * (q - 1):
        raise AssertionError(f"affine group over GF(2^{a}) has order {G.order}")
    return G


def _prime_power(q: int):
    if q < 2:
        raise ValueError(f"not a prime power: {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError(f"not a prime power: {q}")
            return p, k
    raise ValueError(f"not a prime power: {q}")


def _multiplicative_generator(F: ff.FieldCtx):
    """Smallest-encoding generator of the multiplicative group."""
    n = F.q - 1
    fac = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for enc in range(1, F.q):
        x = F.element(enc)
        if all(F.pow(x, n // r) != F.one for r in fac):
            return x
    raise AssertionError("multiplicative group has a generator; unreachable")


# builtin registry and group files -------------------------------------------

_BUILTIN_SPECS = {}
_BUILTIN_CACHE = {}


def _register_builtins():
    for n in range(4, 13):
        _BUILTIN_SPECS[f"A{n}"] = (alternating, n)
    for n in range(3, 7):
        _BUILTIN_SPECS[f"S{n}"] = (symmetric, n)
    for q in (7, 8, 11, 13):
        _BUILTIN_SPECS[f"L2_{q}"] = (psl2, q)
    _BUILTIN_SPECS["F12"] = (affine_frobenius_2a, 2)
    _BUILTIN_SPECS["F56"] = (affine_frobenius_2a, 3)


_register_builtins()


def builtin_group_names() -> list:
    return sorted(_BUILTIN_SPECS)


def builtin_group(name: str) -> PermGroup:
    if name not in _BUILTIN_SPECS:
        raise KeyError(f"unknown builtin group {name!r}; known: {builtin_group_names()}")
    if name not in _BUILTIN_CACHE:
        fn, arg = _BUILTIN_SPECS[name]
        G = fn(arg)
        G.name = name
        _BUILTIN_CACHE[name] = G
    return _BUILTIN_CACHE[name]


def parse_group_text(text: str) -> PermGroup:
    """Group file: 'group <name>', 'degree <n>', then 'gen <cycles>' lines.

    Cycle notation in files is 1-based; everything internal is 0-based.
    """
    name = None
    degree = None
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "group":
            name = rest
        elif key == "degree":
            degree = int(rest)
        elif key == "gen":
            if degree is None:
                raise ValueError("gen line before degree line")
            gens.append(perm_from_cycles(degree, _parse_cycles(rest)))
        else:
            raise ValueError(f"unrecognized group-file line: {raw!r}")
    if degree is None or not gens:
        raise ValueError("group file needs a degree and at least one gen line")
    return PermGroup(degree, gens, name=name)


def _parse_cycles(text: str) -> list:
    text = text.replace(" ", "")
    if text == "()":
        return []
    cycles = []
    i = 0
    while i < len(text):
        if text[i] != "(":
            raise ValueError(f"expected '(' in cycle notation: {text!r}")
        j = text.index(")", i)
        body = text[i + 1 : j]
        if body:
            cycles.append(tuple(int(tok) for tok in body.split(",")))
        i = j + 1
    return cycles


def read_group_file(path) -> PermGroup:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_text(fh.read())


def format_group(G: PermGroup) -> str:
    lines = []
    if G.name:
        lines.append(f"group {G.name}")
    lines.append(f"degree {G.degree}")
    for g in G.gens:
        lines.append(f"gen {format_cycles(g)}")
    return "\n".join(lines) + "\n"

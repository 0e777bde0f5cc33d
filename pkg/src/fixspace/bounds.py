"""Fixed-space bound checks over a built-in catalog of representations.

Each clause gates on arithmetic hypotheses (characteristic vs group order,
vs dimension, primality of the dimension) and asserts a bound on fixed-space
dimensions of semisimple elements, strict or non-strict exactly as stated.
The catalog rows pin the families where the bounds are known to be sharp.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import matrep
from .ff import is_prime, make_field
from .matrep import (
    MatRep,
    build_rep,
    builtin_matgroup,
    deleted,
    dual,
    eigenspace_profile,
    fixed_space_dim,
    is_irreducible,
    perm_module,
    section,
    sym_power,
    tensor,
)
from .perm import builtin_group, element_order, pinv, pmul, ppow
from .rng import SeedStream


class NotIrreducible(ValueError):
    pass


def min_semisimple_fixdim(rep: MatRep, p: int = None):
    """Minimum fixed-space dimension over nontrivial p'-classes.

    Returns (class, dim); ties go to the smaller element order, then to
    the earlier class in the canonical ordering.
    """
    if p is None:
        p = rep.field.p
    best = None
    for cls in rep.group.conjugacy_classes():
        if cls.element_order == 1 or cls.element_order % p == 0:
            continue
        d = fixed_space_dim(rep, cls.rep)
        if best is None or d < best[1]:
            best = (cls, d)
    if best is None:
        raise ValueError("no nontrivial semisimple classes")
    return best


@dataclass(frozen=True)
class ClauseResult:
    clause: str
    applicable: bool
    threshold: Fraction
    strict: bool
    satisfied: bool          # vacuously True when not applicable
    witness_order: int = 0
    witness_dim: int = -1


@dataclass(frozen=True)
class BoundReport:
    dim: int
    p: int
    group_order: int
    min_fixed_dim: int
    min_class_order: int
    min_class_index: int
    clauses: tuple

    @property
    def holds(self) -> bool:
        return all(c.satisfied for c in self.clauses if c.applicable)


def _order_mod(a: int, n: int) -> int:
    a %= n
    if a == 0:
        return 0
    x = a
    o = 1
    while x != 1:
        x = x * a % n
        o += 1
        if o > n:
            return 0
    return o


def check_bound_theorems(rep: MatRep, p: int = None) -> BoundReport:
    """Evaluate every applicable fixed-space bound clause on one module.

    Clauses, with their gates:
      half-strict                always: some semisimple class has
                                 fixed dim < n/2 (strict)
      coprime-order-third        p does not divide |G|: min <= n/3
      large-char-third           p > n + 2: min <= n/3
      coprime-dim-three-eighths  p does not divide n: min <= 3n/8
      two-primitive-third        n an odd prime with 2 generating the
                                 units mod n: min <= n/3
      prime-dim-line-eigenspaces n an odd prime, p > 2n - 3: some
                                 semisimple class has every eigenspace
                                 of dimension <= 1
    """
    if p is None:
        p = rep.field.p
    verdict = is_irreducible(rep, SeedStream(1))
    if not verdict.irreducible:
        raise NotIrreducible(f"module of dimension {rep.dim} is reducible")
    n = rep.dim
    group = rep.group
    cls, mindim = min_semisimple_fixdim(rep, p)
    if fixed_space_dim(rep, cls.rep) != mindim:
        raise AssertionError("witness fixed dimension failed recomputation")
    classes = group.conjugacy_classes()
    cls_index = classes.index(cls)
    mo = cls.element_order
    md = Fraction(mindim)

    clauses = [
        ClauseResult("half-strict", True, Fraction(n, 2), True,
                     md < Fraction(n, 2), mo, mindim),
        ClauseResult("coprime-order-third", group.order % p != 0,
                     Fraction(n, 3), False, md <= Fraction(n, 3), mo, mindim),
        ClauseResult("large-char-third", p > n + 2,
                     Fraction(n, 3), False, md <= Fraction(n, 3), mo, mindim),
        ClauseResult("coprime-dim-three-eighths", n % p != 0,
                     Fraction(3 * n, 8), False, md <= Fraction(3 * n, 8),
                     mo, mindim),
        ClauseResult("two-primitive-third",
                     n % 2 == 1 and is_prime(n) and _order_mod(2, n) == n - 1,
                     Fraction(n, 3), False, md <= Fraction(n, 3), mo, mindim),
    ]
    # make inapplicable clauses vacuous regardless of the observed minimum
    clauses = [
        c if c.applicable else
        ClauseResult(c.clause, False, c.threshold, c.strict, True)
        for c in clauses
    ]

    line_applicable = n % 2 == 1 and is_prime(n) and p > 2 * n - 3
    if line_applicable:
        found = None
        for c in classes:
            if c.element_order == 1 or c.element_order % p == 0:
                continue
            prof = eigenspace_profile(rep, c.rep, p)
            if prof.max_eigenspace_dim <= 1:
                found = (c, prof.max_eigenspace_dim)
                break
        if found:
            clauses.append(ClauseResult(
                "prime-dim-line-eigenspaces", True, Fraction(1), False,
                True, found[0].element_order, found[1]))
        else:
            clauses.append(ClauseResult(
                "prime-dim-line-eigenspaces", True, Fraction(1), False, False))
    else:
        clauses.append(ClauseResult(
            "prime-dim-line-eigenspaces", False, Fraction(1), False, True))

    return BoundReport(n, p, group.order, mindim, mo, cls_index, tuple(clauses))


# two-generator fixed-space inequality ------------------------------------


@dataclass(frozen=True)
class ScottReport:
    lhs: int
    rhs: int
    fixed_x: int
    fixed_y: int
    fixed_product_inv: int
    ambient: int
    invariants: int
    dual_invariants: int
    holds: bool


def scott_check(rep: MatRep, x, y) -> ScottReport:
    """Fixed dims of x, y, (xy)^-1 against dim V plus the invariants of
    <x, y> on V and on its dual.  The inequality is a theorem; a failure
    means a computation bug, so callers treat holds=False as fatal.
    """
    dx = fixed_space_dim(rep, x)
    dy = fixed_space_dim(rep, y)
    dz = fixed_space_dim(rep, pinv(pmul(x, y)))
    inv = matrep.module_fixed_dim(rep, (x, y))
    dinv = matrep.module_dual_fixed_dim(rep, (x, y))
    lhs = dx + dy + dz
    rhs = rep.dim + inv + dinv
    return ScottReport(lhs, rhs, dx, dy, dz, rep.dim, inv, dinv, lhs <= rhs)


@dataclass(frozen=True)
class ScottSuiteReport:
    checked: int
    violations: tuple


def scott_suite(rep: MatRep, pairs: int = 1000, seed: int = 1) -> ScottSuiteReport:
    stream = SeedStream(seed)
    violations = []
    for _ in range(pairs):
        x = rep.group.random_element(stream)
        y = rep.group.random_element(stream)
        if not scott_check(rep, x, y).holds:
            violations.append((x, y))
    return ScottSuiteReport(pairs, tuple(violations))


# the dim p^2 - 2 section of the 3x3 matrix module ------------------------


def _irreducible_section(spec, F, target_dim: int, seed: int = 7) -> MatRep:
    """Walk sub/quotient certificates until an irreducible section of the
    wanted dimension appears."""
    queue = [spec]
    for _ in range(64):
        if not queue:
            break
        cur = queue.pop(0)
        rep = build_rep(cur, F)
        verdict = is_irreducible(rep, SeedStream(seed))
        if verdict.irreducible:
            if rep.dim == target_dim:
                return rep
            continue
        queue.append(section(cur, "sub", verdict.submodule))
        queue.append(section(cur, "quotient", verdict.submodule))
    raise AssertionError(f"no irreducible section of dimension {target_dim}")


@dataclass(frozen=True)
class AdjointSectionReport:
    p: int
    ambient_dim: int
    section_dim: int
    bound: int
    min_fixed: int
    witness_order: int
    classes_checked: int
    holds: bool


_sl3_heart_cache = []


def sl3_adjoint_heart() -> MatRep:
    """The 7-dimensional irreducible section of 3x3 matrices over GF(3)
    under conjugation by SL3(3)."""
    if not _sl3_heart_cache:
        _, nat = builtin_matgroup("SL3_3")
        spec = tensor(nat.spec, dual(nat.spec))
        rep = _irreducible_section(spec, nat.field, 7)
        _sl3_heart_cache.append(rep)
    return _sl3_heart_cache[0]


def sl_p_adjoint_check(p: int = 3, q: int = 3) -> AdjointSectionReport:
    """Every nontrivial semisimple class of SL3(3) keeps a fixed space of
    dimension at least p - 2 = 1 on the 7-dimensional section.

    The ambient conjugation module has dimension 9; regular semisimple
    elements are centralized by a maximal torus there, and passing to the
    section costs at most the two trivial composition factors.
    """
    if p != 3 or q != 3:
        raise ValueError("only the SL3(3) desk instance is built in")
    rep = sl3_adjoint_heart()
    bound = p - 2
    best = None
    checked = 0
    for cls in rep.group.conjugacy_classes():
        if cls.element_order == 1 or cls.element_order % p == 0:
            continue
        checked += 1
        d = fixed_space_dim(rep, cls.rep)
        if best is None or d < best[1]:
            best = (cls, d)
    cls, mind = best
    return AdjointSectionReport(
        p, 9, rep.dim, bound, mind, cls.element_order, checked, mind >= bound
    )


# free action of an order-3 subgroup of the extraspecial group -------------


@dataclass(frozen=True)
class FreeActionReport:
    dim: int
    subgroup_order: int
    element_orders: tuple
    max_eigenspace_dim: int
    holds: bool


def extraspecial_free_check() -> FreeActionReport:
    """The diagonal order-3 generator of the extraspecial group of order 27
    acts on the 3-dimensional module with all eigenspaces of dimension 1,
    and so does its square: the chosen order-3 subgroup acts freely."""
    group, rep = builtin_matgroup("E27")
    x = group.gens[0]
    elems = (x, ppow(x, 2))
    orders = []
    worst = 0
    for g in elems:
        prof = eigenspace_profile(rep, g)
        orders.append(element_order(g))
        worst = max(worst, prof.max_eigenspace_dim)
    return FreeActionReport(rep.dim, 3, tuple(orders), worst, worst == 1)


# regression catalog --------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    ident: str
    group_name: str
    construction: str
    p: int
    rep: MatRep


_DELETED_ROWS = (
    ("A4", 4), ("A5", 5), ("A6", 6), ("A7", 7), ("A8", 8), ("A9", 9),
    ("S3", 3), ("S4", 4), ("S5", 5), ("S6", 6),
)

_CATALOG = []


def catalog() -> tuple:
    """Irreducible modules exercised by the bound checks.

    Deleted permutation modules in coprime-to-|points| characteristic,
    both affine Frobenius sharpness families, SL2 naturals with symmetric
    powers up to the restricted range, SL3(3) natural plus its adjoint
    section, and the extraspecial dim-3 module.
    """
    if _CATALOG:
        return tuple(_CATALOG)
    entries = []
    for gname, npts in _DELETED_ROWS:
        G = builtin_group(gname)
        for q in (2, 3, 5, 7, 11, 13):
            if npts % q == 0:
                continue
            rep = build_rep(deleted(perm_module(G)), make_field(q))
            entries.append(CatalogEntry(
                f"{gname.lower()}-deleted-gf{q}", gname,
                f"deleted({gname} on {npts} points) over GF({q})", q, rep))
    for name, a, q in (("F12", 2, 3), ("F56", 3, 7)):
        G = builtin_group(name)
        rep = build_rep(deleted(perm_module(G)), make_field(q))
        entries.append(CatalogEntry(
            f"mersenne-a{a}", name,
            f"deleted({name} on {2 ** a} points) over GF({q})", q, rep))
    for name in ("SL2_5", "SL2_7"):
        _, nat = builtin_matgroup(name)
        low = name.lower()
        entries.append(CatalogEntry(
            f"{low}-natural", name, f"natural {name} module", nat.field.p, nat))
        for s in (2, 3, 4):
            rep = build_rep(sym_power(nat.spec, s), nat.field)
            entries.append(CatalogEntry(
                f"{low}-sym{s}", name, f"sym^{s} of natural {name}",
                nat.field.p, rep))
    _, nat = builtin_matgroup("SL3_3")
    entries.append(CatalogEntry(
        "sl3_3-natural", "SL3_3", "natural SL3(3) module", 3, nat))
    entries.append(CatalogEntry(
        "sl3_3-adjoint-heart", "SL3_3",
        "dim-7 section of 3x3 matrices under SL3(3) conjugation", 3,
        sl3_adjoint_heart()))
    _, e27 = builtin_matgroup("E27")
    entries.append(CatalogEntry(
        "e27", "E27", "extraspecial 27 in dimension 3 over GF(7)", 7, e27))
    _CATALOG.extend(entries)
    return tuple(_CATALOG)

"""Matrix representations of permutation groups over finite fields.

A representation is described by a small recipe AST (ModuleSpec) and
evaluated structurally: the matrix of a group element is computed from
the element itself, never from a word in the generators, so the map
g -> image(g) is a homomorphism by construction. Supported recipes:
permutation module, deleted (sum-zero) module, tensor product, dual,
Frobenius twist, symmetric power, explicit matrix generators, and
sub/quotient sections.

The deleted module is the span of e_i - e_0 inside the permutation
module, which is the sum-zero hyperplane in every characteristic.
When p divides the point count it contains the all-ones vector and is
reducible; the dimension n - 2 heart is then reached via section().
"""

import json
import math
from dataclasses import dataclass, replace

from . import ff, linalg
from .ff import FieldCtx
from .perm import PermGroup, NotInGroup, pinv, pmul, element_order, builtin_group
from .rng import SeedStream


class IllTyped(ValueError):
    """Recipe AST violates a structural requirement."""


class FieldMismatch(ValueError):
    """Recipe mixes distinct coefficient fields."""


class NotSemisimple(ValueError):
    """Eigenspace data requested for an element of order divisible by p."""


class NotInvertible(ValueError):
    pass


class OrbitTooLarge(ValueError):
    pass


class Inconclusive(RuntimeError):
    """Irreducibility search exhausted its random-element budget."""

    def __init__(self, budget: int):
        super().__init__(f"no verdict after {budget} random group-algebra elements")
        self.budget = budget


# recipe AST ----------------------------------------------------------------


@dataclass(frozen=True)
class ModuleSpec:
    kind: str
    children: tuple = ()
    group: object = None
    field: object = None
    power: int = 0
    matrices: tuple = ()
    orbit: tuple = ()
    seed_index: tuple = ()
    basis: tuple = None
    mode: str = ""


def perm_module(group: PermGroup, field: FieldCtx = None) -> ModuleSpec:
    return ModuleSpec(kind="perm", group=group, field=field)


def deleted(spec: ModuleSpec) -> ModuleSpec:
    if spec.kind != "perm":
        raise IllTyped("deleted applies to a permutation module only")
    return ModuleSpec(kind="deleted", children=(spec,))


def tensor(a: ModuleSpec, b: ModuleSpec) -> ModuleSpec:
    return ModuleSpec(kind="tensor", children=(a, b))


def dual(spec: ModuleSpec) -> ModuleSpec:
    return ModuleSpec(kind="dual", children=(spec,))


def frobenius_twist(spec: ModuleSpec, i: int) -> ModuleSpec:
    if i < 0:
        raise IllTyped("twist exponent must be nonnegative")
    return ModuleSpec(kind="twist", children=(spec,), power=i)


def sym_power(spec: ModuleSpec, s: int) -> ModuleSpec:
    if s < 1:
        raise IllTyped("symmetric power needs s >= 1")
    return ModuleSpec(kind="sym", children=(spec,), power=s)


def section(spec: ModuleSpec, mode: str, basis=None) -> ModuleSpec:
    if mode not in ("sub", "quotient"):
        raise IllTyped(f"section mode {mode!r} is not sub or quotient")
    if basis is not None:
        basis = tuple(tuple(v) for v in basis)
    return ModuleSpec(kind="section", children=(spec,), mode=mode, basis=basis)


def _fields_of(spec: ModuleSpec, out: list):
    if spec.field is not None:
        out.append(spec.field)
    for c in spec.children:
        _fields_of(c, out)


def _group_of(spec: ModuleSpec) -> PermGroup:
    if spec.kind in ("perm", "explicit"):
        return spec.group
    groups = [_group_of(c) for c in spec.children]
    for g in groups[1:]:
        if g is not groups[0]:
            raise IllTyped("recipe mixes modules of different groups")
    return groups[0]


def _same_field(a: FieldCtx, b: FieldCtx) -> bool:
    return a.p == b.p and a.k == b.k and a.modulus == b.modulus


# representation ------------------------------------------------------------


class MatRep:
    """Generator images plus a structural evaluator for arbitrary elements."""

    def __init__(self, spec: ModuleSpec, field: FieldCtx):
        self.spec = spec
        self.field = field
        self.group = _group_of(spec)
        self._section_data = {}
        self._monomials = {}
        self.dim = self._dim_of(spec)
        self.images = tuple(self.image(g) for g in self.group.gens)
        for M in self.images:
            if linalg.det(field, M) == field.zero:
                raise IllTyped("generator image is singular")

    def _dim_of(self, node: ModuleSpec) -> int:
        k = node.kind
        if k == "perm":
            return node.group.degree
        if k == "deleted":
            return node.children[0].group.degree - 1
        if k == "tensor":
            return self._dim_of(node.children[0]) * self._dim_of(node.children[1])
        if k in ("dual", "twist"):
            return self._dim_of(node.children[0])
        if k == "sym":
            m = self._dim_of(node.children[0])
            return math.comb(m + node.power - 1, node.power)
        if k == "explicit":
            return len(node.matrices[0])
        if k == "section":
            rows, pivots, nonpivots = self._section_of(node)
            return len(rows) if node.mode == "sub" else len(nonpivots)
        raise IllTyped(f"unknown recipe node {k!r}")

    def _section_of(self, node: ModuleSpec):
        key = id(node)
        if key not in self._section_data:
            if node.basis is None:
                raise IllTyped("section basis unresolved; use build_rep")
            parent_dim = self._dim_of(node.children[0])
            if any(len(v) != parent_dim for v in node.basis):
                raise IllTyped("section basis length differs from parent dimension")
            rows, pivots = linalg.rref(self.field, [list(v) for v in node.basis])
            if not rows or len(rows) == parent_dim:
                raise IllTyped("section basis spans zero or everything")
            nonpivots = [j for j in range(parent_dim) if j not in set(pivots)]
            self._section_data[key] = (rows, pivots, nonpivots)
        return self._section_data[key]

    def _monomials_of(self, node: ModuleSpec, m: int):
        key = id(node)
        if key not in self._monomials:
            monos = []

            def rec(prefix, remaining, slots):
                if slots == 1:
                    monos.append(prefix + (remaining,))
                    return
                for a in range(remaining, -1, -1):
                    rec(prefix + (a,), remaining - a, slots - 1)

            rec((), node.power, m)
            self._monomials[key] = (tuple(monos), {mo: i for i, mo in enumerate(monos)})
        return self._monomials[key]

    def image(self, g: tuple) -> list:
        return self._image(self.spec, g)

    def dual_image(self, g: tuple) -> list:
        return linalg.transpose(self._image(self.spec, pinv(g)))

    def _image(self, node: ModuleSpec, g: tuple) -> list:
        F = self.field
        k = node.kind
        if k == "perm":
            n = node.group.degree
            M = [[F.zero] * n for _ in range(n)]
            for j in range(n):
                M[g[j]][j] = F.one
            return M
        if k == "deleted":
            # basis b_j = e_j - e_0; g.b_j = e_{g[j]} - e_{g[0]} = b_{g[j]} - b_{g[0]}
            n = node.children[0].group.degree
            M = [[F.zero] * (n - 1) for _ in range(n - 1)]
            for j in range(1, n):
                if g[j] != 0:
                    M[g[j] - 1][j - 1] = F.add(M[g[j] - 1][j - 1], F.one)
                if g[0] != 0:
                    M[g[0] - 1][j - 1] = F.sub(M[g[0] - 1][j - 1], F.one)
            return M
        if k == "tensor":
            A = self._image(node.children[0], g)
            B = self._image(node.children[1], g)
            return linalg.kron(F, A, B)
        if k == "dual":
            return linalg.transpose(self._image(node.children[0], pinv(g)))
        if k == "twist":
            A = self._image(node.children[0], g)
            for _ in range(node.power):
                A = [[F.frobenius(x) for x in row] for row in A]
            return A
        if k == "sym":
            A = self._image(node.children[0], g)
            m = len(A)
            monos, index = self._monomials_of(node, m)
            cols = []
            for expo in monos:
                poly = {(0,) * m: F.one}
                for i, a in enumerate(expo):
                    for _ in range(a):
                        nxt = {}
                        for t, c in poly.items():
                            for r in range(m):
                                coef = A[r][i]
                                if coef == F.zero:
                                    continue
                                t2 = t[:r] + (t[r] + 1,) + t[r + 1:]
                                prev = nxt.get(t2, F.zero)
                                nxt[t2] = F.add(prev, F.mul(c, coef))
                        poly = nxt
                    # a = 0 contributes nothing
                cols.append([poly.get(mo, F.zero) for mo in monos])
            d = len(monos)
            return [[cols[j][i] for j in range(d)] for i in range(d)]
        if k == "explicit":
            n = len(node.matrices[0])
            M = [[F.zero] * n for _ in range(n)]
            for j in range(n):
                vec = node.orbit[g[node.seed_index[j]]]
                for i in range(n):
                    M[i][j] = vec[i]
            return M
        if k == "section":
            Mc = self._image(node.children[0], g)
            rows, pivots, nonpivots = self._section_of(node)
            if node.mode == "sub":
                out = []
                for b in rows:
                    w = linalg.mat_vec(F, Mc, b)
                    coords = [w[p] for p in pivots]
                    back = [F.zero] * len(w)
                    for c, row in zip(coords, rows):
                        if c != F.zero:
                            for t in range(len(w)):
                                back[t] = F.add(back[t], F.mul(c, row[t]))
                    if tuple(back) != w:
                        raise IllTyped("section basis is not invariant")
                    out.append(coords)
                return linalg.transpose(out)
            out = []
            for j in nonpivots:
                w = [Mc[i][j] for i in range(len(Mc))]
                for p, row in zip(pivots, rows):
                    c = w[p]
                    if c != F.zero:
                        for t in range(len(w)):
                            w[t] = F.sub(w[t], F.mul(c, row[t]))
                out.append([w[t] for t in nonpivots])
            return linalg.transpose(out)
        raise IllTyped(f"unknown recipe node {k!r}")

    def __repr__(self):
        return f"MatRep(dim={self.dim}, q={self.field.q}, group={self.group!r})"


def build_rep(spec: ModuleSpec, field: FieldCtx = None) -> MatRep:
    """Resolve the coefficient field and any automatic sections, then build."""
    found = []
    _fields_of(spec, found)
    if field is not None:
        found.insert(0, field)
    if not found:
        raise IllTyped("recipe carries no coefficient field")
    for other in found[1:]:
        if not _same_field(found[0], other):
            raise FieldMismatch(f"GF({found[0].q}) vs GF({other.q})")
    F = found[0]
    spec = _resolve_sections(spec, F)
    return MatRep(spec, F)


def _resolve_sections(node: ModuleSpec, F: FieldCtx) -> ModuleSpec:
    children = tuple(_resolve_sections(c, F) for c in node.children)
    if children != node.children:
        node = replace(node, children=children)
    if node.kind == "section" and node.basis is None:
        parent = MatRep(node.children[0], F)
        verdict = is_irreducible(parent, SeedStream(1))
        if verdict.irreducible:
            raise IllTyped("section of an irreducible module")
        node = replace(node, basis=verdict.submodule)
    return node


# pointwise quantities -------------------------------------------------------


def char_poly(rep: MatRep, g: tuple) -> tuple:
    if not rep.group.contains(g):
        raise NotInGroup("element is outside the represented group")
    return linalg.char_poly(rep.field, rep.image(g))


def fixed_space_dim(rep: MatRep, g: tuple) -> int:
    """dim ker(image(g) - 1), the fixed space dimension."""
    if not rep.group.contains(g):
        raise NotInGroup("element is outside the represented group")
    F = rep.field
    M = rep.image(g)
    for i in range(rep.dim):
        M[i][i] = F.sub(M[i][i], F.one)
    return linalg.nullity(F, M)


@dataclass(frozen=True)
class EigenProfile:
    parts: tuple            # (squarefree part degree, multiplicity), ascending mult
    max_eigenspace_dim: int
    fixed_dim: int          # multiplicity of the eigenvalue 1


def eigenspace_profile(rep: MatRep, g: tuple, p: int = None) -> EigenProfile:
    """Eigenspace dimensions over the algebraic closure of a semisimple element.

    For p'-elements geometric and algebraic multiplicities agree, so the
    multiplicities of the squarefree decomposition of the characteristic
    polynomial are exactly the eigenspace dimensions.
    """
    if p is None:
        p = rep.field.p
    if element_order(g) % p == 0:
        raise NotSemisimple(f"element order {element_order(g)} is divisible by {p}")
    F = rep.field
    ch = char_poly(rep, g)
    parts = ff.squarefree_decomposition(F, ch)
    return EigenProfile(
        parts=tuple((ff.poly_deg(part), mult) for part, mult in parts),
        max_eigenspace_dim=max(mult for _, mult in parts),
        fixed_dim=ff.root_multiplicity(F, ch, F.one),
    )


def module_fixed_dim(rep: MatRep, elems) -> int:
    """dim of the common fixed space of the subgroup generated by elems."""
    return _joint_fixed(rep, elems, rep.image)


def module_dual_fixed_dim(rep: MatRep, elems) -> int:
    return _joint_fixed(rep, elems, rep.dual_image)


def _joint_fixed(rep: MatRep, elems, image) -> int:
    F = rep.field
    stacked = []
    for x in elems:
        if not rep.group.contains(x):
            raise NotInGroup("element is outside the represented group")
        M = image(x)
        for i in range(rep.dim):
            M[i][i] = F.sub(M[i][i], F.one)
        stacked.extend(M)
    if not stacked:
        return rep.dim
    return linalg.nullity(F, stacked)


# irreducibility -------------------------------------------------------------


@dataclass(frozen=True)
class IrredResult:
    irreducible: bool
    submodule: tuple = None   # proper invariant subspace basis when reducible
    witness: tuple = None     # singular group-algebra element when irreducible


def spin_span(F: FieldCtx, mats, seeds) -> tuple:
    """Row-reduced basis of the smallest mats-invariant space containing seeds."""
    n = len(mats[0]) if mats else len(seeds[0])
    sb = linalg.SpinBasis(F, n)
    queue = []
    for v in seeds:
        if sb.add(v):
            queue.append(tuple(v))
    for v in queue:
        for M in mats:
            w = linalg.mat_vec(F, M, v)
            if sb.add(w):
                queue.append(w)
    return sb.basis()


def _random_algebra_element(rep: MatRep, stream: SeedStream) -> list:
    F = rep.field
    n = rep.dim
    theta = [[F.zero] * n for _ in range(n)]
    terms = 3 + stream.randrange(4)
    for _ in range(terms):
        length = 1 + stream.randrange(8)
        word = rep.images[stream.randrange(len(rep.images))]
        for _ in range(length - 1):
            word = linalg.mat_mul(F, word, rep.images[stream.randrange(len(rep.images))])
        coeff = F.element(1 + stream.randrange(F.q - 1))
        for i in range(n):
            for j in range(n):
                theta[i][j] = F.add(theta[i][j], F.mul(coeff, word[i][j]))
    return theta


def is_irreducible(rep: MatRep, stream: SeedStream = None, budget: int = 200) -> IrredResult:
    """Norton-style test: seeded singular group-algebra elements, spun kernels.

    Reducible verdicts return a proper invariant subspace; irreducible
    verdicts return the singular witness element. Raises Inconclusive
    when budget singular-candidate draws produce no verdict.
    """
    if stream is None:
        stream = SeedStream(1)
    F = rep.field
    n = rep.dim
    if n == 1:
        return IrredResult(irreducible=True)
    if not rep.images:
        # trivial group fixes every line
        line = [F.zero] * n
        line[0] = F.one
        return IrredResult(irreducible=False, submodule=(tuple(line),))
    transposed = [linalg.transpose(M) for M in rep.images]
    for _ in range(budget):
        theta = _random_algebra_element(rep, stream)
        kernel = linalg.nullspace(F, theta)
        if not kernel:
            continue
        for v in kernel:
            span = spin_span(F, rep.images, [v])
            if len(span) < n:
                return IrredResult(irreducible=False, submodule=span)
        w = linalg.nullspace(F, linalg.transpose(theta))[0]
        dual_span = spin_span(F, transposed, [w])
        if len(dual_span) < n:
            # perp of a proper dual-invariant space is proper and invariant
            sub = linalg.nullspace(F, [list(r) for r in dual_span])
            rows, _ = linalg.rref(F, [list(v) for v in sub])
            return IrredResult(irreducible=False, submodule=tuple(tuple(r) for r in rows))
        return IrredResult(irreducible=True, witness=tuple(tuple(r) for r in theta))
    raise Inconclusive(budget)


def verify_homomorphism(rep: MatRep, stream: SeedStream, trials: int = 200, max_len: int = 8) -> bool:
    """Evaluate seeded relator words: w(gens) = 1 in G must give w(images) = 1."""
    F = rep.field
    gens = rep.group.gens
    if not gens:
        return True
    ident = linalg.eye(F, rep.dim)
    for _ in range(trials):
        length = 1 + stream.randrange(max_len)
        idx = [stream.randrange(len(gens)) for _ in range(length)]
        g = gens[idx[0]]
        M = rep.images[idx[0]]
        for i in idx[1:]:
            # images compose contravariantly, so the product grows on the left
            g = pmul(g, gens[i])
            M = linalg.mat_mul(F, rep.images[i], M)
        # w = u^order(u) is a relator
        power = element_order(g)
        acc = ident
        base = M
        while power:
            if power & 1:
                acc = linalg.mat_mul(F, acc, base)
            power >>= 1
            if power:
                base = linalg.mat_mul(F, base, base)
        if acc != ident:
            return False
    return True


# matrix groups as permutation groups ----------------------------------------


def embed_matrix_group(F: FieldCtx, dim: int, matrices, name: str = None,
                       cap: int = 10**6):
    """Permutation action on the orbit of the standard basis vectors.

    The orbit contains a basis, so the action is faithful by construction.
    Returns (PermGroup, MatRep); the representation is the tautological one.
    """
    mats = [_coerce_matrix(F, M, dim) for M in matrices]
    for M in mats:
        if linalg.det(F, M) == F.zero:
            raise NotInvertible("matrix generator is singular")
    index = {}
    orbit = []

    def visit(v):
        index[v] = len(orbit)
        orbit.append(v)
        if len(orbit) > cap:
            raise OrbitTooLarge(f"orbit exceeds {cap} vectors")

    for j in range(dim):
        e = tuple(F.one if i == j else F.zero for i in range(dim))
        if e in index:
            continue
        start = len(orbit)
        visit(e)
        k = start
        while k < len(orbit):
            v = orbit[k]
            for M in mats:
                w = linalg.mat_vec(F, M, v)
                if w not in index:
                    visit(w)
            k += 1
    seed_index = tuple(
        index[tuple(F.one if i == j else F.zero for i in range(dim))]
        for j in range(dim)
    )
    perms = [
        tuple(index[linalg.mat_vec(F, M, v)] for v in orbit)
        for M in mats
    ]
    group = PermGroup(len(orbit), perms, name=name)
    spec = ModuleSpec(
        kind="explicit",
        group=group,
        field=F,
        matrices=tuple(tuple(tuple(row) for row in M) for M in mats),
        orbit=tuple(orbit),
        seed_index=seed_index,
    )
    return group, MatRep(spec, F)


def _coerce_matrix(F: FieldCtx, M, dim: int) -> list:
    if len(M) != dim or any(len(row) != dim for row in M):
        raise IllTyped(f"matrix is not {dim}x{dim}")
    return [[x if not isinstance(x, int) else F.element(x) for x in row] for row in M]


# builtin matrix groups -------------------------------------------------------

_MATGROUP_SPECS = {
    # special linear groups by their usual two generators
    "SL2_5": (5, 1, 2, [[[1, 1], [0, 1]], [[0, 1], [4, 0]]], 120),
    "SL2_7": (7, 1, 2, [[[1, 1], [0, 1]], [[0, 1], [6, 0]]], 336),
    "SL3_3": (3, 1, 3,
              [[[1, 1, 0], [0, 1, 0], [0, 0, 1]],
               [[0, 0, 1], [1, 0, 0], [0, 1, 0]]], 5616),
    # extraspecial group of order 27, exponent 3, in its 3-dimensional
    # representation over GF(7); 2 is a primitive cube root of unity mod 7
    "E27": (7, 1, 3,
            [[[1, 0, 0], [0, 2, 0], [0, 0, 4]],
             [[0, 0, 1], [1, 0, 0], [0, 1, 0]]], 27),
}

_matgroup_cache = {}


def builtin_matgroup(name: str):
    """(PermGroup, tautological MatRep) for a named builtin matrix group."""
    if name not in _matgroup_cache:
        if name not in _MATGROUP_SPECS:
            raise KeyError(f"unknown matrix group {name!r}")
        p, k, dim, mats, order = _MATGROUP_SPECS[name]
        F = ff.make_field(p, k)
        group, rep = embed_matrix_group(F, dim, mats, name=name)
        assert group.order == order, (name, group.order)
        _matgroup_cache[name] = (group, rep)
    return _matgroup_cache[name]


# file formats ----------------------------------------------------------------


def parse_matgroup_text(text: str):
    """Matrix group file: header line then one gen line per generator."""
    name = None
    F = None
    dim = None
    mats = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("matgroup"):
            parts = line.split()
            name = parts[1]
            fields = dict(zip(parts[2::2], parts[3::2]))
            p = int(fields["field"])
            k = int(fields.get("ext", "1"))
            dim = int(fields["dim"])
            F = ff.make_field(p, k)
        elif line.startswith("gen"):
            if F is None:
                raise IllTyped("gen line before matgroup header")
            mats.append(json.loads(line[3:].strip()))
        else:
            raise IllTyped(f"unrecognized line {line!r}")
    if F is None or not mats:
        raise IllTyped("matrix group file needs a header and generators")
    return name, F, dim, mats


def read_matgroup_file(path: str):
    with open(path) as fh:
        name, F, dim, mats = parse_matgroup_text(fh.read())
    return embed_matrix_group(F, dim, mats, name=name)


def _tokenize(text: str):
    out = []
    for raw in text.splitlines():
        out.append(raw.split(";", 1)[0])
    text = "\n".join(out)
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _parse_forms(tokens: list, pos: int):
    if tokens[pos] != "(":
        tok = tokens[pos]
        try:
            return int(tok), pos + 1
        except ValueError:
            return tok, pos + 1
    pos += 1
    form = []
    while tokens[pos] != ")":
        node, pos = _parse_forms(tokens, pos)
        form.append(node)
    return form, pos + 1


def parse_module_text(text: str, groups=None, matgroups=None) -> ModuleSpec:
    """S-expression module recipe, e.g. (deleted (perm A5) :field (gf 7)).

    Keyword pairs may trail any form; :field fixes the coefficient field
    and :mode selects the section kind. Group names resolve through the
    provided mappings, with the builtin registries as fallback.
    """
    tokens = _tokenize(text)
    form, pos = _parse_forms(tokens, 0)
    if pos != len(tokens):
        raise IllTyped("trailing tokens after module recipe")
    return _interpret(form, groups or {}, matgroups or {})


def _split_keywords(form: list):
    head = []
    kw = {}
    i = 0
    while i < len(form):
        item = form[i]
        if isinstance(item, str) and item.startswith(":"):
            kw[item[1:]] = form[i + 1]
            i += 2
        else:
            head.append(item)
            i += 1
    return head, kw


def _interpret(form, groups: dict, matgroups: dict) -> ModuleSpec:
    if not isinstance(form, list) or not form:
        raise IllTyped(f"expected a recipe form, got {form!r}")
    head, kw = _split_keywords(form)
    op = head[0]
    field = None
    if "field" in kw:
        gf = kw["field"]
        if not isinstance(gf, list) or gf[0] != "gf":
            raise IllTyped("field keyword expects (gf p) or (gf p k)")
        field = ff.make_field(gf[1], gf[2] if len(gf) > 2 else 1)
    if op == "perm":
        name = head[1]
        group = groups[name] if name in groups else builtin_group(name)
        spec = perm_module(group)
    elif op == "deleted":
        spec = deleted(_interpret(head[1], groups, matgroups))
    elif op == "tensor":
        spec = tensor(_interpret(head[1], groups, matgroups),
                      _interpret(head[2], groups, matgroups))
    elif op == "dual":
        spec = dual(_interpret(head[1], groups, matgroups))
    elif op == "twist":
        spec = frobenius_twist(_interpret(head[2], groups, matgroups), head[1])
    elif op == "sym":
        spec = sym_power(_interpret(head[2], groups, matgroups), head[1])
    elif op == "explicit":
        name = head[1]
        if name in matgroups:
            _, rep = matgroups[name]
        else:
            _, rep = builtin_matgroup(name)
        spec = rep.spec
    elif op == "section":
        spec = section(_interpret(head[1], groups, matgroups), kw.get("mode", "sub"))
    else:
        raise IllTyped(f"unknown recipe operator {op!r}")
    if field is not None:
        if spec.field is not None and not _same_field(spec.field, field):
            raise FieldMismatch(f"GF({spec.field.q}) vs GF({field.q})")
        spec = replace(spec, field=field)
    return spec


def read_module_file(path: str, groups=None, matgroups=None) -> MatRep:
    with open(path) as fh:
        spec = parse_module_text(fh.read(), groups, matgroups)
    return build_rep(spec)

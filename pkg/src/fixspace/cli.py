"""Command line surface.

Every subcommand prints a short human-readable section followed by a
machine-readable block of `key = value` lines; `--format records` drops
the human section. Machine output is byte-identical across runs for fixed
seed, worker count, and inputs.
"""

import argparse
import hashlib
import os
import sys

from . import bounds as bnd
from . import chartab, gensearch, matrep
from . import weights as wt
from .perm import builtin_group, format_group, read_group_file
from .rng import SeedStream


class ManifestParse(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"manifest line {lineno}: {msg}")
        self.lineno = lineno


CLAIM_KINDS = ("triple", "pair", "exception", "bound", "scott", "weights",
               "phi", "example")


# output helpers -----------------------------------------------------------


def _emit(args, human: list, records: list) -> None:
    lines = []
    if args.format == "plain":
        lines.extend(human)
        if human and records:
            lines.append("")
    lines.extend(f"{k} = {v}" for k, v in records)
    sys.stdout.write("\n".join(lines) + "\n")


def _fail(msg: str) -> int:
    sys.stderr.write(f"error: {msg}\n")
    return 2


def _csv(items) -> str:
    return ",".join(str(x) for x in items)


# input loading -------------------------------------------------------------


def _load_group(spec: str, base: str = ""):
    """A path to a .grp file, or a builtin group name.

    Returns (group, canonical source text) so results can be cache-keyed.
    """
    path = spec if os.path.isabs(spec) or not base else os.path.join(base, spec)
    if os.path.exists(path):
        with open(path) as fh:
            text = fh.read()
        return read_group_file(path), text
    group = builtin_group(spec)
    return group, format_group(group)


def _load_module(spec: str, base: str = "", matgroup: str = None):
    path = spec if os.path.isabs(spec) or not base else os.path.join(base, spec)
    matgroups = {}
    if matgroup:
        mpath = matgroup if os.path.isabs(matgroup) or not base else os.path.join(base, matgroup)
        group, rep = matrep.read_matgroup_file(mpath)
        matgroups[group.name] = (group, rep)
    return matrep.read_module_file(path, matgroups=matgroups)


def _cached_table(group, source_text: str, cache_dir: str):
    if not cache_dir:
        return chartab.character_table(group)
    digest = hashlib.sha256(source_text.encode()).hexdigest()[:24]
    path = os.path.join(cache_dir, f"{digest}.chartab")
    if os.path.exists(path):
        return chartab.read_table_cache(path, group)
    table = chartab.character_table(group)
    os.makedirs(cache_dir, exist_ok=True)
    chartab.write_table_cache(table, path)
    return table


# subcommands ---------------------------------------------------------------


def cmd_table(args) -> int:
    group, source = _load_group(args.group)
    table = _cached_table(group, source, args.cache_dir)
    name = group.name or "group"
    classes = table.classes
    human = [
        f"character table of {name}: order {group.order}, "
        f"{len(classes)} classes, exponent {table.exponent}",
        "class orders: " + _csv(c.element_order for c in classes),
        "class sizes:  " + _csv(c.size for c in classes),
        "degrees:      " + _csv(table.degrees),
    ]
    records = [
        ("group", name),
        ("order", group.order),
        ("classes", len(classes)),
        ("exponent", table.exponent),
        ("dixon_modulus", table.modulus),
        ("class_orders", _csv(c.element_order for c in classes)),
        ("class_sizes", _csv(c.size for c in classes)),
        ("degrees", _csv(table.degrees)),
    ]
    for i, row in enumerate(table.values):
        packed = "|".join(_csv(vec) for vec in row)
        records.append((f"character_{i}", f"{table.degrees[i]}:{packed}"))
    _emit(args, human, records)
    return 0


def _triple_records(cert) -> list:
    from .perm import format_cycles
    out = [("verdict", "found" if cert.verdict == "Generates" else "not_found"),
           ("attempts", cert.attempts)]
    if cert.verdict == "Generates":
        out += [
            ("x", format_cycles(cert.x)),
            ("y", format_cycles(cert.y)),
            ("z", format_cycles(cert.z)),
            ("orders", _csv(cert.orders)),
            ("subgroup_order", cert.subgroup_order_of_xy),
        ]
    return out


def cmd_triples(args) -> int:
    group, source = _load_group(args.group)
    name = group.name or "group"
    if args.exhaustive:
        table = _cached_table(group, source, args.cache_dir)
        res = gensearch.exhaustive_triple_search(group, args.p, table=table)
        verdict = {"ProvedNone": "proved_none",
                   "ExistsWithWitness": "exists_with_witness"}[res.verdict]
        human = [f"exhaustive class-triple search in {name} at p = {args.p}"]
        records = [("group", name), ("p", args.p), ("mode", "exhaustive"),
                   ("verdict", verdict),
                   ("generation_tests", res.generation_tests)]
        if res.certificate is not None:
            human.append(f"witness triple of orders {res.certificate.orders}")
            records += _triple_records(res.certificate)[2:]
        else:
            human.append("no generating triple of coprime-order elements exists")
        _emit(args, human, records)
        return 0
    if args.seed is None:
        return _fail("--seed is required for the randomized search")
    orders = tuple(int(x) for x in args.orders.split(",")) if args.orders else None
    cert = gensearch.find_triple(group, args.p, budget=args.budget,
                                 seed=args.seed, workers=args.workers,
                                 orders=orders)
    found = cert.verdict == "Generates"
    human = [f"random triple search in {name} at p = {args.p}: "
             + (f"found after {cert.attempts} attempts" if found
                else f"nothing in {cert.attempts} attempts")]
    records = [("group", name), ("p", args.p), ("mode", "random"),
               ("seed", args.seed), ("workers", args.workers)]
    records += _triple_records(cert)
    _emit(args, human, records)
    return 0 if found else 1


def cmd_pairs(args) -> int:
    from .perm import format_cycles
    group, _ = _load_group(args.group)
    name = group.name or "group"
    if args.seed is None:
        return _fail("--seed is required for the randomized search")
    cert = gensearch.find_conjugate_pair(group, args.p, budget=args.budget,
                                         seed=args.seed, workers=args.workers,
                                         order=args.order)
    found = cert.verdict == "Generates"
    human = [f"conjugate generating pair search in {name} at p = {args.p}: "
             + (f"found after {cert.attempts} attempts" if found
                else f"nothing in {cert.attempts} attempts")]
    records = [("group", name), ("p", args.p), ("seed", args.seed),
               ("workers", args.workers),
               ("verdict", "found" if found else "not_found"),
               ("attempts", cert.attempts)]
    if found:
        records += [
            ("x", format_cycles(cert.x)),
            ("h", format_cycles(cert.h)),
            ("y", format_cycles(cert.y)),
            ("order", cert.order),
            ("subgroup_order", cert.subgroup_order_of_xy),
        ]
    _emit(args, human, records)
    return 0 if found else 1


_CLAUSE_KEYS = (
    "half-strict", "coprime-order-third", "large-char-third",
    "coprime-dim-three-eighths", "two-primitive-third",
    "prime-dim-line-eigenspaces",
)


def cmd_bounds(args) -> int:
    rep = _load_module(args.module, matgroup=args.matgroup)
    p = args.p if args.p else rep.field.p
    try:
        report = bnd.check_bound_theorems(rep, p)
    except bnd.NotIrreducible as exc:
        return _fail(str(exc))
    human = [
        f"module of dimension {report.dim} over GF({rep.field.q}), "
        f"group order {report.group_order}, p = {p}",
        f"minimum semisimple fixed dimension: {report.min_fixed_dim} "
        f"(class of element order {report.min_class_order})",
    ]
    records = [
        ("module", args.module),
        ("dim", report.dim),
        ("p", p),
        ("group_order", report.group_order),
        ("min_semisimple_fixdim", report.min_fixed_dim),
        ("min_class_order", report.min_class_order),
    ]
    by_name = {c.clause: c for c in report.clauses}
    for key in _CLAUSE_KEYS:
        c = by_name[key]
        status = "skip" if not c.applicable else ("pass" if c.satisfied else "fail")
        human.append(f"  {key}: {status}"
                     + (f" (threshold {c.threshold}, witness {c.witness_dim})"
                        if c.applicable else ""))
        records.append((f"clause_{key.replace('-', '_')}", status))
    records.append(("holds", "yes" if report.holds else "no"))
    _emit(args, human, records)
    return 0 if report.holds else 1


def cmd_scott(args) -> int:
    if args.seed is None:
        return _fail("--seed is required for the randomized pair sweep")
    rep = _load_module(args.module, matgroup=args.matgroup)
    suite = bnd.scott_suite(rep, pairs=args.pairs, seed=args.seed)
    ok = not suite.violations
    human = [f"fixed-dimension inequality on {suite.checked} random pairs: "
             + ("no violations" if ok else f"{len(suite.violations)} violations")]
    records = [("module", args.module), ("pairs", suite.checked),
               ("seed", args.seed),
               ("violations", len(suite.violations)),
               ("holds", "yes" if ok else "no")]
    _emit(args, human, records)
    return 0 if ok else 1


def cmd_weights(args) -> int:
    rs = wt.root_system(args.type)
    lam = tuple(int(x) for x in args.weight.split(","))
    dim = wt.weyl_dim(rs, lam)
    wms = wt.weight_multiset(rs, lam)
    human = [f"{rs.name} highest weight ({_csv(lam)}): dimension {dim}, "
             f"{len(wms.entries)} distinct weights"]
    for w, m in wms.entries:
        human.append(f"  weight ({_csv(w)}) multiplicity {m}")
    records = [("system", rs.name), ("weight", _csv(lam)),
               ("weyl_dim", dim), ("entries", len(wms.entries))]
    for i, (w, m) in enumerate(wms.entries):
        records.append((f"weight_{i}", f"{_csv(w)}:{m}"))
    _emit(args, human, records)
    return 0


def cmd_phi(args) -> int:
    value = gensearch.phi_star(args.n, args.q)
    human = [f"largest divisor of {args.q}^{args.n} - 1 coprime to every "
             f"smaller {args.q}^m - 1: {value}"]
    records = [("n", args.n), ("q", args.q), ("phi_star", value)]
    _emit(args, human, records)
    return 0


# the claim regression runner ------------------------------------------------


def parse_manifest(text: str) -> list:
    claims = []
    seen = set()
    cur = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split(";", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            ident = line[1:-1].strip()
            if not ident:
                raise ManifestParse(lineno, "empty claim id")
            if ident in seen:
                raise ManifestParse(lineno, f"duplicate claim id {ident!r}")
            seen.add(ident)
            cur = {"id": ident, "_line": lineno}
            claims.append(cur)
        elif "=" in line:
            if cur is None:
                raise ManifestParse(lineno, "key outside any [claim] section")
            key, value = line.split("=", 1)
            cur[key.strip()] = value.strip()
        else:
            raise ManifestParse(lineno, f"unparseable line {line!r}")
    for claim in claims:
        lineno = claim["_line"]
        kind = claim.get("kind")
        if kind not in CLAIM_KINDS:
            raise ManifestParse(lineno, f"claim {claim['id']!r} has bad kind {kind!r}")
        if "expect" not in claim:
            raise ManifestParse(lineno, f"claim {claim['id']!r} lacks expect")
        prov = claim.get("provenance")
        if prov not in ("paper", "derived"):
            raise ManifestParse(
                lineno, f"claim {claim['id']!r} provenance must be paper or derived")
        if prov == "paper" and not claim.get("anchor"):
            raise ManifestParse(
                lineno, f"claim {claim['id']!r} needs an anchor line")
    return claims


def _claim_seed(master_seed: int, index: int) -> int:
    return SeedStream(master_seed).fork(index).randrange(2 ** 62) + 1


def _run_example(claim: dict, base: str) -> tuple:
    check = claim.get("check", "")
    expect = claim["expect"]
    if check == "adjoint-section":
        rep = bnd.sl_p_adjoint_check()
        ok = rep.holds and str(rep.min_fixed) == expect
        return ok, f"min fixed dim {rep.min_fixed} on the dim-{rep.section_dim} section"
    if check == "extraspecial-free":
        rep = bnd.extraspecial_free_check()
        ok = rep.holds and expect == "free"
        return ok, f"max eigenspace dimension {rep.max_eigenspace_dim}"
    if check == "eigen-separation":
        rep = wt.sl2_distinct_eigenvalues(int(claim["q"]), int(claim["s"]))
        got = "distinct" if rep.distinct else "coincidence"
        return got == expect, f"q={rep.q} s={rep.s}: {got}"
    if check == "mersenne-sharp":
        rep = _load_module(claim["module"], base)
        p = int(claim["p"])
        want = int(expect)
        dims = set()
        for cls in rep.group.conjugacy_classes():
            if cls.element_order == 1 or cls.element_order % p == 0:
                continue
            dims.add(matrep.fixed_space_dim(rep, cls.rep))
        ok = dims == {want}
        return ok, f"semisimple fixed dims {sorted(dims)}"
    if check == "twist-divisibility":
        rs = wt.root_system(claim["type"])
        lam0 = tuple(int(x) for x in claim["weight0"].split(","))
        lam1 = tuple(int(x) for x in claim["weight1"].split(","))
        p = int(claim["p"])
        from .ff import make_field
        F = make_field(p, int(claim.get("ext", "2")))
        samples = wt.torus_sample_set(F, rs.rank, int(claim.get("samples", "25")),
                                      seed=int(claim.get("sample_seed", "1")))
        rep = wt.check_twist_divisibility(rs, lam0, lam1, p, samples, F)
        return rep.verdict == expect, f"verdict {rep.verdict}"
    if check == "sym-divisibility":
        from .ff import make_field
        n, s = int(claim["n"]), int(claim["s"])
        F = make_field(int(claim["p"]))
        samples = wt.torus_sample_set(F, n - 1, int(claim.get("samples", "25")),
                                      seed=int(claim.get("sample_seed", "1")))
        rep = wt.check_sym_divisibility(n, s, samples, F)
        return rep.verdict == expect, f"verdict {rep.verdict}"
    return False, f"unknown example check {check!r}"


def _run_claim(claim: dict, index: int, args, base: str) -> tuple:
    """Returns (status, detail) with status PASS, FAIL, or UNVERIFIED."""
    if claim.get("scale") == "beyond-desk":
        return "UNVERIFIED", "beyond desk scale; recorded, not executed"
    kind = claim["kind"]
    expect = claim["expect"]
    seed = _claim_seed(args.seed, index)
    try:
        if kind == "triple":
            group, _ = _load_group(claim["group"], base)
            orders = (tuple(int(x) for x in claim["orders"].split(","))
                      if "orders" in claim else None)
            cert = gensearch.find_triple(
                group, int(claim["p"]), budget=int(claim.get("budget", 10 ** 5)),
                seed=seed, workers=args.workers, orders=orders)
            got = "found" if cert.verdict == "Generates" else "not_found"
            return ("PASS" if got == expect else "FAIL",
                    f"{got}, orders {_csv(cert.orders) if cert.orders else '-'}, "
                    f"attempts {cert.attempts}")
        if kind == "pair":
            group, _ = _load_group(claim["group"], base)
            order = int(claim["order"]) if "order" in claim else None
            cert = gensearch.find_conjugate_pair(
                group, int(claim["p"]), budget=int(claim.get("budget", 10 ** 5)),
                seed=seed, workers=args.workers, order=order)
            got = "found" if cert.verdict == "Generates" else "not_found"
            return ("PASS" if got == expect else "FAIL",
                    f"{got}, attempts {cert.attempts}")
        if kind == "exception":
            group, source = _load_group(claim["group"], base)
            table = _cached_table(group, source, args.cache_dir)
            res = gensearch.exhaustive_triple_search(group, int(claim["p"]),
                                                     table=table)
            got = {"ProvedNone": "proved_none",
                   "ExistsWithWitness": "exists_with_witness"}[res.verdict]
            return ("PASS" if got == expect else "FAIL",
                    f"{got} after {res.generation_tests} generation tests")
        if kind == "bound":
            rep = _load_module(claim["module"], base,
                               matgroup=claim.get("matgroup"))
            p = int(claim["p"]) if "p" in claim else rep.field.p
            report = bnd.check_bound_theorems(rep, p)
            ok = report.holds and str(report.min_fixed_dim) == expect
            return ("PASS" if ok else "FAIL",
                    f"min fixed dim {report.min_fixed_dim}, clauses "
                    + ("hold" if report.holds else "VIOLATED"))
        if kind == "scott":
            rep = _load_module(claim["module"], base,
                               matgroup=claim.get("matgroup"))
            suite = bnd.scott_suite(rep, pairs=int(claim.get("pairs", 1000)),
                                    seed=seed)
            ok = not suite.violations and expect == "zero-violations"
            return ("PASS" if ok else "FAIL",
                    f"{len(suite.violations)} violations in {suite.checked} pairs")
        if kind == "weights":
            rs = wt.root_system(claim["type"])
            lam = tuple(int(x) for x in claim["weight"].split(","))
            dim = wt.weyl_dim(rs, lam)
            total = wt.weight_multiset(rs, lam).total()
            ok = dim == total == int(expect)
            return ("PASS" if ok else "FAIL", f"dimension {dim}, multiset total {total}")
        if kind == "phi":
            value = gensearch.phi_star(int(claim["n"]), int(claim["q"]))
            return ("PASS" if value == int(expect) else "FAIL",
                    f"phi_star = {value}")
        ok, detail = _run_example(claim, base)
        return ("PASS" if ok else "FAIL", detail)
    except Exception as exc:  # a crashed claim is a failed claim
        return "FAIL", f"error: {exc}"


def cmd_verify(args) -> int:
    if args.seed is None:
        return _fail("--seed is required for the claim runner")
    try:
        with open(args.manifest) as fh:
            claims = parse_manifest(fh.read())
    except OSError as exc:
        return _fail(str(exc))
    base = os.path.dirname(os.path.abspath(args.manifest))
    human = []
    records = []
    counts = {"PASS": 0, "FAIL": 0, "UNVERIFIED": 0}
    for index, claim in enumerate(claims):
        status, detail = _run_claim(claim, index, args, base)
        counts[status] += 1
        human.append(f"{status:10} {claim['id']}: {detail}")
        records.append((f"claim_{claim['id']}", status))
    records += [("total", len(claims)), ("passed", counts["PASS"]),
                ("failed", counts["FAIL"]),
                ("unverified", counts["UNVERIFIED"])]
    _emit(args, human, records)
    return 0 if counts["FAIL"] == 0 else 1


# argument wiring -------------------------------------------------------------


def _add_common(sub, seed=False, workers=False, budget=False, cache=False,
                module=False, group=False):
    sub.add_argument("--format", choices=("plain", "records"), default="plain")
    if group:
        sub.add_argument("--group", required=True,
                         help="path to a .grp file, or a builtin group name")
    if module:
        sub.add_argument("--module", required=True, help="path to a .mod recipe")
        sub.add_argument("--matgroup", default=None,
                         help="optional .mat file registering a matrix group")
    if seed:
        sub.add_argument("--seed", type=int, default=None)
    if workers:
        sub.add_argument("--workers", type=int, default=1)
    if budget:
        sub.add_argument("--budget", type=int, default=10 ** 5)
    if cache:
        sub.add_argument("--cache-dir", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fixspace",
        description="group and representation computations with exact "
                    "fixed-space bound checks")
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("table", help="character table of a group")
    _add_common(s, group=True, cache=True)
    s.set_defaults(fn=cmd_table)

    s = subs.add_parser("triples", help="generating triple of coprime-order elements")
    _add_common(s, group=True, seed=True, workers=True, budget=True, cache=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--orders", default=None, help="comma list like 4,4,4")
    s.add_argument("--exhaustive", action="store_true",
                   help="complete class-triple sweep (proof when none exists)")
    s.set_defaults(fn=cmd_triples)

    s = subs.add_parser("pairs", help="conjugate generating pair")
    _add_common(s, group=True, seed=True, workers=True, budget=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--order", type=int, default=None)
    s.set_defaults(fn=cmd_pairs)

    s = subs.add_parser("bounds", help="fixed-space bound clauses on a module")
    _add_common(s, module=True)
    s.add_argument("--p", type=int, default=None)
    s.set_defaults(fn=cmd_bounds)

    s = subs.add_parser("scott", help="random-pair fixed-dimension inequality sweep")
    _add_common(s, module=True, seed=True)
    s.add_argument("--pairs", type=int, default=1000)
    s.set_defaults(fn=cmd_scott)

    s = subs.add_parser("weights", help="weight multiset of a highest-weight module")
    _add_common(s)
    s.add_argument("--type", required=True, help="root system name like A2 or G2")
    s.add_argument("--weight", required=True, help="fundamental coordinates like 1,1")
    s.set_defaults(fn=cmd_weights)

    s = subs.add_parser("phi", help="largest primitive divisor of q^n - 1")
    _add_common(s)
    s.add_argument("n", type=int)
    s.add_argument("q", type=int)
    s.set_defaults(fn=cmd_phi)

    s = subs.add_parser("verify", help="run a claims manifest")
    _add_common(s, seed=True, workers=True, cache=True)
    s.add_argument("--manifest", required=True)
    s.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, KeyError, ValueError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())

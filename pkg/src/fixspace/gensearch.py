"""Searches for generating triples and pairs of p'-elements.

Random searches are reproducible: a master integer seed is forked into
one stream per worker, workers take one attempt each per sweep, and the
lowest worker index succeeding within a sweep wins. Budgets count total
attempts across workers. Every returned certificate is re-verified
independently of the search path before it is handed back.
"""

import math
import warnings
from dataclasses import dataclass

from . import chartab
from .perm import (GroupTooLarge, PermGroup, element_order, pconj, pinv,
                   pmul, ppow)
from .rng import SeedStream


class NotTransitive(ValueError):
    pass


class NotFound(RuntimeError):
    """Search exhausted its budget for an object that must exist."""

    def __init__(self, budget: int):
        super().__init__(f"no witness found in {budget} attempts")
        self.budget = budget


class NotPrimePower(ValueError):
    pass


class Overflow(OverflowError):
    pass


@dataclass(frozen=True)
class TripleCertificate:
    x: tuple
    y: tuple
    z: tuple
    orders: tuple
    p: int
    subgroup_order_of_xy: int
    verdict: str          # "Generates" or "NotFound"
    attempts: int


@dataclass(frozen=True)
class PairCertificate:
    x: tuple
    h: tuple
    y: tuple              # x conjugated by h
    order: int
    p: int
    subgroup_order_of_xy: int
    verdict: str
    attempts: int


@dataclass(frozen=True)
class ExhaustiveResult:
    verdict: str          # "ExistsWithWitness" or "ProvedNone"
    certificate: object
    generation_tests: int


def verify_triple(group: PermGroup, cert: TripleCertificate) -> bool:
    """Recheck a Generates certificate from scratch; used before returning."""
    if cert.verdict != "Generates":
        return False
    ident = tuple(range(group.degree))
    if pmul(pmul(cert.x, cert.y), cert.z) != ident:
        return False
    orders = tuple(element_order(g) for g in (cert.x, cert.y, cert.z))
    if orders != cert.orders:
        return False
    if any(o % cert.p == 0 for o in orders):
        return False
    return group.subgroup_order([cert.x, cert.y]) == group.order


def verify_pair(group: PermGroup, cert: PairCertificate) -> bool:
    if cert.verdict != "Generates":
        return False
    if pconj(cert.x, cert.h) != cert.y:
        return False
    if element_order(cert.x) != cert.order or cert.order % cert.p == 0:
        return False
    return group.subgroup_order([cert.x, cert.y]) == group.order


def _worker_streams(seed: int, workers: int) -> list:
    master = SeedStream(seed)
    return [master.fork(w) for w in range(workers)]


def find_triple(group: PermGroup, p: int, budget: int = 10**5, seed: int = 1,
                workers: int = 1, orders: tuple = None) -> TripleCertificate:
    """Random search for p'-elements x, y with (xy)^{-1} also p' and <x,y> = G.

    When orders is given, only triples with exactly those element orders
    are accepted. NotFound is reported as a verdict, never an exception.
    """
    if group.order > 1 and all(pmul(a, b) == pmul(b, a)
                               for a in group.gens for b in group.gens):
        warnings.warn("triple search on an abelian group cannot generate")
    streams = _worker_streams(seed, workers)
    attempts = 0
    while attempts < budget:
        batch = min(workers, budget - attempts)
        for w in range(batch):
            stream = streams[w]
            x = group.random_element(stream)
            y = group.random_element(stream)
            attempts += 1
            ox = element_order(x)
            oy = element_order(y)
            if ox % p == 0 or oy % p == 0:
                continue
            if orders is not None and (ox, oy) != tuple(orders[:2]):
                continue
            z = pinv(pmul(x, y))
            oz = element_order(z)
            if oz % p == 0:
                continue
            if orders is not None and oz != orders[2]:
                continue
            sub = group.subgroup_order([x, y])
            if sub != group.order:
                continue
            cert = TripleCertificate(
                x=x, y=y, z=z, orders=(ox, oy, oz), p=p,
                subgroup_order_of_xy=sub, verdict="Generates",
                attempts=attempts,
            )
            if not verify_triple(group, cert):
                raise AssertionError("certificate failed independent recheck")
            return cert
    return TripleCertificate(
        x=None, y=None, z=None, orders=(), p=p,
        subgroup_order_of_xy=0, verdict="NotFound", attempts=attempts,
    )


def find_conjugate_pair(group: PermGroup, p: int, budget: int = 10**5,
                        seed: int = 1, workers: int = 1,
                        order: int = None) -> PairCertificate:
    """Random search for a p'-element x and conjugate x^h with <x, x^h> = G."""
    streams = _worker_streams(seed, workers)
    attempts = 0
    while attempts < budget:
        batch = min(workers, budget - attempts)
        for w in range(batch):
            stream = streams[w]
            x = group.random_element(stream)
            h = group.random_element(stream)
            attempts += 1
            ox = element_order(x)
            if ox % p == 0:
                continue
            if order is not None and ox != order:
                continue
            y = pconj(x, h)
            sub = group.subgroup_order([x, y])
            if sub != group.order:
                continue
            cert = PairCertificate(
                x=x, h=h, y=y, order=ox, p=p,
                subgroup_order_of_xy=sub, verdict="Generates",
                attempts=attempts,
            )
            if not verify_pair(group, cert):
                raise AssertionError("certificate failed independent recheck")
            return cert
    return PairCertificate(
        x=None, h=None, y=None, order=0, p=p,
        subgroup_order_of_xy=0, verdict="NotFound", attempts=attempts,
    )


def exhaustive_triple_search(group: PermGroup, p: int, cap: int = 10**4,
                             table=None) -> ExhaustiveResult:
    """Complete search over class triples; ProvedNone is a proof.

    Fixing x to one representative of C1 is complete: conjugating a
    generating triple moves its first entry onto the class representative
    and preserves generation. Class triples whose Frobenius count is zero
    contain no triples with product 1 at all and are skipped. A
    precomputed character table for the group may be passed in.
    """
    if group.order > cap:
        raise GroupTooLarge(f"order {group.order} exceeds exhaustive cap {cap}")
    if table is None:
        table = chartab.character_table(group)
    classes = group.conjugacy_classes()
    index = group.class_index()
    r = len(classes)
    prime_to_p = [i for i in range(r) if classes[i].element_order % p != 0]
    pair_cache = {}
    tests = 0
    for i in prime_to_p:
        x = classes[i].rep
        ox = classes[i].element_order
        for j in prime_to_p:
            live = set()
            for k in prime_to_p:
                if chartab.triple_count(table, i, j, k, pair_cache) > 0:
                    live.add(k)
            if not live:
                continue
            for y in classes[j].members:
                z = pinv(pmul(x, y))
                if index[z] not in live:
                    continue
                tests += 1
                sub = group.subgroup_order([x, y])
                if sub != group.order:
                    continue
                cert = TripleCertificate(
                    x=x, y=y, z=z,
                    orders=(ox, classes[j].element_order, element_order(z)),
                    p=p, subgroup_order_of_xy=sub, verdict="Generates",
                    attempts=tests,
                )
                if not verify_triple(group, cert):
                    raise AssertionError("certificate failed independent recheck")
                return ExhaustiveResult("ExistsWithWitness", cert, tests)
    return ExhaustiveResult("ProvedNone", None, tests)


def find_fpf_prime_power_element(group: PermGroup, budget: int = 10**4,
                                 seed: int = 1) -> tuple:
    """Element of prime-power order moving every point.

    Works through random elements: for each, test every prime-power part
    g^(o / r^a) with r^a the full r-part of o = order(g), primes ascending.
    """
    if not group.is_transitive():
        raise NotTransitive("the action has more than one orbit")
    stream = SeedStream(seed)
    for _ in range(budget):
        g = group.random_element(stream)
        o = element_order(g)
        rest = o
        r = 2
        while rest > 1:
            if rest % r == 0:
                ra = 1
                while rest % r == 0:
                    rest //= r
                    ra *= r
                part = ppow(g, o // ra)
                if all(part[i] != i for i in range(len(part))):
                    return part
            r += 1 if r == 2 else 2
    raise NotFound(budget)


def phi_star(n: int, q: int) -> int:
    """Largest divisor of q^n - 1 coprime to every q^m - 1 with m < n."""
    if n < 2 or n > 40:
        raise ValueError(f"n = {n} outside supported range 2..40")
    _validate_prime_power(q)
    if q**n >= 2**62:
        raise Overflow(f"q^n = {q}^{n} exceeds 2^62")
    v = q**n - 1
    for m in range(1, n):
        g = math.gcd(v, q**m - 1)
        while g > 1:
            v //= g
            g = math.gcd(v, g)
    return v


def _validate_prime_power(q: int) -> None:
    if q < 2:
        raise NotPrimePower(f"{q} is less than 2")
    p = q
    for d in range(2, q):
        if d * d > q:
            break
        if q % d == 0:
            p = d
            break
    m = q
    while m % p == 0:
        m //= p
    if m != 1:
        raise NotPrimePower(f"{q} is not a prime power")

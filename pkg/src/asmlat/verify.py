"""One-shot verification: every structural claim as an executable check.

Each suite sweeps matrices up to a size cap (intersected with the
requested maximum) and reports "name: passed/checked".  The suites
mirror, in spirit and scale, the properties asserted throughout the
package's documentation; a failure anywhere means a broken build.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import core, enumeration, poset, stats
from .core import (
    Asm,
    dual,
    from_corner_sum,
    from_permutation,
    identity,
    iter_permutations,
    minus_count,
    transpose,
    validate,
)
from .polynomials import HalfIntPolynomial
from .poset import Ordering, compare, leq

_cache: dict[int, list[Asm]] = {}


def _asms(n: int) -> list[Asm]:
    if n not in _cache:
        _cache[n] = enumeration.enumerate_asms(n)
    return _cache[n]


def _check_all(items, predicate) -> tuple[int, list[str]]:
    checked, failures = 0, []
    for item in items:
        checked += 1
        msg = predicate(item)
        if msg:
            failures.append(msg)
    return checked, failures


def check_corner_sum_round_trip(n: int):
    return _check_all(
        _asms(n),
        lambda a: None
        if from_corner_sum(core.corner_sum(a)) == a
        else f"round trip failed for\n{a}",
    )


def check_involutions(n: int):
    def pred(a: Asm):
        if transpose(transpose(a)) != a or dual(dual(a)) != a:
            return f"involution broken for\n{a}"
        if minus_count(transpose(a)) != minus_count(a) or minus_count(dual(a)) != minus_count(a):
            return f"minus count not preserved for\n{a}"
        return None
    return _check_all(_asms(n), pred)


def check_permutation_embedding(n: int):
    def pred(w):
        a = from_permutation(w)
        try:
            validate(a.entries)
        except core.AsmError as exc:
            return f"{w}: {exc}"
        if core.to_permutation(a) != w:
            return f"{w}: embedding does not invert"
        return None
    return _check_all(iter_permutations(n), pred)


def check_corner_sum_invariants(n: int):
    def pred(a: Asm):
        try:
            core.check_corner_sums(core.corner_sum(a).sums)
        except core.AsmError as exc:
            return f"{exc} for\n{a}"
        return None
    return _check_all(_asms(n), pred)


def check_beta_three_way(n: int):
    def pred(a: Asm):
        w = stats.beta_weighted(a)
        if w != stats.beta_row_weighted(a) or w != stats.beta_corner(a):
            return f"beta formulas disagree on\n{a}"
        return None
    return _check_all(_asms(n), pred)


def check_duality_identity(n: int):
    target = n * (n - 1) // 2
    def pred(a: Asm):
        got = stats.inversion_number(a) + stats.dual_inversion_number(a) - minus_count(a)
        return None if got == target else f"I + I* - N = {got} != {target} on\n{a}"
    return _check_all(_asms(n), pred)


def check_inversion_le_beta(n: int):
    return _check_all(
        _asms(n),
        lambda a: None
        if stats.inversion_number(a) <= stats.beta_corner(a)
        else f"I > beta on\n{a}",
    )


def check_dual_inversion_via_dual(n: int):
    return _check_all(
        _asms(n),
        lambda a: None
        if stats.dual_inversion_number(a) == stats.inversion_number(dual(a))
        else f"I* mismatch on\n{a}",
    )


def check_local_weak_sum(n: int):
    def pred(a: Asm):
        total = sum(
            stats.local_weak_contribution(a, p, q)
            for p in range(1, n + 1)
            for q in range(1, n + 1)
        )
        return None if total == stats.weak_inversion(a) else f"local H sum mismatch on\n{a}"
    return _check_all(_asms(n), pred)


def check_permutation_beta_formula(n: int):
    def pred(w):
        if stats.beta_weighted(from_permutation(w)) != stats.classical_beta(w.images):
            return f"weighted beta disagrees with one-line formula on {w}"
        return None
    return _check_all(iter_permutations(n), pred)


def check_max_weak_inversion(n: int):
    top = Fraction(n * (n - 1), 2)
    w0 = from_permutation(core.Permutation.longest(n))
    def pred(a: Asm):
        h = stats.weak_inversion(a)
        if h < 0:
            return f"H < 0 on\n{a}"
        if h > top:
            return f"H > n(n-1)/2 on\n{a}"
        if h == top and a != w0:
            return f"max H attained off the reversal on\n{a}"
        return None
    checked, failures = _check_all(_asms(n), pred)
    if stats.weak_inversion(w0) != top:
        failures.append("H at the reversal is not n(n-1)/2")
    return checked, failures


def generic_cover_oracle(universe: list[Asm], a: Asm, b: Asm) -> bool:
    """Abstract cover test from comparisons alone: a < b with nothing between."""
    if compare(a, b) is not Ordering.LESS:
        return False
    return not any(
        compare(a, c) is Ordering.LESS and compare(c, b) is Ordering.LESS
        for c in universe
    )


def check_cover_local_vs_generic(n: int):
    universe = _asms(n)
    def pred(pair):
        a, b = pair
        local = poset.try_cover(a, b) is not None
        generic = generic_cover_oracle(universe, a, b)
        if local != generic:
            return f"cover criteria disagree ({local} vs {generic}) on pair\n{a}\n--\n{b}"
        return None
    return _check_all(itertools.product(universe, universe), pred)


def check_grading_and_reachability(n: int):
    universe = _asms(n)
    failures = []
    checked = 0
    for a in universe:
        for e in poset.covers_up(a):
            checked += 1
            if stats.beta_corner(e.upper) - stats.beta_corner(e.lower) != 1:
                failures.append(f"cover with beta step != 1 at ({e.r}, {e.s}) on\n{a}")
    closure = enumeration.bfs_cover_closure(n)
    checked += 1
    if closure != sorted(universe, key=lambda a: a.entries):
        failures.append("cover closure from the identity misses matrices")
    return checked, failures


def check_cover_deltas(n: int):
    failures = []
    checked = 0
    for a in _asms(n):
        for e in poset.covers_up(a):
            checked += 1
            d_inv = stats.inversion_number(e.upper) - stats.inversion_number(e.lower)
            d_minus = minus_count(e.upper) - minus_count(e.lower)
            d_weak2 = stats.weak_inversion_twice(e.upper) - stats.weak_inversion_twice(e.lower)
            if d_inv not in (-1, 0, 1):
                failures.append(f"dI = {d_inv} outside -1..1 at ({e.r}, {e.s})")
            if d_weak2 not in (-2, -1, 0, 1, 2):
                failures.append(f"2*dH = {d_weak2} outside -2..2 at ({e.r}, {e.s})")
            if (d_inv, d_minus, d_weak2) != (e.d_inv, e.d_minus, e.d_weak2):
                failures.append(
                    f"type {e.cover_type} table row disagrees with measured deltas "
                    f"({d_inv}, {d_minus}, {d_weak2}) at ({e.r}, {e.s})"
                )
    return checked, failures


def check_duality_anti_automorphism(n: int):
    universe = _asms(n)
    def pred(pair):
        a, b = pair
        if (compare(a, b) is Ordering.LESS) != (compare(dual(b), dual(a)) is Ordering.LESS):
            return "row reversal is not order-reversing"
        return None
    return _check_all(itertools.combinations(universe, 2), pred)


def check_type_duality(n: int):
    by_index = {t.index: t for t in poset.COVER_TYPES}
    failures = []
    checked = 0
    for a in _asms(n):
        for e in poset.covers_up(a):
            checked += 1
            mirror = poset.try_cover(dual(e.upper), dual(e.lower))
            if mirror is None:
                failures.append("dual pair is not a cover")
                continue
            if mirror.cover_type != by_index[e.cover_type].star:
                failures.append(
                    f"type {e.cover_type} dualizes to {mirror.cover_type}, "
                    f"expected {by_index[e.cover_type].star}"
                )
            # H(upper) - H(lower) is the same on an edge and its dual mirror
            if e.d_weak2 != mirror.d_weak2:
                failures.append("dH changes across duality")
    return checked, failures


def check_transpose_order_iso(n: int):
    universe = _asms(n)
    def pred(pair):
        a, b = pair
        if compare(a, b) != compare(transpose(a), transpose(b)):
            return "transpose is not an order isomorphism"
        return None
    return _check_all(itertools.combinations(universe, 2), pred)


def check_beta_oracle(n: int):
    return _check_all(
        _asms(n),
        lambda a: None
        if poset.beta_poset_oracle(a) == stats.beta_corner(a) == stats.beta_weighted(a)
        else f"join-irreducible count disagrees with formulas on\n{a}",
    )


def check_lattice_laws(n: int):
    universe = _asms(n)
    if n <= 3:
        triples = list(itertools.product(universe, repeat=3))
    else:
        rng = random.Random(0)
        triples = [tuple(rng.choice(universe) for _ in range(3)) for _ in range(200)]
    def pred(triple):
        a, b, c = triple
        j, m = poset.join, poset.meet
        if j(a, b) != j(b, a) or m(a, b) != m(b, a):
            return "commutativity fails"
        if j(a, j(b, c)) != j(j(a, b), c) or m(a, m(b, c)) != m(m(a, b), c):
            return "associativity fails"
        if j(a, a) != a or m(a, a) != a:
            return "idempotence fails"
        if j(a, m(a, b)) != a or m(a, j(a, b)) != a:
            return "absorption fails"
        if m(a, j(b, c)) != j(m(a, b), m(a, c)):
            return "distributivity fails"
        if not (leq(a, j(a, b)) and leq(m(a, b), a)):
            return "join/meet are not bounds"
        return None
    return _check_all(triples, pred)


def check_bigrassmannian_join_irreducible(n: int):
    ji = {a for a in _asms(n) if poset.is_join_irreducible(a)}
    bg = {from_permutation(w) for w in poset.enumerate_bigrassmannians(n)}
    ok = ji == bg
    return len(_asms(n)), [] if ok else [f"join-irreducibles != bigrassmannians at n={n}"]


def check_count_formula(n: int):
    got = len(_asms(n))
    want = enumeration.count_formula(n)
    return 1, [] if got == want else [f"enumerated {got}, formula gives {want}"]


def check_genfun_symmetries(n: int):
    failures = []
    gb = enumeration.genfun_stat(n, "beta")
    if not gb.is_palindromic():
        failures.append("beta generating polynomial is not palindromic")
    gh = enumeration.genfun_stat(n, "H")
    if not (gh.is_monic() and gh.is_palindromic() and gh.degree2() == 2 * (n * (n - 1) // 2)):
        failures.append("H generating polynomial is not monic/palindromic with top n(n-1)/2")
    if n == 3 and enumeration.genfun_stat(3, "I").is_palindromic():
        failures.append("I generating polynomial at n=3 unexpectedly palindromic")
    return 3 if n == 3 else 2, failures


def check_perm_inversion_genfun(n: int):
    got = enumeration.genfun_stat(n, "I", over="perm")
    want = HalfIntPolynomial.one()
    for k in range(1, n + 1):
        want = want * HalfIntPolynomial({2 * e: 1 for e in range(k)})
    return 1, [] if got == want else [f"permutation inversion polynomial wrong at n={n}"]


def check_genfun_at_one(n: int):
    failures = []
    for stat in ("I", "H", "beta"):
        if enumeration.genfun_stat(n, stat).evaluate_at_one() != enumeration.count_formula(n):
            failures.append(f"{stat} polynomial does not evaluate to the count at 1")
    return 3, failures


def check_signed_identity(n: int):
    ok, lhs, rhs = enumeration.signed_identity_check(n)
    return 1, [] if ok else [f"signed identity fails at n={n}: {lhs} != {rhs}"]


# (name, size cap, suite); caps keep the exhaustive sweeps tractable.
SUITES: list[tuple[str, int, Callable[[int], tuple[int, list[str]]]]] = [
    ("corner-sum-round-trip", 5, check_corner_sum_round_trip),
    ("transpose-dual-involutions", 5, check_involutions),
    ("permutation-embedding-valid", 6, check_permutation_embedding),
    ("corner-sum-invariants", 5, check_corner_sum_invariants),
    ("beta-three-way-equivalence", 6, check_beta_three_way),
    ("duality-identity", 6, check_duality_identity),
    ("inversion-le-beta", 6, check_inversion_le_beta),
    ("dual-inversion-via-dual", 5, check_dual_inversion_via_dual),
    ("local-weak-sum", 5, check_local_weak_sum),
    ("permutation-beta-formula", 7, check_permutation_beta_formula),
    ("max-weak-inversion", 5, check_max_weak_inversion),
    ("cover-local-vs-generic", 4, check_cover_local_vs_generic),
    ("grading-and-reachability", 5, check_grading_and_reachability),
    ("cover-deltas-table", 5, check_cover_deltas),
    ("duality-anti-automorphism", 4, check_duality_anti_automorphism),
    ("cover-type-duality", 4, check_type_duality),
    ("transpose-order-isomorphism", 4, check_transpose_order_iso),
    ("beta-join-irreducible-count", 5, check_beta_oracle),
    ("lattice-laws", 4, check_lattice_laws),
    ("bigrassmannian-join-irreducible", 5, check_bigrassmannian_join_irreducible),
    ("count-matches-formula", 7, check_count_formula),
    ("genfun-symmetries", 6, check_genfun_symmetries),
    ("perm-inversion-genfun", 7, check_perm_inversion_genfun),
    ("genfun-at-one", 6, check_genfun_at_one),
    ("signed-identity", 6, check_signed_identity),
]


@dataclass
class VerifyReport:
    n_max: int
    lines: list[str]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        out = list(self.lines)
        if self.failures:
            out.append("")
            out.append("FAILURES:")
            out.extend(f"  {msg}" for msg in self.failures)
        out.append("")
        out.append("all checks passed" if self.ok else "verification FAILED")
        return "\n".join(out)


def verify(n_max: int) -> VerifyReport:
    """Run every suite for sizes 1..min(cap, n_max)."""
    lines = []
    all_failures = []
    for name, cap, suite in SUITES:
        checked = 0
        failures: list[str] = []
        for n in range(1, min(cap, n_max) + 1):
            c, f = suite(n)
            checked += c
            failures += f
        lines.append(f"{name}: {checked - len(failures)}/{checked}")
        all_failures += [f"{name}: {msg}" for msg in failures]
    return VerifyReport(n_max, lines, all_failures)

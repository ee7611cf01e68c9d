"""Seeded random instances, brute-force oracles, and the identity cross-check.

Random numbers come from SplitMix64 (Steele, Lea & Flood 2014) so that a
seed means the same instance in any language:

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)                       (all mod 2**64)

Bounded integers use rejection sampling on the top of the 64-bit range.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, Sequence

from subres.algebra import Poly, RootList, poly_from_roots, r_pair, r_poly
from subres.linalg import (
    T_MINUS_X,
    X_MINUS_T,
    bracket,
    build_mf,
    build_mg,
    build_mtx,
    det_bareiss,
    vandermonde_det,
)
from subres.subresultants import (
    _check_positions,
    admissible_degrees,
    lemma3_rhs,
    poisson_resultant,
    single_sum,
    sres_def,
    sres_hong,
    sres_sd,
    sres_sylvester,
)

MASK64 = (1 << 64) - 1
DEFAULT_ROOT_BOUND = 10


class InfeasibleBound(ValueError):
    """Not enough distinct rationals below the bound to fill a root list."""


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError(f"empty range [{lo}, {hi}]")
        limit = (1 << 64) - (1 << 64) % span
        while True:
            z = self.next_u64()
            if z < limit:
                return lo + z % span


@dataclass(frozen=True)
class InstanceSpec:
    seed: int
    m: int
    n: int
    root_bound: int = DEFAULT_ROOT_BOUND

    def __post_init__(self):
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be at least 1")
        if self.root_bound < 1:
            raise ValueError("root_bound must be positive")

    def to_json(self) -> dict:
        return {"seed": self.seed, "m": self.m, "n": self.n, "root_bound": self.root_bound}


def _distinct_values(bound: int) -> int:
    if (2 * bound + 1) * bound > 200_000:
        return (2 * bound + 1) * bound  # upper estimate; only a fast path
    return len({Fraction(a, b) for a in range(-bound, bound + 1) for b in range(1, bound + 1)})


def random_root_list(rng: SplitMix64, size: int, bound: int, max_attempts: int = 10_000) -> RootList:
    """``size`` distinct rationals a/b with |a| <= bound, 1 <= b <= bound."""
    if size > _distinct_values(bound):
        raise InfeasibleBound(f"only {_distinct_values(bound)} distinct values for bound {bound}, need {size}")
    out: list[Fraction] = []
    seen: set[Fraction] = set()
    attempts = 0
    while len(out) < size:
        attempts += 1
        if attempts > max_attempts:
            raise InfeasibleBound(f"could not draw {size} distinct roots with bound {bound}")
        r = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if r not in seen:
            seen.add(r)
            out.append(r)
    return RootList(out)


def gen_instance(spec: InstanceSpec) -> tuple[RootList, RootList]:
    rng = SplitMix64(spec.seed)
    A = random_root_list(rng, spec.m, spec.root_bound)
    B = random_root_list(rng, spec.n, spec.root_bound)
    return A, B


def instance_specs(trials: int, max_deg: int, seed: int, root_bound: int = DEFAULT_ROOT_BOUND,
                   min_deg: int = 1) -> list[InstanceSpec]:
    """Deterministic list of ``trials`` specs drawn from one master seed."""
    if trials < 1 or max_deg < min_deg:
        raise ValueError("need trials >= 1 and max_deg >= min_deg")
    master = SplitMix64(seed)
    specs = []
    for _ in range(trials):
        s = master.next_u64()
        m = master.randint(min_deg, max_deg)
        n = master.randint(min_deg, max_deg)
        specs.append(InstanceSpec(s, m, n, root_bound))
    return specs


# -- oracles ---------------------------------------------------------------------


def sign_oracle(positions: Sequence[int], parent_len: int) -> int:
    """Sign of sg(S, T) by literally building the permutation and counting inversions."""
    positions = _check_positions(positions, parent_len)
    chosen = set(positions)
    perm = list(positions) + [i for i in range(1, parent_len + 1) if i not in chosen]
    inversions = sum(
        1 for i in range(parent_len) for j in range(i + 1, parent_len) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


# -- cross-check -----------------------------------------------------------------


def _show(v) -> list[str] | str:
    if isinstance(v, Poly):
        return v.to_json()
    if isinstance(v, Fraction):
        return str(v)
    return repr(v)


@dataclass
class Check:
    name: str
    params: dict
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "params": self.params, "pass": self.passed}
        if self.witness:
            out["witness"] = {k: _show(v) for k, v in self.witness.items()}
        return out


@dataclass
class CheckReport:
    A: RootList
    B: RootList
    checks: list[Check] = field(default_factory=list)
    instance: InstanceSpec | None = None

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def record(self, name: str, params: dict, values: dict) -> Check:
        """Pass iff every value in ``values`` is equal; keep them all on failure."""
        vals = list(values.values())
        ok = all(v == vals[0] for v in vals[1:])
        c = Check(name, params, ok, {} if ok else dict(values))
        self.checks.append(c)
        return c

    def to_json(self) -> dict:
        return {
            "instance": self.instance.to_json() if self.instance else None,
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "all_pass": self.all_pass,
            "checks": [c.to_json() for c in self.checks],
        }


def partitions(d: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All 2**d ordered splits (P, Q) of (0, ..., d-1) into increasing sublists."""
    for mask in product((0, 1), repeat=d):
        P = tuple(i for i in range(d) if mask[i] == 0)
        Q = tuple(i for i in range(d) if mask[i] == 1)
        yield P, Q


def _fmt(xs) -> str:
    return ",".join(map(str, xs))


def cross_check(A: Sequence, B: Sequence, *, lemma3: bool = True,
                instance: InstanceSpec | None = None) -> CheckReport:
    """Run every identity on (A, B) and collect the outcomes; never raises on a mismatch."""
    A, B = RootList(A), RootList(B)
    m, n = len(A), len(B)
    f, g = poly_from_roots(A), poly_from_roots(B)
    rep = CheckReport(A, B, instance=instance)

    for d in admissible_degrees(m, n):
        ref = sres_def(f, g, d)
        routes = {
            "sres_def": ref,
            "sres_sd": sres_sd(f, g, d),
            "sres_hong": sres_hong(A, B, d),
            "single_sum": single_sum(A, B, d),
        }
        for p in range(d + 1):
            routes[f"sres_sylvester_p{p}_q{d - p}"] = sres_sylvester(A, B, p, d - p)
        rep.record(f"five_way_d{d}", {"d": d}, routes)
        rep.record(f"single_eq_double_d{d}", {"d": d},
                   {"single_sum": routes["single_sum"], "sres_sylvester_q0": routes[f"sres_sylvester_p{d}_q0"]})
        rep.checks.append(Check(f"degree_bound_d{d}", {"d": d}, ref.degree <= d,
                                {} if ref.degree <= d else {"sres_def": ref}))

        if lemma3:
            for P, Q in partitions(d):
                rep.record(f"lemma3_P={_fmt(P)}|Q={_fmt(Q)}", {"d": d, "P": list(P), "Q": list(Q)},
                           {"sres_def": ref, "lemma3_rhs": lemma3_rhs(A, B, P, Q)})

        width = m + n - d
        for label, gamma in (("A", A), ("B", B)):
            powers = bracket(1, gamma, range(width))
            params = {"d": d, "gamma": label}
            rep.record("useful_eq_Mf", params, {"product": build_mf(f, n, d) @ powers,
                                                "bracket": bracket(f, gamma, range(n - d))})
            rep.record("useful_eq_Mg", params, {"product": build_mg(g, m, d) @ powers,
                                                "bracket": bracket(g, gamma, range(m - d))})
            rep.record("useful_eq_Mtx", params, {"product": build_mtx(m, n, d) @ powers,
                                                 "bracket": bracket(T_MINUS_X, gamma, range(d))})

    for label, gamma in (("A", A), ("B", B)):
        for k in range(1, len(gamma) + 1):
            rep.record(f"tech_identity_{label}", {"k": k}, tech_identity_sides(gamma[:k]))

    rep.record("vandermonde_concat", {}, {
        "V(A+B)": vandermonde_det(A + B),
        "V(A)V(B)R(B,A)": vandermonde_det(A) * vandermonde_det(B) * r_pair(B, A),
    })
    if 0 in admissible_degrees(m, n):
        rep.record("poisson_d0", {"d": 0}, {
            "sres_def": sres_def(f, g, 0),
            "poisson_resultant": poisson_resultant(A, B),
            "r_pair": r_pair(A, B),
        })
    return rep


def tech_identity_sides(gamma: Sequence) -> dict:
    k = len(gamma)
    return {
        "det<x-t>": Poly.coerce(det_bareiss(bracket(X_MINUS_T, gamma, range(k)))),
        "R(x,G)V(G)": r_poly(gamma).scale(vandermonde_det(gamma)),
    }


def run_trials(trials: int, max_deg: int, seed: int, root_bound: int = DEFAULT_ROOT_BOUND, *,
               lemma3: bool = True, min_deg: int = 1,
               progress: Callable[[CheckReport], None] | None = None) -> list[CheckReport]:
    reports = []
    for spec in instance_specs(trials, max_deg, seed, root_bound, min_deg):
        A, B = gen_instance(spec)
        rep = cross_check(A, B, lemma3=lemma3, instance=spec)
        reports.append(rep)
        if progress:
            progress(rep)
    return reports


# -- mutation testing of the sign exponents ---------------------------------------

#: Deliberately wrong variants of each sign exponent, keyed by the function
#: they replace in :mod:`subres.subresultants`.
MUTANTS: dict[str, dict[str, Callable[..., int]]] = {
    "sd_sign_exponent": {
        "plus_one": lambda m, n, d: d + (n - d) * (m - d) + 1,
        "drop_d": lambda m, n, d: (n - d) * (m - d),
        "drop_product": lambda m, n, d: d,
    },
    "lemma3_sign_exponent": {
        "plus_one": lambda m, n, d, q: q + (m - d) * n + 1,
        "drop_q": lambda m, n, d, q: (m - d) * n,
        "drop_product": lambda m, n, d, q: q,
    },
    "sylvester_sign_exponent": {
        "plus_one": lambda m, d, p: p * (m - d) + 1,
        "zero": lambda m, d, p: 0,
        "drop_codegree": lambda m, d, p: p,
        "drop_p": lambda m, d, p: m - d,
    },
}


@contextmanager
def mutated(target: str, variant: str):
    """Temporarily swap one sign exponent for a wrong variant."""
    from subres import subresultants

    original = getattr(subresultants, target)
    setattr(subresultants, target, MUTANTS[target][variant])
    try:
        yield
    finally:
        setattr(subresultants, target, original)


def first_detection(specs: Sequence[InstanceSpec], *, lemma3: bool = True) -> InstanceSpec | None:
    """First instance whose cross-check fails, or None if all pass."""
    for spec in specs:
        A, B = gen_instance(spec)
        if not cross_check(A, B, lemma3=lemma3, instance=spec).all_pass:
            return spec
    return None

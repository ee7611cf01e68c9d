"""Five ways to compute Sres_d(f, g), plus the subset and sign machinery.

Coefficient routes (``sres_def``, ``sres_sd``) take polynomials.  Root
routes (``sres_hong``, ``single_sum``, ``sres_sylvester``, ``lemma3_rhs``)
take the root lists A, B of the monic f = R(x, A), g = R(x, B).

All routes agree exactly whenever d is admissible:
0 <= d < min(m, n), or d = min(m, n) when m != n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from subres.algebra import (
    InadmissibleDegree,
    Poly,
    RootList,
    admissible,
    binomial,
    check_admissible,
    poly_eval,
    poly_from_roots,
    r_pair,
    r_poly,
)
from subres.linalg import (
    X_MINUS_T,
    DMatrix,
    bracket,
    build_sd,
    build_sylvester_block,
    det_bareiss,
    hstack,
    vandermonde_det,
    vstack,
)

__all__ = [
    "InadmissibleDegree",
    "SubsetSplit",
    "admissible",
    "admissible_degrees",
    "check_admissible",
    "double_sum",
    "lemma3_matrix",
    "lemma3_rhs",
    "poisson_resultant",
    "sg_sublist",
    "single_sum",
    "sres_chain",
    "sres_def",
    "sres_hong",
    "sres_sd",
    "sres_sylvester",
    "subsets",
]


# Sign exponents of the three identities, kept as separate functions so the
# verification harness can check that each one actually matters.

def sd_sign_exponent(m: int, n: int, d: int) -> int:
    return d + (n - d) * (m - d)


def lemma3_sign_exponent(m: int, n: int, d: int, q: int) -> int:
    return q + (m - d) * n


def sylvester_sign_exponent(m: int, d: int, p: int) -> int:
    return p * (m - d)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class SubsetSplit:
    chosen: tuple
    complement: tuple
    positions: tuple[int, ...]  # 1-based, strictly increasing


def subsets(parent: Sequence, k: int) -> list[SubsetSplit]:
    """All C(len(parent), k) order-preserving splits of ``parent``."""
    parent = tuple(parent)
    if not 0 <= k <= len(parent):
        raise ValueError(f"subset size {k} out of range for a list of length {len(parent)}")
    out = []
    for idx in combinations(range(len(parent)), k):
        picked = set(idx)
        out.append(
            SubsetSplit(
                chosen=tuple(parent[i] for i in idx),
                complement=tuple(x for i, x in enumerate(parent) if i not in picked),
                positions=tuple(i + 1 for i in idx),
            )
        )
    return out


def _check_positions(positions: Sequence[int], parent_len: int) -> tuple[int, ...]:
    positions = tuple(positions)
    if any(not isinstance(p, int) for p in positions):
        raise ValueError(f"positions must be integers, got {positions}")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise ValueError(f"positions must be strictly increasing, got {positions}")
    if positions and (positions[0] < 1 or positions[-1] > parent_len):
        raise ValueError(f"positions {positions} out of range 1..{parent_len}")
    return positions


def sg_sublist(positions: Sequence[int], parent_len: int) -> int:
    """Sign of the shuffle moving the sublist at ``positions`` to the front.

    The k-th chosen element has to jump over ``positions[k] - k`` unchosen
    ones, so the parity is that of sum(positions[k] - k).
    """
    positions = _check_positions(positions, parent_len)
    return _sign(sum(p - k for k, p in enumerate(positions, start=1)))


def _degrees(f: Poly, g: Poly) -> tuple[int, int]:
    if not f or not g:
        raise ValueError("f and g must be nonzero")
    m, n = int(f.degree), int(g.degree)
    if m < 1 and n < 1:
        raise ValueError("at least one of f, g must have positive degree")
    return m, n


def admissible_degrees(m: int, n: int) -> list[int]:
    return [d for d in range(min(m, n) + 1) if admissible(m, n, d)]


# -- coefficient routes --------------------------------------------------------


def sres_def(f: Poly, g: Poly, d: int) -> Poly:
    """Sres_d(f, g) as the defining (m+n-2d)-square determinant.

    Works for arbitrary leading coefficients.
    """
    _degrees(f, g)
    return det_bareiss(build_sylvester_block(f, g, d))


def sres_chain(f: Poly, g: Poly) -> dict[int, Poly]:
    m, n = _degrees(f, g)
    return {d: sres_def(f, g, d) for d in admissible_degrees(m, n)}


def sres_sd(f: Poly, g: Poly, d: int) -> Poly:
    """Sres_d via the determinant of the stacked matrix [M_{t-x}; M_f; M_g]."""
    m, n = _degrees(f, g)
    check_admissible(m, n, d)
    det = det_bareiss(build_sd(f, g, d))
    return det if _sign(sd_sign_exponent(m, n, d)) > 0 else -det


# -- root routes ---------------------------------------------------------------


def _roots(A: Sequence, B: Sequence) -> tuple[RootList, RootList]:
    return RootList(A), RootList(B)


def sres_hong(A: Sequence, B: Sequence, d: int) -> Poly:
    """Sres_d from the m-square determinant [<x-t, A>_d ; <g(t), A>_{m-d}] / V(A)."""
    A, B = _roots(A, B)
    m, n = len(A), len(B)
    check_admissible(m, n, d)
    g = poly_from_roots(B)
    mat = vstack(bracket(X_MINUS_T, A, range(d)), bracket(g, A, range(m - d)))
    return Poly.coerce(det_bareiss(mat)).exact_div(vandermonde_det(A))


def _check_partition(P: Sequence[int], Q: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    P, Q = tuple(P), tuple(Q)
    d = len(P) + len(Q)
    for name, part in (("P", P), ("Q", Q)):
        if any(not isinstance(e, int) for e in part):
            raise ValueError(f"{name} must hold integers, got {part}")
        if any(b <= a for a, b in zip(part, part[1:])):
            raise ValueError(f"{name} must be strictly increasing, got {part}")
    if set(P) & set(Q) or set(P) | set(Q) != set(range(d)):
        raise ValueError(f"P={P}, Q={Q} do not partition (0..{d - 1})")
    return P, Q, d


def lemma3_matrix(A: Sequence, B: Sequence, P: Sequence[int], Q: Sequence[int]) -> DMatrix:
    """The (m+n)-square block matrix

        [ <x-t, A>_P      0          ]
        [ 0               <x-t, B>_Q ]
        [ <1, A>_{m+n-d}  <1, B>_{m+n-d} ]
    """
    A, B = _roots(A, B)
    P, Q, d = _check_partition(P, Q)
    m, n = len(A), len(B)
    width = m + n - d
    return vstack(
        hstack(bracket(X_MINUS_T, A, P), DMatrix.zeros(len(P), n)),
        hstack(DMatrix.zeros(len(Q), m), bracket(X_MINUS_T, B, Q)),
        hstack(bracket(1, A, range(width)), bracket(1, B, range(width))),
    )


def lemma3_rhs(A: Sequence, B: Sequence, P: Sequence[int], Q: Sequence[int]) -> Poly:
    """Sres_d recovered from the (P, Q) block determinant, divided by V(A) V(B)."""
    A, B = _roots(A, B)
    P, Q, d = _check_partition(P, Q)
    m, n = len(A), len(B)
    check_admissible(m, n, d)
    det = Poly.coerce(det_bareiss(lemma3_matrix(A, B, P, Q)))
    sign = _sign(lemma3_sign_exponent(m, n, d, len(Q))) * sg_sublist([e + 1 for e in P], d)
    return det.scale(Fraction(sign) / (vandermonde_det(A) * vandermonde_det(B)))


def single_sum(A: Sequence, B: Sequence, d: int) -> Poly:
    """Sum over |A'| = d of R(x, A') R(A\\A', B) / R(A\\A', A')."""
    A, B = _roots(A, B)
    check_admissible(len(A), len(B), d)
    total = Poly()
    for s in subsets(A, d):
        rest = s.complement
        total = total + r_poly(s.chosen).scale(r_pair(rest, B) / r_pair(rest, s.chosen))
    return total


def double_sum(A: Sequence, B: Sequence, p: int, q: int) -> Poly:
    """Sylvester's double sum Sylv^{p,q}(A, B; x), unscaled.

    Defined for any 0 <= p <= |A|, 0 <= q <= |B|; it only equals a
    subresultant (up to a known factor) when p + q is admissible.
    """
    A, B = _roots(A, B)
    if not 0 <= p <= len(A) or not 0 <= q <= len(B):
        raise ValueError(f"need 0 <= p <= {len(A)} and 0 <= q <= {len(B)}, got p={p}, q={q}")
    splits_b = [(s, r_poly(s.chosen), r_pair(s.chosen, s.complement)) for s in subsets(B, q)]
    total = Poly()
    for sa in subsets(A, p):
        a1, a2 = sa.chosen, sa.complement
        ra = r_poly(a1)
        den_a = r_pair(a1, a2)
        for sb, rb, den_b in splits_b:
            b1, b2 = sb.chosen, sb.complement
            weight = r_pair(a1, b1) * r_pair(a2, b2) / (den_a * den_b)
            if weight:
                total = total + (ra * rb).scale(weight)
    return total


def sres_sylvester(A: Sequence, B: Sequence, p: int, q: int) -> Poly:
    """Sres_{p+q} = (-1)^{p(m-d)} / C(d, p) * Sylv^{p,q}(A, B; x)."""
    A, B = _roots(A, B)
    if p < 0 or q < 0:
        raise ValueError(f"p and q must be non-negative, got p={p}, q={q}")
    m, n = len(A), len(B)
    d = p + q
    check_admissible(m, n, d)
    factor = Fraction(_sign(sylvester_sign_exponent(m, d, p)), binomial(d, p))
    return double_sum(A, B, p, q).scale(factor)


def poisson_resultant(A: Sequence, B: Sequence) -> Fraction:
    """Res(f, g) as prod_{alpha in A} g(alpha)."""
    g = poly_from_roots(B)
    acc = Fraction(1)
    for a in A:
        acc *= poly_eval(g, a)
    return acc

"""Closed-form route to the weight-graded cohomology of UConf_n of a
closed orientable genus-g surface.

The master series lives in t, s, u with coefficients in the representation
ring of sp(2g); the coefficient of u^n, reindexed by cohomological degree
k = t_exp + s_exp and weight h = t_exp + 2*s_exp, is the mixed table for n
points.  The reindexing is pinned by n = 1: the surface itself has its
degree-one classes in weight 1 and the point class in weight 2.

Genus 0 is served by its own closed form; the symplectic machinery
requires g >= 1.
"""

from __future__ import annotations

import warnings
from functools import lru_cache
from math import comb

from .reps import VirtualRep, rep_label
from .series import BiSeries, TriSeries, geom_u

__all__ = [
    "build_P_SV",
    "build_P_ker_cap",
    "build_P_ker_mod",
    "build_P_quot",
    "build_P_HA",
    "q_bracket",
    "build_Q",
    "build_Q_assembled",
    "MixedTable",
    "mixed_table",
    "betti",
    "mixed_poincare",
    "euler_series",
    "euler_binomials",
    "genus0_betti",
    "stabilization_bound",
]


def _check_genus(g):
    if g < 1:
        raise ValueError("genus must be >= 1 here; genus 0 has its own closed form")


def _V(g, i, j):
    return VirtualRep.single(rep_label(g, i, j))


def _bi(D, terms):
    return BiSeries(D, {(t, s): c for t, s, c in terms})


def _tri(N, terms):
    return TriSeries(N, {(t, s, u): c for t, s, u, c in terms})


def _geo_even(D, m):
    """1 + t^2 + ... + t^(2(m-1)), the expanded (t^(2m) - 1)/(t^2 - 1)."""
    return _bi(D, [(2 * k, 0, 1) for k in range(max(m, 0))])


def _sum_core(g, D):
    """sum over 1 <= j <= g, i >= 0 of [V(i, j)] t^(j+i) s^i, truncated."""
    terms = {}
    for j in range(1, g + 1):
        i = 0
        while j + 2 * i <= D:
            terms[(j + i, i)] = _V(g, i, j)
            i += 1
    return BiSeries(D, terms)


def build_P_SV(g, D):
    """Bigraded Hilbert series of the exterior-times-symmetric algebra on
    the standard representation: the coefficient at (j+i, i) is the class
    of Lambda^j V tensor S^i V."""
    _check_genus(g)
    out = _geo_even(D, g + 1)
    out = out + _bi(D, [(2, 1, 1)]) * _geo_even(D, g)
    pre = _bi(D, [(0, 0, 1), (0, 1, 1), (2, 1, 1), (2, 2, 1)])  # (1+s)(1+t^2 s)
    tail = BiSeries.zero(D)
    for j in range(1, g + 1):
        geo_j = _geo_even(D, g - j + 1)
        core = {}
        i = 0
        while j + 2 * i <= D:
            core[(j + i, i)] = _V(g, i, j)
            i += 1
        tail = tail + geo_j * BiSeries(D, core)
    return out + pre * tail


def build_P_ker_cap(g, D):
    """Series of the joint kernel of the Koszul differential and of
    multiplication by the symplectic class:
    t^(2g) + (1 + t^2 s) * sum [V(i,j)] t^(2g-j+i) s^i."""
    _check_genus(g)
    terms = {}
    for j in range(1, g + 1):
        i = 0
        while 2 * g - j + 2 * i <= D:
            terms[(2 * g - j + i, i)] = _V(g, i, j)
            i += 1
    pre = _bi(D, [(0, 0, 1), (2, 1, 1)])
    return _bi(D, [(2 * g, 0, 1)]) + pre * BiSeries(D, terms)


def build_P_ker_mod(g, D):
    """Series of the Koszul kernel modulo the symplectic class:
    1 + (1 + t^2 s) * sum [V(i,j)] t^(j+i) s^i."""
    _check_genus(g)
    pre = _bi(D, [(0, 0, 1), (2, 1, 1)])
    return BiSeries.one(D) + pre * _sum_core(g, D)


def build_P_quot(g, D):
    """Series of the quotient by the images of the symplectic class and of
    the Koszul differential: (1 + t^2 s)(1 + s * sum [V(i,j)] t^(j+i) s^i)."""
    _check_genus(g)
    pre = _bi(D, [(0, 0, 1), (2, 1, 1)])
    return pre * (BiSeries.one(D) + _bi(D, [(0, 1, 1)]) * _sum_core(g, D))


def build_P_HA(g, D):
    """Bigraded Hilbert series of the cohomology of the reduced model:

        (1+t^2 s)(1 + t^2 + t^(2g) s)
        + (1+t^2 s)^2 * sum [V(i,j)] t^(j+i) s^i (1 + t^(2(g-j)) s).

    The same series is assembled from the three kernel/quotient series,
    and both constructions must agree exactly.
    """
    _check_genus(g)
    pre = _bi(D, [(0, 0, 1), (2, 1, 1)])
    direct = pre * _bi(D, [(0, 0, 1), (2, 0, 1), (2 * g, 1, 1)])
    tail = BiSeries.zero(D)
    for j in range(1, g + 1):
        factor = _bi(D, [(0, 0, 1), (2 * (g - j), 1, 1)])
        core = {}
        i = 0
        while j + 2 * i <= D:
            core[(j + i, i)] = _V(g, i, j)
            i += 1
        tail = tail + factor * BiSeries(D, core)
    direct = direct + pre * pre * tail

    assembled = (
        _bi(D, [(0, 1, 1)]) * build_P_ker_cap(g, D)
        + _bi(D, [(2, 1, 1)])
        + _bi(D, [(2, 2, 1)]) * build_P_ker_cap(g, D)
        + build_P_ker_mod(g, D)
        + _bi(D, [(2, 0, 1)]) * build_P_quot(g, D)
    )
    assert direct == assembled, "the two constructions of P_H(A) disagree"
    return direct


@lru_cache(maxsize=None)
def q_bracket(g, N):
    """The bracket whose product with 1/(1-u) is the master series:

        (1+t^2 s u^3)(1 + t^2 u) + (1+t^2 s u^2) t^(2g) s u^(2g+2)
        + (1+t^2 s u^2)(1+t^2 s u^3)
          * sum [V(i,j)] t^(j+i) s^i u^(j+2i) (1 + t^(2(g-j)) s u^(2(g-j+1))).
    """
    _check_genus(g)
    f3 = _tri(N, [(0, 0, 0, 1), (2, 1, 3, 1)])  # 1 + t^2 s u^3
    f2 = _tri(N, [(0, 0, 0, 1), (2, 1, 2, 1)])  # 1 + t^2 s u^2
    bracket = f3 * _tri(N, [(0, 0, 0, 1), (2, 0, 1, 1)])
    bracket = bracket + f2 * _tri(N, [(2 * g, 1, 2 * (g + 1), 1)])
    tail = TriSeries.zero(N)
    for j in range(1, g + 1):
        trailing = _tri(
            N, [(0, 0, 0, 1), (2 * (g - j), 1, 2 * (g - j + 1), 1)]
        )
        core = {}
        i = 0
        while j + 2 * i <= N:
            core[(j + i, i, j + 2 * i)] = _V(g, i, j)
            i += 1
        tail = tail + trailing * TriSeries(N, core)
    bracket = bracket + f2 * f3 * tail
    return bracket


@lru_cache(maxsize=None)
def build_Q(g, N):
    """Master series truncated at u^N: 1/(1-u) times the bracket."""
    _check_genus(g)
    if N < 0:
        raise ValueError("truncation must be >= 0")
    q = geom_u(N) * q_bracket(g, N)
    assert q.coeff_u(0) == {(0, 0): VirtualRep.unit()}, "u^0 coefficient must be 1"
    for (t, s, u), _ in q.coeffs():
        assert t <= u + 2 * g + 2, f"exponent bound violated at {(t, s, u)}"
    return q


def build_Q_assembled(g, N):
    """Second route to the master series: substitute t -> tu, s -> su in the
    kernel/quotient series and assemble with the stated prefactors."""
    _check_genus(g)
    D = 2 * N + 2 * g + 4
    ker_cap = build_P_ker_cap(g, D).substitute_tu_su(N)
    ker_mod = build_P_ker_mod(g, D).substitute_tu_su(N)
    quot = build_P_quot(g, D).substitute_tu_su(N)
    bracket = (
        _tri(N, [(0, 1, 2, 1)]) * ker_cap
        + _tri(N, [(2, 1, 3, 1)])
        + _tri(N, [(2, 2, 4, 1)]) * ker_cap
        + ker_mod
        + _tri(N, [(2, 0, 1, 1)]) * quot
    )
    return geom_u(N) * bracket


# ---------------------------------------------------------------------------
# tables


class MixedTable:
    """Per-(degree, weight) decomposition of the cohomology of UConf_n.

    ``entries`` maps (k, h) to an effective VirtualRep; k is the
    cohomological degree and h the weight.
    """

    __slots__ = ("genus", "n", "entries")

    def __init__(self, genus, n, entries):
        self.genus = genus
        self.n = n
        self.entries = {k: v for k, v in entries.items() if v}

    def validate(self):
        g, n = self.genus, self.n
        for (k, h), rep in self.entries.items():
            if not rep.is_effective():
                raise ValueError(f"negative multiplicity at (k={k}, h={h})")
            if not (h >= k and 0 <= 3 * k - 2 * h <= 2 * g + 2):
                warnings.warn(
                    f"weight band violated at genus {g}, n={n}, (k={k}, h={h})",
                    stacklevel=2,
                )
        if self.euler() != euler_binomials(g, n)[n]:
            raise ValueError(
                f"Euler characteristic mismatch for genus {g}, n={n}"
            )
        return self

    def dims(self):
        return {kh: rep.dim(self.genus) for kh, rep in sorted(self.entries.items())}

    def max_degree(self):
        return max((k for k, _ in self.entries), default=0)

    def betti(self):
        b = [0] * (self.max_degree() + 1)
        for (k, _), rep in self.entries.items():
            b[k] += rep.dim(self.genus)
        return tuple(b)

    def euler(self):
        return sum(
            (-1) ** k * rep.dim(self.genus) for (k, _), rep in self.entries.items()
        )

    def __eq__(self, other):
        if not isinstance(other, MixedTable):
            return NotImplemented
        return (
            self.genus == other.genus
            and self.n == other.n
            and self.entries == other.entries
        )

    def to_json(self):
        return {
            "genus": self.genus,
            "n": self.n,
            "table": [
                {
                    "degree": k,
                    "weight": h,
                    "dim": rep.dim(self.genus),
                    "decomposition": rep.to_json(),
                }
                for (k, h), rep in sorted(self.entries.items())
            ],
        }

    def __repr__(self):
        cells = ", ".join(
            f"({k},{h}): {rep.text()}" for (k, h), rep in sorted(self.entries.items())
        )
        return f"MixedTable(g={self.genus}, n={self.n}, {{{cells}}})"


def mixed_table(g, n):
    """Table of gr-pieces of H^*(UConf_n) for genus g >= 1, from the master
    series: series key (t, s) becomes (k, h) = (t+s, t+2s)."""
    _check_genus(g)
    if n < 0:
        raise ValueError("n must be >= 0")
    slice_n = build_Q(g, n).coeff_u(n)
    entries = {(t + s, t + 2 * s): rep for (t, s), rep in slice_n.items()}
    return MixedTable(g, n, entries).validate()


def genus0_betti(n):
    """Betti numbers of UConf_n of the sphere.

    The n-point space is rationally a point in positive degrees except for
    the sphere itself (n = 1) and the single degree-3 class for n >= 3.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return (1,)
    if n == 1:
        return (1, 0, 1)
    if n == 2:
        return (1, 0, 0)
    return (1, 0, 0, 1)


def betti(g, n):
    """Betti numbers of UConf_n; genus 0 is routed to its closed form."""
    if g == 0:
        return genus0_betti(n)
    return mixed_table(g, n).betti()


def mixed_poincare(g, n):
    """Mixed Poincare polynomial as a map (t_exp, s_exp) -> dimension."""
    _check_genus(g)
    slice_n = build_Q(g, n).coeff_u(n)
    return {ts: rep.dim(g) for ts, rep in sorted(slice_n.items())}


def euler_binomials(g, N):
    """Coefficients of (1+u)^(2-2g) through u^N."""
    e = 2 - 2 * g
    if e >= 0:
        return [comb(e, n) if n <= e else 0 for n in range(N + 1)]
    m = -e
    return [(-1) ** n * comb(m + n - 1, n) for n in range(N + 1)]


def euler_series(g, N):
    """Euler characteristics of UConf_n for n <= N, from the tables."""
    if g == 0:
        out = []
        for n in range(N + 1):
            b = genus0_betti(n)
            out.append(sum((-1) ** k * d for k, d in enumerate(b)))
        return out
    q = build_Q(g, N)
    out = []
    for n in range(N + 1):
        out.append(
            sum((-1) ** (t + s) * rep.dim(g) for (t, s), rep in q.coeff_u(n).items())
        )
    return out


def stabilization_bound(g, k, h):
    """Least n0 such that the (k, h) table entry is constant for n >= n0.

    The 1/(1-u) prefactor only accumulates, so the entry stabilizes at the
    largest u-exponent with which the bracket meets (k, h).  Every bracket
    term satisfies u <= t + s + 1, so scanning up to k + 2 is exhaustive.
    """
    _check_genus(g)
    t, s = 2 * k - h, h - k
    if t < 0 or s < 0:
        return 0
    bracket = q_bracket(g, k + 2)
    best = 0
    for (tt, ss, u), _ in bracket.coeffs():
        if (tt, ss) == (t, s) and u > best:
            best = u
    return best

"""Brute-force route: filtered differential graded models and their exact
bigraded cohomology.

Model B is the free graded-commutative algebra on generators

    a_1..a_g, b_1..b_g   of degree (1, 0, 1),
    p                    of degree (2, 0, 1),
    s1                   of degree (0, 1, 2),
    sa_1..sa_g, sb_1..sb_g of degree (1, 1, 2),
    sp                   of degree (2, 1, 2),

with differential d(s1) = p - sum a_i b_i, d(sa_i) = a_i p,
d(sb_i) = b_i p, d(sp) = p^2 and d = 0 on the degree-(.,0) generators.
Model A is the quotient by the acyclic ideal (sp, p^2).  The third degree
cuts out the filtration stage F_n (monomials of deg3 <= n), whose
cohomology gives the weight-graded cohomology of the n-point unordered
configuration space after the regrading
(k, h) = (deg1 + deg2, deg1 + 2*deg2).

The differential is computed with Koszul signs by explicit resorting of
generator sequences; blocks are split by torus weight before the exact
rank computation, which is valid because d preserves the weight.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import NamedTuple

from .closedform import MixedTable
from .linalg import SparseIntMatrix, rank, write_matrix_market
from .reps import Character, peel_character

__all__ = [
    "Genus0N1Unsupported",
    "Monomial",
    "enumerate_basis",
    "basis_count_series",
    "differential_monomial",
    "blocks",
    "BlockMatrix",
    "differential_block",
    "cohomology_dims",
    "cohomology_weights",
    "cohomology_reps",
    "dump_blocks",
    "ORACLE_BUDGET",
]

#: Desk-scale defaults for the brute-force route (basis sizes stay small).
ORACLE_BUDGET = {0: 12, 1: 10, 2: 8, 3: 5}


class Genus0N1Unsupported(ValueError):
    """The comparison underlying the model fails at genus 0 with one point;
    that case is served by the genus-0 closed form."""


class Monomial(NamedTuple):
    """Canonical monomial: exterior bits for a_1..a_g, b_1..b_g, flags for
    s1 and sp, the p exponent, and the exponents of sa_1..sa_g, sb_1..sb_g."""

    ext: int
    s1: int
    p: int
    sp: int
    sym: tuple


# generator codes, in the fixed order a < b < s1 < p < sp < sa < sb
def _code_s1(g):
    return 2 * g


def _code_p(g):
    return 2 * g + 1


def _code_sp(g):
    return 2 * g + 2


def _code_sa(g, i):
    return 2 * g + 3 + i


def _code_sb(g, i):
    return 3 * g + 3 + i


@lru_cache(maxsize=None)
def _gen_tables(g):
    """Per-code (deg1, deg2, deg3), total-degree parity, and torus weight."""
    ncodes = 4 * g + 3
    degs = [None] * ncodes
    odd = [False] * ncodes
    weight = [None] * ncodes
    zero = (0,) * g
    for i in range(g):
        e_i = tuple(1 if k == i else 0 for k in range(g))
        me_i = tuple(-1 if k == i else 0 for k in range(g))
        degs[i] = (1, 0, 1)
        odd[i] = True
        weight[i] = e_i
        degs[g + i] = (1, 0, 1)
        odd[g + i] = True
        weight[g + i] = me_i
        degs[_code_sa(g, i)] = (1, 1, 2)
        odd[_code_sa(g, i)] = False
        weight[_code_sa(g, i)] = e_i
        degs[_code_sb(g, i)] = (1, 1, 2)
        odd[_code_sb(g, i)] = False
        weight[_code_sb(g, i)] = me_i
    degs[_code_s1(g)] = (0, 1, 2)
    odd[_code_s1(g)] = True
    weight[_code_s1(g)] = zero
    degs[_code_p(g)] = (2, 0, 1)
    odd[_code_p(g)] = False
    weight[_code_p(g)] = zero
    degs[_code_sp(g)] = (2, 1, 2)
    odd[_code_sp(g)] = True
    weight[_code_sp(g)] = zero
    return tuple(degs), tuple(odd), tuple(weight)


def mono_degrees(g, m):
    """(deg1, deg2, deg3) of a monomial."""
    degs, _, _ = _gen_tables(g)
    d1 = d2 = d3 = 0
    for code in _expand(g, m):
        a, b, c = degs[code]
        d1 += a
        d2 += b
        d3 += c
    return d1, d2, d3


def mono_weight(g, m):
    """Torus weight as a g-tuple."""
    w = [0] * g
    for i in range(g):
        if m.ext >> i & 1:
            w[i] += 1
        if m.ext >> (g + i) & 1:
            w[i] -= 1
        w[i] += m.sym[i] - m.sym[g + i]
    return tuple(w)


def _expand(g, m):
    """Generator codes of a monomial in canonical order, with multiplicity."""
    seq = [i for i in range(2 * g) if m.ext >> i & 1]
    if m.s1:
        seq.append(_code_s1(g))
    seq.extend([_code_p(g)] * m.p)
    if m.sp:
        seq.append(_code_sp(g))
    for i in range(g):
        seq.extend([_code_sa(g, i)] * m.sym[i])
    for i in range(g):
        seq.extend([_code_sb(g, i)] * m.sym[g + i])
    return seq


def _canonicalize(g, model, seq):
    """Sort a generator sequence into a Monomial with its Koszul sign.

    Returns (sign, Monomial) or (0, None) when the product vanishes: a
    repeated odd generator, or p^2 (or any sp) in model A.
    """
    _, odd, _ = _gen_tables(g)
    sign = 1
    seen_odd = []
    for code in seq:
        if odd[code]:
            for prev in seen_odd:
                if prev > code:
                    sign = -sign
            seen_odd.append(code)
    if len(set(seen_odd)) != len(seen_odd):
        return 0, None
    counts = Counter(seq)
    p_exp = counts.get(_code_p(g), 0)
    sp_flag = counts.get(_code_sp(g), 0)
    if model == "A" and (p_exp >= 2 or sp_flag):
        return 0, None
    ext = 0
    for i in range(2 * g):
        if counts.get(i, 0):
            ext |= 1 << i
    sym = tuple(
        [counts.get(_code_sa(g, i), 0) for i in range(g)]
        + [counts.get(_code_sb(g, i), 0) for i in range(g)]
    )
    return sign, Monomial(ext, counts.get(_code_s1(g), 0), p_exp, sp_flag, sym)


@lru_cache(maxsize=None)
def _dterms(g, code):
    """Differential of a single generator as ((coeff, codes), ...)."""
    if code == _code_s1(g):
        out = [(1, (_code_p(g),))]
        out.extend((-1, (i, g + i)) for i in range(g))
        return tuple(out)
    if code == _code_sp(g):
        return ((1, (_code_p(g), _code_p(g))),)
    if 2 * g + 3 <= code < 3 * g + 3:
        return ((1, (code - 2 * g - 3, _code_p(g))),)
    if 3 * g + 3 <= code < 4 * g + 3:
        return ((1, (g + code - 3 * g - 3, _code_p(g))),)
    return ()


def differential_monomial(g, model, m):
    """d of a monomial by the Leibniz rule, as a list of (coeff, Monomial)."""
    _, odd, _ = _gen_tables(g)
    seq = _expand(g, m)
    out = {}
    parity = 0
    for k, code in enumerate(seq):
        terms = _dterms(g, code)
        if terms:
            sgn = -1 if parity else 1
            for coeff, ins in terms:
                s, mono = _canonicalize(g, model, seq[:k] + list(ins) + seq[k + 1:])
                if mono is not None:
                    out[mono] = out.get(mono, 0) + coeff * sgn * s
        if odd[code]:
            parity ^= 1
    return [(c, mono) for mono, c in out.items() if c]


def _model_gens(g, model):
    codes = list(range(2 * g)) + [_code_s1(g), _code_p(g)]
    if model == "B":
        codes.append(_code_sp(g))
    codes += [_code_sa(g, i) for i in range(g)] + [_code_sb(g, i) for i in range(g)]
    return codes


def basis_count_series(g, model, n):
    """[t^k] counts of the model by third degree, k <= n, via the product
    of one generator factor each: (1 + t^deg3) for odd generators and a
    truncated geometric series for even ones.  Independent of the basis
    enumeration; used to cross-check it."""
    degs, odd, _ = _gen_tables(g)
    poly = [1] + [0] * n
    for code in _model_gens(g, model):
        d3 = degs[code][2]
        if model == "A" and code == _code_p(g):
            factor_exps = (0, d3)  # p^2 = 0
        elif odd[code]:
            factor_exps = (0, d3)
        else:
            factor_exps = range(0, n + 1, d3)
        new = [0] * (n + 1)
        for e in factor_exps:
            if e > n:
                break
            for k in range(n + 1 - e):
                if poly[k]:
                    new[k + e] += poly[k]
        poly = new
    return poly


@lru_cache(maxsize=None)
def enumerate_basis(g, n, model="A"):
    """All monomials of third degree <= n, in a deterministic order."""
    if g < 0 or n < 0:
        raise ValueError("need g >= 0 and n >= 0")
    if model not in ("A", "B"):
        raise ValueError(f"model must be 'A' or 'B', got {model!r}")
    out = []
    sym_len = 2 * g

    def sym_tuples(budget):
        def rec(prefix, left):
            if len(prefix) == sym_len:
                yield tuple(prefix)
                return
            for v in range(left + 1):
                yield from rec(prefix + [v], left - v)

        if sym_len == 0:
            yield ()
        else:
            yield from rec([], budget)

    for ext in range(1 << (2 * g)):
        used_ext = bin(ext).count("1")
        if used_ext > n:
            continue
        for s1 in (0, 1):
            used1 = used_ext + 2 * s1
            if used1 > n:
                continue
            p_max = min(1, n - used1) if model == "A" else n - used1
            for p in range(p_max + 1):
                used2 = used1 + p
                sp_range = (0, 1) if model == "B" and used2 + 2 <= n else (0,)
                for sp in sp_range:
                    used3 = used2 + 2 * sp
                    for sym in sym_tuples((n - used3) // 2):
                        out.append(Monomial(ext, s1, p, sp, sym))
    out.sort()
    return tuple(out)


def blocks(g, n, model="A"):
    """Basis monomials grouped by (deg1, deg2)."""
    by_block = {}
    for m in enumerate_basis(g, n, model):
        d1, d2, _ = mono_degrees(g, m)
        by_block.setdefault((d1, d2), []).append(m)
    return by_block


class BlockMatrix(NamedTuple):
    """Differential restricted to one (deg1, deg2) block of F_n; the matrix
    maps the source basis (columns) to the (deg1+2, deg2-1) target basis
    (rows)."""

    source: tuple
    target: tuple
    matrix: SparseIntMatrix


def differential_block(g, n, model, block):
    """Matrix of d on the given (deg1, deg2) block of F_n."""
    by_block = blocks(g, n, model)
    source = by_block.get(block, [])
    d1, d2 = block
    target = by_block.get((d1 + 2, d2 - 1), [])
    index = {m: r for r, m in enumerate(target)}
    entries = []
    for col, m in enumerate(source):
        for coeff, image in differential_monomial(g, model, m):
            entries.append((index[image], col, coeff))
    return BlockMatrix(
        tuple(source), tuple(target), SparseIntMatrix(len(target), len(source), entries)
    )


def _check_supported(g, n):
    if g == 0 and n == 1:
        raise Genus0N1Unsupported(
            "genus 0 with one point is served by the genus-0 closed form"
        )


def _weight_split(g, n, model):
    """Basis grouped by ((deg1, deg2), torus weight)."""
    groups = {}
    for m in enumerate_basis(g, n, model):
        d1, d2, _ = mono_degrees(g, m)
        groups.setdefault(((d1, d2), mono_weight(g, m)), []).append(m)
    return groups


def _rank_one_group(args):
    g, n, model, key, source, position = args
    entries = []
    for col, m in enumerate(source):
        for coeff, image in differential_monomial(g, model, m):
            entries.append((position[image], col, coeff))
    matrix = SparseIntMatrix(len(position), len(source), entries)
    return key, rank(matrix)


def _worker_count():
    try:
        return max(1, int(os.environ.get("CONFCOH_THREADS", "1")))
    except ValueError:
        return 1


def _outgoing_ranks(g, n, model):
    """Exact rank of d on every ((deg1, deg2), weight) group of F_n."""
    groups = _weight_split(g, n, model)
    jobs = []
    for (block, w), source in sorted(groups.items()):
        d1, d2 = block
        target = groups.get(((d1 + 2, d2 - 1), w), [])
        position = {m: r for r, m in enumerate(target)}
        jobs.append((g, n, model, (block, w), source, position))
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_rank_one_group, jobs))
    else:
        results = [_rank_one_group(job) for job in jobs]
    return groups, dict(results)


@lru_cache(maxsize=None)
def _cohomology_by_weight(g, n, model="A"):
    """dim H per ((deg1, deg2), weight): kernel minus incoming rank."""
    _check_supported(g, n)
    groups, ranks = _outgoing_ranks(g, n, model)
    out = {}
    for (block, w), monos in groups.items():
        d1, d2 = block
        dim = (
            len(monos)
            - ranks.get((block, w), 0)
            - ranks.get(((d1 - 2, d2 + 1), w), 0)
        )
        assert dim >= 0
        if dim:
            out[(block, w)] = dim
    return out


def cohomology_dims(g, n, model="A"):
    """Bigraded cohomology dimensions of F_n as a map (deg1, deg2) -> dim."""
    out = {}
    for (block, _), dim in _cohomology_by_weight(g, n, model).items():
        out[block] = out.get(block, 0) + dim
    return dict(sorted(out.items()))


def cohomology_weights(g, n):
    """Per-block torus characters of the cohomology of F_n (model A)."""
    if g < 1:
        raise ValueError("weights require genus >= 1")
    out = {}
    for (block, w), dim in _cohomology_by_weight(g, n, "A").items():
        out.setdefault(block, {})[w] = dim
    return {block: Character(mult) for block, mult in sorted(out.items())}


def cohomology_reps(g, n, max_genus=3):
    """MixedTable of the brute-force cohomology: regrade each block by
    (k, h) = (deg1 + deg2, deg1 + 2*deg2) and peel its character."""
    if g < 1:
        raise ValueError("representation tables require genus >= 1")
    entries = {}
    for (d1, d2), char in cohomology_weights(g, n).items():
        entries[(d1 + d2, d1 + 2 * d2)] = peel_character(g, char, max_genus)
    return MixedTable(g, n, entries).validate()


def dump_blocks(g, n, model, dirpath):
    """Write every differential block of F_n in Matrix Market format."""
    os.makedirs(dirpath, exist_ok=True)
    written = []
    for block in sorted(blocks(g, n, model)):
        bm = differential_block(g, n, model, block)
        name = f"g{g}_n{n}_{model}_d{block[0]}_{block[1]}.mtx"
        path = os.path.join(dirpath, name)
        write_matrix_market(bm.matrix, path)
        written.append(path)
    return written

"""Representation theory of the symplectic Lie algebra sp(2g).

Labels of the two-parameter highest-weight family i*w1 + w_j, their exact
dimensions by two independent routes (a closed product formula and the
Weyl dimension formula), torus characters via the Freudenthal recursion,
and the decomposition rules consumed by the generating-series pipeline:
exterior powers of the standard representation, sl(2g)-hooks restricted
to sp(2g), and tensor products of a fundamental with a symmetric power.

All arithmetic is exact; there is no floating point in this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial
from typing import NamedTuple

__all__ = [
    "RepLabel",
    "ZERO",
    "TRIVIAL",
    "rep_label",
    "VirtualRep",
    "Character",
    "NotACharacter",
    "CharacterBudgetExceeded",
    "weyl_dim",
    "dim_irrep",
    "sl_hook_dim",
    "ext_power_decomp",
    "tensor_std_sym_decomp",
    "branching_hook",
    "irreducible_character",
    "character_of",
    "peel_character",
]

DEFAULT_CHARACTER_GENUS_BUDGET = 3


class NotACharacter(ValueError):
    """Peeling met data that cannot come from a genuine character."""


class CharacterBudgetExceeded(ValueError):
    """A character was requested beyond the configured genus budget."""


class RepLabel(NamedTuple):
    """Highest-weight label i*w1 + w_j; j = 0 means no second fundamental
    weight, so (i, 0) labels the i-th symmetric power of the standard
    representation and (0, 0) is the trivial representation."""

    i: int
    j: int


#: Distinguished zero label; every consumer treats it as the zero module.
ZERO = RepLabel(-1, -1)
TRIVIAL = RepLabel(0, 0)


def rep_label(g, i, j):
    """Label for i*w1 + w_j, or ZERO when the weight is not dominant.

    Since w_1 = e_1, the weight i*w1 (+ no fundamental) coincides with
    (i-1)*w1 + w_1; labels are normalized to the j >= 1 form so that equal
    representations compare equal.  (0, 0) stays the trivial label.

    >>> rep_label(2, 1, 3)
    RepLabel(i=-1, j=-1)
    >>> rep_label(2, 3, 0)
    RepLabel(i=2, j=1)
    """
    if i < 0 or j < 0 or j > g:
        return ZERO
    if j == 0 and i >= 1:
        return RepLabel(i - 1, 1)
    return RepLabel(i, j)


def highest_weight(g, label):
    """Coordinates of the highest weight in the e_1..e_g basis."""
    i, j = label
    if label == ZERO:
        raise ValueError("ZERO label has no weight")
    if j == 0:
        return (i,) + (0,) * (g - 1)
    return (i + 1,) + (1,) * (j - 1) + (0,) * (g - j)


class VirtualRep:
    """Finitely supported integer combination of irreducible labels.

    Only the additive structure of the representation ring is used.

    >>> v = VirtualRep.single(RepLabel(1, 2), 3) + VirtualRep.unit()
    >>> v.text()
    '3·V(1,2) + V(0,0)'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for label, mult in items:
                label = RepLabel(*label)
                if mult == 0 or label == ZERO:
                    continue
                if label.j == 0 and label.i >= 1:
                    label = RepLabel(label.i - 1, 1)  # i*w1 = (i-1)*w1 + w1
                data[label] = data.get(label, 0) + mult
        self._terms = {l: m for l, m in data.items() if m}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def single(cls, label, mult=1):
        return cls([(label, mult)])

    @classmethod
    def unit(cls, mult=1):
        """``mult`` copies of the trivial representation (the scalar mult)."""
        return cls([(TRIVIAL, mult)])

    def items(self):
        """Terms sorted by label, highest first."""
        return sorted(self._terms.items(), reverse=True)

    def mult(self, label):
        return self._terms.get(RepLabel(*label), 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        out = dict(self._terms)
        for l, m in other._terms.items():
            out[l] = out.get(l, 0) + m
        return VirtualRep(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return VirtualRep({l: -m for l, m in self._terms.items()})

    def scaled(self, c):
        if c == 0:
            return VirtualRep()
        return VirtualRep({l: c * m for l, m in self._terms.items()})

    def __mul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return self.scaled(c)

    __rmul__ = __mul__

    def is_scalar(self):
        """True when only the trivial label occurs."""
        return all(l == TRIVIAL for l in self._terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError(f"not a scalar: {self.text()}")
        return self._terms.get(TRIVIAL, 0)

    def is_effective(self):
        """True when every coefficient is nonnegative."""
        return all(m >= 0 for m in self._terms.values())

    def dominates(self, other):
        return (self - other).is_effective()

    def dim(self, g):
        return sum(m * dim_irrep(g, l) for l, m in self._terms.items())

    def text(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), m in self.items():
            name = f"V({i},{j})"
            if m == 1:
                parts.append(name)
            elif m == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{m}·{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [{"i": l.i, "j": l.j, "mult": m} for l, m in self.items()]

    @classmethod
    def from_json(cls, records):
        return cls([(RepLabel(r["i"], r["j"]), r["mult"]) for r in records])

    def __repr__(self):
        return f"VirtualRep({self.text()})"


# ---------------------------------------------------------------------------
# dimensions


def _check_genus(g):
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")


@lru_cache(maxsize=None)
def _positive_roots(g):
    roots = []
    for k in range(g):
        for h in range(k + 1, g):
            for sign in (-1, 1):
                root = [0] * g
                root[k] = 1
                root[h] = sign
                roots.append(tuple(root))
    for k in range(g):
        root = [0] * g
        root[k] = 2
        roots.append(tuple(root))
    return tuple(roots)


def _rho(g):
    # half-sum of the positive roots: (g, g-1, ..., 1)
    return tuple(g - k for k in range(g))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _is_dominant(w):
    return all(w[k] >= w[k + 1] for k in range(len(w) - 1)) and w[-1] >= 0


@lru_cache(maxsize=None)
def weyl_dim(g, weight):
    """Weyl dimension formula for a dominant weight of sp(2g).

    >>> weyl_dim(2, (1, 1))
    5
    """
    _check_genus(g)
    weight = tuple(weight)
    if len(weight) != g or not _is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant for sp({2 * g})")
    rho = _rho(g)
    lam_rho = tuple(a + b for a, b in zip(weight, rho))
    num = 1
    den = 1
    for alpha in _positive_roots(g):
        num *= _dot(lam_rho, alpha)
        den *= _dot(rho, alpha)
    assert num % den == 0, "Weyl dimension must be an integer"
    d = num // den
    assert d > 0
    return d


@lru_cache(maxsize=None)
def dim_irrep(g, label):
    """Exact dimension of V_{i*w1 + w_j}.

    For j >= 1 this is the closed product formula

        (2g+i+1)! / (i! j! (2g+1-j)!) * (2g+2-2j)/(2g+2+i-j) * j/(i+j);

    for j = 0 the formula does not apply and the Weyl dimension formula is
    used instead.  Both routes agree on j >= 1; see the test suite.

    >>> dim_irrep(2, RepLabel(1, 2))
    16
    """
    _check_genus(g)
    label = RepLabel(*label)
    if label == ZERO:
        raise ValueError("ZERO label has no dimension")
    i, j = label
    if not (0 <= j <= g) or i < 0:
        raise ValueError(f"label {label} invalid for genus {g}")
    if j == 0:
        return weyl_dim(g, highest_weight(g, label))
    multinomial = factorial(2 * g + i + 1) // (
        factorial(i) * factorial(j) * factorial(2 * g + 1 - j)
    )
    val = (
        Fraction(multinomial)
        * Fraction(2 * g + 2 - 2 * j, 2 * g + 2 + i - j)
        * Fraction(j, i + j)
    )
    assert val.denominator == 1 and val > 0
    return int(val)


def sl_hook_dim(g, i, j):
    """Dimension of the sl(2g) hook representation with arm i and leg j:
    C(i+j-1, i) * C(i+2g, i+j), for 1 <= j <= 2g.

    >>> sl_hook_dim(2, 1, 2)
    20
    """
    _check_genus(g)
    if not (1 <= j <= 2 * g) or i < 0:
        raise ValueError(f"need 0 <= i and 1 <= j <= {2 * g}, got i={i}, j={j}")
    return comb(i + j - 1, i) * comb(i + 2 * g, i + j)


# ---------------------------------------------------------------------------
# decomposition rules


def ext_power_decomp(g, j):
    """Decomposition of the j-th exterior power of the standard
    representation: Lambda^j V = sum of V_{w_{j-2k}}, using
    Lambda^j = Lambda^{2g-j} for j > g.

    >>> ext_power_decomp(2, 2).text()
    'V(0,2) + V(0,0)'
    """
    _check_genus(g)
    if not (0 <= j <= 2 * g):
        raise ValueError(f"need 0 <= j <= {2 * g}, got {j}")
    if j > g:
        j = 2 * g - j
    return VirtualRep([(rep_label(g, 0, j - 2 * k), 1) for k in range(j // 2 + 1)])


def tensor_std_sym_decomp(g, i, j):
    """Decomposition of V_{w_j} tensor S^i V for i >= 1 and 1 <= j <= g:

        V_{i w1 + w_j} + V_{(i-1) w1 + w_{j+1}}
        + V_{(i-1) w1 + w_{j-1}} + V_{(i-2) w1 + w_j},

    where non-dominant labels drop out as ZERO.  The decomposition is
    multiplicity-free: at j = 1 the last two slots name the same
    representation ((i-1)*w1 twice over) and merge to a single summand,
    as the dimension identity demands.
    """
    _check_genus(g)
    if i < 1 or not (1 <= j <= g):
        raise ValueError(f"need i >= 1 and 1 <= j <= {g}, got i={i}, j={j}")
    labels = {
        rep_label(g, i, j),
        rep_label(g, i - 1, j + 1),
        rep_label(g, i - 1, j - 1),
        rep_label(g, i - 2, j),
    }
    return VirtualRep([(label, 1) for label in labels])


def _tensor_ext_sym(g, j, i):
    """[Lambda^j V tensor S^i V] in the representation ring, via the
    exterior-power decomposition and the fundamental-times-symmetric rule."""
    lam = ext_power_decomp(g, j)
    if i == 0:
        return lam
    out = VirtualRep()
    for (li, lj), mult in lam.items():
        assert li == 0
        if lj == 0:
            # trivial tensor S^i V: the symmetric power itself
            out += VirtualRep.single(rep_label(g, i, 0), mult)
        else:
            out += tensor_std_sym_decomp(g, i, lj).scaled(mult)
    return out


def _branch_strip(g, i, j):
    """Vertical-strip restriction rule for the hook with arm i, leg j <= g.

    Removing an even column strip of the leg keeps the arm multiplicity,
    removing a row-end box together with an odd column strip lowers it by
    one, and for i = 0 with even j the whole column may be removed, which
    contributes the trivial representation.
    """
    terms = []
    b = j
    while b >= 1:
        terms.append((rep_label(g, i, b), 1))
        b -= 2
    if i == 0 and j % 2 == 0:
        terms.append((TRIVIAL, 1))
    if i >= 1:
        b = j - 1
        while b >= 1:
            terms.append((rep_label(g, i - 1, b), 1))
            b -= 2
    return VirtualRep(terms)


def _branch_series(g, i, j):
    """Restriction of the hook via the alternating Koszul identity

        [hook(i, j)] = sum_k (-1)^k [Lambda^{j+k} V tensor S^{i-k} V],

    evaluated in the representation ring; exact for every 1 <= j <= 2g.
    """
    out = VirtualRep()
    sign = 1
    for k in range(i + 1):
        jj = j + k
        if jj > 2 * g:
            break
        out += _tensor_ext_sym(g, jj, i - k).scaled(sign)
        sign = -sign
    return out


def branching_hook(g, i, j):
    """Restriction of the sl(2g) hook with arm i and leg 1 <= j <= 2g to
    sp(2g).  All coefficients are nonnegative and the dimensions add up to
    ``sl_hook_dim(g, i, j)``.

    >>> branching_hook(2, 1, 2).text()
    'V(1,2) + V(0,1)'
    """
    _check_genus(g)
    if not (1 <= j <= 2 * g) or i < 0:
        raise ValueError(f"need 0 <= i and 1 <= j <= {2 * g}, got i={i}, j={j}")
    out = _branch_strip(g, i, j) if j <= g else _branch_series(g, i, j)
    assert out.is_effective(), f"negative multiplicity in branching({g},{i},{j})"
    return out


# ---------------------------------------------------------------------------
# characters


class Character:
    """Finitely supported weight-multiplicity map on the torus of sp(2g).

    Weights are integer g-tuples in e_1..e_g coordinates.
    """

    __slots__ = ("_mult",)

    def __init__(self, mult=None):
        data = {}
        if mult:
            items = mult.items() if isinstance(mult, dict) else mult
            for w, m in items:
                if m:
                    w = tuple(w)
                    data[w] = data.get(w, 0) + m
        self._mult = {w: m for w, m in data.items() if m}

    def items(self):
        return sorted(self._mult.items(), reverse=True)

    def get(self, w):
        return self._mult.get(tuple(w), 0)

    def mass(self):
        """Total multiplicity; equals the dimension for a genuine character."""
        return sum(self._mult.values())

    def __bool__(self):
        return bool(self._mult)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self._mult == other._mult

    def __add__(self, other):
        out = dict(self._mult)
        for w, m in other._mult.items():
            out[w] = out.get(w, 0) + m
        return Character(out)

    def __sub__(self, other):
        out = dict(self._mult)
        for w, m in other._mult.items():
            out[w] = out.get(w, 0) - m
        return Character(out)

    def scaled(self, c):
        return Character({w: c * m for w, m in self._mult.items()})

    def __repr__(self):
        return f"Character({self._mult!r})"


def _dom_rep(w):
    """Dominant representative of a weight under the hyperoctahedral Weyl
    group: absolute values sorted decreasingly."""
    return tuple(sorted((abs(x) for x in w), reverse=True))


def _orbit(w):
    """Full Weyl orbit of a dominant weight (signed permutations)."""
    out = set()
    for perm in set(permutations(w)):
        nonzero = [k for k, x in enumerate(perm) if x]
        for signs in product((1, -1), repeat=len(nonzero)):
            v = list(perm)
            for k, s in zip(nonzero, signs):
                v[k] *= s
            out.add(tuple(v))
    return out


def _height2(g, v):
    # twice the height of a root-lattice vector: sum (2(g-m)+1) v_m
    return sum((2 * (g - 1 - m) + 1) * x for m, x in enumerate(v))


def _dominant_weights_below(g, lam):
    """All dominant weights mu <= lam: partial sums bounded by those of lam
    and lam - mu in the root lattice (even coordinate sum)."""
    out = []
    lam_partial = [sum(lam[: m + 1]) for m in range(g)]
    lam_total = lam_partial[-1]

    def rec(prefix, bound, partial):
        m = len(prefix)
        if m == g:
            if (lam_total - partial) % 2 == 0:
                out.append(tuple(prefix))
            return
        for x in range(min(bound, lam_partial[m] - partial), -1, -1):
            # dominance: prefix sums of mu never exceed those of lam
            rec(prefix + [x], x, partial + x)

    rec([], lam[0], 0)
    return out


@lru_cache(maxsize=None)
def _dominant_mults(g, lam):
    """Freudenthal recursion: multiplicities of the dominant weights of the
    irreducible with highest weight ``lam``; returns ((weight, mult), ...)."""
    rho = _rho(g)
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    lam_rho_sq = _dot(lam_rho, lam_rho)
    doms = _dominant_weights_below(g, lam)
    doms.sort(key=lambda mu: _height2(g, tuple(a - b for a, b in zip(lam, mu))))
    assert doms[0] == lam
    dom_set = set(doms)
    mults = {lam: 1}
    for mu in doms[1:]:
        num = 0
        for alpha in _positive_roots(g):
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                rep = _dom_rep(nu)
                if rep not in dom_set:
                    break  # the alpha-string through mu is contiguous
                num += mults[rep] * _dot(nu, alpha)
                k += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        den = lam_rho_sq - _dot(mu_rho, mu_rho)
        assert den > 0
        m, r = divmod(2 * num, den)
        assert r == 0, "Freudenthal division must be exact"
        assert m > 0
        mults[mu] = m
    return tuple(sorted(mults.items()))


def irreducible_character(g, label, max_genus=DEFAULT_CHARACTER_GENUS_BUDGET):
    """Full weight-multiplicity map of V_{i*w1 + w_j}.

    The Weyl group has size 2^g g!, so the engine is budgeted to small
    genus (default g <= 3).
    """
    _check_genus(g)
    if g > max_genus:
        raise CharacterBudgetExceeded(
            f"character engine budgeted to genus <= {max_genus}, got {g}"
        )
    label = RepLabel(*label)
    if label == ZERO:
        raise ValueError("ZERO label has no character")
    lam = highest_weight(g, label)
    full = {}
    for mu, m in _dominant_mults(g, lam):
        for w in _orbit(mu):
            full[w] = m
    return Character(full)


def character_of(g, vrep, max_genus=DEFAULT_CHARACTER_GENUS_BUDGET):
    """Character of a virtual representation (sum of irreducible characters)."""
    out = Character()
    for label, m in vrep.items():
        out += irreducible_character(g, label, max_genus).scaled(m)
    return out


def _hook_label(w):
    """RepLabel for a dominant weight of hook shape, else None."""
    nonzero = [x for x in w if x]
    if not nonzero:
        return TRIVIAL
    if any(x != 1 for x in nonzero[1:]):
        return None
    j = len(nonzero)
    if j == 1:
        # a single row is (i+1) w1 = label (c1 - 1, 1)
        return RepLabel(nonzero[0] - 1, 1)
    return RepLabel(nonzero[0] - 1, j)


def peel_character(g, char, max_genus=DEFAULT_CHARACTER_GENUS_BUDGET):
    """Decompose a genuine character into irreducibles of the hook family
    by repeatedly subtracting the character of a maximal dominant weight.

    Raises NotACharacter when a multiplicity goes negative or a highest
    weight falls outside the i*w1 + w_j family; either signals an upstream
    bug, since everything this artifact peels lies in that family.
    """
    _check_genus(g)
    work = {w: m for w, m in char.items()}
    out = []
    while any(work.values()):
        dominants = [w for w, m in work.items() if m and _is_dominant(w)]
        if not dominants:
            raise NotACharacter("nonzero weights remain but none is dominant")
        mu = max(dominants)  # lexicographic max is maximal in dominance order
        m = work[mu]
        if m < 0:
            raise NotACharacter(f"negative multiplicity {m} at weight {mu}")
        label = _hook_label(mu)
        if label is None:
            raise NotACharacter(f"highest weight {mu} is not of hook form")
        for w, mm in irreducible_character(g, label, max_genus).items():
            work[w] = work.get(w, 0) - m * mm
        out.append((label, m))
    return VirtualRep(out)

"""Truncated formal power series with representation-valued coefficients.

TriSeries lives in variables t, s, u and is truncated in the u-exponent;
BiSeries lives in t, s and is truncated in the total degree t+s.  The
coefficients are VirtualRep values (plain integers coerce to multiples of
the trivial representation).  Multiplication is only defined when at most
one factor carries non-scalar coefficients, because the representation
ring is used additively.

All values are immutable and every operation is pure.
"""

from .reps import VirtualRep

__all__ = [
    "TriSeries",
    "BiSeries",
    "geom_u",
    "OutOfTruncation",
    "BothSidesVirtual",
]


class OutOfTruncation(ValueError):
    """A coefficient beyond the series truncation was requested."""


class BothSidesVirtual(ValueError):
    """Product of two series that both carry non-scalar coefficients."""


def _as_rep(c):
    if isinstance(c, VirtualRep):
        return c
    if isinstance(c, int):
        return VirtualRep.unit(c)
    raise TypeError(f"coefficient must be int or VirtualRep, got {type(c)!r}")


def _coeff_mul(a, b):
    if a.is_scalar():
        return b.scaled(a.scalar_value())
    if b.is_scalar():
        return a.scaled(b.scalar_value())
    raise BothSidesVirtual("both coefficients carry nontrivial labels")


_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _pow(sym, e):
    if e == 0:
        return ""
    if e == 1:
        return sym
    return sym + str(e).translate(_SUP)


def _mono_text(t, s, u=0):
    ts = _pow("t", t) + _pow("s", s)
    up = _pow("u", u)
    if ts and up:
        return f"{ts}·{up}"
    return ts or up


def _term_text(coeff, mono):
    if coeff.is_scalar():
        c = coeff.scalar_value()
        if not mono:
            return str(c)
        if c == 1:
            return mono
        if c == -1:
            return f"-{mono}"
        return f"{c}{mono}"
    if not mono:
        return f"[{coeff.text()}]"
    return f"[{coeff.text()}]·{mono}"


class TriSeries:
    """Series in t, s, u truncated at a fixed u-exponent.

    Terms beyond the truncation are dropped silently, which is the
    truncation contract for sums and Cauchy products alike.
    """

    __slots__ = ("u_trunc", "_c")

    def __init__(self, u_trunc, coeffs=None):
        if u_trunc < 0:
            raise ValueError("u truncation must be >= 0")
        self.u_trunc = u_trunc
        data = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for key, c in items:
                t, s, u = key
                if t < 0 or s < 0 or u < 0:
                    raise ValueError(f"negative exponent in {key}")
                if u > u_trunc:
                    continue
                c = _as_rep(c)
                if not c:
                    continue
                prev = data.get((t, s, u))
                data[(t, s, u)] = prev + c if prev is not None else c
        self._c = {k: v for k, v in data.items() if v}

    @classmethod
    def zero(cls, u_trunc):
        return cls(u_trunc)

    @classmethod
    def one(cls, u_trunc):
        return cls(u_trunc, {(0, 0, 0): 1})

    @classmethod
    def term(cls, u_trunc, t, s, u, coeff=1):
        return cls(u_trunc, {(t, s, u): coeff})

    def coeffs(self):
        """Terms sorted lexicographically by (u, t, s)."""
        return sorted(self._c.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))

    def get(self, t, s, u):
        return self._c.get((t, s, u), VirtualRep.zero())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, TriSeries):
            return NotImplemented
        return self.u_trunc == other.u_trunc and self._c == other._c

    def __add__(self, other):
        trunc = min(self.u_trunc, other.u_trunc)
        out = {k: v for k, v in self._c.items() if k[2] <= trunc}
        for k, v in other._c.items():
            if k[2] <= trunc:
                out[k] = out.get(k, VirtualRep.zero()) + v
        return TriSeries(trunc, out)

    def __neg__(self):
        return TriSeries(self.u_trunc, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        """Multiply every coefficient by an integer or a VirtualRep."""
        c = _as_rep(c)
        return TriSeries(self.u_trunc, {k: _coeff_mul(v, c) for k, v in self._c.items()})

    def is_scalar(self):
        return all(v.is_scalar() for v in self._c.values())

    def __mul__(self, other):
        if not isinstance(other, TriSeries):
            return NotImplemented
        if not self.is_scalar() and not other.is_scalar():
            raise BothSidesVirtual("at most one factor may carry nontrivial labels")
        trunc = min(self.u_trunc, other.u_trunc)
        out = {}
        for (t1, s1, u1), c1 in self._c.items():
            if u1 > trunc:
                continue
            for (t2, s2, u2), c2 in other._c.items():
                u = u1 + u2
                if u > trunc:
                    continue
                key = (t1 + t2, s1 + s2, u)
                c = _coeff_mul(c1, c2)
                prev = out.get(key)
                out[key] = prev + c if prev is not None else c
        return TriSeries(trunc, out)

    def coeff_u(self, n):
        """The u^n slice as a map (t_exp, s_exp) -> VirtualRep."""
        if n > self.u_trunc:
            raise OutOfTruncation(f"u^{n} beyond truncation {self.u_trunc}")
        if n < 0:
            raise ValueError("negative u exponent")
        return {(t, s): c for (t, s, u), c in self._c.items() if u == n}

    def text(self):
        """Rendering like ``[V(1,1)]·t²s·u³`` with lexicographic term order."""
        if not self._c:
            return "0"
        parts = [_term_text(c, _mono_text(t, s, u)) for (t, s, u), c in self.coeffs()]
        return " + ".join(parts).replace("+ -", "- ")

    def grouped_u_text(self):
        """Scalar series rendered with the u-slices grouped, e.g.
        ``1 + (1 + 2t + t²)u``."""
        if not self._c:
            return "0"
        groups = {}
        for (t, s, u), c in self._c.items():
            groups.setdefault(u, {})[(t, s)] = c.scalar_value()
        parts = []
        for u in sorted(groups):
            terms = sorted(groups[u].items())
            inner = " + ".join(
                _term_text(VirtualRep.unit(c), _mono_text(t, s)) for (t, s), c in terms
            ).replace("+ -", "- ")
            up = _pow("u", u)
            if not up:
                parts.append(inner)
            elif len(terms) > 1:
                parts.append(f"({inner}){up}")
            elif inner == "1":
                parts.append(up)
            else:
                parts.append(f"{inner}{up}")
        return " + ".join(parts)

    def to_json(self):
        return [
            {"t": t, "s": s, "u": u, "rep": c.to_json()}
            for (t, s, u), c in self.coeffs()
        ]

    @classmethod
    def from_json(cls, records, u_trunc):
        return cls(
            u_trunc,
            {
                (r["t"], r["s"], r["u"]): VirtualRep.from_json(r["rep"])
                for r in records
            },
        )

    def __repr__(self):
        return f"TriSeries(u<={self.u_trunc}, {self.text()})"


def geom_u(N):
    """The truncated geometric series 1 + u + ... + u^N."""
    return TriSeries(N, {(0, 0, n): 1 for n in range(N + 1)})


class BiSeries:
    """Series in t, s truncated at a fixed total degree t+s."""

    __slots__ = ("total_trunc", "_c")

    def __init__(self, total_trunc, coeffs=None):
        if total_trunc < 0:
            raise ValueError("total truncation must be >= 0")
        self.total_trunc = total_trunc
        data = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for key, c in items:
                t, s = key
                if t < 0 or s < 0:
                    raise ValueError(f"negative exponent in {key}")
                if t + s > total_trunc:
                    continue
                c = _as_rep(c)
                if not c:
                    continue
                prev = data.get((t, s))
                data[(t, s)] = prev + c if prev is not None else c
        self._c = {k: v for k, v in data.items() if v}

    @classmethod
    def zero(cls, total_trunc):
        return cls(total_trunc)

    @classmethod
    def one(cls, total_trunc):
        return cls(total_trunc, {(0, 0): 1})

    @classmethod
    def term(cls, total_trunc, t, s, coeff=1):
        return cls(total_trunc, {(t, s): coeff})

    def coeffs(self):
        return sorted(self._c.items())

    def get(self, t, s):
        return self._c.get((t, s), VirtualRep.zero())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.total_trunc == other.total_trunc and self._c == other._c

    def __add__(self, other):
        trunc = min(self.total_trunc, other.total_trunc)
        out = {k: v for k, v in self._c.items() if k[0] + k[1] <= trunc}
        for k, v in other._c.items():
            if k[0] + k[1] <= trunc:
                out[k] = out.get(k, VirtualRep.zero()) + v
        return BiSeries(trunc, out)

    def __neg__(self):
        return BiSeries(self.total_trunc, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = _as_rep(c)
        return BiSeries(
            self.total_trunc, {k: _coeff_mul(v, c) for k, v in self._c.items()}
        )

    def is_scalar(self):
        return all(v.is_scalar() for v in self._c.values())

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        if not self.is_scalar() and not other.is_scalar():
            raise BothSidesVirtual("at most one factor may carry nontrivial labels")
        trunc = min(self.total_trunc, other.total_trunc)
        out = {}
        for (t1, s1), c1 in self._c.items():
            for (t2, s2), c2 in other._c.items():
                t, s = t1 + t2, s1 + s2
                if t + s > trunc:
                    continue
                c = _coeff_mul(c1, c2)
                prev = out.get((t, s))
                out[(t, s)] = prev + c if prev is not None else c
        return BiSeries(trunc, out)

    def substitute_tu_su(self, u_trunc):
        """Substitute t -> t*u, s -> s*u: the (a, b) term acquires u^(a+b)."""
        return TriSeries(
            u_trunc,
            {(t, s, t + s): c for (t, s), c in self._c.items() if t + s <= u_trunc},
        )

    def text(self):
        if not self._c:
            return "0"
        parts = [_term_text(c, _mono_text(t, s)) for (t, s), c in self.coeffs()]
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"BiSeries(t+s<={self.total_trunc}, {self.text()})"

"""Exact integer symmetric-function algebra in the Schur basis.

Products and skew expansions go through Littlewood-Richardson filling
enumeration. A second route through monomial expansions (enumerate the
semistandard tableaux, collect exponent vectors, peel greedily) exists for
cross-checking and shares no code with the filling enumeration. Two
homogeneous symmetric functions of degree d are equal iff their monomial
expansions in d variables agree, so every monomial-level check fixes
num_vars at the degree at hand. All coefficients are exact ints.
"""

from __future__ import annotations

from functools import lru_cache

from .shapes import (
    Partition,
    SkewShape,
    format_partition,
    format_shape,
    partitions_of_size,
    superpartitions,
)
from .tableaux import enumerate_ssyt, lr_fillings


class NotSymmetric(ValueError):
    """Monomial data does not peel to a Schur expansion."""


class SchurExpansion:
    """Finite integer combination of Schur functions keyed by partition.

    No zero coefficients are stored; equality is coefficientwise.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[Partition, int] = {}
        for p, c in (terms or {}).items():
            if not isinstance(p, Partition):
                p = Partition(tuple(p))
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            if c:
                data[p] = c
        self.terms = data

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, p) -> int:
        if not isinstance(p, Partition):
            p = Partition(tuple(p))
        return self.terms.get(p, 0)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return SchurExpansion(out)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + (-other)

    def __neg__(self) -> "SchurExpansion":
        return SchurExpansion({p: -c for p, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurExpansion({p: c * other for p, c in self.terms.items()})
        if isinstance(other, SchurExpansion):
            return schur_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def degree(self) -> int:
        return max((p.size for p in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for p, c in self:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            bits.append(f"{'-' if c < 0 else '+'} {mag}s[{format_partition(p)}]")
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else text

    __repr__ = __str__


class SkewExpansion:
    """Finite integer combination of skew Schur functions keyed by shape.

    Skew Schur functions are not linearly independent, so `==` compares the
    images under to_schur; `same_terms` compares the raw term maps for
    golden tests against displayed term lists.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[SkewShape, int] = {}
        for s, c in (terms or {}).items():
            if not isinstance(s, SkewShape):
                raise TypeError(f"{s!r} is not a skew shape")
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            if c:
                data[s] = c
        self.terms = data

    def __eq__(self, other):
        if isinstance(other, SkewExpansion):
            return self.to_schur() == other.to_schur()
        return NotImplemented

    __hash__ = None

    def same_terms(self, other: "SkewExpansion") -> bool:
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, s: SkewShape) -> int:
        return self.terms.get(s, 0)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda t: (t[0].outer.parts, t[0].inner.parts)))

    def __add__(self, other: "SkewExpansion") -> "SkewExpansion":
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + c
        return SkewExpansion(out)

    def __sub__(self, other: "SkewExpansion") -> "SkewExpansion":
        return self + (-other)

    def __neg__(self) -> "SkewExpansion":
        return SkewExpansion({s: -c for s, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return SkewExpansion({s: c * other for s, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def to_schur(self) -> SchurExpansion:
        return skew_expansion_to_schur(self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for s, c in self:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            bits.append(f"{'-' if c < 0 else '+'} {mag}s[{format_shape(s)}]")
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else text

    __repr__ = __str__


def schur(p) -> SchurExpansion:
    """The single Schur function s_p as an expansion."""
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    return SchurExpansion({p: 1})


@lru_cache(maxsize=None)
def _lr_pairs(shape: SkewShape) -> tuple[tuple[Partition, int], ...]:
    """Content partitions of the LR fillings of shape, with multiplicity."""
    counts: dict[Partition, int] = {}
    for t in lr_fillings(shape):
        nu = Partition(t.content())
        counts[nu] = counts.get(nu, 0) + 1
    return tuple(sorted(counts.items()))


def lr_expand(shape: SkewShape) -> SchurExpansion:
    """s_{outer/inner} as a sum of straight Schur functions."""
    return SchurExpansion(dict(_lr_pairs(shape)))


def lr_coefficient(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Number of LR fillings of nu/lam with content mu (zero when lam is not
    contained in nu or the sizes do not match)."""
    if not nu.contains(lam) or nu.size != lam.size + mu.size:
        return 0
    for content, count in _lr_pairs(SkewShape(nu, lam)):
        if content == mu:
            return count
    return 0


@lru_cache(maxsize=None)
def _basis_product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    """s_mu * s_nu in the Schur basis."""
    out = []
    for lam in superpartitions(mu, nu.size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


def schur_product(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    """Bilinear extension of the Littlewood-Richardson product."""
    out: dict[Partition, int] = {}
    for mu, a in f.terms.items():
        for nu, b in g.terms.items():
            for lam, c in _basis_product(mu, nu):
                out[lam] = out.get(lam, 0) + a * b * c
    return SchurExpansion(out)


def skew_to_schur(s: SkewShape) -> SchurExpansion:
    """s_{outer/inner} in the Schur basis."""
    return lr_expand(s)


def skew_expansion_to_schur(x: SkewExpansion) -> SchurExpansion:
    out = SchurExpansion()
    for s, c in x.terms.items():
        out = out + lr_expand(s) * c
    return out


def hall_inner(f: SchurExpansion, g: SchurExpansion) -> int:
    """Hall inner product; Schur functions are orthonormal."""
    if len(g.terms) < len(f.terms):
        f, g = g, f
    return sum(c * g.terms.get(p, 0) for p, c in f.terms.items())


def _product_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """Coefficient of s_lam in s_mu * s_nu, read off the product."""
    for p, c in _basis_product(mu, nu):
        if p == lam:
            return c
    return 0


def perp(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    """The adjoint of multiplication by f, applied to g: the coefficient of
    s_nu in perp(f, g) is <g, f*s_nu>, computed through the product. That
    perp(schur(mu), schur(lam)) equals skew_to_schur(lam/mu) is a theorem
    checked in the tests, not a shortcut taken here."""
    out: dict[Partition, int] = {}
    for mu, a in f.terms.items():
        for lam, b in g.terms.items():
            d = lam.size - mu.size
            if d < 0:
                continue
            for nu in partitions_of_size(d):
                c = _product_coefficient(mu, nu, lam)
                if c:
                    out[nu] = out.get(nu, 0) + a * b * c
    return SchurExpansion(out)


def h(n: int) -> SchurExpansion:
    """Complete homogeneous h_n = s_(n)."""
    if n < 0:
        raise ValueError("h(n) needs n >= 0")
    return schur(Partition((n,) if n else ()))


def e(n: int) -> SchurExpansion:
    """Elementary e_n = s_(1^n)."""
    if n < 0:
        raise ValueError("e(n) needs n >= 0")
    return schur(Partition((1,) * n))


def omega(f: SchurExpansion) -> SchurExpansion:
    """The involution sending s_p to s_{p conjugate}."""
    return SchurExpansion({p.conjugate(): c for p, c in f.terms.items()})


@lru_cache(maxsize=None)
def _monomial_pairs(shape: SkewShape, num_vars: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    counts: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(shape, num_vars):
        content = t.content()
        vec = content + (0,) * (num_vars - len(content))
        counts[vec] = counts.get(vec, 0) + 1
    return tuple(sorted(counts.items()))


def monomial_expansion(s: SkewShape, num_vars: int) -> dict[tuple[int, ...], int]:
    """Exponent-vector multiset of s_{outer/inner} restricted to num_vars
    variables, via direct tableau enumeration."""
    return dict(_monomial_pairs(s, num_vars))


def schur_monomials(f: SchurExpansion, num_vars: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of a Schur-basis expansion in num_vars variables."""
    out: dict[tuple[int, ...], int] = {}
    for p, c in f.terms.items():
        for vec, k in _monomial_pairs(SkewShape(p), num_vars):
            total = out.get(vec, 0) + c * k
            if total:
                out[vec] = total
            else:
                out.pop(vec, None)
    return out


def skew_monomials(x: SkewExpansion, num_vars: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of a signed sum of skew Schur functions."""
    out: dict[tuple[int, ...], int] = {}
    for s, c in x.terms.items():
        for vec, k in _monomial_pairs(s, num_vars):
            total = out.get(vec, 0) + c * k
            if total:
                out[vec] = total
            else:
                out.pop(vec, None)
    return out


def monomial_product(a: dict[tuple[int, ...], int], b: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
    """Polynomial product of two exponent-vector maps."""
    out: dict[tuple[int, ...], int] = {}
    for va, ca in a.items():
        for vb, cb in b.items():
            v = tuple(x + y for x, y in zip(va, vb, strict=True))
            total = out.get(v, 0) + ca * cb
            if total:
                out[v] = total
            else:
                out.pop(v, None)
    return out


def schur_from_monomials(m: dict[tuple[int, ...], int], num_vars: int) -> SchurExpansion:
    """Greedy peeling: the lexicographically greatest exponent vector of a
    symmetric polynomial is a partition and is the leading term of its own
    Schur function with coefficient one, so subtracting coefficient times
    that Schur function's monomials strictly lowers the leading term."""
    work = {v: c for v, c in m.items() if c}
    out: dict[Partition, int] = {}
    while work:
        lead = max(work)
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise NotSymmetric(f"leading exponent {lead} is not a partition")
        p = Partition(tuple(x for x in lead if x))
        coeff = work[lead]
        out[p] = coeff
        for vec, k in _monomial_pairs(SkewShape(p), num_vars):
            total = work.get(vec, 0) - coeff * k
            if total:
                work[vec] = total
            else:
                work.pop(vec, None)
        if lead in work:
            raise NotSymmetric(f"peeling failed to clear {lead}")
    return SchurExpansion(out)


def perp_identity_failures(f: SchurExpansion, g: SchurExpansion, n: int) -> list[str]:
    """Check the four perp identities exactly; describe any that fail.

    The operator identity (fg)^perp = f^perp g^perp is probed on all Schur
    functions of degree at most deg f + deg g + 2: below deg f + deg g both
    sides vanish, and the extra two degrees exercise nonconstant images.
    """
    fails: list[str] = []

    lhs = schur_product(f, perp(h(n), g))
    rhs = SchurExpansion()
    for k in range(n + 1):
        term = perp(h(n - k), schur_product(perp(e(k), f), g))
        rhs = rhs + term * (-1) ** k
    if lhs != rhs:
        fails.append("f*h_n^perp(g) != sum_k (-1)^k h_{n-k}^perp(e_k^perp(f) g)")

    alternating = SchurExpansion()
    for i in range(n + 1):
        alternating = alternating + schur_product(e(i), h(n - i)) * (-1) ** i
    if alternating:
        fails.append("sum_i (-1)^i e_i h_{n-i} != 0")

    lhs = perp(h(n), schur_product(f, g))
    rhs = SchurExpansion()
    for i in range(n + 1):
        rhs = rhs + schur_product(perp(h(n - i), f), perp(h(i), g))
    if lhs != rhs:
        fails.append("h_n^perp(fg) != sum_i h_{n-i}^perp(f) h_i^perp(g)")

    fg = schur_product(f, g)
    for d in range(f.degree() + g.degree() + 3):
        for pi in partitions_of_size(d):
            probe = schur(pi)
            if perp(fg, probe) != perp(f, perp(g, probe)):
                fails.append(f"(fg)^perp != f^perp g^perp at s[{format_partition(pi)}]")
    return fails


def verify_perp_identities(f: SchurExpansion, g: SchurExpansion, n: int) -> bool:
    """True when all four perp identities hold for f, g, n."""
    return not perp_identity_failures(f, g, n)


def expansion_to_json(x) -> dict:
    """JSON-ready dict; terms in lexicographic shape order."""
    if isinstance(x, SchurExpansion):
        return {
            "basis": "schur",
            "terms": [
                {"coeff": c, "partition": list(p.parts)}
                for p, c in sorted(x.terms.items())
            ],
        }
    if isinstance(x, SkewExpansion):
        return {
            "basis": "skew",
            "terms": [
                {"coeff": c, "outer": list(s.outer.parts), "inner": list(s.inner.parts)}
                for s, c in sorted(x.terms.items(), key=lambda t: (t[0].outer.parts, t[0].inner.parts))
            ],
        }
    raise TypeError(f"cannot serialize {type(x).__name__}")


def expansion_from_json(obj: dict):
    """Inverse of expansion_to_json."""
    basis = obj.get("basis")
    if basis == "schur":
        return SchurExpansion(
            {Partition(tuple(t["partition"])): t["coeff"] for t in obj["terms"]}
        )
    if basis == "skew":
        return SkewExpansion(
            {SkewShape.of(t["outer"], t["inner"]): t["coeff"] for t in obj["terms"]}
        )
    raise ValueError(f"unknown basis {basis!r}")

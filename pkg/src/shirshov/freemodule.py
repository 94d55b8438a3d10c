"""Free left modules over the free associative algebra with a free basis
Y: monomials are words u*y, the order compares u-parts first, and a single
right-justified composition shape drives the basis theory.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Polynomial, Terms, VectorSpan
from .rewrite import RewriteSystem, find_factor


@dataclass(frozen=True)
class ModuleWord:
    """A word u over X followed by one module generator index y."""

    u: tuple
    y: int

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))


def mword_key(mw):
    return (len(mw.u), mw.u, mw.y)


def mword_cmp(w1, w2):
    """-1, 0 or 1: u-parts by deg-lex, ties by the generator index."""
    k1, k2 = mword_key(w1), mword_key(w2)
    if k1 < k2:
        return -1
    if k1 > k2:
        return 1
    return 0


class ModuleElement(Terms):
    """Rational linear combination of module words."""

    __slots__ = ()
    _key = staticmethod(mword_key)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, mw, coeff=1):
        return cls({mw: coeff})


def act(p, m):
    """Left action of a Polynomial on a ModuleElement, bilinearly from
    a . (u, y) = (a u, y)."""
    if isinstance(p, tuple):
        p = Polynomial.monomial(p)
    acc = []
    for a, ca in p.items():
        for mw, cm in m.items():
            acc.append((ModuleWord(a + mw.u, mw.y), ca * cm))
    return ModuleElement(acc)


def _check_monic(S):
    for i, s in enumerate(S):
        if not isinstance(s, ModuleElement) or not s:
            raise ValueError("element %d is not a nonzero module element"
                             % i)
        if s.leading_coeff() != 1:
            raise ValueError("element %d is not monic" % i)


def module_compositions(f, g):
    """The compositions of the ordered pair (f, g): whenever the leading
    word of g right-divides the leading word of f (same generator, u-part
    a suffix), the pair contributes (lead(f), f - a.g).  At most one such
    witness a exists; the self-pair contributes its exactly-zero result."""
    lf, lg = f.leading_monomial(), g.leading_monomial()
    if lf.y != lg.y or len(lg.u) > len(lf.u):
        return []
    cut = len(lf.u) - len(lg.u)
    if lf.u[cut:] != lg.u:
        return []
    a = lf.u[:cut]
    return [(lf, f - act(Polynomial.monomial(a), g))]


def module_reduce_step(m, S):
    """One deterministic rewrite, or None when m is irreducible.

    Greatest reducible monomial first; the applicable leading word is
    chosen greatest, ties to the earliest element.
    """
    for mono in sorted(m.terms, key=mword_key, reverse=True):
        best = None
        for idx, s in enumerate(S):
            ls = s.leading_monomial()
            if ls.y != mono.y or len(ls.u) > len(mono.u):
                continue
            cut = len(mono.u) - len(ls.u)
            if mono.u[cut:] != ls.u:
                continue
            cand = (mword_key(ls), -idx)
            if best is None or cand > best[0]:
                best = (cand, idx, cut)
        if best is None:
            continue
        _, idx, cut = best
        s = S[idx]
        step = act(Polynomial.monomial(mono.u[:cut]), s)
        return m - step.scale(m.coeff(mono))
    return None


def module_normal_form(m, S):
    """Fully reduced representative of m modulo S."""
    _check_monic(S)
    while True:
        nxt = module_reduce_step(m, S)
        if nxt is None:
            return m
        m = nxt


def module_reducible(mw, S):
    for s in S:
        ls = s.leading_monomial()
        if ls.y != mw.y or len(ls.u) > len(mw.u):
            continue
        if mw.u[len(mw.u) - len(ls.u):] == ls.u:
            return True
    return False


@dataclass(frozen=True)
class ModuleGsbReport:
    holds: bool
    checked: int
    failing: tuple


def module_is_gsb(S):
    """Check that every composition of every ordered pair reduces to 0."""
    _check_monic(S)
    failing = []
    checked = 0
    for f in S:
        for g in S:
            for w, result in module_compositions(f, g):
                checked += 1
                if module_normal_form(result, S):
                    failing.append((w, result))
    return ModuleGsbReport(holds=not failing, checked=checked,
                           failing=tuple(failing))


def module_irr(S, nx, ny, max_len):
    """Irreducible module words with |u| <= max_len, ascending."""
    out = []
    for l in range(max_len + 1):
        for u in product(range(nx), repeat=l):
            for y in range(ny):
                mw = ModuleWord(u, y)
                if not module_reducible(mw, S):
                    out.append(mw)
    out.sort(key=mword_key)
    return out


def module_ideal_span(S, nx, max_len):
    """Row space of the products a.s with |a| + |lead(s) u-part| bounded."""
    span = VectorSpan(key=mword_key)
    for s in S:
        room = max_len - len(s.leading_monomial().u)
        if room < 0:
            continue
        for la in range(room + 1):
            for a in product(range(nx), repeat=la):
                span.insert(act(Polynomial.monomial(a), s).terms)
    return span


@dataclass(frozen=True)
class ModuleDegreeLine:
    length: int
    irreducible: int
    rank: int
    total: int
    ok: bool


@dataclass(frozen=True)
class ModuleCdReport:
    """Bounded diamond report: (i) all compositions trivial, (ii) every
    leading module word of the bounded submodule span is reducible,
    (iii) irreducible count plus span rank matches the word count,
    cumulative per u-length."""

    max_len: int
    gsb_ok: bool
    failing: tuple
    leading_ok: bool
    bad_pivots: tuple
    counts_ok: bool
    table: tuple

    @property
    def agree(self):
        return self.gsb_ok == self.leading_ok == self.counts_ok


def module_cd_check(S, nx, ny, max_len):
    """Bounded check of the three equivalent conditions.

    The bound must reach every element's leading u-length, else raises.
    """
    _check_monic(S)
    for i, s in enumerate(S):
        if len(s.leading_monomial().u) > max_len:
            raise ValueError(
                "max_len %d is below element %d's leading u-length"
                % (max_len, i))

    report = module_is_gsb(S)

    span = module_ideal_span(S, nx, max_len)
    bad = tuple(mw for mw in span.pivots()
                if not module_reducible(mw, S))
    leading_ok = not bad

    table = []
    for d in range(max_len + 1):
        total = ny * sum(nx ** l for l in range(d + 1))
        irr = len(module_irr(S, nx, ny, d))
        rank = module_ideal_span(S, nx, d).rank
        table.append(ModuleDegreeLine(length=d, irreducible=irr, rank=rank,
                                      total=total,
                                      ok=(irr + rank == total)))
    counts_ok = all(line.ok for line in table)
    return ModuleCdReport(max_len=max_len, gsb_ok=report.holds,
                          failing=report.failing, leading_ok=leading_ok,
                          bad_pivots=bad, counts_ok=counts_ok,
                          table=tuple(table))


def pair_normal_form(m, algebra, S):
    """Normal form modulo a module-side set S and an algebra-side
    rewrite system acting from the left.

    Algebra leading words rewrite anywhere inside u-parts, because any
    product a * s * b * y lies in the submodule generated by the pair.
    Convenience layer over the two reducers; alternates to a fixed point.
    """
    if not isinstance(algebra, RewriteSystem):
        raise TypeError("algebra side must be a RewriteSystem")
    _check_monic(S)
    while True:
        m2 = module_normal_form(m, S) if S else m
        m2 = _algebra_reduce(m2, algebra)
        if m2 == m:
            return m
        m = m2


def _algebra_reduce(m, algebra):
    while True:
        hit = None
        for mono in sorted(m.terms, key=mword_key, reverse=True):
            for idx, lw in enumerate(algebra.leading_words):
                pos = find_factor(mono.u, lw)
                if pos is not None:
                    hit = (mono, idx, pos)
                    break
            if hit:
                break
        if hit is None:
            return m
        mono, idx, pos = hit
        s = algebra.elements[idx]
        lw = algebra.leading_words[idx]
        a, b = mono.u[:pos], mono.u[pos + len(lw):]
        items = [(ModuleWord(a + t + b, mono.y), c) for t, c in s.items()]
        m = m - ModuleElement(items).scale(m.coeff(mono))


def random_module_set(nx, ny, max_udeg, rng, max_elems=3):
    """Monic random module elements for randomized suites: up to
    max_elems elements, each a combination of one to three distinct
    module words with u-length <= max_udeg and coefficients in
    -2..2 \\ {0}, scaled monic."""
    out = []
    for _ in range(rng.randint(1, max_elems)):
        n_terms = rng.randint(1, 3)
        seen = set()
        items = []
        while len(items) < n_terms:
            l = rng.randint(0, max_udeg)
            u = tuple(rng.randrange(nx) for _ in range(l))
            y = rng.randrange(ny)
            mw = ModuleWord(u, y)
            if mw in seen:
                continue
            seen.add(mw)
            items.append((mw, rng.choice([-2, -1, 1, 2])))
        out.append(ModuleElement(items).monic())
    return out


def verma_stub(seed=0):
    """Randomized small fixture standing in for a Verma-style module
    presentation; the data is synthetic, not a faithful construction."""
    import random as _random
    rng = _random.Random(seed)
    return random_module_set(2, 2, 3, rng)


def sl2_stub(seed=1):
    """Randomized small fixture standing in for an sl2-style module
    presentation; the data is synthetic, not a faithful construction."""
    import random as _random
    rng = _random.Random(seed)
    return random_module_set(2, 1, 2, rng)

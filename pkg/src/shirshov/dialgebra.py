"""Free dialgebras: diwords with a marked center, the two associative
products, reduction, a bounded linear-algebra basis check, and the
enveloping dialgebra of a Leibniz algebra with its PBW-type basis.

A diword over ranks is a nonempty letter tuple plus the index of its
center letter; it stands for x(-m) |- ... |- x0 -| ... -| x(k) where x0
is the center.  In printed form the center letter carries an @ mark.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import Polynomial, Terms, VectorSpan, deglex_key

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Diword:
    """Letter ranks plus the position of the center letter."""

    letters: tuple
    center: int

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("diword needs at least one letter")
        if not 0 <= self.center < len(letters):
            raise ValueError("center %d outside word of length %d"
                             % (self.center, len(letters)))

    def __len__(self):
        return len(self.letters)


def diword_key(u):
    """Sort key for the weight order: length, then center position, then
    the letter sequence."""
    return (len(u.letters), u.center, u.letters)


def diword_cmp(u, v):
    """-1, 0 or 1 as u <, =, > v in the weight order."""
    ku, kv = diword_key(u), diword_key(v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


class DiPolynomial(Terms):
    """Rational linear combination of diwords."""

    __slots__ = ()
    _key = staticmethod(diword_key)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, dw, coeff=1):
        return cls({dw: coeff})


def _di_left(u, v):
    return Diword(u.letters + v.letters, len(u.letters) + v.center)


def _di_right(u, v):
    return Diword(u.letters + v.letters, u.center)


def _lift(x):
    if isinstance(x, Diword):
        return DiPolynomial({x: 1})
    if isinstance(x, DiPolynomial):
        return x
    raise TypeError("expected Diword or DiPolynomial, got %r" % (x,))


def di_left(u, v):
    """The product u |- v: letters concatenate, the center comes from the
    right factor.  Diword arguments give a Diword; polynomials extend
    bilinearly."""
    if isinstance(u, Diword) and isinstance(v, Diword):
        return _di_left(u, v)
    p, q = _lift(u), _lift(v)
    return DiPolynomial([(_di_left(a, b), ca * cb)
                         for a, ca in p.items() for b, cb in q.items()])


def di_right(u, v):
    """The product u -| v: letters concatenate, the center comes from the
    left factor."""
    if isinstance(u, Diword) and isinstance(v, Diword):
        return _di_right(u, v)
    p, q = _lift(u), _lift(v)
    return DiPolynomial([(_di_right(a, b), ca * cb)
                         for a, ca in p.items() for b, cb in q.items()])


def all_diwords(n_letters, length):
    """Every diword of the exact length over ranks 0..n_letters-1."""
    out = []
    for letters in product(range(n_letters), repeat=length):
        for c in range(length):
            out.append(Diword(letters, c))
    return out


def _flat(p):
    """Center-forgetting image in the free associative algebra."""
    return Polynomial([(dw.letters, c) for dw, c in p.items()])


class _Entry:
    """Per-element data the reducer and the span builder share."""

    __slots__ = ("poly", "lead", "flat", "flat_ok", "flat_lead_coeff")

    def __init__(self, poly):
        if not isinstance(poly, DiPolynomial) or not poly:
            raise ValueError("relations must be nonzero DiPolynomials")
        lead = poly.leading_monomial()
        if poly.coeff(lead) != 1:
            raise ValueError("relations must be monic")
        self.poly = poly
        self.lead = lead
        self.flat = _flat(poly)
        self.flat_ok = bool(self.flat) and (
            self.flat.leading_monomial() == lead.letters)
        self.flat_lead_coeff = (self.flat.coeff(lead.letters)
                                if self.flat_ok else _ZERO)


def _prep(S):
    return [_Entry(p) for p in S]


def _occurrences(m, entry):
    """(position, center_inside) pairs where the entry's leading diword
    sits compatibly inside the diword m.

    With the ambient center inside the occurrence, the center offsets
    must agree and any element applies.  With the center outside, the
    element acts through its center-forgetting image, which rewrites the
    occurrence only when that image is nonzero with the same leading
    word; other elements are skipped here (their products still belong
    to the ideal and the span builder includes them)."""
    ls = entry.lead.letters
    cs = entry.lead.center
    word, cm = m.letters, m.center
    out = []
    for pos in range(len(word) - len(ls) + 1):
        if word[pos:pos + len(ls)] != ls:
            continue
        if pos <= cm < pos + len(ls):
            if cm - pos == cs:
                out.append((pos, True))
        elif entry.flat_ok:
            out.append((pos, False))
    return out


def _context_image(entry, a, b, center_inside, ambient_center=None):
    """The product a * s * b as a DiPolynomial.

    With center_inside the center of each monomial of s survives, shifted
    by |a|.  Otherwise ambient_center names the center position counted
    in a (q < |a|) or counted from the right end (|a| + len + r form),
    passed as a callable on the monomial length."""
    items = []
    if center_inside:
        for t, c in entry.poly.items():
            items.append((Diword(a + t.letters + b, len(a) + t.center), c))
    else:
        for t, c in entry.poly.items():
            items.append((Diword(a + t.letters + b,
                                 ambient_center(len(t.letters))), c))
    return DiPolynomial(items)


def _step_image(m, entry, pos, center_inside):
    """Image of a * s * b for the occurrence of the entry at pos in m,
    scaled so the occurrence monomial has coefficient 1."""
    ls = entry.lead.letters
    a, b = m.letters[:pos], m.letters[pos + len(ls):]
    if center_inside:
        return _context_image(entry, a, b, True)
    if m.center < pos:
        q = m.center
        image = _context_image(entry, a, b, False, lambda n: q)
    else:
        r = m.center - pos - len(ls)
        image = _context_image(entry, a, b, False,
                               lambda n: len(a) + n + r)
    return image.scale(1 / entry.flat_lead_coeff)


def di_reduce(p, S):
    """Fixed point of rewriting p modulo the monic relations S.

    Deterministic strategy: the greatest reducible monomial, the first
    relation with a compatible occurrence, its leftmost occurrence.
    Every step replaces a monomial by strictly smaller ones, so the loop
    terminates; the result has no compatible occurrence left.
    """
    entries = _prep(S)
    while True:
        target = None
        for m in sorted(p.terms, key=diword_key, reverse=True):
            for entry in entries:
                occ = _occurrences(m, entry)
                if occ:
                    pos, inside = occ[0]
                    target = (m, entry, pos, inside)
                    break
            if target:
                break
        if target is None:
            return p
        m, entry, pos, inside = target
        image = _step_image(m, entry, pos, inside)
        p = p - image.scale(p.coeff(m))


def di_reducible(m, S):
    """True when some relation has a compatible occurrence in m."""
    return any(_occurrences(m, e) for e in _prep(S))


def di_irr(S, n_letters, max_len):
    """Diwords of length <= max_len with no compatible occurrence,
    ascending in the weight order."""
    entries = _prep(S)
    out = []
    for length in range(1, max_len + 1):
        for m in all_diwords(n_letters, length):
            if not any(_occurrences(m, e) for e in entries):
                out.append(m)
    out.sort(key=diword_key)
    return out


def di_ideal_span(S, n_letters, max_len):
    """Row space of every product a * s * b whose ambient length
    |a| + |lead(s)| + |b| stays within max_len, over all center
    placements: inside the occurrence, inside a, or inside b.

    Products of elements whose center-forgetting image degenerates are
    included too; they are ideal members even though the reducer cannot
    use them.
    """
    span = VectorSpan(key=diword_key)
    for entry in _prep(S):
        ls = entry.lead.letters
        room = max_len - len(ls)
        if room < 0:
            continue
        for la in range(room + 1):
            for a in product(range(n_letters), repeat=la):
                for lb in range(room - la + 1):
                    for b in product(range(n_letters), repeat=lb):
                        span.insert(_context_image(
                            entry, a, b, True).terms)
                        for q in range(la):
                            span.insert(_context_image(
                                entry, a, b, False, lambda n: q).terms)
                        for r in range(lb):
                            span.insert(_context_image(
                                entry, a, b, False,
                                lambda n, r=r: la + n + r).terms)
    return span


@dataclass(frozen=True)
class DiDegreeLine:
    length: int
    irreducible: int
    rank: int
    total: int
    ok: bool


@dataclass(frozen=True)
class DiCdReport:
    """Bounded check of the diamond conditions for dialgebras: (ii) every
    leading diword of the bounded ideal span is reducible, and (iii) the
    irreducible count plus the span rank matches the diword count, both
    cumulative per length."""

    max_len: int
    leading_ok: bool
    bad_pivots: tuple
    counts_ok: bool
    table: tuple

    @property
    def holds(self):
        return self.leading_ok and self.counts_ok


def di_gsb_check_bounded(S, n_letters, max_len):
    """Bounded two-condition report for a set of monic relations.

    Raises when the bound cannot even hold one relation's leading diword.
    """
    entries = _prep(S)
    for e in entries:
        if len(e.lead) > max_len:
            raise ValueError(
                "max_len %d is below the leading diword length %d"
                % (max_len, len(e.lead)))

    span = di_ideal_span(S, n_letters, max_len)
    bad = tuple(m for m in span.pivots()
                if not any(_occurrences(m, e) for e in entries))
    leading_ok = not bad

    table = []
    for d in range(1, max_len + 1):
        total = sum(length * n_letters ** length
                    for length in range(1, d + 1))
        irr = len(di_irr(S, n_letters, d))
        rank = di_ideal_span(S, n_letters, d).rank
        table.append(DiDegreeLine(length=d, irreducible=irr, rank=rank,
                                  total=total, ok=(irr + rank == total)))
    counts_ok = all(line.ok for line in table)
    return DiCdReport(max_len=max_len, leading_ok=leading_ok,
                      bad_pivots=bad, counts_ok=counts_ok,
                      table=tuple(table))


@dataclass(frozen=True)
class LeibnizAlgebra:
    """Finite-dimensional Leibniz algebra by structure constants.

    bracket maps (i, j, k) to the coefficient of e_k in {e_i, e_j};
    absent keys are zero.  dim counts basis elements, indexed from 0.
    """

    dim: int
    bracket: dict

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        table = {}
        for (i, j, k), c in dict(self.bracket).items():
            for idx in (i, j, k):
                if not 0 <= idx < self.dim:
                    raise ValueError("index %d outside basis 0..%d"
                                     % (idx, self.dim - 1))
            c = Fraction(c)
            if c:
                table[(i, j, k)] = c
        object.__setattr__(self, "bracket", table)

    def bracket_of(self, i, j):
        """{e_i, e_j} as a coordinate dict."""
        out = {}
        for k in range(self.dim):
            c = self.bracket.get((i, j, k), _ZERO)
            if c:
                out[k] = c
        return out


def _bracket_vec(L, vec, j):
    """{v, e_j} for a coordinate dict v, by linearity in the left slot."""
    out = {}
    for i, ci in vec.items():
        for k, c in L.bracket_of(i, j).items():
            nv = out.get(k, _ZERO) + ci * c
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def leibniz_check(L):
    """True when {{x,y},z} - {{x,z},y} - {{y,z},x} vanishes on all basis
    triples."""
    for x in range(L.dim):
        for y in range(L.dim):
            for z in range(L.dim):
                acc = dict(_bracket_vec(L, L.bracket_of(x, y), z))
                for k, c in _bracket_vec(L, L.bracket_of(x, z), y).items():
                    nv = acc.get(k, _ZERO) - c
                    if nv:
                        acc[k] = nv
                    else:
                        acc.pop(k, None)
                for k, c in _bracket_vec(L, L.bracket_of(y, z), x).items():
                    nv = acc.get(k, _ZERO) - c
                    if nv:
                        acc[k] = nv
                    else:
                        acc.pop(k, None)
                if acc:
                    return False
    return True


def leibniz_i0(L):
    """Indices of the basis vectors spanning the subspace generated by
    all {a, a} and {a, b} + {b, a}.

    That subspace must be spanned by basis vectors themselves for a
    subset of indices to describe it; otherwise the basis of L has to be
    adapted first and this raises.
    """
    span = VectorSpan(key=lambda k: -k)
    for i in range(L.dim):
        span.insert({k: Fraction(c)
                     for k, c in L.bracket_of(i, i).items()})
        for j in range(i + 1, L.dim):
            acc = dict(L.bracket_of(i, j))
            for k, c in L.bracket_of(j, i).items():
                nv = acc.get(k, _ZERO) + c
                if nv:
                    acc[k] = nv
                else:
                    acc.pop(k, None)
            span.insert(acc)
    indices = set()
    for pivot, row in span.rows.items():
        if set(row) != {pivot}:
            raise ValueError(
                "the squares span no coordinate subspace; rewrite the "
                "algebra in an adapted basis first")
        indices.add(pivot)
    return frozenset(indices)


def leibniz_dim2():
    """Two-dimensional example: {e_1, e_1} = e_0, every other bracket 0."""
    return LeibnizAlgebra(dim=2, bracket={(1, 1, 0): 1})


def _bracket_poly(L, i, j, tail, center_shift):
    """{e_i, e_j} embedded as diwords (k,) + tail with the given center."""
    return [(Diword((k,) + tail, center_shift), c)
            for k, c in L.bracket_of(i, j).items()]


def leibniz_enveloping(L):
    """Defining relations of the enveloping dialgebra of L.

    Emits, in order: f(j, i) = e_j |- e_i - e_i -| e_j + {e_i, e_j} for
    all pairs; f(j, i) |- e_t for j > i; e_i0 |- e_t for i0 in the
    squares span; e_t -| f(j, i) for j > i; e_t -| e_i0.  Raises when the
    bracket violates the Leibniz identity.
    """
    if not leibniz_check(L):
        raise ValueError("structure constants violate the Leibniz identity")
    i0 = sorted(leibniz_i0(L))
    n = L.dim
    rels = []

    for j in range(n):
        for i in range(n):
            items = [(Diword((j, i), 1), 1), (Diword((i, j), 0), -1)]
            items += _bracket_poly(L, i, j, (), 0)
            rels.append(DiPolynomial(items))

    for j in range(n):
        for i in range(j):
            for t in range(n):
                items = [(Diword((j, i, t), 2), 1),
                         (Diword((i, j, t), 2), -1)]
                items += _bracket_poly(L, i, j, (t,), 1)
                rels.append(DiPolynomial(items))

    for i in i0:
        for t in range(n):
            rels.append(DiPolynomial({Diword((i, t), 1): 1}))

    for t in range(n):
        for j in range(n):
            for i in range(j):
                items = [(Diword((t, j, i), 0), 1),
                         (Diword((t, i, j), 0), -1)]
                items += [(Diword((t, k), 0), c)
                          for k, c in L.bracket_of(i, j).items()]
                rels.append(DiPolynomial(items))

    for t in range(n):
        for i in i0:
            rels.append(DiPolynomial({Diword((t, i), 0): 1}))

    return rels


def pbw_basis(L, max_len):
    """Diwords e_j -| e_i1 -| ... -| e_ik with the tail nondecreasing and
    avoiding the squares span, up to the length bound, ascending.

    At max_len 1 this is the basis of L itself; its survival inside the
    enveloping dialgebra is the embedding statement.
    """
    if max_len < 1:
        return []
    excluded = leibniz_i0(L)
    tail_pool = [i for i in range(L.dim) if i not in excluded]
    out = []
    for j in range(L.dim):
        tails = [()]
        for _ in range(max_len - 1):
            tails = [t + (i,) for t in tails
                     for i in tail_pool if not t or i >= t[-1]]
            for t in tails:
                out.append(Diword((j,) + t, 0))
        out.append(Diword((j,), 0))
    out.sort(key=diword_key)
    return out

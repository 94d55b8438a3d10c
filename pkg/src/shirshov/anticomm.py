"""Free anti-commutative algebra on ranked letters: normal tree-words,
the signed product, inclusion compositions, the Hall-word relations whose
quotient is the free Lie algebra, and Lyndon-Shirshov word utilities.

Tree-words are nested pairs with integer ranks at the leaves; a tree is
normal when every internal node has left > right.  Products carry signs
so that every element is a combination of normal trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Terms, VectorSpan


def ac_size(t):
    """Number of leaves."""
    if isinstance(t, int):
        return 1
    return ac_size(t[0]) + ac_size(t[1])


def ac_key(t):
    """Sort key for the recursive order: size first, then (left, right)
    lexicographically, leaves by rank."""
    if isinstance(t, int):
        return (1, t)
    return (ac_size(t), ac_key(t[0]), ac_key(t[1]))


def ac_cmp(u, v):
    """-1, 0 or 1 as u <, =, > v."""
    ku, kv = ac_key(u), ac_key(v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


def is_normal_acword(t):
    """Left > right at every internal node."""
    if isinstance(t, int):
        return True
    return (is_normal_acword(t[0]) and is_normal_acword(t[1])
            and ac_key(t[0]) > ac_key(t[1]))


class AcPolynomial(Terms):
    """Rational linear combination of normal tree-words."""

    __slots__ = ()
    _key = staticmethod(ac_key)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, t, coeff=1):
        return cls({t: coeff})


def _lift(x):
    if isinstance(x, AcPolynomial):
        return x
    return AcPolynomial({x: 1})


def ac_mul(u, v):
    """Signed product: [uv] when u > v, -[vu] when u < v, 0 on equality;
    bilinear on polynomials.  The result is always an AcPolynomial."""
    p, q = _lift(u), _lift(v)
    items = []
    for a, ca in p.items():
        for b, cb in q.items():
            c = ac_cmp(a, b)
            if c > 0:
                items.append(((a, b), ca * cb))
            elif c < 0:
                items.append(((b, a), -ca * cb))
    return AcPolynomial(items)


@lru_cache(maxsize=None)
def _normal_by_degree(n_letters, degree):
    if degree == 1:
        return tuple(range(n_letters))
    out = []
    for ls in range(1, degree):
        for left in _normal_by_degree(n_letters, ls):
            for right in _normal_by_degree(n_letters, degree - ls):
                if ac_key(left) > ac_key(right):
                    out.append((left, right))
    return tuple(sorted(out, key=ac_key))


def normal_words(n_letters, max_deg):
    """All normal tree-words of size <= max_deg, ascending."""
    out = []
    for d in range(1, max_deg + 1):
        out.extend(_normal_by_degree(n_letters, d))
    return out


@lru_cache(maxsize=None)
def _hall_by_degree(n_letters, degree):
    if degree == 1:
        return tuple(range(n_letters))
    out = []
    for ls in range(1, degree):
        for left in _hall_by_degree(n_letters, ls):
            for right in _hall_by_degree(n_letters, degree - ls):
                if ac_key(left) <= ac_key(right):
                    continue
                if not isinstance(left, int) and \
                        ac_key(left[1]) > ac_key(right):
                    continue
                out.append((left, right))
    return tuple(sorted(out, key=ac_key))


def hall_words(n_letters, max_deg):
    """Hall tree-words of size <= max_deg, ascending: normal words where
    additionally every left factor [u1 u2] satisfies u2 <= the sibling on
    the right."""
    if max_deg < 1:
        raise ValueError("max_deg must be >= 1")
    out = []
    for d in range(1, max_deg + 1):
        out.extend(_hall_by_degree(n_letters, d))
    return out


def hall_gsb(n_letters, max_deg):
    """The relations ([u][v])[w] - ([u][w])[v] - [u]([v][w]) over Hall
    words u > v > w with total size <= max_deg, ascending by (size, u, v,
    w).  Each relation is monic with leading word [[uv]w]."""
    pool = hall_words(n_letters, max_deg)
    triples = []
    for iu, u in enumerate(pool):
        for iv in range(iu):
            v = pool[iv]
            for iw in range(iv):
                w = pool[iw]
                total = ac_size(u) + ac_size(v) + ac_size(w)
                if total <= max_deg:
                    triples.append((total, ac_key(u), ac_key(v), ac_key(w),
                                    u, v, w))
    triples.sort()
    out = []
    for _, _, _, _, u, v, w in triples:
        rel = (ac_mul(ac_mul(u, v), w) - ac_mul(ac_mul(u, w), v)
               - ac_mul(u, ac_mul(v, w)))
        out.append(rel)
    return out


def _occurrence_paths(tree, target):
    """Paths (tuples of 0/1) to every subtree equal to target, preorder."""
    out = []

    def walk(t, path):
        if t == target:
            out.append(path)
        if not isinstance(t, int):
            walk(t[0], path + (0,))
            walk(t[1], path + (1,))

    walk(tree, ())
    return out


def _substitute(tree, path, replacement):
    """Replace the subtree at path by a polynomial and renormalize the
    ancestors through the signed product."""
    if not path:
        return _lift(replacement)
    left, right = tree
    if path[0] == 0:
        return ac_mul(_substitute(left, path[1:], replacement), right)
    return ac_mul(left, _substitute(right, path[1:], replacement))


def _check_monic(S):
    for i, s in enumerate(S):
        if not isinstance(s, AcPolynomial) or not s:
            raise ValueError("element %d is not a nonzero AcPolynomial" % i)
        if s.leading_coeff() != 1:
            raise ValueError("element %d is not monic" % i)


def ac_compositions(f, g):
    """Inclusion compositions of the ordered pair: one per occurrence of
    lead(g) as a subtree of lead(f), each (lead(f), f - substitution).
    The ambient word is lead(f) itself, a normal word, so every subtree
    occurrence qualifies; the root occurrence of a self-pair gives an
    exactly-zero result."""
    lf, lg = f.leading_monomial(), g.leading_monomial()
    out = []
    for path in _occurrence_paths(lf, lg):
        out.append((lf, f - _substitute(lf, path, g)))
    return out


def ac_reducible(t, S):
    return any(_occurrence_paths(t, s.leading_monomial()) for s in S)


def ac_reduce_step(p, S):
    """One deterministic rewrite, or None: greatest reducible monomial,
    first element with an occurrence, its preorder-first path."""
    for mono in sorted(p.terms, key=ac_key, reverse=True):
        for s in S:
            paths = _occurrence_paths(mono, s.leading_monomial())
            if paths:
                step = _substitute(mono, paths[0], s)
                return p - step.scale(p.coeff(mono))
    return None


def ac_normal_form(p, S):
    """Fully reduced representative of p modulo monic relations S.
    Substituted monomials are strictly smaller, so this terminates."""
    _check_monic(S)
    while True:
        nxt = ac_reduce_step(p, S)
        if nxt is None:
            return p
        p = nxt


def ac_irr_words(S, n_letters, max_deg):
    """Normal words of size <= max_deg containing no leading word of S as
    a subtree, ascending."""
    _check_monic(S)
    leads = [s.leading_monomial() for s in S]
    return [t for t in normal_words(n_letters, max_deg)
            if not any(_occurrence_paths(t, l) for l in leads)]


def ac_ideal_span(S, n_letters, max_deg):
    """Bounded row space of the ideal generated by S.

    Every ideal element is a combination of multiplication chains applied
    to a single generator, and anti-commutativity makes one-sided chains
    span both sides, so right-multiplying by normal words up to the size
    budget enumerates a spanning set.
    """
    _check_monic(S)
    span = VectorSpan(key=ac_key)
    queue = [(s, ac_size(s.leading_monomial())) for s in S
             if ac_size(s.leading_monomial()) <= max_deg]
    while queue:
        p, ambient = queue.pop(0)
        if not p:
            continue
        span.insert(p.terms)
        for d in range(1, max_deg - ambient + 1):
            for m in _normal_by_degree(n_letters, d):
                prod = ac_mul(p, m)
                if prod:
                    queue.append((prod, ambient + d))
    return span


@dataclass(frozen=True)
class AcDegreeLine:
    degree: int
    irreducible: int
    rank: int
    total: int
    ok: bool


@dataclass(frozen=True)
class AcCdReport:
    """Bounded closedness report: compositions with ambient size within
    the bound reduce to zero; leading words of the bounded ideal span are
    reducible; irreducible plus rank matches the normal-word count,
    cumulative per degree."""

    max_deg: int
    gsb_ok: bool
    failing: tuple
    leading_ok: bool
    bad_pivots: tuple
    counts_ok: bool
    table: tuple

    @property
    def holds(self):
        return self.gsb_ok and self.leading_ok and self.counts_ok


def ac_gsb_check_bounded(S, n_letters, max_deg):
    _check_monic(S)
    failing = []
    for f in S:
        for g in S:
            if ac_size(f.leading_monomial()) > max_deg:
                continue
            for w, result in ac_compositions(f, g):
                if ac_normal_form(result, S):
                    failing.append((w, result))
    gsb_ok = not failing

    span = ac_ideal_span(S, n_letters, max_deg)
    leads = [s.leading_monomial() for s in S]
    bad = tuple(t for t in span.pivots()
                if not any(_occurrence_paths(t, l) for l in leads))
    leading_ok = not bad

    table = []
    for d in range(1, max_deg + 1):
        total = sum(len(_normal_by_degree(n_letters, k))
                    for k in range(1, d + 1))
        irr = len(ac_irr_words(S, n_letters, d))
        rank = ac_ideal_span(S, n_letters, d).rank
        table.append(AcDegreeLine(degree=d, irreducible=irr, rank=rank,
                                  total=total, ok=(irr + rank == total)))
    counts_ok = all(line.ok for line in table)
    return AcCdReport(max_deg=max_deg, gsb_ok=gsb_ok,
                      failing=tuple(failing), leading_ok=leading_ok,
                      bad_pivots=bad, counts_ok=counts_ok,
                      table=tuple(table))


def ac_flatten(t):
    """Left-to-right leaf sequence as a plain word."""
    if isinstance(t, int):
        return (t,)
    return ac_flatten(t[0]) + ac_flatten(t[1])


def is_ls_word(u):
    """True when the word is strictly greater than every proper cyclic
    rotation of itself (larger letters first convention)."""
    u = tuple(u)
    if not u:
        raise ValueError("the empty word has no rotations to compare")
    return all(u > u[i:] + u[:i] for i in range(1, len(u)))


def ls_words(n_letters, n):
    """All such words of length n over ranks 0..n_letters-1, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    stack = [()]
    while stack:
        w = stack.pop()
        if len(w) == n:
            if is_ls_word(w):
                out.append(w)
            continue
        for letter in range(n_letters):
            stack.append(w + (letter,))
    out.sort()
    return out


def ls_bracketing(u):
    """Standard bracketing: split at the longest proper suffix that has
    the rotation property itself, and recurse; the flattened result is
    the input word."""
    u = tuple(u)
    if not is_ls_word(u):
        raise ValueError("%r is not greater than all its rotations" % (u,))
    if len(u) == 1:
        return u[0]
    for cut in range(1, len(u)):
        if is_ls_word(u[cut:]):
            return (ls_bracketing(u[:cut]), ls_bracketing(u[cut:]))
    raise AssertionError("a final letter is always a valid suffix")

"""Rewriting modulo monic relations in the free associative algebra:
single reduction steps, normal forms, irreducible-word enumeration, and a
bounded-degree ideal membership test.

The reduction strategy is fixed so every run is reproducible: rewrite the
order-greatest reducible monomial, using the order-greatest applicable
leading word (ties broken by element position) at its leftmost occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import DegLexOrder, Polynomial, VectorSpan, deglex_key


@dataclass(frozen=True)
class RewriteSystem:
    """Monic nonzero relations over a shared alphabet and order.

    Rewriting with an element replaces its leading word by the negated
    tail, which is strictly smaller, so every reduction terminates.
    """

    elements: tuple
    order: DegLexOrder

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        leads = []
        for i, p in enumerate(elements):
            if not isinstance(p, Polynomial) or not p:
                raise ValueError("element %d is not a nonzero polynomial" % i)
            for w in p.terms:
                self.order.alphabet.check_word(w)
            lw = p.leading_monomial()
            if p.terms[lw] != 1:
                raise ValueError("element %d is not monic" % i)
            if not lw:
                raise ValueError(
                    "element %d has the empty word as leading term" % i)
            leads.append(lw)
        object.__setattr__(self, "leading_words", tuple(leads))

    def __len__(self):
        return len(self.elements)


def find_factor(word, factor, start=0):
    """Index of the first occurrence of factor in word at or after start,
    or None.  The empty factor matches at start."""
    n, m = len(word), len(factor)
    for i in range(start, n - m + 1):
        if word[i:i + m] == factor:
            return i
    return None


def reducible(word, system):
    """True when some leading word of the system occurs in word."""
    return any(find_factor(word, lw) is not None
               for lw in system.leading_words)


def reduce_step(p, system):
    """One deterministic rewrite of p modulo the system, or None when p is
    already irreducible.

    Picks the order-greatest monomial containing some leading word; within
    it the order-greatest applicable leading word (ties to the earliest
    element) at its leftmost occurrence; subtracts c * a * s * b where the
    monomial is a * lead(s) * b with coefficient c.
    """
    key = system.order.key
    for mono in sorted(p.terms, key=key, reverse=True):
        best = None
        for idx, lw in enumerate(system.leading_words):
            pos = find_factor(mono, lw)
            if pos is None:
                continue
            cand = (key(lw), -idx)
            if best is None or cand > best[0]:
                best = (cand, idx, pos)
        if best is None:
            continue
        _, idx, pos = best
        s = system.elements[idx]
        lw = system.leading_words[idx]
        c = p.terms[mono]
        a, b = mono[:pos], mono[pos + len(lw):]
        step = Polynomial({a + t + b: c * tc for t, tc in s.terms.items()})
        return p - step
    return None


def normal_form(p, system):
    """Fully reduced representative of p modulo the system."""
    while True:
        q = reduce_step(p, system)
        if q is None:
            return p
        p = q


def _suffix_trie(leading_words):
    # Trie over reversed leading words; walking a word backwards from its
    # last letter detects any leading word ending there.
    trie = {}
    for lw in leading_words:
        node = trie
        for letter in reversed(lw):
            node = node.setdefault(letter, {})
        node[None] = True
    return trie


def irr_words(system, max_len):
    """All words of length <= max_len containing no leading word, ascending.

    Breadth-first: a word is kept iff its parent was kept and no leading
    word is a suffix of it, which the reversed trie checks in one walk.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    trie = _suffix_trie(system.leading_words)
    n = len(system.order.alphabet)
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        new = []
        for w in frontier:
            for letter in range(n):
                u = w + (letter,)
                node = trie
                hit = False
                for ch in reversed(u):
                    node = node.get(ch)
                    if node is None:
                        break
                    if None in node:
                        hit = True
                        break
                if not hit:
                    new.append(u)
        out.extend(new)
        frontier = new
    return out


def _all_words(n_letters, length):
    return product(range(n_letters), repeat=length)


def ideal_rows(system, max_deg):
    """Sparse coefficient vectors of all products a * s * b whose monomials
    stay within max_deg, i.e. |a| + |lead(s)| + |b| <= max_deg."""
    n = len(system.order.alphabet)
    rows = []
    for idx, s in enumerate(system.elements):
        lw = system.leading_words[idx]
        room = max_deg - len(lw)
        if room < 0:
            continue
        for la in range(room + 1):
            for a in _all_words(n, la):
                for lb in range(room - la + 1):
                    for b in _all_words(n, lb):
                        rows.append({a + t + b: c
                                     for t, c in s.terms.items()})
    return rows


def ideal_span(system, max_deg):
    """Bounded row space of the two-sided ideal of the system."""
    span = VectorSpan(key=deglex_key)
    for row in ideal_rows(system, max_deg):
        span.insert(row)
    return span


def membership_oracle(p, system, max_deg):
    """Exact membership of p in the bounded span of products a * s * b.

    True is a certificate that p lies in the ideal.  False only means p is
    not reachable within the degree bound: ideal members whose expressions
    need words longer than max_deg are reported False, so the oracle is
    conservative.  Raises when p itself has a monomial longer than max_deg.
    """
    if not p:
        return True
    if len(p.leading_monomial()) > max_deg:
        raise ValueError(
            "max_deg %d is below the degree of p's largest monomial" % max_deg)
    span = ideal_span(system, max_deg)
    return span.contains(p.terms)

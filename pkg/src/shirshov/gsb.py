"""Compositions of monic relations, basis verification, Shirshov's
completion procedure, and the bounded three-condition diamond check.

A set S is closed (a Groebner-Shirshov basis) when every composition of
its elements reduces to zero modulo S.  Closedness is what makes normal
forms canonical and the irreducible words a linear basis of the quotient.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .core import Polynomial
from .rewrite import (RewriteSystem, find_factor, ideal_span, irr_words,
                      normal_form, reducible)


@dataclass(frozen=True)
class Composition:
    """One overlap or containment of two leading words.

    kind is "intersection" (w = lead(f)*b = a*lead(g) with a proper
    overlap) or "inclusion" (w = lead(f) = a*lead(g)*b).  result is
    f*b - a*g resp. f - a*g*b; its leading word, when nonzero, is
    strictly below w.
    """

    kind: str
    w: tuple
    left: int
    right: int
    a: tuple
    b: tuple
    result: Polynomial


@dataclass(frozen=True)
class GsbReport:
    holds: bool
    checked: int
    failing: tuple


@dataclass(frozen=True)
class CompletionReport:
    status: str  # completed | degree-capped | element-capped
    basis: RewriteSystem
    added: int
    iterations: int


@dataclass(frozen=True)
class DegreeLine:
    degree: int
    irreducible: int
    rank: int
    total: int
    ok: bool


@dataclass(frozen=True)
class CdReport:
    """Bounded diamond check: (i) compositions with |w| <= max_deg reduce
    to zero; (ii) sampled bounded ideal elements have reducible leading
    words; (iii) irreducible count plus bounded span rank matches the word
    count at every degree bound."""

    max_deg: int
    gsb_ok: bool
    failing: tuple
    leading_ok: bool
    bad_leadings: tuple
    counts_ok: bool
    table: tuple

    @property
    def agree(self):
        return self.gsb_ok == self.leading_ok == self.counts_ok


class BudgetExceeded(RuntimeError):
    """Raised by shirshov_complete when the wall-clock budget runs out."""


def _mul_word_poly(a, p, b):
    return Polynomial({a + t + b: c for t, c in p.terms.items()})


def find_compositions(f, g, order, left=0, right=1):
    """All compositions of the ordered pair (f, g), ascending by ambient
    word.

    Intersections pair every proper suffix of lead(f) with an equal proper
    prefix of lead(g); the symmetric overlaps belong to the swapped call.
    Inclusions cover every occurrence of lead(g) inside lead(f) except the
    identity occurrence of an element in itself, whose result is exactly
    zero.
    """
    lf = f.leading_monomial()
    lg = g.leading_monomial()
    out = []

    for k in range(1, min(len(lf), len(lg))):
        if lf[len(lf) - k:] == lg[:k]:
            b = lg[k:]
            a = lf[:len(lf) - k]
            w = lf + b
            result = _mul_word_poly((), f, b) - _mul_word_poly(a, g, ())
            out.append(Composition("intersection", w, left, right, a, b,
                                   result))

    if len(lg) <= len(lf):
        pos = 0
        while True:
            pos = find_factor(lf, lg, pos)
            if pos is None:
                break
            a, b = lf[:pos], lf[pos + len(lg):]
            if not (f == g and not a and not b):
                result = f - _mul_word_poly(a, g, b)
                out.append(Composition("inclusion", lf, left, right, a, b,
                                       result))
            pos += 1

    for c in out:
        if c.result:
            assert order.key(c.result.leading_monomial()) < order.key(c.w)
    out.sort(key=lambda c: (order.key(c.w), c.kind, len(c.a), c.a))
    return out


def is_trivial(comp, system):
    """A composition is trivial when its result reduces to zero."""
    return not normal_form(comp.result, system)


def all_compositions(system):
    """Compositions over all ordered element pairs, ascending by (w, ...)."""
    order = system.order
    out = []
    for i, f in enumerate(system.elements):
        for j, g in enumerate(system.elements):
            out.extend(find_compositions(f, g, order, left=i, right=j))
    out.sort(key=lambda c: (order.key(c.w), c.kind, c.left, c.right,
                            len(c.a), c.a))
    return out


def is_gsb(system):
    """Check every composition; report the nontrivial ones."""
    comps = all_compositions(system)
    failing = tuple(c for c in comps if not is_trivial(c, system))
    return GsbReport(holds=not failing, checked=len(comps), failing=failing)


def _inter_reduce_elements(elements, order):
    elems = []
    for p in elements:
        if p:
            elems.append(p.monic())
    changed = True
    while changed:
        changed = False
        for i in range(len(elems)):
            others = elems[:i] + elems[i + 1:]
            if not others:
                continue
            nf = normal_form(elems[i], RewriteSystem(tuple(others), order))
            if nf == elems[i]:
                continue
            changed = True
            if nf:
                elems[i] = nf.monic()
            else:
                del elems[i]
            break
    elems.sort(key=lambda p: order.key(p.leading_monomial()))
    return elems


def inter_reduce(system):
    """Equivalent system in which no leading word contains another as a
    factor and every element is fully reduced modulo the rest.

    Each removed or rewritten element stays expressible through the others
    (witnessed by the reduction steps), so the ideal is unchanged.
    """
    elems = _inter_reduce_elements(system.elements, system.order)
    return RewriteSystem(tuple(elems), system.order)


def shirshov_complete(system, max_deg, max_elems, budget_seconds=None):
    """Close the system under compositions, bounded by resources.

    Each round inter-reduces the basis, recomputes all compositions in
    ascending ambient-word order, and reduces the least one that does not
    vanish.  A surviving composition whose ambient word is longer than
    max_deg stops the run as degree-capped; needing more than max_elems
    additions stops it as element-capped.  Caps are statuses, not errors.
    With status completed the result passes is_gsb exactly.
    """
    if max_deg < 1:
        raise ValueError("max_deg must be >= 1")
    if max_elems < 0:
        raise ValueError("max_elems must be >= 0")
    deadline = None
    if budget_seconds is not None:
        deadline = time.monotonic() + budget_seconds

    order = system.order
    elems = _inter_reduce_elements(system.elements, order)
    added = 0
    iterations = 0
    while True:
        iterations += 1
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(
                "completion exceeded the %.3gs budget" % budget_seconds)
        basis = RewriteSystem(tuple(elems), order)
        obstruction = None
        for comp in all_compositions(basis):
            h = normal_form(comp.result, basis)
            if h:
                obstruction = (comp, h)
                break
        if obstruction is None:
            status = "completed"
            break
        comp, h = obstruction
        if len(comp.w) > max_deg:
            status = "degree-capped"
            break
        if added >= max_elems:
            status = "element-capped"
            break
        elems = _inter_reduce_elements(elems + [h.monic()], order)
        added += 1
    return CompletionReport(status=status,
                            basis=RewriteSystem(tuple(elems), order),
                            added=added, iterations=iterations)


def _sample_ideal_element(rng, system, max_deg):
    n = len(system.order.alphabet)
    usable = [(s, lw) for s, lw in zip(system.elements, system.leading_words)
              if len(lw) <= max_deg]
    if not usable:
        return None
    f = Polynomial()
    for _ in range(rng.randint(1, 3)):
        s, lw = usable[rng.randrange(len(usable))]
        room = max_deg - len(lw)
        la = rng.randint(0, room)
        lb = rng.randint(0, room - la)
        a = tuple(rng.randrange(n) for _ in range(la))
        b = tuple(rng.randrange(n) for _ in range(lb))
        coeff = rng.choice([-2, -1, 1, 2])
        f = f + _mul_word_poly(a, s, b).scale(coeff)
    return f


def cd_lemma_check(system, max_deg, samples=20, seed=0):
    """Bounded check of the three equivalent closedness conditions.

    (i) every composition with |w| <= max_deg reduces to zero;
    (ii) seeded random bounded ideal elements all have a leading word
    containing some leading word of the system;
    (iii) for each d <= max_deg, the irreducible words of length <= d plus
    the rank of the bounded ideal span equal the total word count.

    For a closed system all three hold; a bounded failure of (i) forces a
    failure of (iii) at any bound reaching the offending ambient word.
    Identical inputs give identical reports.
    """
    if max_deg < 0:
        raise ValueError("max_deg must be >= 0")
    comps = [c for c in all_compositions(system) if len(c.w) <= max_deg]
    failing = tuple(c for c in comps if not is_trivial(c, system))
    gsb_ok = not failing

    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        f = _sample_ideal_element(rng, system, max_deg)
        if f is None or not f:
            continue
        if not reducible(f.leading_monomial(), system):
            bad.append(f)
    leading_ok = not bad

    n = len(system.order.alphabet)
    table = []
    for d in range(max_deg + 1):
        total = sum(n ** k for k in range(d + 1))
        irr = len(irr_words(system, d))
        rank = ideal_span(system, d).rank
        table.append(DegreeLine(degree=d, irreducible=irr, rank=rank,
                                total=total, ok=(irr + rank == total)))
    counts_ok = all(line.ok for line in table)

    return CdReport(max_deg=max_deg, gsb_ok=gsb_ok, failing=failing,
                    leading_ok=leading_ok, bad_leadings=tuple(bad),
                    counts_ok=counts_ok, table=tuple(table))

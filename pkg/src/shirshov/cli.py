"""Command-line front end: a small presentation file format, subcommands
binding every engine, and deterministic plain-text reports.

Report layout: a `format: 1` line, then `key: value` diagnostics, and the
bare result on the last line.  Exit codes: 0 when the checked property
holds or the run succeeded, 1 when a property is false or completion was
capped, 2 on parse or input errors, 3 when a resource budget ran out.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .anticomm import (AcPolynomial, ac_gsb_check_bounded, ac_irr_words,
                       ac_mul, ac_normal_form, ac_size)
from .catalog import chinese_gsb, tensor_relations
from .core import Alphabet, DegLexOrder, Polynomial
from .dialgebra import (DiPolynomial, Diword, LeibnizAlgebra,
                        di_gsb_check_bounded, di_irr, di_reduce,
                        leibniz_enveloping)
from .freemodule import (ModuleElement, ModuleWord, module_cd_check,
                         module_irr, module_is_gsb, module_normal_form)
from .gsb import BudgetExceeded, cd_lemma_check, is_gsb, shirshov_complete
from .rewrite import RewriteSystem, irr_words, normal_form

KINDS = ("assoc", "dialgebra", "module", "ac")


class ParseError(Exception):
    def __init__(self, line, col, msg):
        super().__init__("line %d, col %d: %s" % (line, col, msg))
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)"
                    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[*+\-@()\[\]=]))")


def _tokenize(text, lineno):
    text = text.split("#", 1)[0]
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            col = len(text) - len(rest) + 1
            raise ParseError(lineno, col, "unexpected character %r" % rest[0])
        col = m.start(m.lastgroup) + 1
        tokens.append((m.lastgroup, m.group(m.lastgroup), col))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, tokens, lineno):
        self.tokens = tokens
        self.lineno = lineno
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self, expect=None, what=None):
        tok = self.peek()
        if tok is None:
            raise ParseError(self.lineno, self._end_col(),
                             "expected %s at end of line" % (what or expect))
        if expect is not None and (tok[0], tok[1]) != expect and \
                tok[0] != expect:
            raise ParseError(self.lineno, tok[2],
                             "expected %s, found %r" % (what or expect,
                                                        tok[1]))
        self.i += 1
        return tok

    def _end_col(self):
        if self.tokens:
            return self.tokens[-1][2] + len(self.tokens[-1][1])
        return 1

    def error(self, msg):
        tok = self.peek()
        col = tok[2] if tok else self._end_col()
        raise ParseError(self.lineno, col, msg)


@dataclass
class PresentationFile:
    kind: str
    alphabet: Alphabet
    mgens: tuple
    leibniz: object
    relations: list


def _rank(cur, alphabet, name, col):
    try:
        return alphabet.rank(name)
    except ValueError:
        raise ParseError(cur.lineno, col,
                         "unknown generator %r" % name) from None


def _ac_renorm(tree):
    """Rewrite a raw parsed tree into normal-word form, signs included."""
    if isinstance(tree, int):
        return AcPolynomial({tree: 1})
    return ac_mul(_ac_renorm(tree[0]), _ac_renorm(tree[1]))


def _parse_ac_tree(cur, alphabet):
    tok = cur.peek()
    if tok is None:
        cur.error("expected a letter or a parenthesized pair")
    kind, value, col = tok
    if kind == "name":
        cur.next()
        return _rank(cur, alphabet, value, col)
    if (kind, value) == ("op", "("):
        cur.next()
        left = _parse_ac_tree(cur, alphabet)
        right = _parse_ac_tree(cur, alphabet)
        closing = cur.peek()
        if closing is None or (closing[0], closing[1]) != ("op", ")"):
            cur.error("expected )")
        cur.next()
        return (left, right)
    cur.error("expected a letter or (")


def _parse_term(cur, kind, alphabet, mgens):
    """One product term; returns (coefficient, monomial or None).

    None stands for the empty associative word (a pure scalar term)."""
    coeff = Fraction(1)
    letters = []
    center = None
    ygen = None
    trees = []
    saw_atom = False
    while True:
        tok = cur.peek()
        if tok is None:
            break
        tkind, value, col = tok
        if saw_atom:
            if (tkind, value) != ("op", "*"):
                break
            cur.next()
            tok = cur.peek()
            if tok is None:
                cur.error("expected a factor after *")
            tkind, value, col = tok
            if (tkind, value) == ("op", "*"):
                cur.error("expected a factor after *")
        saw_atom = True
        if tkind == "num":
            cur.next()
            coeff *= Fraction(value)
            continue
        if ygen is not None:
            raise ParseError(cur.lineno, col,
                             "nothing may follow the module generator")
        if kind == "ac":
            trees.append(_parse_ac_tree(cur, alphabet))
            continue
        if tkind == "name":
            cur.next()
            letters.append(_rank(cur, alphabet, value, col))
            continue
        if (tkind, value) == ("op", "@") and kind == "dialgebra":
            cur.next()
            ntok = cur.next("name", "a generator after @")
            if center is not None:
                raise ParseError(cur.lineno, ntok[2],
                                 "a diword has exactly one center")
            center = len(letters)
            letters.append(_rank(cur, alphabet, ntok[1], ntok[2]))
            continue
        if (tkind, value) == ("op", "[") and kind == "module":
            cur.next()
            ntok = cur.next("name", "a module generator")
            if ntok[1] not in mgens:
                raise ParseError(cur.lineno, ntok[2],
                                 "unknown module generator %r" % ntok[1])
            cur.next(("op", "]"), "]")
            ygen = mgens.index(ntok[1])
            continue
        cur.error("expected a factor")
    if not saw_atom:
        cur.error("expected a term")

    if kind == "assoc":
        return coeff, tuple(letters)
    if kind == "dialgebra":
        if not letters:
            cur.error("a dialgebra term needs letters")
        if center is None:
            cur.error("mark the center letter with @")
        return coeff, Diword(tuple(letters), center)
    if kind == "module":
        if ygen is None:
            cur.error("a module term ends with [generator]")
        return coeff, ModuleWord(tuple(letters), ygen)
    if not trees:
        cur.error("an ac term needs a tree or a letter")
    acc = _ac_renorm(trees[0])
    for t in trees[1:]:
        acc = ac_mul(acc, _ac_renorm(t))
    return coeff, acc


_CONTAINERS = {"assoc": Polynomial, "dialgebra": DiPolynomial,
               "module": ModuleElement}


def _parse_expr(cur, kind, alphabet, mgens):
    items = []
    sign = Fraction(1)
    tok = cur.peek()
    if tok and (tok[0], tok[1]) == ("op", "-"):
        cur.next()
        sign = Fraction(-1)
    elif tok and (tok[0], tok[1]) == ("op", "+"):
        cur.next()
    while True:
        coeff, mono = _parse_term(cur, kind, alphabet, mgens)
        if kind == "ac":
            items.append(mono.scale(sign * coeff))
        else:
            items.append((mono, sign * coeff))
        tok = cur.peek()
        if tok is None:
            break
        if (tok[0], tok[1]) == ("op", "+"):
            sign = Fraction(1)
        elif (tok[0], tok[1]) == ("op", "-"):
            sign = Fraction(-1)
        else:
            cur.error("expected + or - between terms")
        cur.next()
    if kind == "ac":
        total = AcPolynomial()
        for p in items:
            total = total + p
        return total
    return _CONTAINERS[kind](items)


def parse_element(text, kind, alphabet, mgens=(), lineno=1):
    """Parse one element in the given structure; raises ParseError."""
    cur = _Cursor(_tokenize(text, lineno), lineno)
    if not cur.tokens:
        cur.error("expected an expression")
    out = _parse_expr(cur, kind, alphabet, mgens)
    if cur.peek() is not None:
        cur.error("trailing input after the expression")
    return out


def parse_presentation(text):
    """Parse a presentation file into alphabets, optional Leibniz data,
    and relations; see the module docstring for the grammar."""
    kind = None
    gens = None
    mgens = ()
    bracket = {}
    saw_bracket = False
    rel_lines = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw, lineno)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno)
        head = cur.next("name", "a directive")
        word = head[1]
        if word == "kind":
            if kind is not None:
                raise ParseError(lineno, head[2], "duplicate kind line")
            tok = cur.next("name", "one of %s" % (KINDS,))
            if tok[1] not in KINDS:
                raise ParseError(lineno, tok[2],
                                 "kind must be one of %s" % (KINDS,))
            kind = tok[1]
        elif word == "gens":
            if gens is not None:
                raise ParseError(lineno, head[2], "duplicate gens line")
            names = []
            while cur.peek() is not None:
                names.append(cur.next("name", "a generator name")[1])
            if not names:
                cur.error("gens needs at least one name")
            gens = Alphabet(tuple(names))
        elif word == "mgens":
            if kind != "module":
                raise ParseError(lineno, head[2],
                                 "mgens lines belong to kind module")
            names = []
            while cur.peek() is not None:
                names.append(cur.next("name", "a module generator name")[1])
            if not names:
                cur.error("mgens needs at least one name")
            mgens = tuple(names)
        elif word == "bracket":
            if kind != "dialgebra":
                raise ParseError(lineno, head[2],
                                 "bracket lines belong to kind dialgebra")
            if gens is None:
                raise ParseError(lineno, head[2], "gens must come first")
            if rel_lines:
                raise ParseError(lineno, head[2],
                                 "bracket and rel lines cannot be mixed")
            saw_bracket = True
            ti = cur.next("name", "a generator name")
            tj = cur.next("name", "a generator name")
            cur.next(("op", "="), "=")
            i = _rank(cur, gens, ti[1], ti[2])
            j = _rank(cur, gens, tj[1], tj[2])
            combo = _parse_expr(cur, "assoc", gens, ())
            if cur.peek() is not None:
                cur.error("trailing input after the bracket value")
            for w, c in combo.items():
                if len(w) != 1:
                    raise ParseError(lineno, head[2],
                                     "bracket values are linear in the "
                                     "generators")
                bracket[(i, j, w[0])] = c
        elif word == "rel":
            if kind is None:
                raise ParseError(lineno, head[2], "kind must come first")
            if gens is None:
                raise ParseError(lineno, head[2], "gens must come first")
            if saw_bracket:
                raise ParseError(lineno, head[2],
                                 "bracket and rel lines cannot be mixed")
            if kind == "module" and not mgens:
                raise ParseError(lineno, head[2],
                                 "mgens must come before module relations")
            elem = _parse_expr(cur, kind, gens, mgens)
            if cur.peek() is not None:
                cur.error("trailing input after the relation")
            if not elem:
                raise ParseError(lineno, head[2], "the relation is zero")
            rel_lines.append(elem.monic())
        else:
            raise ParseError(lineno, head[2],
                             "unknown directive %r" % word)

    if kind is None:
        raise ParseError(1, 1, "missing kind line")
    if gens is None:
        raise ParseError(1, 1, "missing gens line")
    if kind == "module" and not mgens:
        raise ParseError(1, 1, "kind module needs an mgens line")

    leibniz = None
    relations = rel_lines
    if saw_bracket:
        leibniz = LeibnizAlgebra(dim=len(gens), bracket=bracket)
        try:
            relations = leibniz_enveloping(leibniz)
        except ValueError as exc:
            raise ParseError(1, 1, str(exc)) from None
    return PresentationFile(kind=kind, alphabet=gens, mgens=mgens,
                            leibniz=leibniz, relations=relations)


# -- canonical printing --------------------------------------------------


def fmt_word(w, alphabet):
    if not w:
        return "1"
    return "*".join(alphabet.name(r) for r in w)


def fmt_diword(dw, alphabet):
    parts = []
    for i, r in enumerate(dw.letters):
        name = alphabet.name(r)
        parts.append("@" + name if i == dw.center else name)
    return "*".join(parts)


def fmt_mword(mw, alphabet, mgens):
    tail = "[%s]" % mgens[mw.y]
    if not mw.u:
        return tail
    return "*".join(alphabet.name(r) for r in mw.u) + "*" + tail


def fmt_acword(t, alphabet):
    if isinstance(t, int):
        return alphabet.name(t)
    return "(%s %s)" % (fmt_acword(t[0], alphabet),
                        fmt_acword(t[1], alphabet))


def _fmt_monomial(m, pfile):
    if pfile.kind == "assoc":
        return fmt_word(m, pfile.alphabet)
    if pfile.kind == "dialgebra":
        return fmt_diword(m, pfile.alphabet)
    if pfile.kind == "module":
        return fmt_mword(m, pfile.alphabet, pfile.mgens)
    return fmt_acword(m, pfile.alphabet)


def fmt_element(e, pfile):
    """Canonical text: descending terms, unit coefficients omitted, signs
    folded into the separators."""
    if not e:
        return "0"
    parts = []
    for m, c in e.sorted_terms():
        body = _fmt_monomial(m, pfile)
        if pfile.kind == "assoc" and not m:
            frag = str(abs(c))
        elif abs(c) == 1:
            frag = body
        else:
            frag = "%s*%s" % (abs(c), body)
        if not parts:
            parts.append("-" + frag if c < 0 else frag)
        else:
            parts.append(("- " if c < 0 else "+ ") + frag)
    return " ".join(parts)


def fmt_presentation(pfile):
    lines = ["kind %s" % pfile.kind,
             "gens %s" % " ".join(pfile.alphabet.names)]
    if pfile.kind == "module":
        lines.append("mgens %s" % " ".join(pfile.mgens))
    for r in pfile.relations:
        lines.append("rel %s" % fmt_element(r, pfile))
    return "\n".join(lines) + "\n"


# -- subcommands ----------------------------------------------------------


def _emit(lines, result):
    print("format: 1")
    for line in lines:
        print(line)
    print(result)


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def _assoc_system(pfile):
    return RewriteSystem(tuple(pfile.relations),
                         DegLexOrder(pfile.alphabet))


def _default_bound(pfile):
    if pfile.kind == "dialgebra":
        longest = max(len(r.leading_monomial()) for r in pfile.relations)
    else:
        longest = max(ac_size(r.leading_monomial())
                      for r in pfile.relations)
    return longest + 1


def _bool(x):
    return "true" if x else "false"


def cmd_check(args):
    pfile = _load(args.file)
    kind = pfile.kind
    lines = ["kind: %s" % kind, "elements: %d" % len(pfile.relations)]
    if kind == "assoc":
        rep = is_gsb(_assoc_system(pfile))
        lines += ["checked: %d" % rep.checked,
                  "failing: %d" % len(rep.failing)]
        holds = rep.holds
    elif kind == "module":
        rep = module_is_gsb(pfile.relations)
        lines += ["checked: %d" % rep.checked,
                  "failing: %d" % len(rep.failing)]
        holds = rep.holds
    elif kind == "dialgebra":
        bound = args.max_deg or _default_bound(pfile)
        rep = di_gsb_check_bounded(pfile.relations, len(pfile.alphabet),
                                   bound)
        lines += ["max_deg: %d" % bound,
                  "leadings: %s" % _bool(rep.leading_ok),
                  "counts: %s" % _bool(rep.counts_ok)]
        holds = rep.holds
    else:
        bound = args.max_deg or _default_bound(pfile)
        rep = ac_gsb_check_bounded(pfile.relations, len(pfile.alphabet),
                                   bound)
        lines += ["max_deg: %d" % bound,
                  "compositions: %s" % _bool(rep.gsb_ok),
                  "leadings: %s" % _bool(rep.leading_ok),
                  "counts: %s" % _bool(rep.counts_ok)]
        holds = rep.holds
    _emit(lines, _bool(holds))
    return 0 if holds else 1


def cmd_complete(args):
    pfile = _load(args.file)
    if pfile.kind != "assoc":
        print("error: complete supports kind assoc only", file=sys.stderr)
        return 2
    system = _assoc_system(pfile)
    rep = shirshov_complete(system, max_deg=args.max_deg,
                            max_elems=args.max_elems,
                            budget_seconds=args.budget_seconds)
    out = PresentationFile(kind="assoc", alphabet=pfile.alphabet,
                           mgens=(), leibniz=None,
                           relations=list(rep.basis.elements))
    lines = ["kind: assoc",
             "added: %d" % rep.added,
             "iterations: %d" % rep.iterations,
             "elements: %d" % len(rep.basis)]
    lines += ["elem: %s" % fmt_element(e, out) for e in rep.basis.elements]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(fmt_presentation(out))
        lines.append("wrote: %s" % args.out)
    _emit(lines, rep.status)
    return 0 if rep.status == "completed" else 1


def cmd_nf(args):
    pfile = _load(args.file)
    kind = pfile.kind
    elem = parse_element(args.elem, kind, pfile.alphabet, pfile.mgens)
    if kind == "assoc":
        result = normal_form(elem, _assoc_system(pfile))
    elif kind == "dialgebra":
        result = di_reduce(elem, pfile.relations)
    elif kind == "module":
        result = module_normal_form(elem, pfile.relations)
    else:
        result = ac_normal_form(elem, pfile.relations)
    _emit(["kind: %s" % kind], fmt_element(result, pfile))
    return 0


def _irr_listing(pfile, max_len):
    kind = pfile.kind
    n = len(pfile.alphabet)
    if kind == "assoc":
        words = irr_words(_assoc_system(pfile), max_len)
        grouped = {d: [] for d in range(max_len + 1)}
        for w in words:
            grouped[len(w)].append(fmt_word(w, pfile.alphabet))
    elif kind == "dialgebra":
        words = di_irr(pfile.relations, n, max_len)
        grouped = {d: [] for d in range(1, max_len + 1)}
        for w in words:
            grouped[len(w)].append(fmt_diword(w, pfile.alphabet))
    elif kind == "module":
        words = module_irr(pfile.relations, n, len(pfile.mgens), max_len)
        grouped = {d: [] for d in range(max_len + 1)}
        for w in words:
            grouped[len(w.u)].append(fmt_mword(w, pfile.alphabet,
                                               pfile.mgens))
    else:
        words = ac_irr_words(pfile.relations, n, max_len)
        grouped = {d: [] for d in range(1, max_len + 1)}
        for w in words:
            grouped[ac_size(w)].append(fmt_acword(w, pfile.alphabet))
    return grouped


def cmd_irr(args):
    pfile = _load(args.file)
    grouped = _irr_listing(pfile, args.max_len)
    lines = ["kind: %s" % pfile.kind, "max_len: %d" % args.max_len]
    if not args.count_only:
        for d in sorted(grouped):
            lines.append("len %d: %s" % (d, " ".join(grouped[d])))
    counts = " ".join(str(len(grouped[d])) for d in sorted(grouped))
    _emit(lines, counts)
    return 0


def cmd_cdcheck(args):
    pfile = _load(args.file)
    kind = pfile.kind
    lines = ["kind: %s" % kind, "max_deg: %d" % args.max_deg]
    if kind == "assoc":
        rep = cd_lemma_check(_assoc_system(pfile), args.max_deg)
        lines += ["compositions: %s" % _bool(rep.gsb_ok),
                  "leadings: %s" % _bool(rep.leading_ok),
                  "counts: %s" % _bool(rep.counts_ok)]
        table = rep.table
        holds = rep.gsb_ok and rep.leading_ok and rep.counts_ok
    elif kind == "module":
        rep = module_cd_check(pfile.relations, len(pfile.alphabet),
                              len(pfile.mgens), args.max_deg)
        lines += ["compositions: %s" % _bool(rep.gsb_ok),
                  "leadings: %s" % _bool(rep.leading_ok),
                  "counts: %s" % _bool(rep.counts_ok)]
        table = rep.table
        holds = rep.gsb_ok and rep.leading_ok and rep.counts_ok
    elif kind == "dialgebra":
        rep = di_gsb_check_bounded(pfile.relations, len(pfile.alphabet),
                                   args.max_deg)
        lines += ["leadings: %s" % _bool(rep.leading_ok),
                  "counts: %s" % _bool(rep.counts_ok)]
        table = rep.table
        holds = rep.holds
    else:
        rep = ac_gsb_check_bounded(pfile.relations, len(pfile.alphabet),
                                   args.max_deg)
        lines += ["compositions: %s" % _bool(rep.gsb_ok),
                  "leadings: %s" % _bool(rep.leading_ok),
                  "counts: %s" % _bool(rep.counts_ok)]
        table = rep.table
        holds = rep.holds
    for line in table:
        d = getattr(line, "degree", getattr(line, "length", None))
        lines.append("deg %d: irr=%d rank=%d total=%d %s"
                     % (d, line.irreducible, line.rank, line.total,
                        "ok" if line.ok else "FAIL"))
    _emit(lines, _bool(holds))
    return 0 if holds else 1


def _preset_file(args):
    if args.preset == "chinese":
        system = chinese_gsb(args.rank)
        label = "chinese rank=%d" % args.rank
    else:
        system = tensor_relations(args.nx, args.ny)
        label = "tensor nx=%d ny=%d" % (args.nx, args.ny)
    pfile = PresentationFile(kind="assoc", alphabet=system.order.alphabet,
                             mgens=(), leibniz=None,
                             relations=list(system.elements))
    return pfile, system, label


def cmd_catalog(args):
    pfile, system, label = _preset_file(args)
    if args.cdcheck is not None:
        rep = cd_lemma_check(system, args.cdcheck)
        holds = rep.gsb_ok and rep.leading_ok and rep.counts_ok
        lines = ["preset: %s" % label, "max_deg: %d" % args.cdcheck,
                 "compositions: %s" % _bool(rep.gsb_ok),
                 "leadings: %s" % _bool(rep.leading_ok),
                 "counts: %s" % _bool(rep.counts_ok)]
        for line in rep.table:
            lines.append("deg %d: irr=%d rank=%d total=%d %s"
                         % (line.degree, line.irreducible, line.rank,
                            line.total, "ok" if line.ok else "FAIL"))
        _emit(lines, _bool(holds))
        return 0 if holds else 1
    if args.irr is not None:
        grouped = _irr_listing(pfile, args.irr)
        lines = ["preset: %s" % label, "max_len: %d" % args.irr]
        if not args.count_only:
            for d in sorted(grouped):
                lines.append("len %d: %s" % (d, " ".join(grouped[d])))
        _emit(lines, " ".join(str(len(grouped[d]))
                              for d in sorted(grouped)))
        return 0
    rep = is_gsb(system)
    lines = ["preset: %s" % label, "elements: %d" % len(system),
             "checked: %d" % rep.checked,
             "failing: %d" % len(rep.failing)]
    _emit(lines, _bool(rep.holds))
    return 0 if rep.holds else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="shirshov",
        description="Composition-based rewriting over free structures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify closedness under compositions")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, default=None,
                   help="bound for the structures with bounded checks")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("complete", help="run the completion procedure")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--max-elems", type=int, required=True)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--out", default=None,
                   help="write the resulting basis as a presentation file")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("nf", help="normal form of an element")
    p.add_argument("file")
    p.add_argument("--elem", required=True)
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("irr", help="irreducible words per length")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_irr)

    p = sub.add_parser("cdcheck", help="bounded three-condition report")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    p.set_defaults(func=cmd_cdcheck)

    p = sub.add_parser("catalog", help="run a built-in presentation")
    p.add_argument("preset", choices=("chinese", "tensor"))
    p.add_argument("--rank", type=int, default=2,
                   help="generator count for the chinese preset")
    p.add_argument("--nx", type=int, default=1)
    p.add_argument("--ny", type=int, default=1)
    p.add_argument("--check", action="store_true",
                   help="closedness check (the default action)")
    p.add_argument("--cdcheck", type=int, default=None, metavar="N")
    p.add_argument("--irr", type=int, default=None, metavar="N")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""PBW normal-form arithmetic in U(g) over a minimal setup's letter basis.

A monomial is a tuple of letter indices, non-decreasing in the global
order (g(0), g(1), e, z's, f); odd letters never repeat.  Out-of-order
neighbours a.b rewrite to (-1)^{|a||b|} b.a + [a,b]; an odd square x.x
rewrites to [x,x]/2.  Rewriting scans from the right so the reduction is
a single right-to-left pass for nearly-sorted products.
"""

from fractions import Fraction

from .errors import InputError
from .linalg import ZERO

HALF = Fraction(1, 2)


def straighten(setup, word, coeff, sink):
    """Reduce one word to normal form, accumulating into the sink dict."""
    par = setup.letter_parity
    stack = [(tuple(word), coeff)]
    while stack:
        w, c = stack.pop()
        pos = None
        for i in range(len(w) - 2, -1, -1):
            a, b = w[i], w[i + 1]
            if a > b or (a == b and par[a]):
                pos = i
                break
        if pos is None:
            prev = sink.get(w, ZERO) + c
            if prev == 0:
                sink.pop(w, None)
            else:
                sink[w] = prev
            continue
        a, b = w[pos], w[pos + 1]
        head, tail = w[:pos], w[pos + 2:]
        if a == b:
            for k, ck in setup.letter_bracket(a, a):
                stack.append((head + (k,) + tail, c * ck * HALF))
        else:
            sign = -1 if (par[a] and par[b]) else 1
            stack.append((head + (b, a) + tail, c * sign))
            for k, ck in setup.letter_bracket(a, b):
                stack.append((head + (k,) + tail, c * ck))


def word_parity(setup, word):
    return sum(setup.letter_parity[i] for i in word) & 1


def kazhdan_degree(setup, word):
    """Sum of (grade + 2) over the letters of the monomial."""
    return sum(setup.letter_grade[i] + 2 for i in word)


def weight(setup, word):
    """Grade sum over p-letters minus the g(-1) letter count; f contributes 0."""
    total = 0
    for i in word:
        g = setup.letter_grade[i]
        if g >= 0:
            total += g
        elif g == -1:
            total -= 1
    return total


def exponents(word):
    """Sparse exponent view of a normal word."""
    out = {}
    for i in word:
        out[i] = out.get(i, 0) + 1
    return out


class EnvElement:
    """Element of U(g) as a sparse map from normal monomials to Fractions."""

    __slots__ = ("setup", "terms")

    def __init__(self, setup, terms=None):
        self.setup = setup
        self.terms = {} if terms is None else terms

    # -- constructors ----------------------------------------------------

    @classmethod
    def unit(cls, setup, c=1):
        c = Fraction(c)
        return cls(setup, {(): c} if c != 0 else {})

    @classmethod
    def from_letter(cls, setup, i, c=1):
        c = Fraction(c)
        return cls(setup, {(i,): c} if c != 0 else {})

    @classmethod
    def from_vector(cls, setup, vec):
        return cls(setup, {(i,): c for i, c in setup.to_letters(vec).items()})

    @classmethod
    def from_word(cls, setup, word, c=1):
        out = {}
        straighten(setup, tuple(word), Fraction(c), out)
        return cls(setup, out)

    def copy(self):
        return EnvElement(self.setup, dict(self.terms))

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, ZERO) + c
            if v == 0:
                out.pop(w, None)
            else:
                out[w] = v
        return EnvElement(self.setup, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return EnvElement(self.setup, {w: -c for w, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return EnvElement(self.setup)
        return EnvElement(self.setup, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, EnvElement):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    straighten(self.setup, w1 + w2, c1 * c2, out)
            return EnvElement(self.setup, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, EnvElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    # -- structure --------------------------------------------------------

    def parity(self):
        """0/1 for homogeneous elements, None for 0 or mixed."""
        p = None
        for w in self.terms:
            wp = word_parity(self.setup, w)
            if p is None:
                p = wp
            elif p != wp:
                return None
        return p

    def homogeneous_parts(self):
        parts = {0: {}, 1: {}}
        for w, c in self.terms.items():
            parts[word_parity(self.setup, w)][w] = c
        return {p: EnvElement(self.setup, t) for p, t in parts.items() if t}

    def max_kazhdan_degree(self):
        return max((kazhdan_degree(self.setup, w) for w in self.terms), default=0)

    def render(self):
        return render_terms(self.setup, sorted(self.terms.items()))

    __repr__ = render


def render_terms(setup, items):
    if not items:
        return "0"
    chunks = []
    for word, c in items:
        body = "·".join(setup.letter_names[i] for i in word) if word else "1"
        if c == 1 and word:
            txt = body
        elif c == -1 and word:
            txt = "-" + body
        else:
            txt = "%s·%s" % (c, body) if word else str(c)
        chunks.append(txt)
    out = chunks[0]
    for t in chunks[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def supercommutator(u, v):
    """uv - (-1)^{|u||v|} vu for parity-homogeneous u, v."""
    pu, pv = u.parity(), v.parity()
    if (pu is None and not u.is_zero()) or (pv is None and not v.is_zero()):
        raise InputError("supercommutator needs parity-homogeneous arguments")
    sign = -1 if (pu == 1 and pv == 1) else 1
    return u * v - (v * u).scale(sign)

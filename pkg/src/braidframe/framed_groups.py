"""Framed braid groups.

For surfaces with boundary the framed pure group is a direct product of the
framing lattice Z^n with the pure braid group, and the full framed group is a
semidirect product in which braids permute the framings of their strands.
Closed surfaces and the torus are handled through presentations.
"""

from functools import lru_cache

from .presentations import GroupPresentation, Relator
from .surface_braid_groups import (
    pure_alphabet, pure_generators, pure_relators, torus_pure_presentation,
    torus_quotient_presentation, tr_sides,
)
from .words import Alphabet, Gen, Word, WordError, commutator, invert, product


class Permutation:
    """Permutation of {1..n}; ``p(k)`` is where k goes.  Products compose
    left to right: ``(p * q)(k) == q(p(k))``."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(im)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("permutations of different degree")
        return Permutation(other(self(k)) for k in range(1, self.n + 1))

    def inverse(self):
        inv = [0] * self.n
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(inv)

    def is_identity(self):
        return all(v == k for k, v in enumerate(self.images, 1))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def cycles(self):
        seen, out = set(), []
        for k in range(1, self.n + 1):
            if k in seen or self(k) == k:
                continue
            cyc = [k]
            seen.add(k)
            j = self(k)
            while j != k:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def _degree(w, n):
    if n is not None:
        return n
    try:
        return w.alphabet.param("n")
    except KeyError:
        pass
    top = 1
    for gen, _ in w.letters:
        if gen.family in ("sigma", "tau"):
            top = max(top, gen.idx[0] + 1)
    return top


def permutation_of(w, n=None):
    """Permutation induced by a word: sigma[i] and tau[i] swap i, i+1; every
    other letter is pure."""
    n = _degree(w, n)
    im = list(range(1, n + 1))
    pos = {k: k for k in range(1, n + 1)}  # strand start -> current position
    at = {k: k for k in range(1, n + 1)}   # current position -> strand start
    for gen, _ in w.letters:
        if gen.family in ("sigma", "tau"):
            i = gen.idx[0]
            if i >= n:
                raise WordError(f"{gen} needs at least {i + 1} strands")
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            pos[a], pos[b] = i + 1, i
    for k in range(1, n + 1):
        im[k - 1] = pos[k]
    return Permutation(im)


# -- boundary case: element arithmetic ------------------------------------------

class FramedPureElement:
    """(framing, pure word) in the direct product Z^n x P_n."""

    __slots__ = ("framing", "word")

    def __init__(self, framing, word):
        self.framing = tuple(int(v) for v in framing)
        self.word = word
        n = _alphabet_n(word)
        if n is not None and n != len(self.framing):
            raise ValueError(f"framing has length {len(self.framing)} but the braid has {n} strands")

    def __mul__(self, other):
        return fp_multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, FramedPureElement) and self.framing == other.framing
                and self.word == other.word)

    def __hash__(self):
        return hash((self.framing, self.word))

    def __repr__(self):
        return f"FramedPureElement({list(self.framing)}, {self.word})"


def _alphabet_n(word):
    try:
        return word.alphabet.param("n")
    except KeyError:
        return None


def _shape(u, v):
    if len(u.framing) != len(v.framing) or u.word.alphabet != v.word.alphabet:
        raise ValueError("framed elements of different shapes")


def fp_identity(n, alphabet):
    return FramedPureElement((0,) * n, Word((), alphabet))


def fp_multiply(u, v):
    _shape(u, v)
    return FramedPureElement(tuple(a + b for a, b in zip(u.framing, v.framing)), u.word * v.word)


def fp_invert(u):
    return FramedPureElement(tuple(-a for a in u.framing), invert(u.word))


class FramedFullElement:
    """(framing, braid) with the braid's permutation cached.

    ``framing[k-1]`` is the framing of the strand that starts at position k.
    """

    __slots__ = ("framing", "braid", "permutation")

    def __init__(self, framing, braid, permutation=None):
        self.framing = tuple(int(v) for v in framing)
        self.braid = braid
        if permutation is None:
            permutation = permutation_of(braid, len(self.framing))
        self.permutation = permutation

    def __mul__(self, other):
        return fb_multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, FramedFullElement) and self.framing == other.framing
                and self.braid == other.braid)

    def __hash__(self):
        return hash((self.framing, self.braid))

    def __repr__(self):
        return f"FramedFullElement({list(self.framing)}, {self.braid}, {self.permutation})"


def fb_multiply(u, v):
    """Semidirect product law.  The strand starting at k in u continues from
    position u.permutation(k) in v, so its framings add up along the way:
    new[k] = u[k] + v[perm_u(k)]."""
    if len(u.framing) != len(v.framing) or u.braid.alphabet != v.braid.alphabet:
        raise ValueError("framed elements of different shapes")
    p = u.permutation
    fr = tuple(u.framing[k - 1] + v.framing[p(k) - 1] for k in range(1, len(u.framing) + 1))
    return FramedFullElement(fr, u.braid * v.braid, p * v.permutation)


def fb_invert(u):
    p = u.permutation.inverse()
    fr = tuple(-u.framing[p(k) - 1] for k in range(1, len(u.framing) + 1))
    return FramedFullElement(fr, invert(u.braid), p)


def fb_identity(n, alphabet):
    return FramedFullElement((0,) * n, Word((), alphabet), Permutation.identity(n))


# -- presentations ----------------------------------------------------------------

def _framing_gens(n, letter="f"):
    return [Gen(letter, k) for k in range(1, n + 1)]


def centrality_relators(alphabet, n, letter="f"):
    """[f_k, x] for every k and every other generator x."""
    out = []
    for k in range(1, n + 1):
        fk = Word.gen(Gen(letter, k), alphabet)
        for x in alphabet.gens:
            if x != fk.letters[0][0]:
                out.append(Relator("C", (k, str(x)), commutator(fk, Word.gen(x, alphabet))))
    return out


def framed_pure_alphabet(g, n):
    gens = pure_generators(g, 1, n, "B") + _framing_gens(n)
    return Alphabet("framed-pure", gens, (("g", g), ("b", 1), ("n", n)))


def ftr_relators(g, n, alphabet):
    out = []
    for k in range(1, n + 1):
        lhs, rhs = tr_sides(g, n, k, alphabet, "B")
        rhs = rhs * Word.gen(Gen("f", k), alphabet, 2 * (g - 1))
        out.append(Relator("FTR", (k,), lhs * invert(rhs)))
    return out


@lru_cache(maxsize=None)
def fp_closed_presentation(g, n):
    if g < 2 or n < 1:
        raise ValueError(f"closed framed presentation needs g>=2, n>=1; got {(g, n)}")
    alph = framed_pure_alphabet(g, n)
    rels = pure_relators(g, 1, n, alph, "B") + centrality_relators(alph, n) + ftr_relators(g, n, alph)
    return GroupPresentation("fp-closed", alph, rels, {"g": g, "b": 0, "n": n})


def _direct_with_framing(name, base, n, kind):
    alph = Alphabet(kind, tuple(base.generators) + tuple(_framing_gens(n)),
                    tuple(sorted(base.alphabet.params)))
    rels = [r._replace(word=r.word.over(alph)) for r in base.relators]
    rels += centrality_relators(alph, n)
    return GroupPresentation(name, alph, rels, dict(base.params))


@lru_cache(maxsize=None)
def fp_boundary_presentation(g, b, n):
    """Z^n x P_n for a surface with boundary, as a presentation."""
    from .surface_braid_groups import pure_presentation
    return _direct_with_framing("fp-boundary", pure_presentation(g, b, n), n, "framed-boundary")


@lru_cache(maxsize=None)
def torus_fp_presentation(n):
    return _direct_with_framing("torus-fp", torus_pure_presentation(n), n, "framed-torus")


@lru_cache(maxsize=None)
def torus_fp_tilde_presentation(n):
    return _direct_with_framing("torus-fp-tilde", torus_quotient_presentation(n), n, "framed-torus-tilde")


def framed_full_alphabet(g, n):
    gens = []
    for i in range(1, g + 1):
        gens += [Gen("cA", i), Gen("cB", i)]
    gens += [Gen("tau", j) for j in range(1, n)] + _framing_gens(n, "F")
    return Alphabet("framed-full", gens, (("g", g), ("n", n)))


def tau_telescope(n, alphabet):
    """tau_1 ... tau_{n-2} tau_{n-1}^2 tau_{n-2} ... tau_1 (empty for n = 1)."""
    if n < 2:
        return Word((), alphabet)
    t = [Word.gen(Gen("tau", j), alphabet) for j in range(1, n)]
    return product(t[:-1] + [t[-1], t[-1]] + t[-2::-1], alphabet)


@lru_cache(maxsize=None)
def fb_tilde_closed_presentation(g, n):
    """Framed full braid group of a closed surface, on handle letters cA, cB,
    the pair swaps tau and the pair twists F.  Relation families are numbered
    (1)-(10); families involving tau[1] are absent when n = 1."""
    if g < 2 or n < 1:
        raise ValueError(f"framed full presentation needs g>=2, n>=1; got {(g, n)}")
    alph = framed_full_alphabet(g, n)

    def w(fam, *idx, e=1):
        return Word.gen(Gen(fam, *idx), alph, e)

    rels = []

    def add(fam, params, lhs, rhs):
        rels.append(Relator(fam, tuple(params), lhs * invert(rhs)))

    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                add("1", (i, j), w("tau", i) * w("F", j), w("F", j) * w("tau", i))
    for i in range(1, n):
        add("2", (i,), w("tau", i) * w("F", i), w("F", i + 1) * w("tau", i))
    for i in range(1, n):
        add("3", (i,), w("tau", i) * w("F", i + 1), w("F", i) * w("tau", i))
    for i in range(1, n):
        for j in range(i + 2, n):
            add("4", (i, j), w("tau", i) * w("tau", j), w("tau", j) * w("tau", i))
    for i in range(1, n - 1):
        t, u = w("tau", i), w("tau", i + 1)
        add("5", (i,), t * u * t, u * t * u)
    cs = [(c, i) for i in range(1, g + 1) for c in ("cA", "cB")]
    for c, i in cs:
        for j in range(2, n):
            add("6", (c, i, j), w(c, i) * w("tau", j), w("tau", j) * w(c, i))
    if n >= 2:
        t = w("tau", 1)
        for c, i in cs:
            ci = w(c, i)
            add("7", (c, i), ci * t * ci * t, t * ci * t * ci)
        for i in range(1, g + 1):
            a, b = w("cA", i), w("cB", i)
            add("8", (i,), a * t * b, t * b * t * a * t)
        for c, i in cs:
            for d, j in cs:
                if j < i:
                    ci, dj = w(c, i), w(d, j)
                    add("9", (c, i, d, j), ci * invert(t) * dj * t, invert(t) * dj * t * ci)
    lhs = product((commutator(w("cA", i, e=-1), w("cB", i)) for i in range(1, g + 1)), alph)
    add("10", (), lhs, tau_telescope(n, alph) * w("F", 1, e=2 * (g - 1)))
    return GroupPresentation("fb-tilde", alph, rels, {"g": g, "b": 0, "n": n})


def forget_framing(x):
    """Drop framings: erase f and F letters and rename B letters to A."""
    if isinstance(x, FramedPureElement):
        return x.word
    if isinstance(x, FramedFullElement):
        return x.braid
    alph = x.alphabet
    target = alph
    if alph.kind in ("framed-pure", "framed-boundary", "framed-torus", "framed-torus-tilde"):
        target = pure_alphabet(alph.param("g"), alph.param("b"), alph.param("n"))
    out = []
    for gen, e in x.letters:
        if gen.family in ("f", "F"):
            continue
        if gen.family == "B":
            gen = Gen("A", *gen.idx)
        out.append((gen, e))
    return Word(tuple(out), target)

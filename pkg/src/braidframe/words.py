"""Free-group words over typed alphabets.

Every word is stored freely reduced, so two words represent the same
free-group element exactly when they compare equal.  Products are read left
to right, and so is composition of automorphisms: ``(phi * psi)(x)`` means
``psi(phi(x))``.
"""

import re

ARITY = {
    "A": 2, "B": 2, "C": 2,
    "f": 1, "F": 1, "sigma": 1, "tau": 1, "cA": 1, "cB": 1,
    "x": 1, "a": 1, "b": 1,
}


class WordError(ValueError):
    pass


class Gen:
    """A generator: a family name plus one or two positive indices."""

    __slots__ = ("family", "idx", "_key")

    def __init__(self, family, *idx):
        if family not in ARITY:
            raise WordError(f"unknown generator family {family!r}")
        if len(idx) != ARITY[family]:
            raise WordError(f"{family} takes {ARITY[family]} index(es), got {idx}")
        if any(not isinstance(i, int) or i < 1 for i in idx):
            raise WordError(f"indices must be positive integers, got {idx}")
        self.family = family
        self.idx = tuple(idx)
        self._key = (family, self.idx)

    def __eq__(self, other):
        return isinstance(other, Gen) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __str__(self):
        return f"{self.family}[{','.join(map(str, self.idx))}]"

    __repr__ = __str__

    def __reduce__(self):
        return (Gen, (self.family,) + self.idx)


class Alphabet:
    """A named set of generators.

    ``gens=None`` accepts any well-formed generator; otherwise membership is
    checked on every word construction.  ``params`` records the (g, b, n)
    style parameters of the owning group, e.g. ``(("g", 2), ("b", 1))``.
    """

    def __init__(self, kind, gens=None, params=()):
        self.kind = kind
        self.gens = None if gens is None else tuple(gens)
        self._set = None if gens is None else frozenset(self.gens)
        self.params = tuple(params)
        self._key = (kind, self.params, self._set)

    def __eq__(self, other):
        return self is other or (isinstance(other, Alphabet) and self._key == other._key)

    def __hash__(self):
        return hash((self.kind, self.params))

    def __repr__(self):
        ps = ",".join(f"{k}={v}" for k, v in self.params)
        return f"Alphabet({self.kind}{'; ' + ps if ps else ''})"

    def __contains__(self, gen):
        return self._set is None or gen in self._set

    def param(self, name):
        return dict(self.params)[name]

    def check(self, gen):
        if gen not in self:
            raise WordError(f"{gen} is not a generator of {self!r}")


ANY = Alphabet("any")


def _cancel(letters):
    out = []
    for l in letters:
        if out and out[-1][0] == l[0] and out[-1][1] == -l[1]:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


class Word:
    """Immutable freely reduced word; letters are ``(Gen, +1 | -1)`` pairs."""

    __slots__ = ("letters", "alphabet", "_hash")

    def __init__(self, letters=(), alphabet=ANY, _trusted=False):
        if not _trusted:
            norm = []
            for gen, e in letters:
                if e not in (1, -1):
                    raise WordError(f"exponent must be +1 or -1, got {e}")
                alphabet.check(gen)
                norm.append((gen, e))
            letters = _cancel(norm)
        self.letters = letters
        self.alphabet = alphabet
        self._hash = None

    @classmethod
    def gen(cls, gen, alphabet=ANY, power=1):
        e = 1 if power > 0 else -1
        return cls(((gen, e),) * abs(power), alphabet)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __eq__(self, other):
        return (isinstance(other, Word) and self.letters == other.letters
                and self.alphabet == other.alphabet)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def __pow__(self, k):
        out = Word((), self.alphabet)
        base = self if k >= 0 else invert(self)
        for _ in range(abs(k)):
            out = multiply(out, base)
        return out

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    def is_identity(self):
        return not self.letters

    def generators(self):
        return sorted({g for g, _ in self.letters})

    def exponent_sum(self, gen):
        return sum(e for g, e in self.letters if g == gen)

    def over(self, alphabet):
        """The same letters re-validated over another alphabet."""
        return Word(self.letters, alphabet)


def reduce(letters, alphabet=ANY):
    return Word(tuple(letters), alphabet)


def _same(u, v):
    if u.alphabet != v.alphabet:
        raise WordError(f"mixed alphabets: {u.alphabet!r} vs {v.alphabet!r}")


def multiply(u, v):
    _same(u, v)
    a, b = u.letters, v.letters
    k = 0
    n = min(len(a), len(b))
    while k < n and a[-1 - k][0] == b[k][0] and a[-1 - k][1] == -b[k][1]:
        k += 1
    return Word(a[:len(a) - k] + b[k:], u.alphabet, _trusted=True)


def invert(u):
    return Word(tuple((g, -e) for g, e in reversed(u.letters)), u.alphabet, _trusted=True)


def conjugate(u, g):
    """g^-1 u g"""
    return multiply(multiply(invert(g), u), g)


def commutator(u, v):
    """u^-1 v^-1 u v"""
    return multiply(multiply(invert(u), invert(v)), multiply(u, v))


def product(words, alphabet=ANY):
    out = Word((), alphabet)
    for w in words:
        out = multiply(out, w)
    return out


def apply_morphism(table, w, target=None):
    """Substitute ``table[gen]`` for every letter of ``w`` (inverted images
    for inverse letters) and reduce.  The result lives in ``target`` or, when
    not given, in the common alphabet of the images."""
    if target is None:
        alphs = {img.alphabet for img in table.values()}
        if len(alphs) > 1:
            raise WordError("images of a morphism must share one alphabet")
        target = alphs.pop() if alphs else ANY
    out = []
    for gen, e in w.letters:
        try:
            img = table[gen]
        except KeyError:
            raise WordError(f"no image for {gen}") from None
        if img.alphabet != target:
            raise WordError(f"image of {gen} is not over {target!r}")
        out.extend(img.letters if e > 0 else invert(img).letters)
    return Word(_cancel(out), target, _trusted=True)


class FreeAutomorphism:
    """Automorphism of a free group given by forward and backward image tables.

    Construction fails unless the two tables are mutually inverse.
    """

    def __init__(self, basis, forward, backward, alphabet=None, check=True):
        self.basis = tuple(basis)
        self.alphabet = alphabet or Alphabet("free", self.basis)
        self.forward = {x: forward[x] for x in self.basis}
        self.backward = {x: backward[x] for x in self.basis}
        if check and not verify_inverse_pair(self):
            raise WordError("forward and backward tables are not mutually inverse")

    @property
    def rank(self):
        return len(self.basis)

    @classmethod
    def identity(cls, basis, alphabet=None):
        alphabet = alphabet or Alphabet("free", tuple(basis))
        t = {x: Word.gen(x, alphabet) for x in basis}
        return cls(basis, t, t, alphabet, check=False)

    def __call__(self, w):
        return apply_automorphism(self, w)

    def __mul__(self, other):
        return compose_automorphisms(self, other)

    def inverse(self):
        return FreeAutomorphism(self.basis, self.backward, self.forward, self.alphabet, check=False)

    def is_identity(self):
        return all(self.forward[x].letters == ((x, 1),) for x in self.basis)

    def __eq__(self, other):
        return (isinstance(other, FreeAutomorphism) and self.basis == other.basis
                and self.forward == other.forward)

    def __hash__(self):
        return hash(tuple(self.forward[x] for x in self.basis))

    def __repr__(self):
        body = ", ".join(f"{x}->{self.forward[x]}" for x in self.basis)
        return f"FreeAutomorphism({body})"


def _check_rank(phi, psi):
    if phi.basis != psi.basis:
        raise WordError("automorphisms act on different bases")


def compose_automorphisms(phi, psi):
    """Left-to-right composite: x -> psi(phi(x))."""
    _check_rank(phi, psi)
    fwd = {x: apply_morphism(psi.forward, phi.forward[x], phi.alphabet) for x in phi.basis}
    bwd = {x: apply_morphism(phi.backward, psi.backward[x], phi.alphabet) for x in phi.basis}
    return FreeAutomorphism(phi.basis, fwd, bwd, phi.alphabet, check=False)


def apply_automorphism(phi, w):
    return apply_morphism(phi.forward, w, phi.alphabet)


def verify_inverse_pair(phi):
    for x in phi.basis:
        one = ((x, 1),)
        if apply_morphism(phi.backward, phi.forward[x], phi.alphabet).letters != one:
            return False
        if apply_morphism(phi.forward, phi.backward[x], phi.alphabet).letters != one:
            return False
    return True


_LETTER = re.compile(r"^([A-Za-z]+)\[(\d+)(?:,(\d+))?\](?:\^(-?\d+))?$")


def parse_word(text, alphabet=ANY):
    """Parse whitespace-separated letters such as ``A[1,5] f[2]^3 sigma[4]^-1``.

    ``1`` or an empty string is the identity.
    """
    letters = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _LETTER.match(tok)
        if not m:
            raise WordError(f"cannot parse letter {tok!r}")
        name, i, j, p = m.groups()
        idx = (int(i),) if j is None else (int(i), int(j))
        gen = Gen(name, *idx)
        p = 1 if p is None else int(p)
        letters.extend([(gen, 1 if p > 0 else -1)] * abs(p))
    return Word(tuple(letters), alphabet)


def format_word(w):
    """Inverse of ``parse_word``; runs of a letter are collapsed to powers."""
    if not w.letters:
        return "1"
    out = []
    run_gen, run = None, 0
    for gen, e in w.letters:
        if gen == run_gen and (run > 0) == (e > 0):
            run += e
        else:
            if run_gen is not None:
                out.append(_fmt(run_gen, run))
            run_gen, run = gen, e
    out.append(_fmt(run_gen, run))
    return " ".join(out)


def _fmt(gen, p):
    return str(gen) if p == 1 else f"{gen}^{p}"


def random_word(rng, alphabet, length):
    """Reduced word of at most ``length`` letters drawn with ``rng``."""
    gens = list(alphabet.gens)
    return Word(tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(length)), alphabet)

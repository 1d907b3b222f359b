"""Presentations of pure surface braid groups and strand-forgetting maps.

Generators ``A[i,j]`` follow the index scheme for a genus-g surface with b
boundary components: ``1 <= i <= 2g+b+n-2``, ``2g+b <= j <= 2g+b+n-1``,
``i < j``.  Indices ``i <= 2g`` are handle loops, ``2g < i < 2g+b`` loop
around extra boundary components, and ``j`` (or ``i >= 2g+b``) names a
strand.  Closed surfaces use the b = 1 scheme.
"""

from functools import lru_cache

from .presentations import GroupPresentation, PresentationError, Relator
from .words import Alphabet, Gen, Word, WordError, commutator, conjugate, invert, product


def puncture(j, g, b):
    """Strand number of the index j."""
    return j - (2 * g + b) + 1


def puncture_index(s, g, b):
    return s + 2 * g + b - 1


def pure_generators(g, b, n, letter="A"):
    lo = 2 * g + b
    return [Gen(letter, i, j) for i in range(1, lo + n - 1)
            for j in range(lo, lo + n) if i < j]


def pure_alphabet(g, b, n):
    return Alphabet("pure", pure_generators(g, b, n), (("g", g), ("b", b), ("n", n)))


def braid_alphabet(g, n):
    """Pure letters of the b = 1 scheme together with the half twists sigma[i]."""
    gens = pure_generators(g, 1, n) + [Gen("sigma", i) for i in range(1, n)]
    return Alphabet("braid", gens, (("g", g), ("b", 1), ("n", n)))


class _Builder:
    def __init__(self, alphabet, letter):
        self.alphabet = alphabet
        self.letter = letter
        self.rels = []

    def A(self, i, j, e=1):
        return Word.gen(Gen(self.letter, i, j), self.alphabet, e)

    def add(self, family, params, lhs, rhs):
        self.rels.append(Relator(family, tuple(params), lhs * invert(rhs)))


def pure_relators(g, b, n, alphabet, letter="A"):
    """(PR1)-(PR4), (ER1), (ER2) instances over ``alphabet``."""
    B = _Builder(alphabet, letter)
    A = B.A
    lo = 2 * g + b
    J = range(lo, lo + n)
    gens = sorted((i, j) for i in range(1, lo + n - 1) for j in J if i < j)
    G = set(gens)

    def pr1(i, j, r, s):
        return (i < j < r < s or r + 1 < i < j < s
                or (i == r + 1 < j < s and ((r % 2 == 0 and r < 2 * g) or r > 2 * g)))

    def pr4(i, j, r, s):
        return (i + 1 < r < j < s
                or (i + 1 == r < j < s and ((r % 2 == 1 and r < 2 * g) or r > 2 * g)))

    for i, j in gens:
        for r, s in gens:
            if pr1(i, j, r, s):
                B.add("PR1", (i, j, r, s), conjugate(A(r, s), A(i, j)), A(r, s))
    for i, j in gens:
        for s in J:
            if j < s and (j, s) in G and (i, s) in G:
                B.add("PR2", (i, j, s), conjugate(A(j, s), A(i, j)),
                      A(i, s) * A(j, s) * A(i, s, -1))
    for i, j in gens:
        for s in J:
            if j < s and (i, s) in G and (j, s) in G:
                B.add("PR3", (i, j, s), conjugate(A(i, s), A(i, j)),
                      A(i, s) * A(j, s) * A(i, s) * A(j, s, -1) * A(i, s, -1))
    for i, j in gens:
        for r, s in gens:
            if pr4(i, j, r, s):
                u = A(i, s) * A(j, s) * A(i, s, -1) * A(j, s, -1)
                B.add("PR4", (i, j, r, s), conjugate(A(r, s), A(i, j)),
                      u * A(r, s) * invert(u))
    for r in range(1, 2 * g, 2):
        for j in J:
            for s in J:
                if j < s:
                    B.add("ER1", (r, j, s), conjugate(A(r, s), A(r + 1, j)),
                          A(r, s) * A(r + 1, s) * A(j, s, -1) * A(r + 1, s, -1))
    # even r up to and including 2g (see the decisions ledger)
    for r in range(2, 2 * g + 1, 2):
        for j in J:
            for s in J:
                if j < s:
                    B.add("ER2", (r, j, s), conjugate(A(r, s), A(r - 1, j)),
                          A(r - 1, s) * A(j, s) * A(r - 1, s, -1) * A(r, s) * A(j, s)
                          * A(r - 1, s) * A(j, s, -1) * A(r - 1, s, -1))
    return B.rels


def tr_sides(g, n, k, alphabet, letter="A"):
    """Left and right sides of the total relation for strand k (b = 1 scheme)."""
    B = _Builder(alphabet, letter)
    j = 2 * g + k
    lhs = product((commutator(B.A(2 * r, j, -1), B.A(2 * r - 1, j)) for r in range(g, 0, -1)),
                  alphabet)
    rhs = product([B.A(i, j) for i in range(2 * g + 1, j)]
                  + [B.A(j, s) for s in range(j + 1, 2 * g + n + 1)], alphabet)
    return lhs, rhs


def tr_relators(g, n, alphabet, letter="A"):
    out = []
    for k in range(1, n + 1):
        lhs, rhs = tr_sides(g, n, k, alphabet, letter)
        out.append(Relator("TR", (k,), lhs * invert(rhs)))
    return out


def _check(cond, msg):
    if not cond:
        raise PresentationError(msg)


@lru_cache(maxsize=None)
def pure_presentation(g, b, n):
    _check(g >= 1 and b >= 1 and n >= 1, f"pure presentation needs g>=1, b>=1, n>=1; got {(g, b, n)}")
    alph = pure_alphabet(g, b, n)
    return GroupPresentation("pure", alph, pure_relators(g, b, n, alph), {"g": g, "b": b, "n": n})


@lru_cache(maxsize=None)
def closed_pure_presentation(g, n):
    _check(g >= 2 and n >= 1, f"closed pure presentation needs g>=2, n>=1; got {(g, n)}")
    alph = pure_alphabet(g, 1, n)
    rels = pure_relators(g, 1, n, alph) + tr_relators(g, n, alph)
    return GroupPresentation("pure-closed", alph, rels, {"g": g, "b": 0, "n": n})


@lru_cache(maxsize=None)
def torus_pure_presentation(n):
    _check(n >= 1, "n must be >= 1")
    alph = pure_alphabet(1, 1, n)
    rels = pure_relators(1, 1, n, alph) + tr_relators(1, n, alph)
    return GroupPresentation("torus-pure", alph, rels, {"g": 1, "b": 0, "n": n})


def qr_relators(n, alphabet):
    B = _Builder(alphabet, "A")
    q1 = product([B.A(1, j) for j in range(3, n + 3)], alphabet)
    q2 = product([B.A(2, j) for j in range(3, n + 3)], alphabet)
    return [Relator("QR1", (), q1), Relator("QR2", (), q2)]


@lru_cache(maxsize=None)
def torus_quotient_presentation(n):
    """Pure torus braids modulo the two central generators."""
    base = torus_pure_presentation(n)
    rels = base.relators + tuple(qr_relators(n, base.alphabet))
    return GroupPresentation("torus-ptilde", base.alphabet, rels, {"g": 1, "b": 0, "n": n})


def torus_literal_index_sets(n):
    """PR1/PR4 index tuples under the torus-specific side clauses, where the
    PR1 clause carries no parity condition and ``r > 2`` stands alone, next to
    the g = 1 specialization of the general clauses used by the builders."""
    gens = sorted((i, j) for i in range(1, n + 2) for j in range(3, n + 3) if i < j)
    lit = {"PR1": set(), "PR4": set()}
    special = {"PR1": set(), "PR4": set()}
    for i, j in gens:
        for r, s in gens:
            base1 = i < j < r < s or r + 1 < i < j < s
            if base1 or i == r + 1 < j < s or r > 2:
                lit["PR1"].add((i, j, r, s))
            if base1 or (i == r + 1 < j < s and r > 2):
                special["PR1"].add((i, j, r, s))
            base4 = i + 1 < r < j < s
            if base4 or (i + 1 == r < j < s and (r % 2 == 1 or r > 2)):
                lit["PR4"].add((i, j, r, s))
            if base4 or (i + 1 == r < j < s and r > 2):
                special["PR4"].add((i, j, r, s))
    return lit, special


def torus_literal_differences(n):
    lit, special = torus_literal_index_sets(n)
    return {fam: {"only_literal": sorted(lit[fam] - special[fam]),
                  "only_specialization": sorted(special[fam] - lit[fam])}
            for fam in ("PR1", "PR4")}


def _relabel_strand(i, j, s, g, b):
    """Image indices of A[i,j] when strand s is deleted, or None."""
    lo = 2 * g + b
    if puncture(j, g, b) == s:
        return None
    if i >= lo and puncture(i, g, b) == s:
        return None
    if i >= lo and puncture(i, g, b) > s:
        i -= 1
    if puncture(j, g, b) > s:
        j -= 1
    return i, j


def forget_strand(w, s):
    """Delete strand s from a word over a pure alphabet."""
    alph = w.alphabet
    if alph.kind != "pure":
        raise WordError("forget_strand expects a word over a pure alphabet")
    g, b, n = alph.param("g"), alph.param("b"), alph.param("n")
    if not 1 <= s <= n:
        raise WordError(f"strand {s} out of range for n={n}")
    target = pure_alphabet(g, b, n - 1)
    out = []
    for gen, e in w.letters:
        ij = _relabel_strand(gen.idx[0], gen.idx[1], s, g, b)
        if ij is not None:
            out.append((Gen(gen.family, *ij), e))
    return Word(tuple(out), target)


def forget_strands(w, strands=None, count=1):
    """Forget a set of strands, highest first.  Without an explicit set the
    ``count`` highest-numbered strands are forgotten."""
    if strands is None:
        n = w.alphabet.param("n")
        strands = range(n - count + 1, n + 1)
    for s in sorted(set(strands), reverse=True):
        w = forget_strand(w, s)
    return w

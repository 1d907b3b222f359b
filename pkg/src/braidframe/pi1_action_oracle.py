"""Word-problem oracle for braids on a genus-g surface with one boundary
component, through their action on the free fundamental group of the
punctured surface.

Model.  The surface is a disk with 2g bands glued to its boundary, handle m
using bands 2m-1 and 2m whose feet interleave.  The basepoint and the n
punctures sit on the boundary arc of the disk; each puncture lies in a small
pocket.  A loop is a sequence of straight chords inside the disk, band
traversals and pocket turns; reading off the bands and pockets gives a word
in the free basis

    a[m] = band 2m-1,  b[m] = band 2m,  x[s] = pocket s.

The generator A[i,j] pushes strand s = j - 2g along a loop: through band i
when i <= 2g, around the pocket of strand i - 2g otherwise.  Its action is
computed by finger moves: each time a basis loop crosses the push path, the
loop gains a detour that follows the rest of the path and goes around the
moving puncture.  The image of the moving puncture's own loop then follows
from the fact that the push fixes the boundary word
``prod_m [a_m, b_m^-1] * x[1] ... x[n]``.

A table is accepted only if every relator of the pure presentation acts
trivially and sigma[i]^2 agrees with A[2g+i, 2g+i+1].
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache

from .surface_braid_groups import braid_alphabet, pure_presentation
from .words import Alphabet, FreeAutomorphism, Gen, Word, WordError


class OracleValidationError(RuntimeError):
    pass


# -- integer-coded words: basis letter k is +k, its inverse -k ---------------

def _red(w):
    out = []
    for l in w:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def _inv(w):
    return tuple(-l for l in reversed(w))


def _subst(table, w):
    out = []
    for l in w:
        out.extend(table[l] if l > 0 else _inv(table[-l]))
    return _red(out)


# -- geometry ----------------------------------------------------------------

class _Disk:
    """Boundary positions of band feet and pockets, clockwise from the
    basepoint at position 0.  Points sit on a convex curve so chords are
    straight segments and all arithmetic is exact."""

    def __init__(self, g, n):
        self.g, self.n = g, n
        slots = []
        for m in range(1, g + 1):
            slots += [(2 * m - 1, "-"), (2 * m, "-"), (2 * m - 1, "+"), (2 * m, "+")]
        slots += [("p", s) for s in range(1, n + 1)]
        self.center = {sl: 8 * (t + 1) for t, sl in enumerate(slots)}

    def foot(self, k, side, u):
        # the band reverses orientation between its two feet
        c = self.center[(k, side)]
        return c - 2 + 4 * (u if side == "-" else 1 - u)

    def pocket(self, s, off=0):
        return self.center[("p", s)] + off


def _pt(p):
    p = Fraction(p)
    return p, -p * p


def _cross(a, b, c, d):
    """Crossing of chord a->b with chord c->d.

    Returns (t, sign) with t the parameter along a->b and sign +1 when a->b
    crosses c->d from its left to its right, or None.
    """
    if len({a, b, c, d}) < 4:
        return None
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = _pt(a), _pt(b), _pt(c), _pt(d)
    dx1, dy1, dx2, dy2 = x2 - x1, y2 - y1, x4 - x3, y4 - y3
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    t = ((x3 - x1) * dy2 - (y3 - y1) * dx2) / den
    u = ((x3 - x1) * dy1 - (y3 - y1) * dx1) / den
    if 0 < t < 1 and 0 < u < 1:
        return t, (1 if dx2 * dy1 - dy2 * dx1 < 0 else -1)
    return None


def _seg_word(g, seg):
    if seg[0] == "band":
        return (seg[1] * seg[2],)
    if seg[0] == "pocket":
        return ((2 * g + seg[1]) * seg[2],)
    return ()


def _basis_loops(D):
    g, n = D.g, D.n
    loops = {}
    for k in range(1, 2 * g + 1):
        loops[k] = [("chord", 0, D.foot(k, "-", Fraction(1, 2))), ("band", k, 1),
                    ("chord", D.foot(k, "+", Fraction(1, 2)), 0)]
    for s in range(1, n + 1):
        loops[2 * g + s] = [("chord", 0, D.pocket(s)), ("pocket", s, 1),
                            ("chord", D.pocket(s), 0)]
    return loops


def _boundary_word(g, n):
    w = []
    for m in range(1, g + 1):
        w += [2 * m - 1, -2 * m, -(2 * m - 1), 2 * m]
    return tuple(w + [2 * g + s for s in range(1, n + 1)])


def _push_path(D, i, s, reverse=False):
    g = D.g
    u = Fraction(1, 4)
    if i <= 2 * g:
        path = [("chord", D.pocket(s), D.foot(i, "-", u)), ("band", i, 1),
                ("chord", D.foot(i, "+", u), D.pocket(s))]
    else:
        r = i - 2 * g
        path = [("chord", D.pocket(s), D.pocket(r, -1)), ("pocket", r, 1),
                ("chord", D.pocket(r, 1), D.pocket(s))]
    if reverse:
        path = [(seg[0], seg[2], seg[1]) if seg[0] == "chord" else (seg[0], seg[1], -seg[2])
                for seg in reversed(path)]
    return path


def _point_push(D, path, s):
    """Integer-coded image table of pushing strand s along ``path``."""
    g, n = D.g, D.n
    xs = 2 * g + s
    tails = []
    for j in range(len(path)):
        tails.append(tuple(l for seg in path[j + 1:] for l in _seg_word(g, seg)))
    table = {}
    for gen, loop in _basis_loops(D).items():
        if gen == xs:
            continue
        out = []
        for seg in loop:
            if seg[0] != "chord":
                out.extend(_seg_word(g, seg))
                continue
            hits = []
            for j, ps in enumerate(path):
                if ps[0] == "chord":
                    r = _cross(seg[1], seg[2], ps[1], ps[2])
                    if r:
                        hits.append((r[0], j, r[1]))
            for _, j, sign in sorted(hits):
                out.extend(tails[j] + (xs * sign,) + _inv(tails[j]))
        table[gen] = _red(out)
    bw = _boundary_word(g, n)
    k = bw.index(xs)
    pre = _subst(table, bw[:k])
    post = _subst(table, bw[k + 1:])
    table[xs] = _red(_inv(pre) + bw + _inv(post))
    return table


def _sigma_tables(g, n, i):
    rank = 2 * g + n
    xi, xj = 2 * g + i, 2 * g + i + 1
    fwd = {k: (k,) for k in range(1, rank + 1)}
    bwd = dict(fwd)
    fwd[xi], fwd[xj] = (xi, xj, -xi), (xi,)
    bwd[xi], bwd[xj] = (xj,), (-xj, xi, xj)
    return fwd, bwd


# -- public API ----------------------------------------------------------------

def oracle_basis(g, n):
    basis = []
    for m in range(1, g + 1):
        basis += [Gen("a", m), Gen("b", m)]
    return basis + [Gen("x", s) for s in range(1, n + 1)]


def oracle_alphabet(g, n):
    return Alphabet("free-pi1", oracle_basis(g, n), (("g", g), ("n", n)))


class ActionTable:
    """Validated generator -> automorphism table for braids on the surface of
    genus g with one boundary component and n strands."""

    def __init__(self, g, n, codes):
        self.g, self.n = g, n
        self.rank = 2 * g + n
        self.basis = tuple(oracle_basis(g, n))
        self.alphabet = oracle_alphabet(g, n)
        self.codes = codes  # Gen -> (forward, backward), integer coded
        self.braid_alphabet = braid_alphabet(g, n)

    def _word(self, code):
        return Word(tuple((self.basis[abs(l) - 1], 1 if l > 0 else -1) for l in code),
                    self.alphabet, _trusted=True)

    def automorphism(self, gen):
        fwd, bwd = self.codes[gen]
        return FreeAutomorphism(
            self.basis,
            {x: self._word(fwd[k + 1]) for k, x in enumerate(self.basis)},
            {x: self._word(bwd[k + 1]) for k, x in enumerate(self.basis)},
            self.alphabet)

    def _letters(self, w):
        if w.alphabet.kind in ("pure", "braid") and w.alphabet.params:
            p = dict(w.alphabet.params)
            if (p.get("g"), p.get("b", 1), p.get("n")) != (self.g, 1, self.n):
                raise WordError(f"word over {w.alphabet!r} does not match oracle (g,n)=({self.g},{self.n})")
        for gen, e in w.letters:
            if gen not in self.codes:
                raise WordError(f"letter {gen} is not supported by the oracle at (g,n)=({self.g},{self.n})")
            yield gen, e

    def act(self, w):
        """Integer-coded images of the basis under the braid word (left to right)."""
        T = {k: (k,) for k in range(1, self.rank + 1)}
        for gen, e in self._letters(w):
            S = self.codes[gen][0 if e > 0 else 1]
            T = {k: _subst(S, T[k]) for k in T}
        return T

    def braid_automorphism(self, w):
        fwd = self.act(w)
        bwd = self.act(w.__invert__())
        return FreeAutomorphism(
            self.basis,
            {x: self._word(fwd[k + 1]) for k, x in enumerate(self.basis)},
            {x: self._word(bwd[k + 1]) for k, x in enumerate(self.basis)},
            self.alphabet, check=False)

    def is_trivial(self, w):
        T = self.act(w)
        return all(T[k] == (k,) for k in T)

    def are_equal(self, u, v):
        return self.is_trivial(u * v.__invert__())

    def audit(self, relators, jobs=1):
        """(relator, passed) pairs in input order."""
        relators = list(relators)
        if jobs > 1 and len(relators) > 50:
            payload = [(self.g, self.n, r.word.letters) for r in relators]
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                ok = list(ex.map(_trivial_worker, payload, chunksize=32))
        else:
            ok = [self.is_trivial(r.word) for r in relators]
        return list(zip(relators, ok))


def _trivial_worker(args):
    g, n, letters = args
    t = build_action_table(g, n)
    return t.is_trivial(Word(letters, t.braid_alphabet, _trusted=True))


def _raw_codes(g, n):
    D = _Disk(g, n)
    codes = {}
    for s in range(1, n + 1):
        j = 2 * g + s
        for i in range(1, j):
            fwd = _point_push(D, _push_path(D, i, s), s)
            bwd = _point_push(D, _push_path(D, i, s, reverse=True), s)
            codes[Gen("A", i, j)] = (fwd, bwd)
    for i in range(1, n):
        codes[Gen("sigma", i)] = _sigma_tables(g, n, i)
    return codes


def sigma_relators(g, n):
    """Artin relations among the sigma letters, as words."""
    alph = braid_alphabet(g, n)

    def s(i, e=1):
        return Word.gen(Gen("sigma", i), alph, e)
    out = []
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"far({i},{j})", s(i) * s(j) * s(i, -1) * s(j, -1)))
        if i + 1 < n:
            out.append((f"braid({i})", s(i) * s(i + 1) * s(i) * s(i + 1, -1) * s(i, -1) * s(i + 1, -1)))
    return out


@lru_cache(maxsize=None)
def build_action_table(g, n):
    """Build and validate the action table; raises OracleValidationError on
    the first failing check."""
    if g < 1 or n < 1:
        raise ValueError(f"oracle needs g >= 1 and n >= 1, got {(g, n)}")
    codes = _raw_codes(g, n)
    rank = 2 * g + n
    for gen, (fwd, bwd) in codes.items():
        for k in range(1, rank + 1):
            if _subst(bwd, fwd[k]) != (k,) or _subst(fwd, bwd[k]) != (k,):
                raise OracleValidationError(f"{gen}: forward and backward tables are not inverse")
    table = ActionTable(g, n, codes)
    for rel in pure_presentation(g, 1, n).relators:
        if not table.is_trivial(rel.word.over(table.braid_alphabet)):
            raise OracleValidationError(f"relator {rel.label} = {rel.word} does not act trivially")
    for name, w in sigma_relators(g, n):
        if not table.is_trivial(w):
            raise OracleValidationError(f"sigma relation {name} does not act trivially")
    for i in range(1, n):
        sq = Word.gen(Gen("sigma", i), table.braid_alphabet, 2)
        a = Word.gen(Gen("A", 2 * g + i, 2 * g + i + 1), table.braid_alphabet)
        if not table.are_equal(sq, a):
            raise OracleValidationError(f"sigma[{i}]^2 differs from {a}")
    return table


def braid_automorphism(table, w):
    return table.braid_automorphism(w)


def is_trivial(table, w):
    return table.is_trivial(w)


def are_equal(table, u, v):
    return table.is_trivial(u * v.__invert__())


def oracle_report(g, n, jobs=1):
    """Relator audit of the pure presentation at (g, n): per-family counts
    and the first failure (None when all pass)."""
    codes = _raw_codes(g, n)
    table = ActionTable(g, n, codes)
    rels = [r._replace(word=r.word.over(table.braid_alphabet))
            for r in pure_presentation(g, 1, n).relators]
    fams = {}
    first = None
    for rel, ok in table.audit(rels, jobs):
        c = fams.setdefault(rel.family, {"checked": 0, "passed": 0})
        c["checked"] += 1
        c["passed"] += ok
        if not ok and first is None:
            first = rel
    return fams, first

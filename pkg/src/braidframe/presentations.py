"""Finitely presented groups, abelianization and integer homology."""

import json
from typing import NamedTuple

from .words import Word, format_word, parse_word


class PresentationError(ValueError):
    pass


class Relator(NamedTuple):
    family: str
    params: tuple
    word: Word

    @property
    def label(self):
        return f"{self.family}({','.join(map(str, self.params))})"


class GroupPresentation:
    """Generators plus relator instances for concrete parameters.

    Relators are stored as ``LHS * RHS^-1`` of the defining equations, in a
    fixed enumeration order (family by family, index tuples lexicographic).
    """

    def __init__(self, name, alphabet, relators, params):
        self.name = name
        self.alphabet = alphabet
        self.generators = alphabet.gens
        self.relators = tuple(relators)
        self.params = dict(params)

    def __repr__(self):
        ps = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"<{self.name}({ps}): {len(self.generators)} gens, {len(self.relators)} relators>"

    def families(self):
        out = {}
        for r in self.relators:
            out.setdefault(r.family, []).append(r)
        return out

    def relator_instances(self):
        return [r.word for r in self.relators]

    def to_json(self):
        return {
            "generators": [str(x) for x in self.generators],
            "relators": [format_word(r.word) for r in self.relators],
            "params": self.params,
        }


def relator_instances(P):
    return P.relator_instances()


def presentation_from_json(doc, name="imported"):
    """Rebuild a presentation from ``GroupPresentation.to_json`` output."""
    from .words import Alphabet
    gens = [parse_word(s).letters[0][0] for s in doc["generators"]]
    alph = Alphabet(name, gens, tuple(sorted(doc["params"].items())))
    rels = [Relator("R", (k + 1,), parse_word(s, alph)) for k, s in enumerate(doc["relators"])]
    return GroupPresentation(name, alph, rels, doc["params"])


def dumps_presentation(P):
    return json.dumps(P.to_json(), sort_keys=True)


def exponent_vector(w, generators):
    col = {g: k for k, g in enumerate(generators)}
    v = [0] * len(generators)
    for g, e in w.letters:
        v[col[g]] += e
    return v


def abelianization_matrix(P):
    """Rows are relators, columns are generators, entries are exponent sums."""
    return [exponent_vector(r.word, P.generators) for r in P.relators]


def smith_normal_form(M):
    """Invariant factors and rank of an integer matrix.

    Returns ``(factors, rank)`` where ``factors`` lists the nonzero diagonal
    entries d1 | d2 | ... of the Smith form (ones included).
    """
    A = [list(map(int, row)) for row in M if any(row)]
    if not A:
        return (), 0
    m, n = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the remaining block becomes the pivot
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        ri, rt = A[i], A[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                # pivot must also divide the rest of the block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rt, rb = A[t], A[bad]
                for j in range(t, n):
                    rt[j] += rb[j]
                continue
            # a remainder is now smaller than the pivot: move it into place
            best = None
            for i in range(t, m):
                a = A[i][t]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, t)
            for j in range(t, n):
                a = A[t][j]
                if a and abs(a) < best[0]:
                    best = (abs(a), t, j)
            _, i, j = best
            A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        # drop rows that became zero to keep the block small
        A = A[:t + 1] + [row for row in A[t + 1:] if any(row[t + 1:])]
        m = len(A)
        t += 1
    return tuple(diag), len(diag)


class H1Invariants(NamedTuple):
    free_rank: int
    torsion: tuple

    def __str__(self):
        parts = [f"Z^{self.free_rank}" if self.free_rank > 1 else "Z"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def h1_invariants(P):
    factors, rank = smith_normal_form(abelianization_matrix(P))
    return H1Invariants(len(P.generators) - rank, tuple(d for d in factors if d > 1))


def lattice_basis(rows):
    """Row-echelon integer basis of the lattice spanned by ``rows``."""
    A = [list(r) for r in rows if any(r)]
    basis = []
    if not A:
        return basis
    n = len(A[0])
    for col in range(n):
        live = [r for r in A if r[col]]
        if not live:
            continue
        rest = [r for r in A if not r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r = [a - q * b for a, b in zip(r, p)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        basis.append(live[0])
        A = [r for r in rest if any(r)]
    return basis


def in_lattice(basis, v):
    v = list(v)
    for row in basis:
        col = next(k for k, a in enumerate(row) if a)
        if v[col] % row[col]:
            return False
        q = v[col] // row[col]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)

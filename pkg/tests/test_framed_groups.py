import random

import pytest
from hypothesis import given, settings, strategies as st

from braidframe.framed_groups import (
    FramedFullElement, FramedPureElement, Permutation, centrality_relators, fb_identity,
    fb_invert, fb_multiply, fb_tilde_closed_presentation, forget_framing, fp_boundary_presentation,
    fp_closed_presentation, fp_identity, fp_invert, fp_multiply, permutation_of,
    tau_telescope, torus_fp_presentation, torus_fp_tilde_presentation,
)
from braidframe.presentations import exponent_vector, h1_invariants
from braidframe.surface_braid_groups import (
    braid_alphabet, closed_pure_presentation, pure_alphabet, tr_relators,
)
from braidframe.words import Gen, Word, commutator, parse_word, product, random_word

PA = pure_alphabet(2, 1, 2)
BA = braid_alphabet(1, 3)


def test_permutation_basics():
    s = Permutation.transposition(3, 1, 2)
    assert str(s) == "(1 2)"
    assert (s * s).is_identity()
    assert permutation_of(parse_word("sigma[1]", BA)) == s
    assert permutation_of(parse_word("A[3,4] A[1,5]", BA)).is_identity()
    c = permutation_of(parse_word("sigma[1] sigma[2]", BA))
    assert c * c.inverse() == Permutation.identity(3)


def test_fp_examples():
    e = fp_identity(2, PA)
    u = FramedPureElement((1, 0), parse_word("A[1,5]", PA))
    v = FramedPureElement((0, 2), parse_word("A[2,5]", PA))
    assert fp_multiply(e, v) == v
    assert fp_multiply(u, v) == FramedPureElement((1, 2), parse_word("A[1,5] A[2,5]", PA))
    assert fp_multiply(u, fp_invert(u)) == e
    with pytest.raises(ValueError):
        FramedPureElement((1,), parse_word("A[1,5]", PA))


def test_fb_convention_example():
    u = FramedFullElement((1, 0, 0), parse_word("sigma[1]", BA))
    v = fb_identity(3, BA)
    assert fb_multiply(u, v) == u and fb_multiply(v, u) == u
    uu = fb_multiply(u, u)
    assert uu.framing == (1, 1, 0)
    assert uu.permutation.is_identity()
    # framing of the strand starting at k adds the framing found at its new position
    w = FramedFullElement((0, 5, 0), Word((), BA))
    assert fb_multiply(u, w).framing == (6, 0, 0)
    assert fb_multiply(w, u).framing == (1, 5, 0)


def test_fb_zero_framing_is_braid_multiplication():
    rng = random.Random(1)
    for _ in range(50):
        a, b = random_word(rng, BA, 6), random_word(rng, BA, 6)
        r = fb_multiply(FramedFullElement((0, 0, 0), a), FramedFullElement((0, 0, 0), b))
        assert r.braid == a * b and r.framing == (0, 0, 0)


def _fb(rng):
    return FramedFullElement([rng.randint(-4, 4) for _ in range(3)], random_word(rng, BA, rng.randint(0, 8)))


def test_fb_associativity_random_triples():
    rng = random.Random(2)
    for _ in range(200):
        u, v, w = _fb(rng), _fb(rng), _fb(rng)
        assert fb_multiply(fb_multiply(u, v), w) == fb_multiply(u, fb_multiply(v, w))
        assert fb_multiply(u, fb_invert(u)) == fb_identity(3, BA)


@settings(max_examples=200)
@given(st.integers(0, 2 ** 32))
def test_fb_permutation_cache(seed):
    rng = random.Random(seed)
    r = fb_multiply(_fb(rng), fb_invert(_fb(rng)))
    assert r.permutation == permutation_of(r.braid, 3)


@settings(max_examples=200)
@given(st.integers(0, 2 ** 32))
def test_fp_framing_part_commutes_and_section_splits(seed):
    rng = random.Random(seed)
    u = FramedPureElement([rng.randint(-5, 5) for _ in range(2)], random_word(rng, PA, 6))
    v = FramedPureElement([rng.randint(-5, 5) for _ in range(2)], random_word(rng, PA, 6))
    assert fp_multiply(u, v).framing == fp_multiply(v, u).framing
    section = FramedPureElement((0, 0), u.word)
    assert forget_framing(section) == u.word


def test_fp_closed_small_case():
    P = fp_closed_presentation(2, 1)
    assert {f: len(v) for f, v in P.families().items()} == {"C": 4, "FTR": 1}
    (ftr,) = [r for r in P.relators if r.family == "FTR"]
    B = lambda i: Word.gen(Gen("B", i, 5), P.alphabet)
    f1 = Word.gen(Gen("f", 1), P.alphabet)
    assert ftr.word == commutator(B(4) ** -1, B(3)) * commutator(B(2) ** -1, B(1)) * f1 ** -2
    assert h1_invariants(P) == (4, (2,))


@pytest.mark.parametrize("g,n", [(2, 1), (2, 2), (3, 2)])
def test_centrality_count(g, n):
    P = fp_closed_presentation(g, n)
    nb = sum(1 for x in P.generators if x.family == "B")
    assert len(P.families()["C"]) == n * (nb + n - 1)


@pytest.mark.parametrize("g,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_ftr_kills_to_tr(g, n):
    P = fp_closed_presentation(g, n)
    tr = tr_relators(g, n, pure_alphabet(g, 1, n))
    ftr = [r for r in P.relators if r.family == "FTR"]
    assert [forget_framing(r.word) for r in ftr] == [r.word for r in tr]


def test_forget_framing_examples():
    alph = fp_closed_presentation(2, 2).alphabet
    w = parse_word("B[1,5] f[1]^3 B[2,5]", alph)
    assert forget_framing(w) == parse_word("A[1,5] A[2,5]", pure_alphabet(2, 1, 2))
    x = FramedFullElement((2, 0, 1), parse_word("sigma[2]", BA))
    assert forget_framing(x) == x.braid


def test_forget_framing_maps_relators_to_pure_relators():
    P = fp_closed_presentation(2, 2)
    Q = closed_pure_presentation(2, 2)
    target = {r.word.letters for r in Q.relators}
    for r in P.relators:
        img = forget_framing(r.word)
        assert img.is_identity() or img.letters in target, r.label


def test_torus_framed_groups():
    assert h1_invariants(torus_fp_presentation(1)) == (3, ())
    assert h1_invariants(torus_fp_presentation(2)) == (6, ())
    assert h1_invariants(torus_fp_tilde_presentation(1)) == (1, ())


def test_boundary_framed_is_direct_product():
    P = fp_boundary_presentation(2, 1, 2)
    assert "FTR" not in P.families()
    assert h1_invariants(P) == (10, ())


def test_fb_tilde_relation_ten_one_strand():
    P = fb_tilde_closed_presentation(2, 1)
    assert [r.family for r in P.relators] == ["10"]
    a = lambda i: Word.gen(Gen("cA", i), P.alphabet)
    b = lambda i: Word.gen(Gen("cB", i), P.alphabet)
    F = Word.gen(Gen("F", 1), P.alphabet)
    assert P.relators[0].word == commutator(a(1) ** -1, b(1)) * commutator(a(2) ** -1, b(2)) * F ** -2


def test_fb_tilde_relation_eight_abelianizes_to_two_tau():
    P = fb_tilde_closed_presentation(2, 2)
    gens = list(P.generators)
    for r in P.relators:
        if r.family == "8":
            row = exponent_vector(r.word, gens)
            expect = [0] * len(gens)
            expect[gens.index(Gen("tau", 1))] = -2
            assert row == expect


def test_fb_tilde_homology():
    assert h1_invariants(fb_tilde_closed_presentation(2, 2)) == (4, (2, 2))
    assert h1_invariants(fb_tilde_closed_presentation(2, 1)) == (4, (2,))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_tau_telescope_is_identity_permutation(n):
    alph = fb_tilde_closed_presentation(2, n).alphabet
    assert permutation_of(tau_telescope(n, alph), n).is_identity()

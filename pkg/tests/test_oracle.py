import random

import pytest

from braidframe.pi1_action_oracle import (
    ActionTable, build_action_table, oracle_basis, oracle_report, sigma_relators,
)
from braidframe.surface_braid_groups import pure_presentation
from braidframe.words import Gen, Word, WordError, commutator, format_word, parse_word, random_word

# images of the basis, frozen from the validated tables
IMAGES_21 = {
    "A[1,5]": {"a[1]": "a[1] x[1] a[1] x[1]^-1 a[1]^-1",
               "b[1]": "a[1] x[1] a[1]^-1 b[1] x[1] a[1] x[1]^-1 a[1]^-1",
               "a[2]": "a[1] x[1] a[1]^-1 x[1]^-1 a[2] x[1] a[1] x[1]^-1 a[1]^-1",
               "b[2]": "a[1] x[1] a[1]^-1 x[1]^-1 b[2] x[1] a[1] x[1]^-1 a[1]^-1",
               "x[1]": "a[1] x[1] a[1]^-1"},
    "A[4,5]": {"a[1]": "a[1]", "b[1]": "b[1]", "a[2]": "a[2] b[2] x[1]^-1 b[2]^-1",
               "b[2]": "b[2] x[1] b[2] x[1]^-1 b[2]^-1", "x[1]": "b[2] x[1] b[2]^-1"},
}


def _images(t, name):
    phi = t.automorphism(parse_word(name).letters[0][0])
    return {str(k): format_word(v) for k, v in phi.forward.items()}


def test_frozen_images():
    t = build_action_table(2, 1)
    for name, img in IMAGES_21.items():
        assert _images(t, name) == img


def test_artin_images():
    t = build_action_table(1, 2)
    assert _images(t, "sigma[1]") == {"a[1]": "a[1]", "b[1]": "b[1]",
                                      "x[1]": "x[1] x[2] x[1]^-1", "x[2]": "x[1]"}
    # puncture pair generator is the square of the half twist, composed by hand
    assert _images(t, "A[3,4]") == {"a[1]": "a[1]", "b[1]": "b[1]",
                                    "x[1]": "x[1] x[2] x[1] x[2]^-1 x[1]^-1",
                                    "x[2]": "x[1] x[2] x[1]^-1"}


def test_puncture_generators_fix_handle_letters():
    t = build_action_table(2, 3)
    for gen in t.codes:
        if gen.family == "A" and gen.idx[0] > 4:
            img = _images(t, str(gen))
            for m in (1, 2):
                assert img[f"a[{m}]"] == f"a[{m}]" and img[f"b[{m}]"] == f"b[{m}]"


def test_basis_order():
    assert [str(x) for x in oracle_basis(2, 2)] == ["a[1]", "b[1]", "a[2]", "b[2]", "x[1]", "x[2]"]


def test_empty_word_and_inverses():
    t = build_action_table(2, 2)
    assert t.is_trivial(Word((), t.braid_alphabet))
    rng = random.Random(3)
    for _ in range(100):
        w = random_word(rng, t.braid_alphabet, 5)
        assert t.is_trivial(w * ~w)
        phi = t.braid_automorphism(w)
        assert (phi * phi.inverse()).is_identity()


def test_pr2_instances_at_2_3():
    t = build_action_table(2, 3)
    for r in pure_presentation(2, 1, 3).relators:
        if r.family == "PR2":
            assert t.is_trivial(r.word.over(t.braid_alphabet))


def test_pr1_commuting_pair():
    t = build_action_table(2, 3)
    u = parse_word("A[1,5]", t.braid_alphabet)
    v = parse_word("A[6,7]", t.braid_alphabet)
    assert t.are_equal(u * v, v * u)
    assert t.is_trivial(parse_word("A[1,5] A[1,5]^-1", t.braid_alphabet))


def test_non_relation_witness():
    t = build_action_table(2, 1)
    w = commutator(parse_word("A[1,5]", t.braid_alphabet), parse_word("A[2,5]", t.braid_alphabet))
    assert not t.is_trivial(w)


def test_distinguishes_curated_pairs():
    t = build_action_table(1, 3)
    gens = list(t.braid_alphabet.gens)
    words = [Word.gen(x, t.braid_alphabet) for x in gens]
    words.append(parse_word("sigma[1]^-1", t.braid_alphabet))
    pairs = [(u, v) for k, u in enumerate(words) for v in words[k + 1:]]
    assert len(pairs) >= 20
    for u, v in pairs:
        assert not t.are_equal(u, v), (u, v)


def test_sigma_relations_and_square():
    for g, n in [(1, 3), (2, 4)]:
        t = build_action_table(g, n)
        for name, w in sigma_relators(g, n):
            assert t.is_trivial(w), name
        for i in range(1, n):
            sq = Word.gen(Gen("sigma", i), t.braid_alphabet, 2)
            assert t.are_equal(sq, Word.gen(Gen("A", 2 * g + i, 2 * g + i + 1), t.braid_alphabet))


def test_report_counts():
    fams, first = oracle_report(2, 2)
    assert first is None
    assert fams == {f: {"checked": c, "passed": c} for f, c in
                    {"PR1": 4, "PR2": 4, "PR3": 4, "PR4": 4, "ER1": 2, "ER2": 2}.items()}


def test_parallel_audit_matches_serial():
    t = build_action_table(2, 3)
    rels = [r._replace(word=r.word.over(t.braid_alphabet)) for r in pure_presentation(2, 1, 3).relators]
    assert [ok for _, ok in t.audit(rels, jobs=2)] == [ok for _, ok in t.audit(rels)]


def test_mismatched_parameters_rejected():
    t = build_action_table(2, 2)
    w = parse_word("A[1,5]", pure_presentation(2, 1, 3).alphabet)
    with pytest.raises(WordError):
        t.is_trivial(w)
    with pytest.raises(ValueError):
        build_action_table(0, 2)

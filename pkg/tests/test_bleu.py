"""BLEU against a brute-force n-gram oracle and hand-computed cases."""

import math
import random
import unicodedata

import pytest

from sankofa.quality.bleu import BleuConfig, EmptySegmentList, Smoothing, bleu, tokenize


# ---------------------------------------------------------------- oracle
# Deliberately naive: enumerates every n-gram position pair instead of
# using hash counting, and never shares code with the implementation.


def oracle_tokenize(text):
    return unicodedata.normalize("NFC", text).lower().split()


def oracle_clipped_matches(cand_tokens, ref_token_lists, n):
    cand_grams = [tuple(cand_tokens[i : i + n]) for i in range(len(cand_tokens) - n + 1)]
    matched = 0
    for gram in set(cand_grams):
        cand_count = sum(1 for g in cand_grams if g == gram)
        best_ref = 0
        for ref in ref_token_lists:
            ref_count = 0
            for i in range(len(ref) - n + 1):
                if tuple(ref[i : i + n]) == gram:
                    ref_count += 1
            best_ref = max(best_ref, ref_count)
        matched += min(cand_count, best_ref)
    return matched, len(cand_grams)


def oracle_bleu(candidates, references, max_n=4, add_one=True):
    matches = [0] * max_n
    totals = [0] * max_n
    cand_len = 0
    ref_len = 0
    for cand_text, ref_texts in zip(candidates, references):
        cand = oracle_tokenize(cand_text)
        refs = [oracle_tokenize(r) for r in ref_texts]
        cand_len += len(cand)
        best = None
        for r in refs:
            d = abs(len(r) - len(cand))
            if best is None or d < best[0] or (d == best[0] and len(r) < best[1]):
                best = (d, len(r))
        ref_len += best[1]
        for n in range(1, max_n + 1):
            m, t = oracle_clipped_matches(cand, refs, n)
            matches[n - 1] += m
            totals[n - 1] += t
    if cand_len == 0:
        return 0.0
    log_sum = 0.0
    for n in range(max_n):
        if totals[n] == 0:
            p = 1.0
        elif matches[n] == 0:
            if not add_one:
                return 0.0
            p = 1.0 / (totals[n] + 1)
        else:
            p = matches[n] / totals[n]
        log_sum += math.log(p)
    bp = min(1.0, math.exp(1.0 - ref_len / cand_len))
    return bp * math.exp(log_sum / max_n)


# ----------------------------------------------------------------- tests


def test_perfect_match_is_exactly_one():
    result = bleu(["the cat sat"], [["the cat sat"]])
    assert result.score == 1.0


def test_empty_candidate_scores_zero():
    result = bleu([""], [["some reference text"]])
    assert result.score == 0.0


def test_hand_computed_smoothed_case():
    # candidate "a b c d" vs reference "a b c e": p1=3/4, p2=2/3,
    # p3=1/2 (abc matches), p4 smoothed to 1/(1+1); BP=1.
    result = bleu(["a b c d"], [["a b c e"]], BleuConfig(max_n=4, smoothing=Smoothing.ADD_ONE))
    expected = (0.75 * (2 / 3) * 0.5 * 0.5) ** 0.25
    assert abs(result.score - expected) < 1e-12
    assert result.score == pytest.approx(oracle_bleu(["a b c d"], [["a b c e"]]), abs=1e-12)
    assert result.brevity_penalty == 1.0


def test_smoothing_none_zero_ngram_flag():
    result = bleu(["a b c d"], [["a b c e"]], BleuConfig(smoothing=Smoothing.NONE))
    assert result.score == 0.0
    assert result.zero_ngram


def test_empty_corpus_rejected():
    with pytest.raises(EmptySegmentList):
        bleu([], [])


def test_mismatched_lengths_rejected():
    with pytest.raises(ValueError):
        bleu(["a"], [["a"], ["b"]])


def test_tokenizer_nfc_lowercase():
    # e + combining acute normalizes to the precomposed form
    assert tokenize("Café KUBWA") == ["café", "kubwa"]


def test_brevity_penalty_shortening_never_helps():
    reference = [["one two three four five six"]]
    longer = bleu(["one two three four five"], reference).score
    shorter = bleu(["one two three four"], reference).score
    assert shorter <= longer


def test_multiple_references_take_best_match():
    refs = [["the cat sat", "a dog ran"]]
    assert bleu(["the cat sat"], refs).score == 1.0
    assert bleu(["a dog ran"], refs).score == 1.0


def test_fuzzed_corpora_match_oracle():
    rng = random.Random(991)
    vocab = ["a", "b", "c", "d", "mto", "shule", "wito", "አማርኛ"]
    for _ in range(200):
        n_segments = rng.randint(1, 5)
        candidates = []
        references = []
        for _ in range(n_segments):
            candidates.append(" ".join(rng.choices(vocab, k=rng.randint(0, 10))))
            refs = []
            for _ in range(rng.randint(1, 3)):
                refs.append(" ".join(rng.choices(vocab, k=rng.randint(1, 10))))
            references.append(refs)
        got = bleu(candidates, references).score
        want = oracle_bleu(candidates, references)
        assert abs(got - want) < 1e-9, (candidates, references)
        assert 0.0 <= got <= 1.0


def test_identical_corpora_always_exactly_one():
    rng = random.Random(17)
    vocab = ["neno", "moja", "mbili", "tatu", "nne"]
    for _ in range(50):
        segments = [
            " ".join(rng.choices(vocab, k=rng.randint(1, 8))) for _ in range(rng.randint(1, 4))
        ]
        assert bleu(segments, [[s] for s in segments]).score == 1.0


def test_mutated_candidate_scores_below_one():
    rng = random.Random(23)
    vocab = ["neno", "moja", "mbili", "tatu", "nne"]
    for _ in range(50):
        segment = " ".join(rng.choices(vocab, k=rng.randint(2, 8)))
        tokens = segment.split()
        tokens[rng.randrange(len(tokens))] = "zzz"  # token outside the vocabulary
        assert bleu([" ".join(tokens)], [[segment]]).score < 1.0

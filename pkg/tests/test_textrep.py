import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from culturesim.textrep import SparseVector, fit_vectorizer, tokenize, transform


class TestTokenize:
    def test_basic_sentence(self):
        assert tokenize("Good morning captain Wang, how are you doing?") == [
            "good", "morning", "captain", "wang", "how", "are", "you", "doing",
        ]

    def test_empty(self):
        assert tokenize("") == []

    def test_apostrophe_retained(self):
        assert tokenize("It's an honor!") == ["it's", "an", "honor"]

    def test_punctuation_runs_split(self):
        assert tokenize("well... yes -- ok?!") == ["well", "yes", "ok"]

    def test_digits_kept(self):
        assert tokenize("at 0800 sharp") == ["at", "0800", "sharp"]


class TestFitVectorizer:
    def test_hand_computed_idf(self):
        model = fit_vectorizer([tokenize("hello world"), tokenize("hello there")])
        # N=2; df(hello)=2 -> ln(3/3)+1; df(world)=1 -> ln(3/2)+1
        assert model.fitted_on == 2
        assert model.idf[model.vocabulary["hello"]] == pytest.approx(1.0, abs=1e-12)
        assert model.idf[model.vocabulary["world"]] == pytest.approx(
            math.log(3 / 2) + 1, abs=1e-12
        )
        assert model.idf[model.vocabulary["world"]] == pytest.approx(1.4055, abs=1e-4)

    def test_single_document_all_idf_one(self):
        model = fit_vectorizer([tokenize("a b c")])
        assert all(w == pytest.approx(1.0, abs=1e-12) for w in model.idf)

    def test_token_in_every_document_idf_exactly_one(self):
        docs = [tokenize(f"common word{i}") for i in range(10)]
        model = fit_vectorizer(docs)
        assert model.idf[model.vocabulary["common"]] == pytest.approx(
            math.log(11 / 11) + 1, abs=0
        )

    def test_vocabulary_contiguous(self):
        model = fit_vectorizer([tokenize("b a c a")])
        assert sorted(model.vocabulary.values()) == [0, 1, 2]

    def test_all_empty_documents_error(self):
        with pytest.raises(ValueError):
            fit_vectorizer([[], []])


class TestTransform:
    def test_hand_computed_weights(self):
        model = fit_vectorizer([tokenize("hello world"), tokenize("hello there")])
        vec = transform(model, "hello world")
        raw_hello, raw_world = 1.0, math.log(3 / 2) + 1
        norm = math.sqrt(raw_hello**2 + raw_world**2)
        weights = dict(vec.entries)
        assert weights[model.vocabulary["hello"]] == pytest.approx(raw_hello / norm, abs=1e-12)
        assert weights[model.vocabulary["world"]] == pytest.approx(raw_world / norm, abs=1e-12)
        assert weights[model.vocabulary["hello"]] == pytest.approx(0.5797, abs=1e-4)
        assert weights[model.vocabulary["world"]] == pytest.approx(0.8148, abs=1e-4)

    def test_all_oov_yields_zero_vector(self):
        model = fit_vectorizer([tokenize("hello world")])
        vec = transform(model, "zzz qqq")
        assert vec.is_zero()

    def test_training_document_unit_norm(self):
        docs = ["hello world", "hello there", "something else entirely"]
        model = fit_vectorizer([tokenize(d) for d in docs])
        for doc in docs:
            assert transform(model, doc).norm() == pytest.approx(1.0, abs=1e-9)

    def test_term_count_scales_weight(self):
        model = fit_vectorizer([tokenize("a a b"), tokenize("b c")])
        vec = dict(transform(model, "a a b").entries)
        # weight ratio a:b is (2*idf_a):(1*idf_b) before normalization
        idf_a = model.idf[model.vocabulary["a"]]
        idf_b = model.idf[model.vocabulary["b"]]
        ratio = vec[model.vocabulary["a"]] / vec[model.vocabulary["b"]]
        assert ratio == pytest.approx(2 * idf_a / idf_b, rel=1e-12)


@st.composite
def _corpus_and_text(draw):
    words = draw(
        st.lists(st.sampled_from("alpha beta gamma delta epsilon zeta".split()),
                 min_size=1, max_size=6)
    )
    docs = draw(
        st.lists(
            st.lists(st.sampled_from("alpha beta gamma delta epsilon zeta".split()),
                     min_size=1, max_size=6),
            min_size=1,
            max_size=8,
        )
    )
    return docs, " ".join(words)


class TestProperties:
    @given(_corpus_and_text())
    def test_unit_norm_for_known_text(self, case):
        docs, text = case
        model = fit_vectorizer(docs)
        vec = transform(model, text)
        if not vec.is_zero():
            assert vec.norm() == pytest.approx(1.0, abs=1e-9)

    @given(_corpus_and_text())
    def test_transform_deterministic(self, case):
        docs, text = case
        model = fit_vectorizer(docs)
        assert transform(model, text) == transform(model, text)

    @given(
        st.lists(
            st.lists(st.sampled_from("a b c d e f g".split()), min_size=1, max_size=5),
            min_size=2,
            max_size=10,
        )
    )
    def test_idf_monotone_in_document_frequency(self, docs):
        model = fit_vectorizer(docs)
        df = {}
        for doc in docs:
            for token in set(doc):
                df[token] = df.get(token, 0) + 1
        tokens = list(model.vocabulary)
        for t1 in tokens:
            for t2 in tokens:
                if df[t1] < df[t2]:
                    assert model.idf[model.vocabulary[t1]] > model.idf[model.vocabulary[t2]]


class TestSparseVector:
    def test_rejects_unsorted_entries(self):
        with pytest.raises(ValueError):
            SparseVector(dimension=3, entries=((1, 0.5), (0, 0.5)))

    def test_rejects_out_of_range_index(self):
        with pytest.raises(ValueError):
            SparseVector(dimension=2, entries=((2, 1.0),))

    def test_dense_round_trip(self):
        vec = SparseVector(dimension=4, entries=((1, 0.6), (3, 0.8)))
        assert list(vec.to_dense()) == [0.0, 0.6, 0.0, 0.8]

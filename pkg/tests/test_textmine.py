"""Mining pipeline stages, each pinned against hand-computed expectations,
plus a randomized equivalence check against the brute-force counter."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from ontoforge.textmine import (
    CandidateTerm,
    PipelineConfig,
    TokenStream,
    clean,
    extract_ngrams,
    load_candidates,
    load_stopwords,
    mine_article,
    mine_corpus,
    normalize,
    rank_candidates,
    remove_entities_and_numerics,
    remove_stopwords,
    save_candidates,
)


def _config(**overrides):
    return PipelineConfig(**overrides)


def _stream(*sentences):
    sents = tuple(tuple(s.split()) for s in sentences)
    return TokenStream(sents, sents)


class TestStopwords:
    def test_packaged_list_has_function_words(self):
        words = load_stopwords()
        assert {"the", "of", "and", "a", "is"} <= words

    def test_custom_file_with_comments(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("# header\nThe\nof  # inline\n\nand\n", encoding="utf-8")
        assert load_stopwords(path) == {"the", "of", "and"}


class TestPipelineConfig:
    def test_nmax_bounds(self):
        with pytest.raises(ValueError):
            _config(nmax=0)
        with pytest.raises(ValueError):
            _config(nmax=4)

    def test_min_frequency_bounds(self):
        with pytest.raises(ValueError):
            _config(min_frequency=0)

    def test_digest_tracks_knobs(self):
        assert _config().digest() == _config().digest()
        assert _config().digest() != _config(nmax=2).digest()
        assert _config().digest() != _config(keep_interior_stopwords=False).digest()


class TestNormalize:
    def test_sentence_split_and_fold(self):
        stream = normalize("Wind is air. Power flows!", _config())
        assert stream.sentences == (("wind", "is", "air"), ("power", "flows"))
        assert stream.raw_sentences[0] == ("Wind", "is", "air")

    def test_newlines_split_sentences(self):
        stream = normalize("first line\nsecond line", _config())
        assert len(stream.sentences) == 2

    def test_edge_punctuation_stripped(self):
        stream = normalize('He said "wind" (loudly).', _config())
        assert stream.sentences == (("he", "said", "wind", "loudly"),)

    def test_hyphenated_token_survives(self):
        stream = normalize("cut-in speed matters", _config())
        assert "cut-in" in stream.sentences[0]

    def test_percent_kept_for_numeric_stage(self):
        stream = normalize("about 30% more", _config())
        assert "30%" in stream.sentences[0]

    def test_no_empty_sentences(self):
        stream = normalize("one.   . two.", _config())
        assert all(stream.sentences)


class TestRemoveStopwords:
    def test_drops_words_and_empty_sentences(self):
        config = _config()
        stream = _stream("the wind of power", "of the")
        out = remove_stopwords(stream, config)
        assert out.sentences == (("wind", "power"),)


class TestEntitiesAndNumerics:
    def test_numeric_forms_dropped(self):
        config = _config()
        stream = _stream("wind 30% 1,000 3.5 2-3 speed")
        out = remove_entities_and_numerics(stream, config)
        assert out.sentences == (("wind", "speed"),)

    def test_interior_capital_dropped_initial_kept(self):
        config = _config()
        sents = ((("wind", "in", "denmark", "grows"),),)
        raws = ((("Wind", "in", "Denmark", "grows"),),)
        stream = TokenStream(sents[0], raws[0])
        out = remove_entities_and_numerics(stream, config)
        assert out.sentences == (("wind", "in", "grows"),)

    def test_gazetteer_matches_longest_span(self):
        config = _config(entity_gazetteer=frozenset({"north sea", "north"}))
        stream = _stream("the north sea wind")
        out = remove_entities_and_numerics(stream, config)
        assert out.sentences == (("the", "wind"),)

    def test_year_range_dropped(self):
        config = _config()
        stream = _stream("between 1990-1995 output rose")
        out = remove_entities_and_numerics(stream, config)
        assert "1990-1995" not in out.sentences[0]


class TestClean:
    def test_interior_stopwords_kept_by_default(self):
        stream = clean("meteorology and climatology", _config())
        assert stream.sentences == (("meteorology", "and", "climatology"),)

    def test_stopwords_removed_when_disabled(self):
        stream = clean("meteorology and climatology", _config(keep_interior_stopwords=False))
        assert stream.sentences == (("meteorology", "climatology"),)


class TestExtractNgrams:
    def test_counts_within_sentence(self):
        config = _config(keep_interior_stopwords=False)
        table = extract_ngrams(_stream("wind power wind power"), config)
        assert table.entries["wind"] == 2
        assert table.entries["wind power"] == 2
        assert table.entries["power wind"] == 1
        assert table.entries["wind power wind"] == 1

    def test_windows_never_cross_sentences(self):
        config = _config(keep_interior_stopwords=False)
        table = extract_ngrams(_stream("wind", "power"), config)
        assert "wind power" not in table.entries

    def test_edge_stopwords_rejected_interior_allowed(self):
        config = _config()
        table = extract_ngrams(_stream("meteorology and climatology"), config)
        assert table.entries["meteorology and climatology"] == 1
        assert "and" not in table.entries
        assert "meteorology and" not in table.entries
        assert "and climatology" not in table.entries

    def test_nmax_respected(self):
        config = _config(nmax=1, keep_interior_stopwords=False)
        table = extract_ngrams(_stream("wind power energy"), config)
        assert set(table.entries) == {"wind", "power", "energy"}


class TestMineAndRank:
    def test_mine_article_end_to_end(self):
        table = mine_article("Wind power is wind energy. Wind grows.", _config())
        assert table.entries["wind"] == 3
        assert table.entries["wind power"] == 1

    def test_mine_corpus_orders_seed_first(self, fixture_corpus):
        tables = mine_corpus(fixture_corpus, _config())
        assert tables[0].article == "wind_power"
        assert [t.article for t in tables[1:]] == sorted(t.article for t in tables[1:])

    def test_rank_merges_and_filters(self):
        from ontoforge.textmine import NGramTable

        tables = [
            NGramTable("a", {"wind": 2, "rare": 1}),
            NGramTable("b", {"wind": 1, "power": 2}),
        ]
        ranked = rank_candidates(tables, _config(min_frequency=2))
        assert [c.phrase for c in ranked] == ["wind", "power"]
        assert ranked[0].total_frequency == 3
        assert ranked[0].per_article == {"a": 2, "b": 1}
        assert all(c.phrase != "rare" for c in ranked)

    def test_rank_tie_breaks_by_phrase(self):
        from ontoforge.textmine import NGramTable

        tables = [NGramTable("a", {"zeta": 2, "alpha": 2})]
        ranked = rank_candidates(tables, _config())
        assert [c.phrase for c in ranked] == ["alpha", "zeta"]


class TestCandidateFile:
    def test_round_trip_with_header(self, tmp_path):
        cands = [
            CandidateTerm("wind", 1, 5, {"a": 5}),
            CandidateTerm("wind power", 2, 3, {"a": 2, "b": 1}, status="concept"),
        ]
        path = tmp_path / "cands.jsonl"
        save_candidates(cands, path, header={"config_digest": "abc"})
        header, loaded = load_candidates(path)
        assert header == {"config_digest": "abc"}
        assert [c.to_record() for c in loaded] == [c.to_record() for c in cands]

    def test_headerless_file(self, tmp_path):
        path = tmp_path / "cands.jsonl"
        save_candidates([CandidateTerm("wind", 1, 5, {"a": 5})], path)
        header, loaded = load_candidates(path)
        assert header == {}
        assert loaded[0].phrase == "wind"


_WORDS = st.sampled_from(
    ["wind", "power", "energy", "turbine", "blade", "the", "of", "and", "speed"]
)
_SENTENCES = st.lists(_WORDS, min_size=1, max_size=12).map(tuple)
_STREAMS = st.lists(_SENTENCES, min_size=0, max_size=6).map(
    lambda sents: TokenStream(tuple(sents), tuple(sents))
)


class TestAgainstBruteForce:
    @given(
        stream=_STREAMS,
        nmax=st.integers(min_value=1, max_value=3),
        keep=st.booleans(),
    )
    @settings(max_examples=300, deadline=None)
    def test_window_counts_match(self, stream, nmax, keep):
        config = _config(nmax=nmax, keep_interior_stopwords=keep)
        engine = extract_ngrams(stream, config)
        assert engine.entries == oracle.count_stream(stream, config)

    @given(
        tables=st.dictionaries(
            st.sampled_from(["a", "b", "c"]),
            st.dictionaries(
                st.sampled_from(["wind", "power", "wind power"]),
                st.integers(min_value=1, max_value=5),
                max_size=3,
            ),
            min_size=1,
            max_size=3,
        ),
        min_frequency=st.integers(min_value=1, max_value=4),
    )
    @settings(max_examples=100, deadline=None)
    def test_ranking_matches(self, tables, min_frequency):
        from ontoforge.textmine import NGramTable

        engine = rank_candidates(
            [NGramTable(a, dict(entries)) for a, entries in sorted(tables.items())],
            _config(min_frequency=min_frequency),
        )
        expected_order, totals = oracle.merge_and_rank(tables, min_frequency)
        assert [c.phrase for c in engine] == expected_order
        assert all(c.total_frequency == totals[c.phrase] for c in engine)

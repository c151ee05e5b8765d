import json

import pytest

from ngramnorm import (
    ConfigurationError,
    EmptyTokenError,
    ModelFormatError,
    Rule,
    TrainConfig,
    TrainingPair,
    baseline_nearest_vocab,
    explain,
    load_model,
    normalize,
    save_model,
    train,
)
from ngramnorm.pipeline import SCHEMA_VERSION, dumps_model, loads_model
from ngramnorm.synthetic import synthetic_pairs, vocabulary


class TestTrain:
    def test_single_pair(self):
        model = train([TrainingPair("d2", "dito")], ["dito"]).model
        assert normalize(model, "d2")[0][0] == "dito"
        # without a vocabulary nothing steers the ranker away from close rewrites
        bare = train([TrainingPair("d2", "dito")]).model
        assert normalize(bare, "d2")[0] == ("di", 1)
        assert model.metadata["n_training_pairs"] == 1

    def test_from_files(self, tmp_path):
        data = tmp_path / "pairs.tsv"
        data.write_text("d2\tdito\nbroken line\ndhil\tdahil\n", encoding="utf-8")
        vocab = tmp_path / "vocab.txt"
        vocab.write_text("dito\nDahil\ndito\n", encoding="utf-8")
        model, skipped = train(data, vocab)
        assert [s.line_number for s in skipped] == [2]
        assert model.vocabulary == {"dito", "dahil"}

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.tsv"
        path.write_text("", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            train(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            train(tmp_path / "nope.tsv")

    def test_config_defaults(self):
        assert TrainConfig().effective_cutoff == 100
        assert TrainConfig(ranker="likelihood").effective_cutoff == 30
        assert TrainConfig(cutoff=7).effective_cutoff == 7
        assert TrainConfig(unbounded=True).effective_cutoff is None


class TestNormalize:
    def test_worked_chain(self, worked_model):
        assert normalize(worked_model, "d2")[0][0] == "dito"
        assert normalize(worked_model, "D-2")[0][0] == "dito"
        assert normalize(worked_model, "dhil")[0][0] == "dahil"

    def test_nkktawa(self):
        model = train([TrainingPair("d2", "dito")], ["nakakatawa"]).model
        model = model.with_rule(Rule("n", "na"), 1).with_rule(Rule("k", "ka"), 2).with_rule(Rule("t", "t"))
        for ch in "awa":
            model = model.with_rule(Rule(ch, ch))
        assert normalize(model, "nkktawa")[0][0] == "nakakatawa"

    def test_unknown_word_falls_back_to_itself(self, worked_model):
        result = explain(worked_model, "xyz")
        assert result.fallback
        assert normalize(worked_model, "xyz") == [("xyz", 0)]

    def test_v2_empty_generation_returns_word(self):
        model = train([TrainingPair("2a", "ta")], config=TrainConfig(k_max=1, variant="v2")).model
        assert [t for t, _ in normalize(model, "2a")] == ["2a"]

    def test_in_vocabulary_word_still_processed(self, worked_model):
        result = explain(worked_model, "dito")
        assert len(result.candidates) >= 1

    def test_size_bounds(self, worked_model):
        for word in ["d2", "dhil", "q", "dddd"]:
            for k in (1, 3, 5):
                assert 1 <= len(normalize(worked_model, word, k)) <= k

    def test_errors(self, worked_model):
        with pytest.raises(EmptyTokenError):
            normalize(worked_model, " - ")
        with pytest.raises(ConfigurationError):
            normalize(worked_model, "d2", 0)


class TestBaseline:
    def test_d2(self):
        assert baseline_nearest_vocab("d2", ["doon", "dito"], 2) == [("dito", 3), ("doon", 3)]

    def test_member_first(self):
        assert baseline_nearest_vocab("dito", ["dito", "dito2", "ditto"])[0] == ("dito", 0)

    def test_k_larger_than_vocab(self):
        assert len(baseline_nearest_vocab("a", ["b", "c"], 10)) == 2

    def test_empty_vocab(self):
        with pytest.raises(ConfigurationError):
            baseline_nearest_vocab("a", [])


class TestPersistence:
    @pytest.fixture
    def model(self):
        pairs = synthetic_pairs(60, seed=2)
        return train(pairs, vocabulary(), TrainConfig(ranker="likelihood")).model

    def test_round_trip_bytes(self, model, tmp_path):
        path = tmp_path / "m.json"
        save_model(model, path)
        first = path.read_bytes()
        save_model(load_model(path), path)
        assert path.read_bytes() == first
        assert load_model(path) == model

    def test_loaded_model_reproduces_outputs(self, model, tmp_path):
        path = tmp_path / "m.json"
        save_model(model, path)
        loaded = load_model(path)
        for pair in synthetic_pairs(60, seed=2):
            assert normalize(loaded, pair.wrong) == normalize(model, pair.wrong)

    def test_entries_are_sorted_arrays(self, model):
        data = json.loads(dumps_model(model))
        keys = [key for key, _ in data["dictionary"]["entries"]]
        assert keys == sorted(keys)

    def test_truncated(self, model):
        text = dumps_model(model)
        with pytest.raises(ModelFormatError):
            loads_model(text[: len(text) // 2])

    def test_unknown_version(self, model):
        data = json.loads(dumps_model(model))
        data["schema_version"] = SCHEMA_VERSION + 1
        with pytest.raises(ModelFormatError, match="schema_version"):
            loads_model(json.dumps(data))

    def test_schema_violation(self, model):
        data = json.loads(dumps_model(model))
        del data["generation"]
        with pytest.raises(ModelFormatError):
            loads_model(json.dumps(data))
        data = json.loads(dumps_model(model))
        data["dictionary"]["entries"][0][1][0][1] = 0
        with pytest.raises(ModelFormatError):
            loads_model(json.dumps(data))

    def test_not_a_model(self):
        with pytest.raises(ModelFormatError):
            loads_model("[1, 2]")

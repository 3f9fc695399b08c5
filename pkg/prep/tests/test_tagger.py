import pytest

from distractorprep.tagger import BuiltinTagger, TaggerFailure, get_tagger


def test_deterministic():
    tagger = BuiltinTagger()
    text = "The committee meets on Friday. New things happen."
    assert tagger.tag(text) == tagger.tag(text)


def test_sentence_and_token_shape():
    sentences = BuiltinTagger().tag("One cat sat. Two dogs ran!")
    assert len(sentences) == 2
    first = sentences[0]
    assert first["text"] == "One cat sat."
    for token in first["tokens"]:
        assert set(token) == {"surface", "lemma", "pos", "entity", "start", "end"}
        assert first["text"][token["start"]:token["end"]] == token["surface"]


def test_numbers_and_day_names_tagged():
    tokens = BuiltinTagger().tag("By 2020 on Friday.")[0]["tokens"]
    pos = {t["surface"]: t["pos"] for t in tokens}
    assert pos["2020"] == "number"
    assert pos["Friday"] == "number"


def test_gazetteer_entities():
    tagger = BuiltinTagger({"new york": "location", "deep space industries": "organization"})
    tokens = tagger.tag("They moved to New York.")[0]["tokens"]
    entities = {t["surface"]: t["entity"] for t in tokens}
    assert entities["New"] == "location"
    assert entities["York"] == "location"
    assert entities["They"] == "none"


def test_kb_file_gazetteer(tmp_path):
    import json
    kb = tmp_path / "kb.json"
    kb.write_text(json.dumps({"location": {"cities": ["Boston"]}}))
    tagger = BuiltinTagger.with_kb_file(kb)
    tokens = tagger.tag("Boston is old.")[0]["tokens"]
    assert tokens[0]["entity"] == "location"


def test_empty_text_fails():
    with pytest.raises(TaggerFailure):
        BuiltinTagger().tag("   ")


def test_unknown_adapter_rejected():
    with pytest.raises(TaggerFailure):
        get_tagger("transformer-of-mystery")

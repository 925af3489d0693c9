import json

import pytest

from src.errors import InvalidInputError
from src.models.cbc import BayonetSet
from src.models.cyclic import FactorizationPair
from src.storage.format_manager import FormatManager, bayonet_pairs, parse_ints, parse_words_text


@pytest.fixture
def formats():
    return FormatManager()


def test_parse_words_text():
    assert parse_words_text("{b, ab}\n# the rest\naab ba  # trailing") == ["b", "ab", "aab", "ba"]
    assert parse_ints("0, 1 2;3") == [0, 1, 2, 3]
    with pytest.raises(InvalidInputError):
        parse_ints("0 x")


def test_bayonet_pairs_detects_central_letter():
    assert bayonet_pairs(["c", "aca"]) == [(0, 0), (1, 1)]
    assert bayonet_pairs(["aab", "ba"]) == [(2, 0), (0, 1)]


def test_read_words(formats, tmp_path):
    text = tmp_path / "words.txt"
    text.write_text("aabb abaaa\nb, ba\n")
    assert formats.read_words(str(text)).words == ("b", "ba", "aabb", "abaaa")
    document = tmp_path / "words.json"
    document.write_text(json.dumps({"words": ["b", "ab"]}))
    assert formats.read_words(str(document)).words == ("b", "ab")


def test_read_bayonet_set(formats, tmp_path, eight_cbc):
    path = tmp_path / "eight.txt"
    path.write_text("n = 8\n" + " ".join(eight_cbc.words()) + "\n")
    assert formats.read_bayonet_set(str(path)) == eight_cbc
    document = tmp_path / "eight.json"
    document.write_text(json.dumps(eight_cbc.to_dict()))
    assert formats.read_bayonet_set(str(document)) == eight_cbc


def test_read_family(formats, tmp_path):
    path = tmp_path / "family.txt"
    path.write_text("b ab\nb, ba\n")
    family = formats.read_family(str(path))
    assert family.n == 2
    assert set(family.members) == {BayonetSet.from_pairs(2, [(0, 0), (1, 0)]),
                                   BayonetSet.from_pairs(2, [(0, 0), (0, 1)])}


def test_read_factorization(formats, tmp_path):
    inline = tmp_path / "f.txt"
    inline.write_text("8: 0 1 2 3 | 0 4\n")
    assert formats.read_factorization(str(inline)) == FactorizationPair.of(8, [0, 1, 2, 3], [0, 4])
    lines = tmp_path / "g.txt"
    lines.write_text("P = 0 2\nQ = 0 1\n")
    assert formats.read_factorization(str(lines)) == FactorizationPair.of(4, [0, 2], [0, 1])
    broken = tmp_path / "h.txt"
    broken.write_text("0 1 2\n")
    with pytest.raises(InvalidInputError):
        formats.read_factorization(str(broken))


def test_write_json_then_read(formats, tmp_path):
    path = tmp_path / "out" / "certificate.json"
    formats.write_json(str(path), {"kind": "factorization", "n": 4, "P": [0, 2], "Q": [0, 1]})
    assert formats.read_certificate(str(path))["kind"] == "factorization"
    assert not [name for name in path.parent.iterdir() if name.name.startswith(".tmp-")]


def test_missing_file(formats, tmp_path):
    with pytest.raises(InvalidInputError):
        formats.read_words(str(tmp_path / "absent.txt"))

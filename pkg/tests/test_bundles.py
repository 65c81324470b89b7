import json

import pytest

from src.core.errors import ParseError
from src.formats.bundles import FILES, MANIFEST, read_bundle, read_manifest, write_bundle
from src.models.instances import Relation


def test_write_and_read(asymmetric, tmp_path):
    manifest = write_bundle(asymmetric, tmp_path / "example", "0.1.0")
    directory = tmp_path / "example"
    assert sorted(p.name for p in directory.iterdir()) == sorted([*FILES.values(), MANIFEST])
    assert manifest.tool_version == "0.1.0"

    loaded = read_bundle(directory)
    assert loaded.name == asymmetric.name
    assert loaded.t1.delta == asymmetric.t1.delta
    assert loaded.t2.label == asymmetric.t2.label
    assert loaded.lambda_.transitions == asymmetric.lambda_.transitions
    assert loaded.expected == asymmetric.expected
    [equivalent] = loaded.expected_for(Relation.EQUIVALENT)
    assert equivalent.holds is False


def test_manifest_is_json(primes_2, tmp_path):
    write_bundle(primes_2, tmp_path, "0.1.0")
    data = json.loads((tmp_path / MANIFEST).read_text(encoding="utf-8"))
    assert data["name"] == "primes-m2"
    assert data["files"]["lambda"] == "lambda.txt"
    assert read_manifest(tmp_path).expected[0].k == 12


def test_broken_bundles(asymmetric, tmp_path):
    with pytest.raises(ParseError, match="cannot read manifest"):
        read_bundle(tmp_path)
    write_bundle(asymmetric, tmp_path, "0.1.0")
    (tmp_path / MANIFEST).write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError, match="invalid manifest"):
        read_bundle(tmp_path)
    write_bundle(asymmetric, tmp_path, "0.1.0")
    (tmp_path / FILES["t2"]).write_text("input: a\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_bundle(tmp_path)

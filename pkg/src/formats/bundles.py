"""
Instance bundles on disk.

A bundle directory holds ``t1.txt``, ``t2.txt``, ``lambda.txt`` and a
``manifest.json`` naming the files and the expected verdicts.
"""

import json
import logging
from pathlib import Path

from pydantic import ValidationError

from src.core.errors import ParseError
from src.formats.automata_text import dump_nfa, dump_transducer, load_nfa, load_transducer
from src.models.instances import BundleManifest, InstanceBundle

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"
FILES = {"t1": "t1.txt", "t2": "t2.txt", "lambda": "lambda.txt"}


def write_bundle(
    bundle: InstanceBundle, directory: str | Path, tool_version: str
) -> BundleManifest:
    """Write a bundle into ``directory``, creating it if needed."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / FILES["t1"]).write_text(dump_transducer(bundle.t1), encoding="utf-8")
    (directory / FILES["t2"]).write_text(dump_transducer(bundle.t2), encoding="utf-8")
    (directory / FILES["lambda"]).write_text(dump_nfa(bundle.lambda_), encoding="utf-8")
    manifest = BundleManifest(
        name=bundle.name,
        tool_version=tool_version,
        files=dict(FILES),
        expected=list(bundle.expected),
    )
    (directory / MANIFEST).write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Wrote bundle {bundle.name} to {directory}")
    return manifest


def read_manifest(directory: str | Path) -> BundleManifest:
    path = Path(directory) / MANIFEST
    try:
        return BundleManifest.model_validate(json.loads(path.read_text(encoding="utf-8")))
    except OSError as exc:
        raise ParseError(f"cannot read manifest: {exc.strerror or exc}", None, str(path)) from exc
    except (json.JSONDecodeError, ValidationError) as exc:
        raise ParseError(f"invalid manifest: {exc}", None, str(path)) from exc


def read_bundle(directory: str | Path) -> InstanceBundle:
    """
    Load a bundle written by ``write_bundle``.

    Raises:
        ParseError: If the manifest or one of the automata files is invalid
    """
    directory = Path(directory)
    manifest = read_manifest(directory)
    files = {**FILES, **manifest.files}
    t1 = load_transducer(directory / files["t1"])
    t2 = load_transducer(directory / files["t2"])
    lam = load_nfa(directory / files["lambda"])
    try:
        return InstanceBundle(
            name=manifest.name, t1=t1, t2=t2, lambda_=lam, expected=tuple(manifest.expected)
        )
    except ValidationError as exc:
        raise ParseError(f"inconsistent bundle: {exc}", None, str(directory)) from exc

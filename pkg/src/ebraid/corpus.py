"""JSON-lines store of named braids with optional expected Ĵ values."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .braid_words import BraidWord, parse_braid
from .scalar_ring import TauLaurent

__all__ = ["CorpusEntry", "load_corpus", "default_corpus_text", "dump_entry"]

DEFAULT_CORPUS = "corpus.jsonl"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    strands: int
    word: str
    expected_jhat: TauLaurent | None = None

    @property
    def braid(self) -> BraidWord:
        return parse_braid(self.word, self.strands)

    @classmethod
    def from_obj(cls, obj: dict) -> CorpusEntry:
        expected = obj.get("expected_jhat")
        entry = cls(
            str(obj["name"]),
            int(obj["strands"]),
            str(obj["word"]),
            TauLaurent.from_json_obj(expected) if expected is not None else None,
        )
        entry.braid  # validate now, not at first use
        return entry


def dump_entry(entry: CorpusEntry) -> str:
    obj = {"name": entry.name, "strands": entry.strands, "word": entry.word}
    if entry.expected_jhat is not None:
        obj["expected_jhat"] = entry.expected_jhat.to_json_obj()
    return json.dumps(obj, separators=(",", ":"))


def default_corpus_text() -> str:
    return resources.files("ebraid").joinpath("data", DEFAULT_CORPUS).read_text(encoding="utf-8")


def _parse(text: str, origin: str) -> list[CorpusEntry]:
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            entries.append(CorpusEntry.from_obj(json.loads(line)))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ValueError(f"{origin}:{lineno}: bad corpus line ({exc})") from None
    return entries


def load_corpus(path: str | Path | None = None) -> list[CorpusEntry]:
    """
    Read a corpus file.  Without ``path``, ``corpus.jsonl`` in the working
    directory is used when present, otherwise the corpus shipped with the
    package.
    """
    if path is None:
        local = Path(DEFAULT_CORPUS)
        if not local.is_file():
            return _parse(default_corpus_text(), "<shipped corpus>")
        path = local
    path = Path(path)
    return _parse(path.read_text(encoding="utf-8"), str(path))

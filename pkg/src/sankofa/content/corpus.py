"""Evaluation corpus loading: aligned candidate/reference segment files.

Files are UTF-8 with one segment per line.  Reference files either sit
next to the candidate file with an extra ``.ref<k>`` suffix
(``eval.txt`` -> ``eval.txt.ref1``, ``eval.txt.ref2``, ...) or are named
explicitly.
"""

from dataclasses import dataclass
from pathlib import Path

from sankofa import SankofaError


class LineCountMismatch(SankofaError):
    pass


class UnreadableFile(SankofaError):
    pass


@dataclass(frozen=True)
class CorpusPair:
    segment: str
    references: tuple[str, ...]


def _read_lines(path: Path) -> list[str]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UnreadableFile(f"cannot read {path}: {exc}") from exc
    # a trailing newline does not create a phantom empty segment
    return text.split("\n")[:-1] if text.endswith("\n") else text.split("\n")


def _discover_references(candidate_path: Path) -> list[Path]:
    refs = []
    k = 1
    while True:
        ref = candidate_path.with_name(candidate_path.name + f".ref{k}")
        if not ref.exists():
            break
        refs.append(ref)
        k += 1
    return refs


def load_corpus(path: str | Path, reference_paths: list[str | Path] | None = None) -> list[CorpusPair]:
    candidate_path = Path(path)
    segments = _read_lines(candidate_path)
    if reference_paths is None:
        ref_paths = _discover_references(candidate_path)
    else:
        ref_paths = [Path(p) for p in reference_paths]
    if not ref_paths:
        raise UnreadableFile(f"no reference files for {candidate_path}")

    reference_columns = []
    for ref_path in ref_paths:
        lines = _read_lines(ref_path)
        if len(lines) != len(segments):
            raise LineCountMismatch(
                f"{ref_path} has {len(lines)} lines, candidate has {len(segments)}"
            )
        reference_columns.append(lines)

    return [
        CorpusPair(segment=seg, references=tuple(col[i] for col in reference_columns))
        for i, seg in enumerate(segments)
    ]

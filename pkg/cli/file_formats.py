"""
Text file formats used on the command line.

Instance file: first line "n m", then m blocks of n lines of n integers
(block γ, row x, column y holds xγy). Fuzzy file: n grades ("p/q", integers
or decimals). Homomorphism file: n target indices. '#' starts a comment in
every format and blank lines are ignored.
"""

import logging
from pathlib import Path
from typing import Iterator, List, Mapping, Tuple, Union

from tools.core_algebra import ElementSubset, GammaSemigroup
from tools.errors import FileFormatError, GammaAlgebraError, InvalidGradeError
from tools.fuzzy_engine import FuzzySubset, parse_grade

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """(1-based line number, tokens) for every line with content left after comments."""
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise FileFormatError(f"expected integers, got {' '.join(tokens)!r}", number) from None


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FileFormatError(f"cannot read {path}: {e.strerror or e}") from None


def parse_instance(text: str) -> GammaSemigroup:
    """Parse an instance file; shape and range are checked, associativity is not."""
    lines = list(_content_lines(text))
    if not lines:
        raise FileFormatError("empty instance file")
    header_line, header = lines[0]
    values = _ints(header, header_line)
    if len(values) != 2 or values[0] < 1 or values[1] < 1:
        raise FileFormatError("header must be 'n m' with n, m ≥ 1", header_line)
    n, m = values

    rows = lines[1:]
    if len(rows) != n * m:
        where = rows[-1][0] if rows else header_line
        raise FileFormatError(f"expected {m} blocks of {n} rows ({n * m} rows), got {len(rows)}", where)

    blocks: List[List[List[int]]] = [[] for _ in range(m)]
    for index, (number, tokens) in enumerate(rows):
        row = _ints(tokens, number)
        if len(row) != n:
            raise FileFormatError(f"expected {n} entries, got {len(row)}", number)
        blocks[index // n].append(row)

    table = [[blocks[gamma][x] for gamma in range(m)] for x in range(n)]
    return GammaSemigroup(table)


def emit_instance(structure: GammaSemigroup, comments: Tuple[str, ...] = ()) -> str:
    """Canonical whitespace: one space between entries, one row per line, no blank lines."""
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"{structure.n} {structure.m}")
    for block in structure.to_blocks():
        lines.extend(" ".join(str(v) for v in row) for row in block)
    return "\n".join(lines) + "\n"


def parse_fuzzy(text: str, structure: GammaSemigroup) -> FuzzySubset:
    tokens: List[str] = []
    for number, line_tokens in _content_lines(text):
        for token in line_tokens:
            try:
                parse_grade(token)
            except InvalidGradeError as e:
                raise FileFormatError(str(e), number) from None
            tokens.append(token)
    if len(tokens) != structure.n:
        raise FileFormatError(f"expected {structure.n} grades, got {len(tokens)}")
    return FuzzySubset(structure, tuple(tokens))


def emit_fuzzy(mu: FuzzySubset) -> str:
    return mu.to_text() + "\n"


def parse_hom(text: str) -> Tuple[int, ...]:
    """Images only; arity and homomorphism checks belong to validate_hom."""
    images: List[int] = []
    for number, tokens in _content_lines(text):
        images.extend(_ints(tokens, number))
    if not images:
        raise FileFormatError("empty homomorphism file")
    return tuple(images)


def parse_subset(text: str, structure: GammaSemigroup) -> ElementSubset:
    """Comma-separated indices, optionally braced: "0,2" or "{0,2}"."""
    body = text.strip().strip("{}").strip()
    if not body:
        return ElementSubset(structure, frozenset())
    try:
        indices = [int(part) for part in body.split(",")]
    except ValueError:
        raise GammaAlgebraError(f"subset must be comma-separated indices, got {text!r}") from None
    outside = [i for i in indices if not 0 <= i < structure.n]
    if outside:
        raise GammaAlgebraError(f"subset indices {outside} outside 0..{structure.n - 1}")
    return ElementSubset.from_indices(structure, indices)


def read_instance(path: PathLike) -> GammaSemigroup:
    structure = parse_instance(_read(path))
    logger.debug(f"[file_formats] Loaded {path}: n={structure.n} m={structure.m}")
    return structure


def read_fuzzy(path: PathLike, structure: GammaSemigroup) -> FuzzySubset:
    return parse_fuzzy(_read(path), structure)


def read_hom(path: PathLike) -> Tuple[int, ...]:
    return parse_hom(_read(path))


def emit_witness(document: Mapping) -> str:
    """
    Counterexample witness as an instance file whose comment header carries the
    theorem, the claim and every witness field, so the file replays directly.
    """
    witness = dict(document.get("witness") or {})
    comments = [f"theorem: {document['theorem']}", f"instance: {document['instance']}"]
    if "claim" in witness:
        comments.append(f"claim: {witness.pop('claim')}")
    comments.extend(f"{key}: {value}" for key, value in witness.items())
    table = document["table"]
    n, m = len(table[0]), len(table)
    structure = GammaSemigroup([[table[gamma][x] for gamma in range(m)] for x in range(n)])
    return emit_instance(structure, tuple(comments))

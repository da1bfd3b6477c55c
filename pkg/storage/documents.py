"""
Document formats: JSON documents, JSON-lines streams, CSV manifests and integer grids
"""
import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, TextIO, Union

from anneal.certificate import NearPPCertificate
from certify.table import TableManifest, TableRow
from config.settings import FORMAT_VERSION, TOOL_VERSION
from core.errors import ParseError
from core.latin import LatinSquare, validate_latin
from core.permutations import Permutation

logger = logging.getLogger(__name__)

PERMUTATION = 'permutation'
SQUARE = 'square'
CERTIFICATE = 'near-pp-certificate'
MANIFEST_HEADER = ['n', 'I_star', 'seconds']


@dataclass(frozen=True)
class PermutationDocument:
    n: int
    sigma: tuple
    metadata: Dict[str, Any] = field(default_factory=dict, compare=True, hash=False)
    format_version: int = FORMAT_VERSION

    @property
    def permutation(self) -> Permutation:
        return Permutation(self.sigma)

    def to_dict(self) -> Dict[str, Any]:
        data = {'format_version': self.format_version, 'type': PERMUTATION,
                'n': self.n, 'sigma': list(self.sigma)}
        if self.metadata:
            data['metadata'] = dict(self.metadata)
        return data


@dataclass(frozen=True)
class SquareDocument:
    n: int
    cells: tuple
    metadata: Dict[str, Any] = field(default_factory=dict, compare=True, hash=False)
    format_version: int = FORMAT_VERSION

    @property
    def square(self) -> LatinSquare:
        return validate_latin(self.cells)

    def to_dict(self) -> Dict[str, Any]:
        data = {'format_version': self.format_version, 'type': SQUARE,
                'n': self.n, 'cells': [list(row) for row in self.cells]}
        if self.metadata:
            data['metadata'] = dict(self.metadata)
        return data


Document = Union[PermutationDocument, SquareDocument, NearPPCertificate]


def permutation_document(sigma: Permutation, **metadata) -> PermutationDocument:
    return PermutationDocument(n=sigma.n, sigma=sigma.image, metadata=metadata)


def square_document(square: LatinSquare, **metadata) -> SquareDocument:
    return SquareDocument(n=square.n, cells=square.cells, metadata=metadata)


def certificate_to_dict(cert: NearPPCertificate, include_elapsed: bool = False) -> Dict[str, Any]:
    data = {
        'format_version': FORMAT_VERSION,
        'type': CERTIFICATE,
        'n': cert.n,
        'sigma': list(cert.sigma),
        'profile': list(cert.profile),
        'imbalance3': cert.imbalance3,
        'seed': cert.seed,
        'steps': cert.steps,
        'replica': cert.replica,
        'restarts': cert.restarts,
        'rng': cert.rng,
        'objective': cert.objective,
        'tool_version': TOOL_VERSION,
    }
    if include_elapsed:
        data['elapsed'] = cert.elapsed
    return data


def dumps(data: Dict[str, Any]) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def _require(data: Dict[str, Any], key: str, kind=None):
    if key not in data:
        raise ParseError(f"document is missing '{key}'")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"'{key}' has the wrong type")
    return value


def _int_list(values, key: str) -> tuple:
    if not isinstance(values, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in values):
        raise ParseError(f"'{key}' must be a list of integers")
    return tuple(values)


def document_from_dict(data: Any) -> Document:
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object")
    version = _require(data, 'format_version', int)
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version}")
    kind = data.get('type')
    n = _require(data, 'n', int)
    metadata = data.get('metadata') or {}
    if not isinstance(metadata, dict):
        raise ParseError("'metadata' must be an object")

    if kind == CERTIFICATE:
        return NearPPCertificate(
            n=n,
            sigma=_int_list(_require(data, 'sigma'), 'sigma'),
            profile=_int_list(_require(data, 'profile'), 'profile'),
            imbalance3=_require(data, 'imbalance3', int),
            seed=_require(data, 'seed', int),
            steps=_require(data, 'steps', int),
            elapsed=float(data.get('elapsed', 0.0)),
            replica=int(data.get('replica', 0)),
            restarts=int(data.get('restarts', 0)),
            rng=str(data.get('rng', '')),
            objective=str(data.get('objective', 'band')),
        )
    if kind == SQUARE or (kind is None and 'cells' in data):
        cells = _require(data, 'cells', list)
        rows = tuple(_int_list(row, 'cells') for row in cells)
        return SquareDocument(n=n, cells=rows, metadata=metadata, format_version=version)
    if kind == PERMUTATION or (kind is None and 'sigma' in data):
        return PermutationDocument(n=n, sigma=_int_list(_require(data, 'sigma'), 'sigma'),
                                   metadata=metadata, format_version=version)
    raise ParseError(f"unknown document type {kind!r}")


def parse_grid(text: str) -> SquareDocument:
    """Whitespace-separated integer rows; blank lines and '#' comments are skipped"""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            rows.append(tuple(int(token) for token in line.split()))
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
    if not rows:
        raise ParseError("grid is empty")
    if any(len(row) != len(rows[0]) for row in rows):
        raise ParseError("grid rows have different lengths")
    return SquareDocument(n=len(rows), cells=tuple(rows))


def parse_document(text: str) -> Document:
    """Auto-detect JSON documents versus plain integer grids"""
    stripped = text.lstrip()
    if stripped.startswith('{') or stripped.startswith('['):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from None
        return document_from_dict(data)
    return parse_grid(text)


def load_document(path: Union[str, Path]) -> Document:
    filepath = Path(path)
    try:
        text = filepath.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Error loading {filepath}: {e}")
        raise ParseError(f"cannot read {filepath}: {e}") from None
    return parse_document(text)


def save_file_data(path: Union[str, Path], text: str) -> Path:
    filepath = Path(path)
    if filepath.parent and not filepath.parent.exists():
        filepath.parent.mkdir(parents=True, exist_ok=True)
    filepath.write_text(text, encoding='utf-8')
    logger.info(f"Wrote {filepath}")
    return filepath


def save_certificate(path: Union[str, Path], cert: NearPPCertificate, include_elapsed: bool = False) -> Path:
    return save_file_data(path, dumps(certificate_to_dict(cert, include_elapsed)))


def format_grid(square: LatinSquare) -> str:
    width = len(str(square.n - 1))
    return ''.join(' '.join(str(v).rjust(width) for v in row) + '\n' for row in square.cells)


# JSON-lines streams

def write_jsonl(stream: TextIO, docs: Iterable[Union[PermutationDocument, SquareDocument]]) -> int:
    count = 0
    for doc in docs:
        stream.write(json.dumps(doc.to_dict(), sort_keys=True, separators=(',', ':')) + '\n')
        count += 1
    return count


def read_jsonl(stream: TextIO) -> Iterator[Document]:
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise ParseError(f"line {lineno}: invalid JSON: {e}") from None
        yield document_from_dict(data)


# CSV manifests

def manifest_to_csv(manifest: TableManifest) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(MANIFEST_HEADER)
    for row in manifest.rows:
        writer.writerow([row.n, row.i_star if row.ok else 'FAILED', row.seconds])
    return buffer.getvalue()


def save_manifest(path: Union[str, Path], manifest: TableManifest) -> Path:
    return save_file_data(path, manifest_to_csv(manifest))


def parse_manifest(text: str) -> List[TableRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != MANIFEST_HEADER:
        raise ParseError(f"manifest header must be {','.join(MANIFEST_HEADER)}")
    rows = []
    for record in reader:
        if not record:
            continue
        try:
            n, i_star, seconds = int(record[0]), record[1], float(record[2])
        except (ValueError, IndexError):
            raise ParseError(f"malformed manifest row {record!r}") from None
        status = 'failed' if i_star == 'FAILED' else 'ok'
        rows.append(TableRow(n=n, i_star='' if status == 'failed' else i_star, seconds=seconds, status=status))
    return rows

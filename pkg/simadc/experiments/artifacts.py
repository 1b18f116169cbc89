'''CSV tables and the run manifest.

Cells are written without locale: floats with repr (round trip exact), so two
runs with the same inputs produce byte identical files.
'''

import csv
import hashlib
import json
import os
from numbers import Integral, Real
from typing import Any, Dict, List, NamedTuple, Sequence
from simadc import logging
from simadc.exceptions import ArtifactException
from simadc.utils import format_float


__all__ = ['Table', 'ArtifactWriter', 'file_digest', 'format_cell']


logger = logging.getLogger(__name__)

MANIFEST_NAME = 'manifest.json'


class Table(NamedTuple):
    name: str
    header: Sequence[str]
    rows: Sequence[Sequence[Any]]


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, Integral):
        return str(int(value))
    if isinstance(value, Real):
        return format_float(value)
    return str(value)


def file_digest(path: str) -> str:
    sha = hashlib.sha256()
    with open(path, 'rb') as f:
        for block in iter(lambda: f.read(1 << 16), b''):
            sha.update(block)
    return sha.hexdigest()


class ArtifactWriter:
    '''Writes the files of one run into output_dir and keeps the list that
    goes into the manifest.'''

    def __init__(self, output_dir: str) -> None:
        self._output_dir = output_dir
        self._files: List[str] = []

    @property
    def output_dir(self) -> str:
        return self._output_dir

    @property
    def files(self) -> List[str]:
        return list(self._files)

    def path(self, name: str) -> str:
        return os.path.join(self._output_dir, name)

    def register(self, path: str) -> None:
        name = os.path.relpath(path, self._output_dir)
        if name not in self._files:
            self._files.append(name)

    def write_table(self, table: Table) -> str:
        path = self.path(table.name)
        try:
            with open(path, 'w', encoding='utf-8', newline='') as f:
                writer = csv.writer(f, lineterminator='\n')
                writer.writerow(table.header)
                for row in table.rows:
                    writer.writerow([format_cell(value) for value in row])
        except OSError as e:
            raise ArtifactException(
                'Cannot write {}: {}'.format(path, e), extra={'path': path}
            ) from e
        logger.info('Wrote {} ({} rows)'.format(path, len(table.rows)))
        self.register(path)
        return path

    def write_manifest(self, **meta: Any) -> str:
        '''Writes manifest.json with meta and the sha256 of every file
        written so far.'''
        files: Dict[str, str] = {
            name: file_digest(self.path(name)) for name in sorted(self._files)
        }
        manifest = {**meta, 'files': files}
        path = self.path(MANIFEST_NAME)
        try:
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(manifest, f, indent=2, sort_keys=True, default=str)
                f.write('\n')
        except OSError as e:
            raise ArtifactException(
                'Cannot write {}: {}'.format(path, e), extra={'path': path}
            ) from e
        logger.info('Wrote manifest with {} files'.format(len(files)))
        return path

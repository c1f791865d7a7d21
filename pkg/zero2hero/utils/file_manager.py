"""
Document file I/O.
"""

from pathlib import Path

from zero2hero.core.errors import DocumentError
from zero2hero.utils.logger import get_logger

logger = get_logger(__name__)


class FileManager:
    """Reads and writes LaTeX documents as strict UTF-8."""

    def __init__(self, max_size: int = 64 * 1024 * 1024):
        """
        Initialize FileManager.

        Args:
            max_size: Largest document accepted, in bytes (default: 64MB)
        """
        self.max_size = max_size

    def read_bytes(self, path: str | Path) -> bytes:
        """
        Read a document.

        Raises:
            DocumentError: the file is missing, unreadable or too large
        """
        path = Path(path)
        try:
            size = path.stat().st_size
            if size > self.max_size:
                raise DocumentError(f'{path} is {size} bytes; the limit is {self.max_size}')
            data = path.read_bytes()
        except OSError as e:
            raise DocumentError(f'Cannot read {path}: {e.strerror or e}') from e
        logger.debug(f'Read {len(data)} bytes from {path}')
        return data

    def read_text(self, path: str | Path) -> str:
        data = self.read_bytes(path)
        try:
            return data.decode('utf-8')
        except UnicodeDecodeError as e:
            raise DocumentError(f'{path} is not valid UTF-8 (byte offset {e.start})') from e

    def write_text(self, path: str | Path, text: str):
        """
        Write a document, replacing the file through a temporary sibling.

        Raises:
            DocumentError: the file cannot be written
        """
        path = Path(path)
        tmp = path.with_name(f'.{path.name}.tmp')
        try:
            tmp.write_bytes(text.encode('utf-8'))
            tmp.replace(path)
        except OSError as e:
            tmp.unlink(missing_ok=True)
            raise DocumentError(f'Cannot write {path}: {e.strerror or e}') from e
        logger.debug(f'Wrote {len(text)} characters to {path}')

"""
Reading and writing the plain-text Stieltjes reference table.

Format: one constant per line, ``<index> <decimal value>``; lines starting
with ``#`` are comments and blank lines are ignored.
"""
import logging
import os
from typing import Dict, Iterable

from src.config.constants import ERROR_MESSAGES
from src.utils.errors import ReferenceTableError

logger = logging.getLogger(__name__)


class ReferenceUtils:
    """Handles the reference table file"""

    @staticmethod
    def parse(lines: Iterable[str]) -> Dict[int, str]:
        """
        Parses reference table lines.

        Args:
            lines: Raw text lines

        Returns:
            Dict[int, str]: Decimal text of each constant keyed by index

        Raises:
            ReferenceTableError: On a malformed line or duplicate index
        """
        values: Dict[int, str] = {}
        for line_no, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith('#'):
                continue
            parts = line.split()
            if len(parts) != 2 or not parts[0].isdigit():
                raise ReferenceTableError(
                    ERROR_MESSAGES["reference_format"].format(line_no=line_no, line=raw))
            index = int(parts[0])
            if index in values:
                raise ReferenceTableError(
                    ERROR_MESSAGES["reference_format"].format(line_no=line_no, line=raw))
            values[index] = parts[1]
        return values

    @staticmethod
    def read(path: str) -> Dict[int, str]:
        if not os.path.exists(path):
            raise ReferenceTableError(ERROR_MESSAGES["reference_missing"].format(path=path))
        with open(path, 'r', encoding='utf-8') as handle:
            values = ReferenceUtils.parse(handle)
        logger.info(f"Loaded {len(values)} reference constants from {path}")
        return values

    @staticmethod
    def render(values: Dict[int, str], comments: Iterable[str] = ()) -> str:
        lines = [f"# {comment}" for comment in comments]
        lines += [f"{index} {values[index]}" for index in sorted(values)]
        return "\n".join(lines) + "\n"

    @staticmethod
    def write(path: str, values: Dict[int, str], comments: Iterable[str] = ()) -> None:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(ReferenceUtils.render(values, comments))
        logger.info(f"Wrote {len(values)} reference constants to {path}")

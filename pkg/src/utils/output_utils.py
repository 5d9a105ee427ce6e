"""
Rendering of command reports as CSV, JSON or text.
"""
import csv
import io
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import orjson

from src.config.constants import OutputFormat

logger = logging.getLogger(__name__)


@dataclass
class Report:
    """Tabular result of one command; every numeric cell is fixed-point text"""

    columns: List[str]
    rows: List[List[Optional[str]]]
    summary: List[str] = field(default_factory=list)
    config: Dict = field(default_factory=dict)
    metadata: Dict = field(default_factory=dict)
    svg: Optional[str] = None

    def column(self, name: str) -> List[Optional[str]]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


class OutputUtils:
    """Serializes reports"""

    @staticmethod
    def to_csv(report: Report) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(report.columns)
        for row in report.rows:
            writer.writerow(['' if cell is None else cell for cell in row])
        return buffer.getvalue()

    @staticmethod
    def to_json(report: Report) -> str:
        document = {
            'config': report.config,
            'columns': {name: report.column(name) for name in report.columns},
            'summary': report.summary,
            'metadata': report.metadata,
        }
        return orjson.dumps(document, option=orjson.OPT_INDENT_2).decode('utf-8') + '\n'

    @staticmethod
    def to_text(report: Report) -> str:
        cells = [report.columns] + [['-' if c is None else c for c in row] for row in report.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(report.columns))]
        lines = ['  '.join(cell.rjust(width) for cell, width in zip(row, widths)) for row in cells]
        lines += report.summary
        return '\n'.join(lines) + '\n'

    @staticmethod
    def render(report: Report, output_format: OutputFormat) -> str:
        """
        Renders a report in the requested format.

        Args:
            report: Command result
            output_format: Target format

        Returns:
            str: Serialized artifact
        """
        if output_format is OutputFormat.SVG:
            return report.svg
        if output_format is OutputFormat.JSON:
            return OutputUtils.to_json(report)
        if output_format is OutputFormat.TEXT:
            return OutputUtils.to_text(report)
        return OutputUtils.to_csv(report)

    @staticmethod
    def emit(text: str, output_path: Optional[str], stream) -> None:
        if output_path is None:
            stream.write(text)
            return
        directory = os.path.dirname(output_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(output_path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(text)
        logger.info(f"Wrote {len(text)} characters to {output_path}")

    @staticmethod
    def parse_csv(text: str) -> List[Dict[str, Optional[str]]]:
        """Reads an emitted CSV back; empty fields become None."""
        reader = csv.DictReader(io.StringIO(text))
        return [{k: (v if v != '' else None) for k, v in row.items()} for row in reader]

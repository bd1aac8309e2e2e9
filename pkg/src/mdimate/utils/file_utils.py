"""File utility functions for reading and writing result files."""

import json
from pathlib import Path
from typing import Any

from loguru import logger


def read_json(file_path: str | Path) -> Any:
    """Read and parse a JSON document.

    Args:
        file_path: Path to the JSON file

    Returns:
        The decoded JSON value

    Raises:
        FileNotFoundError: If the file doesn't exist
        ValueError: If the path is not a file or the content is not JSON
        IOError: If the file cannot be read
    """
    path = Path(file_path)

    if not path.exists():
        logger.error(f"File not found: {path}")
        raise FileNotFoundError(f"JSON file not found: {path}")

    if not path.is_file():
        logger.error(f"Path is not a file: {path}")
        raise ValueError(f"Path is not a file: {path}")

    try:
        content = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Error reading JSON file {path}: {e}")
        raise IOError(f"Failed to read JSON file {path}: {e}") from e

    try:
        return json.loads(content)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON in {path}: {e}") from e


def write_text(file_path: str | Path, content: str) -> Path:
    """Write text with LF line endings, creating parent directories.

    Args:
        file_path: Destination path
        content: Text to write

    Returns:
        The resolved destination path

    Raises:
        IOError: If the destination is not writable
    """
    path = Path(file_path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(content)
    except OSError as e:
        logger.error(f"Error writing {path}: {e}")
        raise IOError(f"Failed to write {path}: {e}") from e

    logger.info(f"Wrote {path} ({len(content)} chars)")
    return path

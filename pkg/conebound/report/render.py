"""render.py - Turns Responses into json, csv or text."""

import csv
import io
import json
import math
from enum import Enum

import numpy as np

FORMATS = ("text", "json", "csv")


def render(response, fmt: str = "text") -> str:
    """
    Render a Response.
    Args:
        response (Response): The report
        fmt (str): One of json, csv, text
    Returns (str): The rendered report, ending in a newline
    Raises: ValueError for an unknown format
    """
    if fmt == "json":
        return __render_json(response)
    if fmt == "csv":
        return __render_csv(response)
    if fmt == "text":
        return __render_text(response)

    raise ValueError(f"Error! Unknown format `{fmt}`. Use {', '.join(FORMATS)}.")


def plain(value):
    """Convert numpy scalars, arrays and enums into plain Python values."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.ndarray):
        return [plain(item) for item in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, dict):
        return {key: plain(item) for key, item in value.items()}
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def format_number(value: float) -> str:
    """17 significant digits; non-finite values as inf, -inf, nan."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, ".17g")


def __render_json(response) -> str:
    document = dict(response.fields)
    if response.is_table:
        document["rows"] = response.rows
    return __encode(plain(document), 0) + "\n"


def __encode(value, depth: int) -> str:
    """JSON with two-space indentation and 17-digit floats."""
    pad = "  " * (depth + 1)
    close = "  " * depth

    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(key))}: {__encode(item, depth + 1)}" for key, item in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        items = [f"{pad}{__encode(item, depth + 1)}" for item in value]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    if isinstance(value, bool) or value is None:
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        text = format_number(value)
        return text if math.isfinite(value) else json.dumps(text)
    return json.dumps(str(value))


def __cell(value) -> str:
    value = plain(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, list):
        return " ".join(__cell(item) for item in value)
    return str(value)


def __render_csv(response) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    if response.is_table:
        header = list(response.fields) + list(response.rows[0])
        writer.writerow(header)
        scalars = [__cell(value) for value in response.fields.values()]
        for row in response.rows:
            writer.writerow(scalars + [__cell(value) for value in row.values()])
    else:
        writer.writerow(list(response.fields))
        writer.writerow([__cell(value) for value in response.fields.values()])

    return buffer.getvalue()


def __render_text(response) -> str:
    lines = [response.title, "=" * len(response.title)]

    if response.fields:
        width = max(len(name) for name in response.fields)
        for name, value in response.fields.items():
            lines.append(f"{name.ljust(width)}: {__cell(value) or '-'}")

    if response.is_table:
        header = list(response.rows[0])
        cells = [[__cell(value) for value in row.values()] for row in response.rows]
        widths = [max(len(column), *(len(row[i]) for row in cells)) for i, column in enumerate(header)]

        lines.append("")
        lines.append("  ".join(column.rjust(widths[i]) for i, column in enumerate(header)))
        for row in cells:
            lines.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))

    return "\n".join(lines) + "\n"

"""Command reports and their renderings."""

from .render import FORMATS, format_number, plain, render
from .response import Response

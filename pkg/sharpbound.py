"""Command-line entry point for the conebound toolkit."""

import argparse
import importlib
import logging
import os
import sys

from dotenv import load_dotenv

import conebound
from conebound.errors import (
    DivergentSeries,
    DomainError,
    IndexOutOfRange,
    KindError,
    MatrixFileError,
    NotCovered,
    RegimeViolation,
    SizeError,
    UnknownInequality,
)
from conebound.report import render

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_REGIME = 2
EXIT_INPUT = 3
EXIT_NOT_COVERED = 4

INTERFACE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "interface")

INPUT_ERRORS = (
    MatrixFileError,
    DomainError,
    SizeError,
    KindError,
    IndexOutOfRange,
    DivergentSeries,
    UnknownInequality,
    ValueError,
)


class ArgumentParser(argparse.ArgumentParser):
    """argparse, but usage errors exit with the input-error status."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"Error! {message}\n")


def build_parser() -> ArgumentParser:
    """The top-level parser with every command module's subcommands."""
    parser = ArgumentParser(
        prog="sharpbound",
        description="Sharp norm bounds of non-negative matrices on the monotone cone.",
    )
    parser.add_argument("--threads", type=int, help="Worker threads (overrides MB_THREADS)")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for filename in sorted(os.listdir(INTERFACE)):
        if filename.endswith(".py") and not filename.startswith("_"):
            module = importlib.import_module(f"interface.{filename[:-3]}")
            module.setup(subparsers)

    return parser


def main(argv=None) -> int:
    """
    Parse arguments, run one command and write its report.
    Args:
        argv (list): Arguments without the program name; defaults to sys.argv[1:]
    Returns (int): The exit status
    """
    load_dotenv()
    conebound.settings.reload()

    parser = build_parser()
    args = parser.parse_args(argv)

    level = "DEBUG" if args.verbose else conebound.settings.value("log_level")
    logging.basicConfig(level=logging.INFO)
    logging.getLogger().setLevel(level)

    try:
        if args.threads is not None:
            conebound.settings.update("threads", args.threads)
        response = args.handler(args)
    except RegimeViolation as err:
        return __fail(err, EXIT_REGIME)
    except NotCovered as err:
        return __fail(err, EXIT_NOT_COVERED)
    except INPUT_ERRORS as err:
        return __fail(err, EXIT_INPUT)
    except Exception:
        logging.error("UNKNOWN ERROR ON %s", " ".join(sys.argv[1:] if argv is None else argv))
        raise

    report = render(response, args.format)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(report)
        except OSError as err:
            return __fail(err, EXIT_INPUT)
    else:
        sys.stdout.write(report)

    return response.exit_code


def __fail(err, status: int) -> int:
    """Report an error on standard error and return its exit status."""
    message = str(err)
    if not message.startswith("Error!"):
        message = f"Error! {message}"
    print(message, file=sys.stderr)

    return status


if __name__ == "__main__":
    sys.exit(main())

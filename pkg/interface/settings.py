"""settings.py - Run settings command."""

import conebound
from conebound.report import Response

from interface import _options as options


class SettingsCommands:
    """Handlers for settings view and settings info."""

    def view(self, _args) -> Response:
        """View the effective settings."""
        response = Response(Response.SETTINGS, "Settings")
        for param in conebound.settings.available_parameters:
            response.add_field(param, conebound.settings.value(param))

        return response

    def info(self, args) -> Response:
        """Display detailed information on a parameter."""
        response = Response(Response.SETTINGS, f"Setting `{args.key}`")
        response.add_field("key", args.key)
        response.add_field("value", conebound.settings.value(args.key))
        response.add_field("description", conebound.settings.parameter_information(args.key))

        return response


def setup(subparsers):
    """Add the settings command to the parser."""
    commands = SettingsCommands()

    settings = subparsers.add_parser("settings", help="Effective run settings")
    actions = settings.add_subparsers(dest="action", required=True)

    view = actions.add_parser("view", help="Show every setting")
    options.add_output_options(view)
    view.set_defaults(handler=commands.view)

    info = actions.add_parser("info", help="Describe one setting")
    info.add_argument("key", choices=list(conebound.settings.available_parameters), help="The key to inspect")
    options.add_output_options(info)
    info.set_defaults(handler=commands.info)

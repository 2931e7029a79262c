"""settings.py - Run configuration drawn from the environment."""

import copy
import logging
import os


class Settings:
    """Interface for setting and retrieving run parameters."""

    # "Interesting" keys that get specially referenced elsewhere
    THREADS = "threads"
    BLOCK_ROWS = "block_rows"
    SAMPLES = "samples"
    SEED = "seed"
    SEARCH_ITERS = "search_iters"
    GRID = "grid"
    N_MAX = "n_max"
    LOG_LEVEL = "log_level"

    __PARAMETERS = {
        THREADS: "Worker threads used by the engine, oracle and probes.",
        BLOCK_ROWS: "Rows per reduction block. Results depend on this, not on `threads`.",
        SAMPLES: "Random cone vectors drawn by `verify`.",
        SEED: "Seed for cone sampling and local search restarts.",
        SEARCH_ITERS: "Local search steps per restart.",
        GRID: "Grid points per scalar dimension in probes and convexity checks.",
        N_MAX: "Largest index n for sequence analyses and integer-indexed probes.",
        LOG_LEVEL: "Logging level for the command line (DEBUG, INFO, WARNING, ERROR).",
    }

    __ENVIRONMENT = {
        THREADS: "MB_THREADS",
        BLOCK_ROWS: "MB_BLOCK_ROWS",
        SAMPLES: "MB_SAMPLES",
        SEED: "MB_SEED",
        SEARCH_ITERS: "MB_SEARCH_ITERS",
        GRID: "MB_GRID",
        N_MAX: "MB_N_MAX",
        LOG_LEVEL: "MB_LOG_LEVEL",
    }

    def __init__(self):
        self.default_params = {
            self.THREADS: 1,
            self.BLOCK_ROWS: 64,
            self.SAMPLES: 10000,
            self.SEED: 0,
            self.SEARCH_ITERS: 200,
            self.GRID: 1000,
            self.N_MAX: 500,
            self.LOG_LEVEL: "INFO",
        }
        self.__all_settings = self.__fetch_all_settings()

    def __fetch_all_settings(self) -> dict:
        """
        Read every parameter from the environment, falling back to the defaults.
        Returns (dict): The effective settings
        """
        settings = copy.deepcopy(self.default_params)

        for key, variable in self.__ENVIRONMENT.items():
            if (raw := os.getenv(variable)) is None or raw == "":
                continue
            try:
                settings[key] = self.__validated_parameter(key, raw)
            except ValueError as err:
                logging.warning("Ignoring %s: %s", variable, err)

        return settings

    def reload(self):
        """Re-read the environment, discarding any command-line overrides."""
        self.__all_settings = self.__fetch_all_settings()

    def update(self, key, value) -> str:
        """
        Set a new value for one of the parameters.
        Args:
            key (str): The parameter to modify
            value (any): The parameter's new value
        Returns (str): A message describing the change
        """
        value = self.__validated_parameter(key, value)  # Raises ValueError if invalid
        self.__all_settings[key] = value

        return f"Setting `{key}` to `{value}`!"

    def value(self, key):
        """
        Retrieve a specific setting.
        Args:
            key (str): The parameter whose value is desired
        Returns (any): The current value for the parameter
        Raises: ValueError if key isn't a valid parameter
        """
        if key not in self.available_parameters:
            raise ValueError(f"Unknown setting `{key}`!")

        return self.__all_settings[key]

    def __validated_parameter(self, key, new_value):
        """
        Attempt to cast a value into the proper data type for the associated parameter.
        Args:
            key (str): The parameter being modified
            new_value (str): The value attempting to be stored
        Returns (any): new_value cast to the proper data type
        Raises: ValueError if new_value is an invalid type or value
        """
        if key not in self.available_parameters:
            raise ValueError(f"Unknown setting `{key}`!")

        if key == self.LOG_LEVEL:
            level = str(new_value).upper()
            if level not in ("DEBUG", "INFO", "WARNING", "ERROR"):
                raise ValueError(f"Error! `{key}` must be DEBUG, INFO, WARNING or ERROR.")
            return level

        if key == self.SEED:
            try:
                new_value = int(new_value)
                if new_value < 0:
                    raise ValueError
                return new_value
            except (TypeError, ValueError):
                raise ValueError(f"Error! `{key}` must be a non-negative integer.") from None

        # All other keys are positive integers
        try:
            new_value = int(new_value)
            if new_value < 1:
                raise ValueError
            return new_value
        except (TypeError, ValueError):
            raise ValueError(f"Error! `{key}` must be a positive integer.") from None

    @property
    def available_parameters(self):
        """Returns a list of available configuration options."""
        return self.__PARAMETERS.keys()

    def parameter_information(self, param: str) -> str:
        """
        Retrieve the description for a given parameter.
        Args:
            param (str): The parameter whose details are requested
        Returns (str): The parameter description, or an error message
        """
        try:
            variable = self.__ENVIRONMENT[param]
            return f"{self.__PARAMETERS[param]} Environment: `{variable}`."
        except KeyError:
            return f"Unknown parameter `{param}`!"

"""response.py - Describes Responses to command-line requests."""


class Response:
    """Simple container class for command report types."""

    # Response types
    BOUND = 1  # Sharp bound of a family or matrix
    VERIFY = 2  # Oracle verification
    CONSTANT = 3  # Published constant lookup
    CONVERGE = 4  # Convergence study
    ANALYZE = 5  # Sequence and convexity analyses
    PROBE = 6  # Inequality probe
    SETTINGS = 7  # Effective configuration

    def __init__(self, response_type, title, exit_code=0):
        """
        Create a basic Response object.
        Args:
            response_type (int): The type of response being created
            title (str): The heading shown in text output
            exit_code (int): The process exit status this response implies
        A Response holds scalar fields and, for tables, a list of rows.
        """
        self.type = response_type
        self.title = title
        self.exit_code = exit_code
        self.fields = {}
        self.rows = []

    def add_field(self, name: str, value):
        """Append a named scalar; insertion order is the output order."""
        self.fields[name] = value

    def add_row(self, row: dict):
        """Append one table row. Every row should share the same keys."""
        self.rows.append(row)

    @property
    def is_table(self) -> bool:
        """True if the response carries table rows."""
        return bool(self.rows)

    @property
    def is_violation(self) -> bool:
        """True if a checked claim failed."""
        return self.exit_code == 1

class CliError(Exception):
    exit_code = 1


class SchemaError(CliError):
    exit_code = 2


class EvaluatorError(CliError):
    exit_code = 3

    def __init__(self, failures: int) -> None:
        super().__init__(f"{failures} sweep points failed")
        self.failures = failures


class OutputError(CliError):
    exit_code = 4


class PlotScriptError(CliError):
    exit_code = 4

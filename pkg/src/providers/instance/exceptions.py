class ParseError(Exception):
    """Malformed instance file. `line` is 1-based, None when the error is not tied to a line."""
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f'line {line}: {message}' if line is not None else message)
        self.line = line

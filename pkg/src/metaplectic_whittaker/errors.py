"""Exception types shared by the modules and mapped to CLI exit codes."""


class InvalidArgument(ValueError):
    pass


class InvalidWord(InvalidArgument):
    pass


class InvalidContext(ValueError):
    pass


class UnsupportedConfiguration(NotImplementedError):
    pass


class ResourceLimit(RuntimeError):
    def __init__(self, message, depth=None):
        super().__init__(message)
        self.depth = depth

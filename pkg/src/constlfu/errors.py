"""Error taxonomy shared by every cache policy in the package."""


class CacheError(Exception):
    """Base class for cache contract violations."""


class InvalidArgumentError(CacheError, ValueError):
    pass


class DuplicateKeyError(CacheError):
    def __init__(self, key=None):
        super().__init__("Key already exists")
        self.key = key


class NotFoundError(CacheError, LookupError):
    def __init__(self, key=None):
        super().__init__("No such key")
        self.key = key


class EmptyCacheError(CacheError, LookupError):
    def __init__(self):
        super().__init__("The set is empty")

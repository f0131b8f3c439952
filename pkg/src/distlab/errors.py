"""Root of the distlab exception hierarchy."""


class DistlabError(Exception):
    """Base class for every error raised by distlab."""

    pass

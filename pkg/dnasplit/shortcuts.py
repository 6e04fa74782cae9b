"""dnasplit shortcuts module."""
import io
import os

from dnasplit.readers import get_reader


def _is_text(source):
    return '\n' in source or source.lstrip().startswith('{')


def ingest_factory(handler):
    def ingest(source):
        """Reads a path, ``-`` for stdin, a text stream or a string of
        lines."""
        if isinstance(source, str) and _is_text(source):
            return handler(io.StringIO(source))
        if isinstance(source, (str, os.PathLike)):
            source = os.fspath(source)
            return get_reader(source)(source, handler)
        return handler(source)
    return ingest


def encode_factory(alphabet_id):
    def encode(timelines):
        return [timeline.encode(alphabet_id) for timeline in timelines]
    return encode

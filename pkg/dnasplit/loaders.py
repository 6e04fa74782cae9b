from collections.abc import Hashable

from yaml.composer import Composer
from yaml.constructor import ConstructorError
from yaml.constructor import SafeConstructor
from yaml.parser import Parser
from yaml.reader import Reader
from yaml.resolver import Resolver
from yaml.scanner import Scanner


class ExtendedSafeConstructor(SafeConstructor):

    def construct_mapping(self, node, deep=False):
        """Rejects repeated keys and coerces integer keys to strings, as
        JSON objects and the packaged schemas expect."""
        self.flatten_mapping(node)
        seen = set()
        for key_node, _ in node.value:
            key = self.construct_object(key_node, deep=deep)
            if not isinstance(key, Hashable):
                continue
            if key in seen:
                raise ConstructorError(
                    "while constructing a mapping", node.start_mark,
                    "found duplicate key {0!r}".format(key),
                    key_node.start_mark)
            seen.add(key)

        mapping = super(ExtendedSafeConstructor, self).construct_mapping(
            node, deep)
        return {
            (str(key) if isinstance(key, int) else key): mapping[key]
            for key in mapping
        }


class ExtendedSafeLoader(
        Reader, Scanner, Parser, Composer, ExtendedSafeConstructor, Resolver):

    def __init__(self, stream):
        Reader.__init__(self, stream)
        Scanner.__init__(self)
        Parser.__init__(self)
        Composer.__init__(self)
        ExtendedSafeConstructor.__init__(self)
        Resolver.__init__(self)

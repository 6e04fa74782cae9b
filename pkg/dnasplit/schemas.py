"""Packaged JSON schemas of the input records and config file."""
from pkg_resources import resource_filename
from yaml import load

from dnasplit.loaders import ExtendedSafeLoader


def get_schema(name):
    path = resource_filename(
        'dnasplit', 'resources/schemas/{0}.json'.format(name))
    return read_yaml_file(path)


def read_yaml_file(path, loader=ExtendedSafeLoader):
    """Open a file, read it and return its contents."""
    with open(path) as fh:
        return load(fh, loader)

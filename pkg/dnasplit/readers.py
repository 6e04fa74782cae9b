import os
import sys


def read_from_stdin(filename, handler):
    return handler(sys.stdin)


def read_from_filename(filename, handler):
    if not os.path.isfile(filename):
        raise IOError("No such file: {0}".format(filename))

    with open(filename) as fh:
        return handler(fh)


def get_reader(filename):
    if filename in ['-', '/-']:
        return read_from_stdin
    return read_from_filename
